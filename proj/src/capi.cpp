#include "barystrat.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "barystrat/analysis.hpp"
#include "barystrat/errors.hpp"
#include "barystrat/report.hpp"
#include "barystrat/singular.hpp"
#include "barystrat/strata.hpp"

struct bary_params_s {
  barystrat::Params params;
};

namespace {

using namespace barystrat;

thread_local std::string g_last_error;

bary_status status_of(errc code) {
  switch (code) {
    case errc::singular_rho:
    case errc::singular_rho_others:
      return BARY_ERR_SINGULAR;
    case errc::size_limit:
      return BARY_ERR_LIMIT;
    case errc::internal:
      return BARY_ERR_INTERNAL;
    default:
      return BARY_ERR_INVALID;
  }
}

template <typename Fn>
bary_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return BARY_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BARY_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<Rational> parse_csv(const char* csv) {
  std::vector<Rational> values;
  if (!csv) return values;

  std::vector<std::string_view> tokens;
  std::string_view s(csv);
  while (true) {
    std::size_t comma = s.find(',');
    std::string_view token = s.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    tokens.push_back(token);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  if (tokens.size() == 1 && tokens[0].empty()) return values;  // m = 0
  for (std::string_view token : tokens) values.push_back(parse_rational(token));
  return values;
}

StratumLabel label_from(unsigned k, const size_t* indices, size_t n_indices) {
  return StratumLabel::of(k, std::span<const std::size_t>(indices, n_indices));
}

EnumLimits limits_from(uint64_t cap) {
  EnumLimits limits;
  if (cap != 0) limits.max_labels = cap;
  return limits;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(errc::internal, std::string("null argument: ") + what);
}

}  // namespace

extern "C" {

const char* bary_version(void) { return "1.0.0"; }

const char* bary_last_error(void) { return g_last_error.c_str(); }

void bary_string_free(char* s) { std::free(s); }

bary_status bary_rational_canonical(const char* text, char** out) {
  return guarded([&] {
    require(text && out, "text/out");
    *out = dup_string(to_string(parse_rational(text)));
  });
}

bary_status bary_params_create(const char* rho_over_4pi, const char* alphas_csv,
                               bary_params** out) {
  return guarded([&] {
    require(rho_over_4pi && out, "rho_over_4pi/out");
    Rational r = parse_rational(rho_over_4pi);
    std::vector<Rational> alphas = parse_csv(alphas_csv);
    *out = new bary_params_s{normalize_params(r, alphas)};
  });
}

void bary_params_free(bary_params* params) { delete params; }

bary_status bary_params_m(const bary_params* params, size_t* out) {
  return guarded([&] {
    require(params && out, "params/out");
    *out = params->params.m();
  });
}

bary_status bary_params_rho(const bary_params* params, char** out) {
  return guarded([&] {
    require(params && out, "params/out");
    *out = dup_string(to_string(params->params.r));
  });
}

bary_status bary_params_alpha(const bary_params* params, size_t sorted_index, char** out) {
  return guarded([&] {
    require(params && out, "params/out");
    if (sorted_index < 1 || sorted_index > params->params.m()) {
      throw Error(errc::index_out_of_range,
                  "sorted index " + std::to_string(sorted_index) + " out of range");
    }
    *out = dup_string(to_string(params->params.alphas[sorted_index - 1]));
  });
}

bary_status bary_params_user_index(const bary_params* params, size_t sorted_index,
                                   size_t* out) {
  return guarded([&] {
    require(params && out, "params/out");
    if (sorted_index < 1 || sorted_index > params->params.m()) {
      throw Error(errc::index_out_of_range,
                  "sorted index " + std::to_string(sorted_index) + " out of range");
    }
    *out = params->params.user_index(sorted_index);
  });
}

bary_status bary_chi(const bary_params* params, unsigned k, const size_t* indices,
                     size_t n_indices, char** out) {
  return guarded([&] {
    require(params && out && (indices || n_indices == 0), "params/indices/out");
    *out = dup_string(to_string(chi(params->params, label_from(k, indices, n_indices))));
  });
}

bary_status bary_dimension(unsigned k, const size_t* indices, size_t n_indices, long* out) {
  return guarded([&] {
    require(out && (indices || n_indices == 0), "indices/out");
    *out = dimension(label_from(k, indices, n_indices));
  });
}

bary_status bary_precedes(unsigned k1, const size_t* indices1, size_t n1, unsigned k2,
                          const size_t* indices2, size_t n2, int* out) {
  return guarded([&] {
    require(out && (indices1 || n1 == 0) && (indices2 || n2 == 0), "indices/out");
    *out = precedes(label_from(k1, indices1, n1), label_from(k2, indices2, n2)) ? 1 : 0;
  });
}

bary_status bary_is_admissible(const bary_params* params, unsigned k, const size_t* indices,
                               size_t n_indices, int* out) {
  return guarded([&] {
    require(params && out && (indices || n_indices == 0), "params/indices/out");
    *out = is_admissible(params->params, label_from(k, indices, n_indices)) ? 1 : 0;
  });
}

bary_status bary_is_singular(const bary_params* params, int* out) {
  return guarded([&] {
    require(params && out, "params/out");
    *out = is_singular(params->params) ? 1 : 0;
  });
}

bary_status bary_singular_values(const bary_params* params, const char* upper,
                                 size_t exclude, char** out_csv) {
  return guarded([&] {
    require(params && upper && out_csv, "params/upper/out");
    std::vector<Rational> values =
        singular_values(params->params, exclude, parse_rational(upper));
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ", ";
      s += to_string(values[i]);
    }
    *out_csv = dup_string(s);
  });
}

bary_status bary_singular_report(const bary_params* params, const char* upper, int as_json,
                                 char** out) {
  return guarded([&] {
    require(params && upper && out, "params/upper/out");
    Rational bound = parse_rational(upper);
    std::vector<Rational> values = singular_values(params->params, 0, bound);
    *out = dup_string(as_json ? singular_json(params->params, bound, values)
                              : singular_text(values));
  });
}

bary_status bary_stratum_count(const bary_params* params, uint64_t cap, uint64_t* out) {
  return guarded([&] {
    require(params && out, "params/out");
    *out = enumerate_strata(params->params, limits_from(cap)).size();
  });
}

bary_status bary_is_contractible(const bary_params* params, uint64_t cap, int* out) {
  return guarded([&] {
    require(params && out, "params/out");
    *out = is_contractible(params->params, limits_from(cap)) ? 1 : 0;
  });
}

bary_status bary_analyze(const bary_params* params, uint64_t cap, int as_json, char** out) {
  return guarded([&] {
    require(params && out, "params/out");
    Analysis a = analyze(params->params, limits_from(cap));
    if (a.verdict.kind == VerdictKind::SingularRho) {
      throw Error(errc::singular_rho, "rho is a singular value (Definition 1.1)");
    }
    *out = dup_string(as_json ? analysis_json(a) : analysis_text(a));
  });
}

bary_status bary_graph_dot(const bary_params* params, uint64_t cap, char** out) {
  return guarded([&] {
    require(params && out, "params/out");
    *out = dup_string(graph_dot(s_graph(params->params, limits_from(cap))));
  });
}

bary_status bary_scan(const char* alphas_csv, const char* rho_max, uint64_t cap,
                      int as_json, char** out) {
  return guarded([&] {
    require(rho_max && out, "rho_max/out");
    std::vector<Rational> alphas = parse_csv(alphas_csv);
    Rational bound = parse_rational(rho_max);
    std::vector<ScanEntry> entries = scan_rho(alphas, bound, limits_from(cap));
    Params base = normalize_params(bound, alphas);
    *out = dup_string(as_json ? scan_json(base, entries) : scan_text(base, entries));
  });
}

bary_status bary_threshold(const char* other_alphas_csv, size_t j, const char* rho_over_4pi,
                           int as_json, char** out) {
  return guarded([&] {
    require(rho_over_4pi && out, "rho_over_4pi/out");
    std::vector<Rational> others = parse_csv(other_alphas_csv);
    Rational r = parse_rational(rho_over_4pi);
    if (j < 1 || j > others.size() + 1) {
      throw Error(errc::index_out_of_range,
                  "index " + std::to_string(j) + " out of range (must be in 1.." +
                      std::to_string(others.size() + 1) + ")",
                  j);
    }
    ThresholdResult result = alpha_threshold(r, others);
    Params others_params = normalize_params(r, others);
    *out = dup_string(as_json ? threshold_json(r, others_params, j, result)
                              : threshold_text(r, others_params, j, result));
  });
}

}  // extern "C"
