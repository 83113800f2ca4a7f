#include "barystrat/report.hpp"

#include <algorithm>
#include <functional>

#include "barystrat/errors.hpp"
#include "json.hpp"

namespace barystrat {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::size_t> user_indices(const Params& params, const StratumLabel& label) {
  std::vector<std::size_t> out;
  for (std::size_t i : label.indices()) out.push_back(params.user_index(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::string label_text_from(unsigned k, const std::vector<std::size_t>& indices) {
  std::string s = "S(" + std::to_string(k) + ";";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(indices[i]);
  }
  return s + ")";
}

std::string join_labels(const std::vector<StratumLabel>& labels,
                        const std::function<std::string(const StratumLabel&)>& text) {
  if (labels.empty()) return "(none)";
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ", ";
    s += text(labels[i]);
  }
  return s;
}

std::vector<std::string> citations_for(VerdictKind kind) {
  std::vector<std::string> c = {"Definition 1.1 (singular values)",
                                "Definition 1.3 (selection rules)"};
  switch (kind) {
    case VerdictKind::SingularRho:
      break;
    case VerdictKind::EmptyCoercive:
      c.emplace_back("Troyanov inequality (coercive regime)");
      break;
    case VerdictKind::SolvableMinMax:
    case VerdictKind::ContractibleInconclusive:
      c.emplace_back("Definition 2.1 (stratum order)");
      c.emplace_back("Fact 1 (maximal decomposition)");
      c.emplace_back("Definition 1.4 (p_j-stability)");
      c.emplace_back("Facts 6-7 (stability via maximal strata)");
      c.emplace_back("Theorem 1.1 (contractibility criterion)");
      if (kind == VerdictKind::SolvableMinMax) {
        c.emplace_back("Theorem 1.2 (witness inequalities)");
        c.emplace_back("Facts 5 and 8 (homology certificates)");
        c.emplace_back("Theorem 1.5 (min-max existence)");
      } else {
        c.emplace_back("Theorem 1.8 (non-existence advisory)");
      }
      break;
  }
  return c;
}

bool stability_defined(const Analysis& a) {
  return a.params.m() >= 1 && (a.verdict.kind == VerdictKind::SolvableMinMax ||
                               a.verdict.kind == VerdictKind::ContractibleInconclusive);
}

std::string alpha_list(const std::vector<Rational>& alphas) {
  std::string s = "[";
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (i) s += ", ";
    s += to_string(alphas[i]);
  }
  return s + "]";
}

std::vector<Rational> alphas_in_user_order(const Params& params) {
  std::vector<Rational> user(params.m());
  for (std::size_t i = 1; i <= params.m(); ++i) {
    user[params.user_index(i) - 1] = params.alphas[i - 1];
  }
  return user;
}

ordered_json params_json(const Params& params) {
  ordered_json j;
  j["rho_over_4pi"] = to_string(params.r);
  j["m"] = params.m();
  ordered_json sorted = ordered_json::array();
  for (const Rational& a : params.alphas) sorted.push_back(to_string(a));
  j["alpha_sorted"] = std::move(sorted);
  ordered_json user = ordered_json::array();
  for (const Rational& a : alphas_in_user_order(params)) user.push_back(to_string(a));
  j["alpha_user"] = std::move(user);
  j["user_index_of_sorted"] = params.user_index_of_sorted;
  return j;
}

ordered_json label_json(const Params& params, const StratumLabel& label) {
  ordered_json j;
  j["k"] = label.k;
  j["indices_sorted"] = label.indices();
  j["indices_user"] = user_indices(params, label);
  return j;
}

ordered_json witness_json(const Params& params, const Witness& w) {
  ordered_json j = label_json(params, w.label);
  j["degree"] = w.degree;
  j["case"] = case_tag_name(w.case_tag);
  return j;
}

std::vector<bool> stability_user(const Params& params, const std::vector<bool>& sorted) {
  std::vector<bool> user(sorted.size());
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    user[params.user_index(i) - 1] = sorted[i - 1];
  }
  return user;
}

std::string stability_line(const std::vector<bool>& profile) {
  std::string s;
  for (std::size_t j = 1; j <= profile.size(); ++j) {
    if (j > 1) s += " ";
    s += "p_" + std::to_string(j) + "=" + (profile[j - 1] ? "stable" : "unstable");
  }
  return s;
}

}  // namespace

std::string verdict_kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::EmptyCoercive: return "EmptyCoercive";
    case VerdictKind::SingularRho: return "SingularRho";
    case VerdictKind::SolvableMinMax: return "SolvableMinMax";
    case VerdictKind::ContractibleInconclusive: return "ContractibleInconclusive";
  }
  throw Error(errc::internal, "unknown verdict kind");
}

std::string case_tag_name(CaseTag tag) {
  return tag == CaseTag::RegularStratum ? "RegularStratum" : "SingularStratum";
}

std::string label_text_user(const Params& params, const StratumLabel& label) {
  return label_text_from(label.k, user_indices(params, label));
}

std::string analysis_text(const Analysis& a) {
  const Params& p = a.params;
  std::string s;
  s += "rho = 4*pi * " + to_string(p.r) + "\n";
  s += "m = " + std::to_string(p.m()) + "\n";
  if (p.m() >= 1) {
    std::string sorted, user, map;
    const std::vector<Rational> user_alphas = alphas_in_user_order(p);
    for (std::size_t i = 1; i <= p.m(); ++i) {
      if (i > 1) {
        sorted += " ";
        user += " ";
        map += " ";
      }
      sorted += "[" + std::to_string(i) + "] " + to_string(p.alphas[i - 1]);
      user += "[" + std::to_string(i) + "] " + to_string(user_alphas[i - 1]);
      map += std::to_string(i) + "->" + std::to_string(p.user_index(i));
    }
    s += "alpha (sorted): " + sorted + "\n";
    s += "alpha (user):   " + user + "\n";
    s += "index map (sorted -> user): " + map + "\n";
  }

  if (a.verdict.kind == VerdictKind::SingularRho) {
    s += "verdict: SingularRho\n";
    s += "advisory: " + a.verdict.advisory + "\n";
    return s;
  }

  s += "admissible strata: " + std::to_string(a.strata_count) + "\n";
  s += "maximal strata (sorted): " +
       join_labels(a.maximal, [](const StratumLabel& l) { return label_text(l); }) + "\n";
  s += "maximal strata (user):   " +
       join_labels(a.maximal, [&](const StratumLabel& l) { return label_text_user(p, l); }) +
       "\n";

  if (stability_defined(a)) {
    s += "stability (sorted): " + stability_line(a.verdict.stability_sorted) + "\n";
    s += "stability (user):   " +
         stability_line(stability_user(p, a.verdict.stability_sorted)) + "\n";
  }

  if (a.verdict.kind == VerdictKind::EmptyCoercive) {
    s += "contractible: n/a (empty space)\n";
  } else {
    const bool contractible = a.verdict.kind == VerdictKind::ContractibleInconclusive;
    s += std::string("contractible: ") + (contractible ? "yes" : "no") + "\n";
  }

  if (a.verdict.witnesses.empty()) {
    s += "witnesses: (none)\n";
  } else {
    s += "witnesses:\n";
    for (const Witness& w : a.verdict.witnesses) {
      s += "  " + label_text(w.label) + " [user " + label_text_user(p, w.label) +
           "]: degree " + std::to_string(w.degree) + ", " + case_tag_name(w.case_tag) + "\n";
    }
  }

  s += "verdict: " + verdict_kind_name(a.verdict.kind) + "\n";
  s += "advisory: " + a.verdict.advisory + "\n";

  std::string cites;
  for (const std::string& c : citations_for(a.verdict.kind)) {
    if (!cites.empty()) cites += "; ";
    cites += c;
  }
  s += "citations: " + cites + "\n";
  return s;
}

std::string analysis_json(const Analysis& a) {
  const Params& p = a.params;
  ordered_json j;
  j["params"] = params_json(p);
  j["strata_count"] = a.strata_count;
  ordered_json maximal = ordered_json::array();
  for (const StratumLabel& l : a.maximal) maximal.push_back(label_json(p, l));
  j["maximal"] = std::move(maximal);

  if (stability_defined(a)) {
    ordered_json stab;
    stab["sorted"] = a.verdict.stability_sorted;
    stab["user"] = stability_user(p, a.verdict.stability_sorted);
    j["stability"] = std::move(stab);
  } else {
    j["stability"] = nullptr;
  }

  if (a.verdict.kind == VerdictKind::EmptyCoercive ||
      a.verdict.kind == VerdictKind::SingularRho) {
    j["contractible"] = nullptr;
  } else {
    j["contractible"] = a.verdict.kind == VerdictKind::ContractibleInconclusive;
  }

  ordered_json witnesses = ordered_json::array();
  for (const Witness& w : a.verdict.witnesses) witnesses.push_back(witness_json(p, w));
  j["witnesses"] = std::move(witnesses);

  ordered_json verdict;
  verdict["kind"] = verdict_kind_name(a.verdict.kind);
  verdict["advisory"] = a.verdict.advisory;
  j["verdict"] = std::move(verdict);
  j["citations"] = citations_for(a.verdict.kind);
  return j.dump(2) + "\n";
}

std::string scan_text(const Params& base, const std::vector<ScanEntry>& entries) {
  std::string s = "scan: m = " + std::to_string(base.m()) +
                  ", alpha (sorted) = " + alpha_list(base.alphas) +
                  ", alpha (user) = " + alpha_list(alphas_in_user_order(base)) +
                  ", rho/(4pi) in (0, " + to_string(base.r) + ")\n";
  for (const ScanEntry& e : entries) {
    s += "(" + to_string(e.lo) + ", " + to_string(e.hi) + "): " +
         verdict_kind_name(e.verdict.kind);
    if (!e.verdict.witnesses.empty()) {
      s += "  witnesses:";
      for (const Witness& w : e.verdict.witnesses) {
        s += " " + label_text(w.label) + " deg " + std::to_string(w.degree);
      }
    }
    s += "\n";
  }
  return s;
}

std::string scan_json(const Params& base, const std::vector<ScanEntry>& entries) {
  ordered_json j;
  ordered_json params = params_json(base);
  params.erase("rho_over_4pi");
  params["rho_max"] = to_string(base.r);
  j["params"] = std::move(params);
  ordered_json intervals = ordered_json::array();
  for (const ScanEntry& e : entries) {
    ordered_json entry;
    entry["lo"] = to_string(e.lo);
    entry["hi"] = to_string(e.hi);
    entry["kind"] = verdict_kind_name(e.verdict.kind);
    entry["stability_sorted"] = e.verdict.stability_sorted;
    ordered_json witnesses = ordered_json::array();
    for (const Witness& w : e.verdict.witnesses) witnesses.push_back(witness_json(base, w));
    entry["witnesses"] = std::move(witnesses);
    intervals.push_back(std::move(entry));
  }
  j["intervals"] = std::move(intervals);
  return j.dump(2) + "\n";
}

std::string graph_dot(const SGraph& graph) {
  std::string s = "digraph sgraph {\n";
  for (const StratumLabel& node : graph.nodes) {
    s += "  \"" + label_text(node) + "\";\n";
  }
  for (const auto& [lower, upper] : graph.edges) {
    s += "  \"" + label_text(graph.nodes[lower]) + "\" -> \"" +
         label_text(graph.nodes[upper]) + "\";\n";
  }
  s += "}\n";
  return s;
}

std::string singular_text(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += to_string(values[i]);
  }
  return s + "\n";
}

std::string singular_json(const Params& params, const Rational& upper,
                          const std::vector<Rational>& values) {
  ordered_json j;
  ordered_json p = params_json(params);
  p.erase("rho_over_4pi");
  j["params"] = std::move(p);
  j["upper"] = to_string(upper);
  ordered_json vals = ordered_json::array();
  for (const Rational& v : values) vals.push_back(to_string(v));
  j["values"] = std::move(vals);
  return j.dump(2) + "\n";
}

static std::vector<std::string> threshold_citations() {
  return {"Corollary 1.7 (threshold existence)", "Fact 4 (stability propagates to index 1)",
          "Theorem 1.1 (contractibility criterion)"};
}

std::string threshold_text(const Rational& r, const Params& others, std::size_t j,
                           const ThresholdResult& result) {
  std::string s = "threshold: rho/(4pi) = " + to_string(r) + ", fixed alpha = " +
                  alpha_list(alphas_in_user_order(others)) + ", varying index j = " +
                  std::to_string(j) + "\n";
  if (result.clamped) {
    s += "alpha* clamped to 0: every alpha_j in (-1, 0) gives p_j-stability\n";
  } else {
    s += "alpha* = " + to_string(result.alpha_star) + " (" +
         decimal_approx(result.alpha_star) + "~)\n";
    s += "p_j-stable and contractible for alpha_j in (-1, " + to_string(result.alpha_star) +
         "); rho is singular at alpha_j = alpha*\n";
  }
  std::string cites;
  for (const std::string& c : threshold_citations()) {
    if (!cites.empty()) cites += "; ";
    cites += c;
  }
  s += "citations: " + cites + "\n";
  return s;
}

std::string threshold_json(const Rational& r, const Params& others, std::size_t j,
                           const ThresholdResult& result) {
  ordered_json doc;
  doc["rho_over_4pi"] = to_string(r);
  ordered_json fixed = ordered_json::array();
  for (const Rational& a : alphas_in_user_order(others)) fixed.push_back(to_string(a));
  doc["fixed_alpha_user"] = std::move(fixed);
  ordered_json sorted = ordered_json::array();
  for (const Rational& a : others.alphas) sorted.push_back(to_string(a));
  doc["fixed_alpha_sorted"] = std::move(sorted);
  doc["index"] = j;
  doc["alpha_star"] = to_string(result.alpha_star);
  doc["alpha_star_decimal"] = decimal_approx(result.alpha_star) + "~";
  doc["clamped"] = result.clamped;
  doc["citations"] = threshold_citations();
  return doc.dump(2) + "\n";
}

}  // namespace barystrat
