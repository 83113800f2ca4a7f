// Acceptance suite: every release gate in one binary, one PASS/FAIL line
// per criterion, timed. Exits nonzero if anything fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "barystrat/analysis.hpp"
#include "barystrat/oracle.hpp"
#include "barystrat/report.hpp"
#include "barystrat/singular.hpp"
#include "barystrat/strata.hpp"
#include "cli_paths.hpp"
#include "grid.hpp"
#include "proc.hpp"

using namespace barystrat;

namespace {

struct Check {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

StratumLabel label_of(unsigned k, std::initializer_list<std::size_t> indices) {
  return StratumLabel::of(k, indices);
}

unsigned k_cap_for(const Params& p) {
  return static_cast<unsigned>(floor_int(p.r) + 1);
}

ProcResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), BARYSTRAT_CLI_PATH);
  return run_process(args);
}

// ---- criterion bodies -----------------------------------------------------

bool check_worked_example(std::string& detail) {
  Params p = normalize_params(Rational(9, 8), {Rational(-1, 2), Rational(-1, 2)});
  Analysis a = analyze(p);
  bool ok = a.maximal ==
            std::vector<StratumLabel>{label_of(0, {1, 2}), label_of(1, {})};
  ok = ok && !is_contractible(p);
  ok = ok && a.verdict.kind == VerdictKind::SolvableMinMax;
  ok = ok && a.verdict.witnesses.size() == 1 &&
       a.verdict.witnesses[0].label == label_of(1, {}) &&
       a.verdict.witnesses[0].degree == 2 &&
       a.verdict.witnesses[0].case_tag == CaseTag::RegularStratum;
  detail = "maximal = {S(0;1,2), S(1;)}, witness S(1;) degree 2";
  return ok;
}

struct GridInstance {
  std::vector<Rational> alphas;
  Rational r;
};

std::vector<GridInstance> shared_grid(std::size_t max_m, const Rational& bound) {
  std::vector<GridInstance> grid;
  for (const auto& alphas : testgrid::weight_vectors(max_m)) {
    for (const Rational& mid : testgrid::gap_midpoints(alphas, bound)) {
      grid.push_back({alphas, mid});
    }
  }
  return grid;
}

bool check_equivalence(std::string& detail) {
  const std::vector<GridInstance> grid = shared_grid(4, Rational(5));
  std::size_t mismatches = 0;
  for (const GridInstance& g : grid) {
    Params p = normalize_params(g.r, g.alphas);
    if (is_contractible(p) != noncontractibility_witnesses(p).empty()) ++mismatches;
  }
  std::ostringstream ss;
  ss << grid.size() << " instances, " << mismatches << " discrepancies";
  detail = ss.str();
  return mismatches == 0 && grid.size() >= 10000;
}

bool check_stability_oracle(std::string& detail) {
  const std::vector<GridInstance> grid = shared_grid(4, Rational(5));
  std::size_t checks = 0, mismatches = 0;
  for (const GridInstance& g : grid) {
    Params p = normalize_params(g.r, g.alphas);
    for (std::size_t j = 1; j <= p.m(); ++j) {
      ++checks;
      if (is_pj_stable(p, j) != oracle::naive_pj_stable(p, j, k_cap_for(p))) ++mismatches;
    }
  }
  std::ostringstream ss;
  ss << checks << " (instance, j) pairs, " << mismatches << " discrepancies";
  detail = ss.str();
  return mismatches == 0;
}

bool check_stability_propagation(std::string& detail) {
  const std::vector<GridInstance> grid = shared_grid(4, Rational(5));
  std::size_t violations = 0, prefix_violations = 0;
  for (const GridInstance& g : grid) {
    Params p = normalize_params(g.r, g.alphas);
    std::vector<bool> profile = stability_profile(p);
    for (std::size_t j = 1; j < profile.size(); ++j) {
      if (profile[j] && !profile[0]) ++violations;
      if (profile[j] && !profile[j - 1]) ++prefix_violations;
    }
  }
  std::ostringstream ss;
  ss << violations << " order violations, " << prefix_violations << " prefix violations";
  detail = ss.str();
  return violations == 0 && prefix_violations == 0;
}

bool check_precedes_oracle(std::string& detail) {
  std::vector<StratumLabel> labels;
  for (unsigned k = 0; k <= 5; ++k) {
    for (std::uint64_t bits = 0; bits < 32; ++bits) labels.push_back(StratumLabel{k, bits});
  }
  std::size_t pairs = 0, mismatches = 0;
  for (const StratumLabel& a : labels) {
    for (const StratumLabel& b : labels) {
      ++pairs;
      if (precedes(a, b) != oracle::naive_precedes(a, b)) ++mismatches;
    }
  }
  std::ostringstream ss;
  ss << pairs << " label pairs (k <= 5, m <= 5), " << mismatches << " discrepancies";
  detail = ss.str();
  return mismatches == 0;
}

bool check_intersections(std::string& detail) {
  std::size_t mismatches = 0;

  for (unsigned k = 1; k <= 4; ++k) {
    for (std::size_t i = 1; i <= 4; ++i) {
      for (std::size_t j = i + 1; j <= 4; ++j) {
        std::vector<StratumLabel> expected = {
            StratumLabel::of(k - 1, {i, j}), label_of(k, {})};
        std::sort(expected.begin(), expected.end());
        if (intersect_strata(StratumLabel::of(k, {i}), StratumLabel::of(k, {j})) != expected) {
          ++mismatches;
        }
      }
    }
  }

  std::vector<StratumLabel> labels;
  for (unsigned k = 0; k <= 4; ++k) {
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
      StratumLabel label{k, bits};
      if (!label.is_empty()) labels.push_back(label);
    }
  }
  std::size_t pairs = 0;
  for (const StratumLabel& a : labels) {
    for (const StratumLabel& b : labels) {
      ++pairs;
      std::vector<StratumLabel> full = oracle::naive_intersection(a, b, 4);
      std::vector<StratumLabel> naive_maximal;
      for (const StratumLabel& x : full) {
        bool is_max = true;
        for (const StratumLabel& y : full) {
          if (!(x == y) && oracle::naive_precedes(x, y)) {
            is_max = false;
            break;
          }
        }
        if (is_max) naive_maximal.push_back(x);
      }
      if (intersect_strata(a, b) != naive_maximal) ++mismatches;
    }
  }
  std::ostringstream ss;
  ss << pairs << " grid pairs plus the swap identity, " << mismatches << " discrepancies";
  detail = ss.str();
  return mismatches == 0;
}

bool check_threshold(std::string& detail) {
  const Rational step(1, 64);
  std::size_t instances = 0, failures = 0;

  // pinned anchors
  if (alpha_threshold(Rational(3, 2), {}).alpha_star != Rational(-1, 2)) ++failures;
  if (alpha_threshold(Rational(3, 4), {}).alpha_star != Rational(-1, 4)) ++failures;

  for (const auto& others : testgrid::weight_vectors(3)) {
    for (const Rational& r : testgrid::gap_midpoints(others, Rational(5))) {
      ++instances;
      ThresholdResult t = alpha_threshold(r, others);
      if (t.clamped || !(t.alpha_star > Rational(-1) && t.alpha_star < Rational(0))) {
        ++failures;
        continue;
      }

      auto with = others;
      with.push_back(t.alpha_star);
      if (!is_singular(normalize_params(r, with))) ++failures;

      if (t.alpha_star - step > Rational(-1)) {
        with.back() = t.alpha_star - step;
        if (!is_contractible(normalize_params(r, with))) ++failures;
      }
      if (t.alpha_star + step < Rational(0)) {
        with.back() = t.alpha_star + step;
        Params above = normalize_params(r, with);
        if (!enumerate_strata(above).empty()) {
          std::size_t pos =
              1 + (std::find(above.alphas.begin(), above.alphas.end(), with.back()) -
                   above.alphas.begin());
          if (is_pj_stable(above, pos)) ++failures;
        }
      }
    }
  }
  std::ostringstream ss;
  ss << instances << " instances straddled at +/- 1/64, " << failures << " failures";
  detail = ss.str();
  return failures == 0;
}

bool check_scan_constancy(std::string& detail) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> md(0, 3);
  std::uniform_int_distribution<int> num(1, 23);
  std::size_t mismatches = 0, intervals = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> alphas;
    int m = md(rng);
    for (int i = 0; i < m; ++i) alphas.push_back(Rational(-num(rng), 24));
    std::vector<ScanEntry> entries = scan_rho(alphas, Rational(5));
    for (const ScanEntry& e : entries) {
      ++intervals;
      for (const Rational& probe : {Rational((3 * e.lo + e.hi) / 4),
                                    Rational((e.lo + e.hi) / 2),
                                    Rational((e.lo + 3 * e.hi) / 4)}) {
        Verdict v = solvability_verdict(normalize_params(probe, alphas));
        bool same = v.kind == e.verdict.kind &&
                    v.stability_sorted == e.verdict.stability_sorted &&
                    v.witnesses.size() == e.verdict.witnesses.size();
        for (std::size_t i = 0; same && i < v.witnesses.size(); ++i) {
          same = v.witnesses[i].label == e.verdict.witnesses[i].label;
        }
        if (!same) ++mismatches;
      }
    }
  }
  std::ostringstream ss;
  ss << "20 weight vectors, " << intervals << " intervals, 3 probes each, " << mismatches
     << " mismatches";
  detail = ss.str();
  return mismatches == 0;
}

bool check_performance(std::string& detail) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> den(7, 997);
  std::vector<Rational> alphas;
  for (int i = 0; i < 12; ++i) {
    int d = den(rng);
    std::uniform_int_distribution<int> num(1, d - 1);
    alphas.push_back(Rational(-num(rng), d));
  }

  const auto started = std::chrono::steady_clock::now();
  Params p6 = normalize_params(Rational(6), alphas);
  std::vector<StratumLabel> strata = enumerate_strata(p6);
  std::vector<StratumLabel> maximal = maximal_strata(p6, strata);
  const double library_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  // rho/(4pi) = 6 is itself a singular value (it is an integer), so the
  // end-to-end run probes the midpoint of the last gap below 6: same k
  // range, same workload, non-singular.
  std::vector<Rational> cuts = singular_values(p6, 0, Rational(6));
  Rational probe = cuts.size() >= 2 ? (cuts[cuts.size() - 2] + cuts.back()) / 2
                                    : Rational(11, 2);
  std::string csv;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (i) csv += ",";
    csv += to_string(alphas[i]);
  }
  const auto cli_started = std::chrono::steady_clock::now();
  ProcResult run = cli({"analyze", "--rho-over-4pi", to_string(probe), "--alpha", csv});
  const double cli_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - cli_started).count();

  std::ostringstream ss;
  ss << strata.size() << " strata, " << maximal.size() << " maximal in " << library_seconds
     << " s; cli analyze at rho/(4pi) = " << to_string(probe) << " in " << cli_seconds
     << " s";
  detail = ss.str();
  return !strata.empty() && !maximal.empty() && run.exit_code == 0 &&
         library_seconds < 10.0 && cli_seconds < 15.0;
}

bool check_determinism(std::string& detail) {
  const std::vector<std::vector<std::string>> commands = {
      {"analyze", "--rho-over-4pi", "9/8", "--alpha", "-1/2,-1/2"},
      {"analyze", "--rho-over-4pi", "9/8", "--alpha", "-1/2,-1/2", "--format", "json"},
      {"scan", "--rho-max", "3", "--alpha", "-2/3,-1/6"},
      {"scan", "--rho-max", "3", "--alpha", "-2/3,-1/6", "--format", "json"},
      {"graph", "--rho-over-4pi", "13/8", "--alpha", "-1/2,-1/4"},
      {"singular", "--rho-max", "3", "--alpha", "-5/6,-1/3"},
      {"singular", "--rho-max", "3", "--alpha", "-5/6,-1/3", "--format", "json"},
      {"threshold", "--rho-over-4pi", "9/8", "--alpha", "-1/2", "--index", "2"},
      {"threshold", "--rho-over-4pi", "9/8", "--alpha", "-1/2", "--index", "2", "--format",
       "json"},
      {"analyze", "--rho-over-4pi", "3/2", "--alpha", "-1/2"},  // singular, exit 2
  };
  std::size_t mismatches = 0;
  for (const auto& command : commands) {
    ProcResult first = cli(command);
    ProcResult second = cli(command);
    if (first.exit_code != second.exit_code || first.out != second.out ||
        first.err != second.err) {
      ++mismatches;
    }
  }
  std::ostringstream ss;
  ss << commands.size() << " commands run twice, " << mismatches << " byte differences";
  detail = ss.str();
  return mismatches == 0;
}

}  // namespace

int main() {
  const std::vector<Check> checks = {
      {"worked two-cone example reproduces exactly", 1.0, check_worked_example},
      {"contractibility equals absence of witnesses on the full grid", 60.0,
       check_equivalence},
      {"stability fast path equals the quantifier oracle on the full grid", 60.0,
       check_stability_oracle},
      {"stability propagates to index 1 and is prefix-closed", 60.0,
       check_stability_propagation},
      {"inclusion closed form equals split enumeration, exhaustively", 30.0,
       check_precedes_oracle},
      {"intersection identity and oracle agreement", 60.0, check_intersections},
      {"threshold closed form confirmed by straddling probes", 60.0, check_threshold},
      {"scan verdicts constant across each interval", 60.0, check_scan_constancy},
      {"desk-scale performance (m = 12, rho/(4pi) = 6)", 25.0, check_performance},
      {"CLI output is byte-deterministic", 60.0, check_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto started = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = checks[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (seconds > checks[i].budget_seconds) {
      ok = false;
      detail += " [over budget]";
    }
    std::printf("%s  criterion %2zu: %s (%.2f s) -- %s\n", ok ? "PASS" : "FAIL", i + 1,
                checks[i].name.c_str(), seconds, detail.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
