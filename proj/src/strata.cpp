#include "barystrat/strata.hpp"

#include <algorithm>

#include "barystrat/errors.hpp"

namespace barystrat {

namespace {

std::uint64_t full_mask(std::size_t m) {
  return m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
}

[[noreturn]] void cap_exceeded(std::uint64_t cap) {
  throw Error(errc::size_limit, "stratum cap exceeded (" + std::to_string(cap) + ")");
}

void check_m(std::size_t m, const EnumLimits& limits) {
  if (m > limits.max_m) {
    throw Error(errc::size_limit,
                "m = " + std::to_string(m) + " exceeds the enumeration limit max_m = " +
                    std::to_string(limits.max_m));
  }
}

}  // namespace

bool is_admissible(const Params& params, const StratumLabel& label) {
  if (label.is_empty()) return false;
  return chi(params, label) < params.r;
}

bool precedes(const StratumLabel& a, const StratumLabel& b) {
  if (b.k < a.k) return false;
  return std::popcount(a.index_bits & ~b.index_bits) <= static_cast<int>(b.k - a.k);
}

std::vector<StratumLabel> enumerate_strata(const Params& params, const EnumLimits& limits) {
  check_m(params.m(), limits);

  std::vector<Rational> weights;  // 1 + alpha_i, ascending, all in (0, 1)
  weights.reserve(params.m());
  for (const Rational& a : params.alphas) weights.push_back(1 + a);

  std::vector<StratumLabel> labels;
  const Integer k_top = largest_int_below(params.r);  // chi >= k, so k < r
  if (k_top >= 0 && Integer(k_top) + 1 > limits.max_labels) cap_exceeded(limits.max_labels);

  for (Integer ki = 0; ki <= k_top; ++ki) {
    const auto k = static_cast<unsigned>(ki);
    const Rational budget = params.r - ki;  // remaining room for pinned weight

    // Subset walk with branch cutoff: the weights ascend, so the first one
    // that no longer fits under the budget ends the whole branch.
    auto walk = [&](auto&& self, std::size_t pos, const Rational& sum,
                    std::uint64_t bits) -> void {
      if (k > 0 || bits != 0) {
        labels.push_back(StratumLabel{k, bits});
        if (labels.size() > limits.max_labels) cap_exceeded(limits.max_labels);
      }
      for (std::size_t i = pos; i < weights.size(); ++i) {
        Rational next = sum + weights[i];
        if (next >= budget) break;
        self(self, i + 1, next, bits | (std::uint64_t{1} << i));
      }
    };
    walk(walk, 0, Rational(0), 0);
  }

  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<StratumLabel> maximal_strata(const Params& params, const EnumLimits& limits) {
  return maximal_strata(params, enumerate_strata(params, limits));
}

std::vector<StratumLabel> maximal_strata(const Params& params,
                                         const std::vector<StratumLabel>& admissible) {
  // The admissible set is downward closed (chi is monotone along the
  // inclusion order) and every strict successor of a label is reachable
  // through an immediate one: (k, I+{j}), (k+1, I) or (k+1, I-{i}). So a
  // stratum is maximal iff none of those is admissible.
  std::vector<StratumLabel> maximal;
  for (const StratumLabel& label : admissible) {
    const Rational base = chi(params, label);
    bool is_max = base + 1 >= params.r;  // (k+1, I)
    if (is_max) {
      for (std::size_t i = 1; i <= params.m() && is_max; ++i) {
        if (label.contains(i)) {
          // (k+1, I-{i}): chi goes up by exactly -alpha_i
          if (base - params.alphas[i - 1] < params.r) is_max = false;
        } else {
          // (k, I+{i})
          if (base + 1 + params.alphas[i - 1] < params.r) is_max = false;
        }
      }
    }
    if (is_max) maximal.push_back(label);
  }
  return maximal;
}

SGraph s_graph(const Params& params, const EnumLimits& limits) {
  SGraph graph;
  graph.nodes = enumerate_strata(params, limits);
  const std::size_t n = graph.nodes.size();

  // The node set is downward closed, so any strict chain out of a node
  // passes through one of its immediate successors (k, I+{j}), (k+1, I),
  // (k+1, I-{i}); hence every cover edge of the restricted order joins a
  // node to one of those successors, and an edge to s survives unless a
  // sibling successor lies strictly below s. The brute-force reduction in
  // the tests pins this down.
  auto position_of = [&](const StratumLabel& label) -> std::size_t {
    auto it = std::lower_bound(graph.nodes.begin(), graph.nodes.end(), label);
    if (it == graph.nodes.end() || !(*it == label)) return n;
    return static_cast<std::size_t>(it - graph.nodes.begin());
  };

  for (std::size_t a = 0; a < n; ++a) {
    const StratumLabel& node = graph.nodes[a];

    std::vector<std::size_t> successors;
    auto add = [&](const StratumLabel& s) {
      std::size_t pos = position_of(s);
      if (pos < n) successors.push_back(pos);
    };
    add(StratumLabel{node.k + 1, node.index_bits});
    for (std::size_t i = 1; i <= params.m(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << (i - 1);
      if (node.index_bits & bit) {
        add(StratumLabel{node.k + 1, node.index_bits & ~bit});
      } else {
        add(StratumLabel{node.k, node.index_bits | bit});
      }
    }

    for (std::size_t b : successors) {
      bool covered = false;
      for (std::size_t c : successors) {
        if (c != b && !(graph.nodes[c] == graph.nodes[b]) &&
            precedes(graph.nodes[c], graph.nodes[b])) {
          covered = true;
          break;
        }
      }
      if (!covered) graph.edges.emplace_back(a, b);
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());
  return graph;
}

std::vector<StratumLabel> intersect_strata(const StratumLabel& a, const StratumLabel& b) {
  if (a.is_empty() || b.is_empty()) {
    throw Error(errc::empty_label, "cannot intersect with the empty label");
  }

  // Every maximal common substratum pins indices from I_a union I_b only:
  // a pin outside both can be traded for one more free point, moving the
  // label strictly up while staying below both sides.
  const std::uint64_t pool = a.index_bits | b.index_bits;
  const unsigned k_min = std::min(a.k, b.k);

  auto in_intersection = [&](unsigned k, std::uint64_t bits) {
    if (k == 0 && bits == 0) return false;
    if (k > k_min) return false;
    return std::popcount(bits & ~a.index_bits) <= static_cast<int>(a.k - k) &&
           std::popcount(bits & ~b.index_bits) <= static_cast<int>(b.k - k);
  };

  std::vector<StratumLabel> maximal;
  for (unsigned k = 0; k <= k_min; ++k) {
    std::uint64_t sub = pool;
    while (true) {  // all subsets of pool, the empty one included
      if (in_intersection(k, sub)) {
        // Maximal iff no immediate successor stays inside: successors keep
        // their pins inside the pool, so this test is complete.
        bool is_max = !in_intersection(k + 1, sub);
        for (std::size_t i = 1; i <= 64 && is_max; ++i) {
          const std::uint64_t bit = std::uint64_t{1} << (i - 1);
          if (sub & bit) {
            if (in_intersection(k + 1, sub & ~bit)) is_max = false;
          } else if (pool & bit) {
            if (in_intersection(k, sub | bit)) is_max = false;
          }
        }
        if (is_max) maximal.push_back(StratumLabel{k, sub});
      }
      if (sub == 0) break;
      sub = (sub - 1) & pool;
    }
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

std::vector<StratumLabel> substrata(const StratumLabel& label, std::size_t bound_m,
                                    const EnumLimits& limits) {
  if (label.is_empty()) {
    throw Error(errc::empty_label, "the empty label has no substrata");
  }
  check_m(bound_m, limits);
  const std::uint64_t mask = full_mask(bound_m);
  if (label.index_bits & ~mask) {
    throw Error(errc::index_out_of_range,
                "label pins an index beyond bound_m = " + std::to_string(bound_m));
  }

  std::vector<StratumLabel> out;
  for (unsigned k = 0; k <= label.k; ++k) {
    std::uint64_t sub = mask;
    while (true) {
      if ((k > 0 || sub != 0) &&
          std::popcount(sub & ~label.index_bits) <= static_cast<int>(label.k - k)) {
        out.push_back(StratumLabel{k, sub});
        if (out.size() > limits.max_labels) cap_exceeded(limits.max_labels);
      }
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace barystrat
