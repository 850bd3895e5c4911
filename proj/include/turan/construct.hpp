#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "turan/error.hpp"
#include "turan/freeness.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

// Sizes i for which i edges fit on i-q-1 vertices of a simple r-graph.
struct ForbiddenSizeSet {
  std::vector<int> values;  // ascending

  bool empty() const noexcept { return values.empty(); }
  bool contains(int i) const { return std::binary_search(values.begin(), values.end(), i); }
  friend bool operator==(const ForbiddenSizeSet&, const ForbiddenSizeSet&) = default;
};

enum class DeletionPolicy {
  WitnessDegree,    // witness edge meeting the most other witness edges
  RandomInWitness,  // uniform witness edge from the run's RNG stream
  FirstIndex,       // lowest-index witness edge
};

inline const char* to_string(DeletionPolicy p) {
  switch (p) {
    case DeletionPolicy::WitnessDegree: return "witness-degree";
    case DeletionPolicy::RandomInWitness: return "random-in-witness";
    case DeletionPolicy::FirstIndex: return "first-index";
  }
  return "unknown";
}

inline std::optional<DeletionPolicy> parse_policy(std::string_view s) {
  if (s == "witness-degree") return DeletionPolicy::WitnessDegree;
  if (s == "random-in-witness") return DeletionPolicy::RandomInWitness;
  if (s == "first-index") return DeletionPolicy::FirstIndex;
  return std::nullopt;
}

struct ConstructionReport {
  ParamTriple params;
  std::size_t n = 0;
  double c = 0.0;
  double p = 0.0;
  bool p_clamped = false;
  std::size_t sampled_edges = 0;
  std::size_t deletions = 0;
  Hypergraph result;
  std::uint64_t seed = 0;
  DeletionPolicy policy = DeletionPolicy::WitnessDegree;
};

struct ForbiddenExpectation {
  double bound = 0.0;     // sum over I of C(C(i-q-1,r), i) p^i C(n, i-q-1)
  double constant = 0.0;  // max over I of C(C(i-q-1,r), i) / (i-q-1)!
};

inline ForbiddenSizeSet forbidden_sizes(const ParamTriple& params) {
  const ParamTriple p = validate_params(params.r, params.k, params.q);
  ForbiddenSizeSet out;
  for (int i = p.q + p.r + 2; i <= p.k; ++i) {
    if (static_cast<std::uint64_t>(i) <= binomial(i - p.q - 1, p.r)) out.values.push_back(i);
  }
  return out;
}

// c * n^(-1 + (q+r)/(k-1)) before clamping.
inline double edge_probability_raw(std::size_t n, const ParamTriple& params, double c) {
  const double exponent = -1.0 + static_cast<double>(params.q + params.r) / static_cast<double>(params.k - 1);
  return c * std::pow(static_cast<double>(n), exponent);
}

inline double edge_probability(std::size_t n, const ParamTriple& params, double c) {
  const ParamTriple p = validate_params(params.r, params.k, params.q);
  if (n < static_cast<std::size_t>(p.r)) throw Error(ErrorKind::NotApplicable, "n < r");
  if (!(c > 0.0)) throw Error(ErrorKind::BadProbability, "c must be positive");
  return std::min(1.0, edge_probability_raw(n, p, c));
}

inline double expected_edges(std::size_t n, int r, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::BadProbability, "p must lie in [0, 1]");
  return p * binomial_real(static_cast<double>(n), r);
}

inline ForbiddenExpectation expected_forbidden_upper(std::size_t n, const ParamTriple& params, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::BadProbability, "p must lie in [0, 1]");
  ForbiddenExpectation out;
  for (int i : forbidden_sizes(params).values) {
    const int order = i - params.q - 1;
    const double slots = binomial_real(static_cast<double>(binomial(order, params.r)), i);
    out.bound += slots * std::pow(p, i) * binomial_real(static_cast<double>(n), order);
    out.constant = std::max(out.constant, slots / factorial(order));
  }
  return out;
}

namespace detail {

inline std::vector<Edge> sample_edges(std::size_t n, int r, double p, Rng& rng) {
  std::vector<Edge> edges;
  for_each_combination(n, static_cast<std::size_t>(r), [&](const Edge& e) {
    if (rng.bernoulli(p)) edges.push_back(e);
  });
  return edges;
}

inline EdgeIndex pick_victim(const Hypergraph& h, const EdgeSelection& witness, DeletionPolicy policy, Rng& rng) {
  const auto& idx = witness.indices();
  switch (policy) {
    case DeletionPolicy::FirstIndex:
      return idx.front();
    case DeletionPolicy::RandomInWitness:
      return idx[rng.below(idx.size())];
    case DeletionPolicy::WitnessDegree: {
      EdgeIndex best = idx.front();
      std::size_t best_deg = 0;
      for (std::size_t a = 0; a < idx.size(); ++a) {
        std::size_t deg = 0;
        for (std::size_t b = 0; b < idx.size(); ++b) {
          if (a == b) continue;
          const Edge& x = h.edge(idx[a]);
          const Edge& y = h.edge(idx[b]);
          bool meet = false;
          for (Vertex v : x) meet = meet || std::binary_search(y.begin(), y.end(), v);
          deg += meet ? 1 : 0;
        }
        if (a == 0 || deg > best_deg) {
          best = idx[a];
          best_deg = deg;
        }
      }
      return best;
    }
  }
  return idx.front();
}

inline ParamTriple require_params(const ParamTriple& params) {
  try {
    return validate_params(params.r, params.k, params.q);
  } catch (const ParamError& e) {
    throw ParamError(ErrorKind::DegenerateParams, e.what(), e.ex_is_zero());
  }
}

// One sample-and-repair run. Stops early once `deletion_cap` is exceeded
// (the returned report is then not certified free).
inline ConstructionReport construct_run(std::size_t n, const ParamTriple& params, double c, std::uint64_t seed,
                                        DeletionPolicy policy, std::size_t deletion_cap) {
  const ParamTriple p = require_params(params);
  if (n < static_cast<std::size_t>(p.r)) throw Error(ErrorKind::NotApplicable, "n < r");
  if (!(c > 0.0)) throw Error(ErrorKind::BadProbability, "c must be positive");
  ConstructionReport rep;
  rep.params = p;
  rep.n = n;
  rep.c = c;
  rep.seed = seed;
  rep.policy = policy;
  const double raw = edge_probability_raw(n, p, c);
  rep.p_clamped = raw > 1.0;
  rep.p = std::min(1.0, raw);

  Rng rng(seed);
  Hypergraph h(n, p.r, sample_edges(n, p.r, rep.p, rng));
  rep.sampled_edges = h.m();
  const auto k = static_cast<std::size_t>(p.k);
  // Deleting an edge creates no witness and keeps the order of the others,
  // so roots that were clean before the last hit stay clean.
  EdgeIndex start = 0;
  while (rep.deletions <= deletion_cap) {
    auto found = find_deficient_from(h, k, p.q + 1, start);
    if (!found) break;
    const EdgeIndex victim = pick_victim(h, found->argmax, policy, rng);
    start = found->argmax.indices().front();
    if (victim < start) --start;
    h = h.without_edge(victim);
    ++rep.deletions;
  }
  rep.result = std::move(h);
  return rep;
}

}  // namespace detail

// Samples the random r-graph at p = c n^(-1+(q+r)/(k-1)) and deletes one
// witness edge at a time until no forbidden configuration remains.
inline ConstructionReport random_construct(std::size_t n, const ParamTriple& params, double c, std::uint64_t seed,
                                           DeletionPolicy policy = DeletionPolicy::WitnessDegree) {
  return detail::construct_run(n, params, c, seed, policy, std::numeric_limits<std::size_t>::max() - 1);
}

inline std::vector<double> c_grid() {
  std::vector<double> grid;
  for (int j = -10; j <= 3; ++j) grid.push_back(std::ldexp(1.0, j));
  return grid;
}

// Largest grid value c = 2^j (-10 <= j <= 3) for which the seeds lose at
// most half of their sampled edges in total. The grid is walked upward and
// the walk stops at the first failing point.
inline double auto_tune_c(std::size_t n, const ParamTriple& params, const std::vector<std::uint64_t>& seeds,
                          DeletionPolicy policy = DeletionPolicy::WitnessDegree) {
  const ParamTriple p = detail::require_params(params);
  const auto grid = c_grid();
  if (forbidden_sizes(p).empty() || seeds.empty()) return grid.back();
  std::optional<double> feasible;
  for (double c : grid) {
    std::size_t sampled = 0;
    for (auto seed : seeds) {
      Rng rng(seed);
      sampled += detail::sample_edges(n, p.r, std::min(1.0, edge_probability_raw(n, p, c)), rng).size();
    }
    std::size_t deleted = 0;
    bool ok = true;
    for (auto seed : seeds) {
      const std::size_t budget = sampled / 2 - std::min(deleted, sampled / 2);
      const auto rep = detail::construct_run(n, p, c, seed, policy, budget);
      deleted += rep.deletions;
      if (2 * deleted > sampled) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    feasible = c;
  }
  if (!feasible) throw Error(ErrorKind::NoFeasibleC, "even c = 2^-10 loses more than half of the edges");
  return *feasible;
}

}  // namespace turan
