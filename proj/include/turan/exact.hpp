#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/bounds.hpp"
#include "turan/construct.hpp"
#include "turan/error.hpp"
#include "turan/freeness.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

enum class ExactMode { Bruteforce, BranchAndBound };

inline const char* to_string(ExactMode m) { return m == ExactMode::Bruteforce ? "bruteforce" : "branch_and_bound"; }

inline std::optional<ExactMode> parse_mode(std::string_view s) {
  if (s == "bruteforce") return ExactMode::Bruteforce;
  if (s == "branch_and_bound" || s == "bnb") return ExactMode::BranchAndBound;
  return std::nullopt;
}

// H: no member of H(k,q); F: no member of F(k,q); M: multihypergraphs with
// no member of H(k,q).
enum class Family { H, F, M };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::H: return "H";
    case Family::F: return "F";
    case Family::M: return "M";
  }
  return "?";
}

struct ExactResult {
  std::uint64_t value = 0;
  Hypergraph witness;
  ExactMode mode = ExactMode::BranchAndBound;
  Family family = Family::H;
  std::uint64_t explored_nodes = 0;
  ParamTriple params;
  std::size_t n = 0;
  bool shortcut = false;  // answered without search
};

inline constexpr std::uint64_t kBruteforceLimit = 24;  // C(n,r), and 2^24 multiplicity states
inline constexpr std::uint64_t kBranchLimit = 60;      // C(n,r)

namespace detail {

// Edges that may appear with multiplicity up to `cap`.
inline std::vector<Edge> candidate_edges(std::size_t n, int r) {
  std::vector<Edge> out;
  for_each_combination(n, static_cast<std::size_t>(r), [&](const Edge& e) { out.push_back(e); });
  return out;
}

inline Hypergraph from_counts(std::size_t n, int r, const std::vector<Edge>& cand, const std::vector<int>& count,
                              Flavor flavor) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (int c = 0; c < count[i]; ++c) edges.push_back(cand[i]);
  return Hypergraph(n, r, std::move(edges), flavor);
}

// Oracle route: a graph is free iff no vertex set W spans too many edges.
// For H (and M): every W with |W| <= k-q-1 spans fewer than
// max(1, |W|+q+1) edges. For F: every W with |W| = k-q-1 spans fewer than k.
class VertexSetOracle {
 public:
  VertexSetOracle(std::size_t n, const std::vector<Edge>& cand, const ParamTriple& p, Family family) {
    const long order = p.k - p.q - 1;
    std::vector<std::uint64_t> emask;
    for (const Edge& e : cand) {
      std::uint64_t m = 0;
      for (Vertex v : e) m |= std::uint64_t{1} << v;
      emask.push_back(m);
    }
    contains_.resize(cand.size());
    for (long w = 0; w <= static_cast<long>(n); ++w) {
      long limit = 0;
      if (family == Family::F) {
        if (w != order) continue;
        limit = p.k;
      } else {
        if (w > order) continue;
        limit = std::max(1L, w + p.q + 1);
      }
      for_each_combination(n, static_cast<std::size_t>(w), [&](const Edge& ws) {
        std::uint64_t m = 0;
        for (Vertex v : ws) m |= std::uint64_t{1} << v;
        const std::size_t id = limit_.size();
        limit_.push_back(limit);
        for (std::size_t i = 0; i < cand.size(); ++i)
          if ((emask[i] & ~m) == 0) contains_[i].push_back(id);
      });
    }
    spanned_.assign(limit_.size(), 0);
  }

  void change(std::size_t edge, long delta) {
    for (std::size_t id : contains_[edge]) {
      const bool before = spanned_[id] >= limit_[id];
      spanned_[id] += delta;
      const bool after = spanned_[id] >= limit_[id];
      violations_ += static_cast<long>(after) - static_cast<long>(before);
    }
  }

  bool free() const { return violations_ == 0; }

 private:
  std::vector<std::vector<std::size_t>> contains_;
  std::vector<long> limit_;
  std::vector<long> spanned_;
  long violations_ = 0;
};

inline void bruteforce(ExactResult& res, const std::vector<Edge>& cand, int cap) {
  const ParamTriple& p = res.params;
  VertexSetOracle oracle(res.n, cand, p, res.family);
  const std::size_t c = cand.size();
  std::vector<int> count(c, 0), best(c, 0);
  std::uint64_t size = 0;
  res.value = 0;
  if (cap == 1) {
    const std::uint64_t total = std::uint64_t{1} << c;
    for (std::uint64_t i = 1; i < total; ++i) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(i));
      const int delta = count[bit] ? -1 : 1;
      count[bit] += delta;
      size += delta;
      oracle.change(bit, delta);
      ++res.explored_nodes;
      if (size > res.value && oracle.free()) {
        res.value = size;
        best = count;
      }
    }
  } else {
    // Mixed-radix odometer over multiplicities 0..cap.
    while (true) {
      std::size_t d = 0;
      while (d < c && count[d] == cap) {
        oracle.change(d, -cap);
        size -= static_cast<std::uint64_t>(cap);
        count[d] = 0;
        ++d;
      }
      if (d == c) break;
      ++count[d];
      ++size;
      oracle.change(d, 1);
      ++res.explored_nodes;
      if (size > res.value && oracle.free()) {
        res.value = size;
        best = count;
      }
    }
  }
  res.witness = from_counts(res.n, p.r, cand, best, cap > 1 ? Flavor::Multi : Flavor::Simple);
}

// Include-first DFS over candidates in lexicographic order. An added copy is
// accepted iff no violating selection contains it. Freeness is inherited by
// subgraphs, so once a later candidate cannot be added to the current graph
// it never can be in this subtree; the bound counts only the live ones.
class BranchAndBound {
 public:
  // `ceiling` is a proven upper bound on the answer; the search stops once
  // it is reached.
  BranchAndBound(ExactResult& res, const std::vector<Edge>& cand, int cap, std::uint64_t ceiling)
      : res_(res), cand_(cand), cap_(cap), ceiling_(ceiling), count_(cand.size(), 0), best_(cand.size(), 0),
        live_(cand.size(), 1) {}

  void run() {
    res_.value = 0;
    if (!cand_.empty()) {
      // Any nonempty free hypergraph can be relabelled to contain {0..r-1};
      // a single edge is always free for valid parameters.
      count_[0] = 1;
      size_ = 1;
      ++res_.explored_nodes;
      record();
      std::vector<std::size_t> killed;
      prune_live(0, killed);
      descend(0, 1);
    }
    res_.witness = from_counts(res_.n, res_.params.r, cand_, best_, cap_ > 1 ? Flavor::Multi : Flavor::Simple);
  }

 private:
  Hypergraph current() const {
    return from_counts(res_.n, res_.params.r, cand_, count_, cap_ > 1 ? Flavor::Multi : Flavor::Simple);
  }

  // Position of one copy of candidate i in the sorted edge list.
  std::size_t index_of(std::size_t i) const {
    std::size_t pos = 0;
    for (std::size_t j = 0; j < i; ++j) pos += static_cast<std::size_t>(count_[j]);
    return pos;
  }

  // Whether the current graph (which holds at least one copy of i) has no
  // violating selection through that copy.
  bool clean_at(std::size_t i) const {
    const Hypergraph h = current();
    const auto anchor = index_of(i);
    const ParamTriple& p = res_.params;
    if (res_.family == Family::F) {
      if (h.m() < static_cast<std::size_t>(p.k)) return true;
      return !max_deficiency_exact_size(h, static_cast<std::size_t>(p.k), static_cast<std::size_t>(p.k - p.q - 1),
                                        anchor);
    }
    return !find_deficient(h, static_cast<std::size_t>(p.k), p.q + 1, anchor);
  }

  bool fits(std::size_t j) {
    ++count_[j];
    const bool ok = clean_at(j);
    --count_[j];
    return ok;
  }

  // Marks later candidates that no longer fit; they are listed for undo.
  void prune_live(std::size_t i, std::vector<std::size_t>& killed) {
    for (std::size_t j = i + 1; j < cand_.size(); ++j) {
      if (live_[j] && !fits(j)) {
        live_[j] = 0;
        killed.push_back(j);
      }
    }
  }

  void record() {
    if (size_ > res_.value) {
      res_.value = size_;
      best_ = count_;
    }
  }

  std::uint64_t live_after(std::size_t i) const {
    std::uint64_t room = 0;
    for (std::size_t j = i + 1; j < cand_.size(); ++j) room += live_[j] ? static_cast<std::uint64_t>(cap_) : 0;
    return room;
  }

  // Candidate i holds `copies` copies; decide whether it gets another.
  void descend(std::size_t i, int copies) {
    if (res_.value >= ceiling_) return;
    const std::uint64_t rest = live_after(i);
    if (copies < cap_ && live_[i]) {
      const std::uint64_t room = static_cast<std::uint64_t>(cap_ - copies) + rest;
      if (size_ + room <= res_.value) return;
      ++count_[i];
      ++size_;
      ++res_.explored_nodes;
      // A live candidate's first copy is known to fit.
      if (copies == 0 || clean_at(i)) {
        record();
        std::vector<std::size_t> killed;
        prune_live(i, killed);
        descend(i, copies + 1);
        for (std::size_t j : killed) live_[j] = 1;
      }
      --count_[i];
      --size_;
    }
    if (i + 1 < cand_.size()) {
      if (size_ + rest <= res_.value) return;
      descend(i + 1, 0);
    }
  }

  ExactResult& res_;
  const std::vector<Edge>& cand_;
  int cap_;
  std::uint64_t ceiling_;
  std::vector<int> count_;
  std::vector<int> best_;
  std::vector<char> live_;
  std::uint64_t size_ = 0;
};

inline ExactResult exact_run(std::size_t n, const ParamTriple& params, ExactMode mode, Family family) {
  ExactResult res;
  res.n = n;
  res.mode = mode;
  res.family = family;
  res.params = params;
  if (params.r >= 2 && params.q <= -params.r) {
    // Every single edge already has deficiency >= q+1.
    res.shortcut = true;
    res.witness = Hypergraph(n, params.r, {}, family == Family::M ? Flavor::Multi : Flavor::Simple);
    return res;
  }
  const ParamTriple p = require_params(params);
  if (family == Family::F && p.k < 2) throw ParamError(ErrorKind::DegenerateParams, "F-freeness needs k >= 2");
  res.params = p;
  const std::uint64_t slots = binomial(static_cast<std::int64_t>(n), p.r);
  const int cap = family == Family::M ? p.q + p.r : 1;
  if (mode == ExactMode::Bruteforce) {
    if (slots > kBruteforceLimit) throw Error(ErrorKind::TooLarge, "bruteforce needs C(n,r) <= 24");
    if (cap > 1) {
      double states = std::pow(static_cast<double>(cap + 1), static_cast<double>(slots));
      if (states > std::ldexp(1.0, 24)) throw Error(ErrorKind::TooLarge, "bruteforce needs (cap+1)^C(n,r) <= 2^24");
    }
  } else if (slots > kBranchLimit) {
    throw Error(ErrorKind::TooLarge, "branch_and_bound needs C(n,r) <= 60");
  }

  const auto cand = candidate_edges(n, p.r);
  if (family != Family::M) {
    // No simple member fits: every simple hypergraph is free.
    const bool nothing_fits =
        forbidden_sizes(p).empty() ||
        (family == Family::F && (n < static_cast<std::size_t>(p.k - p.q - 1) ||
                                 binomial(p.k - p.q - 1, p.r) < static_cast<std::uint64_t>(p.k)));
    if (nothing_fits) {
      res.shortcut = true;
      res.value = cand.size();
      res.witness = Hypergraph(n, p.r, cand);
      return res;
    }
  }
  if (mode == ExactMode::Bruteforce) {
    bruteforce(res, cand, cap);
  } else {
    // Deleting a vertex leaves a free graph on n-1 vertices and each edge
    // survives n-r of the n deletions: ex(n) <= n ex(n-1) / (n-r).
    std::uint64_t ceiling = static_cast<std::uint64_t>(cap) * cand.size();
    if (n > static_cast<std::size_t>(p.r)) {
      const std::uint64_t below = exact_run(n - 1, p, mode, family).value;
      ceiling = std::min(ceiling, n * below / (n - static_cast<std::size_t>(p.r)));
    }
    BranchAndBound(res, cand, cap, ceiling).run();
  }
  return res;
}

}  // namespace detail

// Largest H(k,q)-free r-graph on n vertices.
inline ExactResult exact_ex(std::size_t n, const ParamTriple& params, ExactMode mode = ExactMode::BranchAndBound) {
  return detail::exact_run(n, params, mode, Family::H);
}

// Largest F(k,q)-free r-graph on n vertices, i.e. f(n, k-q-1, k) - 1.
inline ExactResult exact_f(std::size_t n, const ParamTriple& params, ExactMode mode = ExactMode::BranchAndBound) {
  return detail::exact_run(n, params, mode, Family::F);
}

// Largest r-uniform combinatorial batch code for batch size k on n servers:
// multihypergraphs in which every i <= k edges cover at least i vertices.
inline ExactResult exact_m(std::size_t n, int r, int k, ExactMode mode = ExactMode::BranchAndBound) {
  return detail::exact_run(n, ParamTriple{r, k, 0}, mode, Family::M);
}

// Largest H(k,q)-free multihypergraph; the multiplicity of each edge is at
// most q+r.
inline ExactResult exact_ex_multi(std::size_t n, const ParamTriple& params,
                                  ExactMode mode = ExactMode::BranchAndBound) {
  return detail::exact_run(n, params, mode, Family::M);
}

struct DifferenceRow {
  std::size_t n = 0;
  std::uint64_t exact_f = 0;
  std::uint64_t exact_ex = 0;
  std::uint64_t difference = 0;
  std::optional<std::uint64_t> diff_upper;  // (k-1) C(n-1, r-1), when n >= k
};

struct DifferenceTable {
  ParamTriple params;
  std::vector<DifferenceRow> rows;
  std::optional<std::uint64_t> d_floor;  // r = 2: largest difference seen
};

// exact_f - exact_ex per n; throws InvariantViolation if a row breaks
// (k-1) C(n-1, r-1) or if exact_f < exact_ex.
inline DifferenceTable difference_table(const ParamTriple& params, const std::vector<std::size_t>& ns,
                                        ExactMode mode = ExactMode::BranchAndBound) {
  DifferenceTable table;
  table.params = detail::require_params(params);
  for (std::size_t n : ns) {
    DifferenceRow row;
    row.n = n;
    row.exact_f = exact_f(n, table.params, mode).value;
    row.exact_ex = exact_ex(n, table.params, mode).value;
    if (row.exact_f < row.exact_ex) {
      throw Error(ErrorKind::InvariantViolation, "exact_f < exact_ex at n = " + std::to_string(n));
    }
    row.difference = row.exact_f - row.exact_ex;
    row.diff_upper = evaluate([&] { return diff_upper_general(n, table.params.r, table.params.k, table.params.q); }).value;
    if (row.diff_upper && row.difference > *row.diff_upper) {
      throw Error(ErrorKind::InvariantViolation, "difference exceeds (k-1) C(n-1, r-1) at n = " + std::to_string(n));
    }
    if (table.params.r == 2) table.d_floor = std::max(table.d_floor.value_or(0), row.difference);
    table.rows.push_back(row);
  }
  return table;
}

// Truncated difference constant for graphs, with ex computed exactly.
inline DEstimate d_constant_estimate(int k, int q, std::size_t n_max, ExactMode mode = ExactMode::BranchAndBound) {
  return d_constant_estimate(k, q, n_max, [&](std::size_t n) { return exact_ex(n, ParamTriple{2, k, q}, mode).value; });
}

}  // namespace turan
