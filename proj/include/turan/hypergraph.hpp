#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turan/error.hpp"

namespace turan {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;
using Edge = std::vector<Vertex>;

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

// (r, k, q): r-uniform, forbidden configurations have at most k edges and
// exceed their vertex count by q+1.
struct ParamTriple {
  int r = 2;
  int k = 3;
  int q = 0;

  friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
};

inline ParamTriple validate_params(int r, int k, int q) {
  if (r < 2) {
    throw ParamError(ErrorKind::UniformityTooSmall, "r = " + std::to_string(r) + " < 2");
  }
  if (q <= -r) {
    // A single edge already has r vertices and one edge, so every nonempty
    // hypergraph contains a forbidden member.
    throw ParamError(ErrorKind::QTooSmall,
                     "q = " + std::to_string(q) + " <= -r; ex(n, H(k,q)) = 0", true);
  }
  if (k < q + r + 1) {
    throw ParamError(ErrorKind::KTooSmall,
                     "k = " + std::to_string(k) + " < q+r+1 = " + std::to_string(q + r + 1));
  }
  return ParamTriple{r, k, q};
}

// ---------------------------------------------------------------------------
// Combinatorics helpers
// ---------------------------------------------------------------------------

// Exact binomial coefficient; saturates at uint64 max on overflow.
inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

inline double binomial_real(double n, std::int64_t k) {
  if (k < 0 || n < static_cast<double>(k)) return 0.0;
  double acc = 1.0;
  for (std::int64_t i = 1; i <= k; ++i) acc *= (n - static_cast<double>(k) + static_cast<double>(i)) / static_cast<double>(i);
  return acc;
}

inline double factorial(int n) {
  double acc = 1.0;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

// Calls fn(const Edge&) for every r-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
  if (r > n) return;
  Edge combo(r);
  std::iota(combo.begin(), combo.end(), Vertex{0});
  while (true) {
    fn(static_cast<const Edge&>(combo));
    std::size_t i = r;
    while (i > 0 && combo[i - 1] == static_cast<Vertex>(n - r + i - 1)) --i;
    if (i == 0) return;
    ++combo[i - 1];
    for (std::size_t j = i; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }
}

// ---------------------------------------------------------------------------
// Random numbers
// ---------------------------------------------------------------------------

// Deterministic stream: std::mt19937_64 seeded with the caller's seed.
// Unit draws use the top 53 bits, so results do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// EdgeSelection
// ---------------------------------------------------------------------------

// A set of edge-list positions, kept sorted and duplicate free.
class EdgeSelection {
 public:
  EdgeSelection() = default;
  EdgeSelection(std::initializer_list<EdgeIndex> init) : indices_(init) { normalize(); }
  explicit EdgeSelection(std::vector<EdgeIndex> indices) : indices_(std::move(indices)) {
    normalize();
  }

  static EdgeSelection all(std::size_t m) {
    std::vector<EdgeIndex> v(m);
    std::iota(v.begin(), v.end(), EdgeIndex{0});
    return EdgeSelection(std::move(v));
  }

  const std::vector<EdgeIndex>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  bool contains(EdgeIndex i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

  friend bool operator==(const EdgeSelection&, const EdgeSelection&) = default;
  friend auto operator<=>(const EdgeSelection& a, const EdgeSelection& b) {
    return a.indices_ <=> b.indices_;
  }

 private:
  void normalize() {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  }

  std::vector<EdgeIndex> indices_;
};

// ---------------------------------------------------------------------------
// Hypergraph
// ---------------------------------------------------------------------------

enum class Flavor { Simple, Multi };

inline const char* to_string(Flavor f) { return f == Flavor::Simple ? "simple" : "multi"; }

// r-uniform (multi)hypergraph on vertices 0..n-1. Immutable after
// construction; edges are sorted ascending and the edge list is kept in
// lexicographic order with repeated edges adjacent.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(std::size_t n, int r, std::vector<Edge> edges, Flavor flavor = Flavor::Simple)
      : n_(n), r_(r), flavor_(flavor), edges_(std::move(edges)) {
    if (r_ < 1) throw Error(ErrorKind::UniformityTooSmall, "uniformity must be positive");
    for (auto& e : edges_) {
      if (e.size() != static_cast<std::size_t>(r_)) {
        throw Error(ErrorKind::UniformityMismatch, "edge of size " + std::to_string(e.size()) +
                                                       " in a " + std::to_string(r_) + "-graph");
      }
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
        throw Error(ErrorKind::UniformityMismatch, "edge with a repeated vertex");
      }
      if (e.back() >= n_) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(e.back()) + " >= n = " + std::to_string(n_));
      }
    }
    std::sort(edges_.begin(), edges_.end());
    if (flavor_ == Flavor::Simple &&
        std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw Error(ErrorKind::DuplicateEdge, "repeated edge in a simple hypergraph");
    }
  }

  std::size_t n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  std::size_t m() const noexcept { return edges_.size(); }
  Flavor flavor() const noexcept { return flavor_; }
  bool allow_multi() const noexcept { return flavor_ == Flavor::Multi; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex i) const { return edges_.at(i); }

  // Copy keeping only the selected edges (same n, r, flavor).
  Hypergraph restricted_to(const EdgeSelection& s) const {
    std::vector<Edge> kept;
    kept.reserve(s.size());
    for (EdgeIndex i : s) kept.push_back(edge(i));
    return Hypergraph(n_, r_, std::move(kept), flavor_);
  }

  Hypergraph without_edge(EdgeIndex i) const {
    std::vector<Edge> kept = edges_;
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    return Hypergraph(n_, r_, std::move(kept), flavor_);
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> deg(n_, 0);
    for (const auto& e : edges_)
      for (Vertex v : e) ++deg[v];
    return deg;
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  int r_ = 2;
  Flavor flavor_ = Flavor::Simple;
  std::vector<Edge> edges_;
};

inline Hypergraph complete_hypergraph(std::size_t n, int r) {
  std::vector<Edge> edges;
  for_each_combination(n, static_cast<std::size_t>(r), [&](const Edge& e) { edges.push_back(e); });
  return Hypergraph(n, r, std::move(edges));
}

inline void check_selection(const Hypergraph& h, const EdgeSelection& s) {
  if (!s.empty() && s.indices().back() >= h.m()) {
    throw Error(ErrorKind::IndexOutOfRange, "edge index " + std::to_string(s.indices().back()) +
                                                " >= m = " + std::to_string(h.m()));
  }
}

// Union of the selected edges, ascending.
inline std::vector<Vertex> cover(const Hypergraph& h, const EdgeSelection& s) {
  check_selection(h, s);
  std::vector<Vertex> out;
  for (EdgeIndex i : s) out.insert(out.end(), h.edge(i).begin(), h.edge(i).end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// |S| - |cover(S)|.
inline long deficiency(const Hypergraph& h, const EdgeSelection& s) {
  if (s.empty()) throw Error(ErrorKind::EmptySelection, "deficiency of an empty selection");
  return static_cast<long>(s.size()) - static_cast<long>(cover(h, s).size());
}

// Splits s into maximal parts whose edges are connected through shared
// vertices. Parts are ordered by their smallest edge index.
inline std::vector<EdgeSelection> components(const Hypergraph& h, const EdgeSelection& s) {
  check_selection(h, s);
  std::vector<Vertex> parent(h.n());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeIndex i : s) {
    const Edge& e = h.edge(i);
    for (std::size_t j = 1; j < e.size(); ++j) parent[find(e[j])] = find(e[0]);
  }
  std::vector<std::vector<EdgeIndex>> groups;
  std::vector<std::size_t> slot(h.n(), std::numeric_limits<std::size_t>::max());
  for (EdgeIndex i : s) {
    Vertex root = find(h.edge(i)[0]);
    if (slot[root] == std::numeric_limits<std::size_t>::max()) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(i);
  }
  std::vector<EdgeSelection> parts;
  parts.reserve(groups.size());
  for (auto& g : groups) parts.emplace_back(std::move(g));
  return parts;
}

// ---------------------------------------------------------------------------
// Text format
//
//   line 1:     n r m flavor        (flavor is "simple" or "multi")
//   next m:     r ascending vertex indices separated by single spaces
//
// '#' starts a comment; blank lines are ignored by the reader.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  if (tok.empty() || tok.size() > 18) throw ParseError(ErrorKind::ParseError, line, "bad integer");
  std::uint64_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') {
      throw ParseError(ErrorKind::ParseError, line, "bad integer '" + std::string(tok) + "'");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace detail

inline Hypergraph read_hypergraph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  int r = 0;
  Flavor flavor = Flavor::Simple;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = detail::split_ws(line);
    if (toks.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (toks.size() != 4) throw ParseError(ErrorKind::ParseError, line_no, "header must be 'n r m flavor'");
      n = detail::parse_uint(toks[0], line_no);
      r = static_cast<int>(detail::parse_uint(toks[1], line_no));
      m = detail::parse_uint(toks[2], line_no);
      if (toks[3] == "simple") {
        flavor = Flavor::Simple;
      } else if (toks[3] == "multi") {
        flavor = Flavor::Multi;
      } else {
        throw ParseError(ErrorKind::ParseError, line_no, "unknown flavor '" + std::string(toks[3]) + "'");
      }
      if (r < 1) throw ParseError(ErrorKind::ParseError, line_no, "uniformity must be positive");
      have_header = true;
      continue;
    }
    if (edges.size() == m) throw ParseError(ErrorKind::ParseError, line_no, "more edge lines than declared");
    if (toks.size() != static_cast<std::size_t>(r)) {
      throw ParseError(ErrorKind::UniformityMismatch, line_no,
                       "expected " + std::to_string(r) + " vertices, got " + std::to_string(toks.size()));
    }
    Edge e;
    for (auto tok : toks) {
      std::uint64_t v = detail::parse_uint(tok, line_no);
      if (v >= n) {
        throw ParseError(ErrorKind::VertexOutOfRange, line_no,
                         "vertex " + std::to_string(v) + " >= n = " + std::to_string(n));
      }
      e.push_back(static_cast<Vertex>(v));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw ParseError(ErrorKind::UniformityMismatch, line_no, "repeated vertex inside an edge");
    }
    edges.push_back(std::move(e));
    edge_lines.push_back(line_no);
    if (nl == text.size()) break;
  }
  if (!have_header) throw ParseError(ErrorKind::ParseError, line_no, "missing header");
  if (edges.size() != m) {
    throw ParseError(ErrorKind::ParseError, line_no,
                     "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  if (flavor == Flavor::Simple) {
    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return edges[a] != edges[b] ? edges[a] < edges[b] : edge_lines[a] < edge_lines[b];
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (edges[order[i]] == edges[order[i - 1]]) {
        throw ParseError(ErrorKind::DuplicateEdge, edge_lines[order[i]], "repeated edge in a simple hypergraph");
      }
    }
  }
  return Hypergraph(n, r, std::move(edges), flavor);
}

inline std::string write_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.n() << ' ' << h.r() << ' ' << h.m() << ' ' << to_string(h.flavor()) << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

// Each of the C(n,r) r-subsets, visited in lexicographic order, is kept
// independently with probability p.
inline Hypergraph random_uniform(std::size_t n, int r, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::BadProbability, "p must lie in [0, 1]");
  if (r < 1) throw Error(ErrorKind::UniformityTooSmall, "uniformity must be positive");
  Rng rng(seed);
  std::vector<Edge> edges;
  for_each_combination(n, static_cast<std::size_t>(r), [&](const Edge& e) {
    if (rng.bernoulli(p)) edges.push_back(e);
  });
  return Hypergraph(n, r, std::move(edges));
}

}  // namespace turan
