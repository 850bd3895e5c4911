#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "turan/bounds.hpp"
#include "turan/error.hpp"
#include "turan/freeness.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

namespace detail {

inline void require_graph(const Hypergraph& g) {
  if (g.r() != 2) throw Error(ErrorKind::UniformityMismatch, "expects a graph (r = 2)");
}

inline EdgeSelection alive_selection(const std::vector<char>& alive) {
  std::vector<EdgeIndex> idx;
  for (EdgeIndex i = 0; i < alive.size(); ++i)
    if (alive[i]) idx.push_back(i);
  return EdgeSelection(std::move(idx));
}

// a^e saturated at 2^126.
inline unsigned __int128 saturating_pow(std::uint64_t a, int e) {
  constexpr unsigned __int128 cap = static_cast<unsigned __int128>(1) << 126;
  unsigned __int128 acc = 1;
  for (int i = 0; i < e; ++i) {
    acc *= a;
    if (acc > cap) return cap;
  }
  return acc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Min-degree peeling
// ---------------------------------------------------------------------------

struct PeelCertificate {
  Rational original_avg_degree;  // 2m/n
  Rational threshold;            // m/n
  std::vector<Vertex> removal_order;
  std::vector<Vertex> remaining;  // ascending
  Hypergraph final_subgraph;      // same labels; removed vertices left isolated
  std::size_t final_min_degree = 0;
};

// Deletes, one at a time, the smallest vertex whose current degree is at most
// half the original average degree. The threshold never moves.
inline PeelCertificate peel_min_degree(const Hypergraph& g) {
  detail::require_graph(g);
  if (g.m() == 0) throw Error(ErrorKind::EmptyGraph, "peeling needs at least one edge");
  const std::size_t n = g.n();
  const std::size_t m = g.m();
  PeelCertificate cert;
  cert.original_avg_degree = Rational(2 * static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));
  cert.threshold = Rational(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));

  std::vector<std::vector<EdgeIndex>> incident(n);
  for (EdgeIndex i = 0; i < m; ++i)
    for (Vertex v : g.edge(i)) incident[v].push_back(i);
  std::vector<std::size_t> deg = g.degrees();
  std::vector<char> vertex_alive(n, 1), edge_alive(m, 1);

  // deg <= m/n, kept in integers.
  auto below = [&](Vertex v) { return deg[v] * n <= m; };
  while (true) {
    std::optional<Vertex> pick;
    for (Vertex v = 0; v < n; ++v) {
      if (vertex_alive[v] && below(v)) {
        pick = v;
        break;
      }
    }
    if (!pick) break;
    vertex_alive[*pick] = 0;
    cert.removal_order.push_back(*pick);
    for (EdgeIndex i : incident[*pick]) {
      if (!edge_alive[i]) continue;
      edge_alive[i] = 0;
      for (Vertex u : g.edge(i)) --deg[u];
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (vertex_alive[v]) cert.remaining.push_back(v);
  cert.final_subgraph = g.restricted_to(detail::alive_selection(edge_alive));
  if (!cert.remaining.empty()) {
    cert.final_min_degree = deg[cert.remaining.front()];
    for (Vertex v : cert.remaining) cert.final_min_degree = std::min(cert.final_min_degree, deg[v]);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// BFS level certificate
// ---------------------------------------------------------------------------

struct SubCheck {
  std::string name;
  bool engaged = true;  // false: the inequality says nothing for this input
  bool holds = true;
  std::string witness;  // first violation, empty when it holds
};

struct BfsCertificate {
  Vertex root = 0;
  int k = 0;
  int q = 0;
  std::vector<std::vector<Vertex>> levels;
  std::vector<EdgeIndex> tree_edges;
  std::vector<EdgeIndex> additional_edges;
  std::vector<std::pair<int, int>> additional_levels;  // endpoint levels, aligned with additional_edges
  std::vector<std::size_t> additional_count;           // per vertex
  int h = 0;
  int h_star = 0;
  std::size_t delta = 0;         // minimum degree over non-isolated vertices
  std::size_t claimA_lhs = 0;    // |V(F)|, non-isolated vertices
  double claimA_rhs = 0.0;       // (delta-q-2)^h / (q+2)
  std::vector<SubCheck> checks;  // a, b, c, then d and e when h = h*+1

  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.holds; });
  }
};

// Grows the BFS tree of F from `root` (children in ascending vertex order)
// and checks the level facts that freeness forces:
//  (a) vertices on levels 0..h*-1 carry at most q+1 additional edges;
//  (b) l_i >= (delta-q-2) l_{i-1} for 2 <= i <= h*;
//  (c) |V(F)| > (delta-q-2)^h / (q+2);
// and, when h = h*+1, the refined counts on levels h-1 (d) and h (e).
// (b) and (c) only engage when delta > q+2.
inline BfsCertificate bfs_certificate(const Hypergraph& f, Vertex root, int k, int q) {
  detail::require_graph(f);
  detail::require(q >= -1, "q >= -1");
  detail::require(k >= 2 * q + 6, "k >= 2q+6");
  const std::size_t n = f.n();
  std::vector<std::vector<std::pair<Vertex, EdgeIndex>>> adj(n);
  for (EdgeIndex i = 0; i < f.m(); ++i) {
    const Edge& e = f.edge(i);
    adj[e[0]].emplace_back(e[1], i);
    adj[e[1]].emplace_back(e[0], i);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  if (root >= n || adj[root].empty()) throw Error(ErrorKind::DisconnectedRoot, "root has no incident edge");
  if (!is_free(f, ParamTriple{2, k, q}).free) throw Error(ErrorKind::NotFree, "input is not free");

  BfsCertificate cert;
  cert.root = root;
  cert.k = k;
  cert.q = q;
  cert.h = k / (q + 3);
  cert.h_star = (k - q - 1) / (q + 3);

  std::vector<int> level(n, -1);
  std::vector<char> is_tree(f.m(), 0);
  level[root] = 0;
  cert.levels.push_back({root});
  std::queue<Vertex> queue;
  queue.push(root);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (auto [w, i] : adj[u]) {
      if (level[w] != -1) continue;
      level[w] = level[u] + 1;
      is_tree[i] = 1;
      cert.tree_edges.push_back(i);
      if (cert.levels.size() <= static_cast<std::size_t>(level[w])) cert.levels.emplace_back();
      cert.levels[level[w]].push_back(w);
      queue.push(w);
    }
  }
  std::sort(cert.tree_edges.begin(), cert.tree_edges.end());
  cert.additional_count.assign(n, 0);
  for (EdgeIndex i = 0; i < f.m(); ++i) {
    const Edge& e = f.edge(i);
    if (is_tree[i] || level[e[0]] == -1) continue;
    cert.additional_edges.push_back(i);
    cert.additional_levels.emplace_back(level[e[0]], level[e[1]]);
    ++cert.additional_count[e[0]];
    ++cert.additional_count[e[1]];
  }

  const auto deg = f.degrees();
  bool first = true;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 0) continue;
    ++cert.claimA_lhs;
    cert.delta = first ? deg[v] : std::min(cert.delta, deg[v]);
    first = false;
  }
  const long slack = static_cast<long>(cert.delta) - q - 2;  // delta - q - 2
  const bool engaged = slack > 0;
  cert.claimA_rhs = engaged ? std::pow(static_cast<double>(slack), cert.h) / (q + 2) : 0.0;

  auto level_size = [&](int i) -> std::size_t {
    return i < static_cast<int>(cert.levels.size()) ? cert.levels[i].size() : 0;
  };
  const std::size_t cap = static_cast<std::size_t>(q + 1);

  SubCheck a{"a: additional edges per vertex on levels 0..h*-1 <= q+1", true, true, {}};
  for (int i = 0; i < cert.h_star && i < static_cast<int>(cert.levels.size()) && a.holds; ++i) {
    for (Vertex v : cert.levels[i]) {
      if (cert.additional_count[v] > cap) {
        a.holds = false;
        a.witness = "vertex " + std::to_string(v) + " on level " + std::to_string(i) + " has " +
                    std::to_string(cert.additional_count[v]) + " additional edges";
        break;
      }
    }
  }
  cert.checks.push_back(a);

  SubCheck b{"b: l_i >= (delta-q-2) l_{i-1} for 2 <= i <= h*", engaged, true, {}};
  if (engaged) {
    for (int i = 2; i <= cert.h_star; ++i) {
      if (level_size(i) < static_cast<std::size_t>(slack) * level_size(i - 1)) {
        b.holds = false;
        b.witness = "level " + std::to_string(i) + ": " + std::to_string(level_size(i)) + " < " +
                    std::to_string(slack) + " * " + std::to_string(level_size(i - 1));
        break;
      }
    }
  }
  cert.checks.push_back(b);

  SubCheck c{"c: |V(F)| > (delta-q-2)^h / (q+2)", engaged, true, {}};
  if (engaged) {
    const unsigned __int128 lhs = static_cast<unsigned __int128>(cert.claimA_lhs) * static_cast<unsigned>(q + 2);
    if (!(lhs > detail::saturating_pow(static_cast<std::uint64_t>(slack), cert.h))) {
      c.holds = false;
      c.witness = std::to_string(cert.claimA_lhs) + " <= " + std::to_string(cert.claimA_rhs);
    }
  }
  cert.checks.push_back(c);

  if (cert.h == cert.h_star + 1) {
    // Additional edges at u on `at`, counted only when the other end lies on
    // one of the listed levels.
    auto refined = [&](int at, std::initializer_list<int> other_levels, SubCheck& out) {
      if (at < 0 || at >= static_cast<int>(cert.levels.size())) return;
      std::vector<std::size_t> count(n, 0);
      auto counts = [&](int lv) { return std::find(other_levels.begin(), other_levels.end(), lv) != other_levels.end(); };
      for (std::size_t j = 0; j < cert.additional_edges.size(); ++j) {
        const Edge& e = f.edge(cert.additional_edges[j]);
        const auto [l0, l1] = cert.additional_levels[j];
        if (l0 == at && counts(l1)) ++count[e[0]];
        if (l1 == at && counts(l0)) ++count[e[1]];
      }
      for (Vertex u : cert.levels[at]) {
        if (count[u] > cap) {
          out.holds = false;
          out.witness = "vertex " + std::to_string(u) + " on level " + std::to_string(at) + " has " +
                        std::to_string(count[u]) + " such edges";
          return;
        }
      }
    };
    SubCheck d{"d: level h-1 vertices have <= q+1 additional edges into levels h-2, h-1", true, true, {}};
    refined(cert.h - 1, {cert.h - 2, cert.h - 1}, d);
    cert.checks.push_back(d);
    SubCheck e{"e: level h vertices have <= q+1 additional edges into level h-1", true, true, {}};
    refined(cert.h, {cert.h - 1}, e);
    cert.checks.push_back(e);
  }
  return cert;
}

// Vertices of degree at least `min_degree` after repeatedly discarding those
// below it; edges outside the core are dropped, labels are kept.
inline Hypergraph degree_core(const Hypergraph& g, std::size_t min_degree) {
  const std::size_t n = g.n();
  std::vector<std::vector<EdgeIndex>> incident(n);
  for (EdgeIndex i = 0; i < g.m(); ++i)
    for (Vertex v : g.edge(i)) incident[v].push_back(i);
  std::vector<std::size_t> deg = g.degrees();
  std::vector<char> vertex_alive(n, 1), edge_alive(g.m(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!vertex_alive[v] || deg[v] >= min_degree) continue;
      vertex_alive[v] = 0;
      changed = true;
      for (EdgeIndex i : incident[v]) {
        if (!edge_alive[i]) continue;
        edge_alive[i] = 0;
        for (Vertex u : g.edge(i)) --deg[u];
      }
    }
  }
  return g.restricted_to(detail::alive_selection(edge_alive));
}

// ---------------------------------------------------------------------------
// Link reduction
// ---------------------------------------------------------------------------

struct LinkCertificate {
  std::vector<Vertex> s_star;  // the (r-2)-set, ascending
  std::size_t link_degree = 0;
  Hypergraph link_graph;       // r = 2, on the original vertex labels
  Rational inequality_lhs;     // m C(r,2) / C(n, r-2)
  bool inequality_holds = false;
  ParamTriple link_params;     // (2, k, q+r-2)
  bool input_free = false;
  std::optional<bool> link_free;  // only evaluated when the input is free
  bool transfer_holds = true;
};

// Picks the (r-2)-set S* in the most edges (lexicographically smallest among
// ties) and keeps e \ S* for every edge e containing it.
inline LinkCertificate best_link(const Hypergraph& h, const ParamTriple& params) {
  const ParamTriple p = validate_params(params.r, params.k, params.q);
  check_uniformity(h, p);
  const std::size_t n = h.n();
  const int r = p.r;
  LinkCertificate cert;
  cert.link_params = ParamTriple{2, p.k, p.q + r - 2};

  if (r == 2) {
    cert.link_degree = h.m();
    cert.link_graph = h;
  } else {
    std::map<std::vector<Vertex>, std::size_t> counts;
    const auto sub = static_cast<std::size_t>(r - 2);
    for (const Edge& e : h.edges()) {
      for_each_combination(e.size(), sub, [&](const Edge& pos) {
        std::vector<Vertex> s;
        for (Vertex i : pos) s.push_back(e[i]);
        ++counts[s];
      });
    }
    if (counts.empty()) {
      for (Vertex v = 0; v < sub; ++v) cert.s_star.push_back(v);
    } else {
      // std::map iterates in lexicographic order, so the first maximum wins.
      auto best = counts.begin();
      for (auto it = counts.begin(); it != counts.end(); ++it)
        if (it->second > best->second) best = it;
      cert.s_star = best->first;
      cert.link_degree = best->second;
    }
    std::vector<Edge> link;
    for (const Edge& e : h.edges()) {
      if (!std::includes(e.begin(), e.end(), cert.s_star.begin(), cert.s_star.end())) continue;
      Edge rest;
      std::set_difference(e.begin(), e.end(), cert.s_star.begin(), cert.s_star.end(), std::back_inserter(rest));
      link.push_back(std::move(rest));
    }
    cert.link_graph = Hypergraph(n, 2, std::move(link), h.flavor());
  }

  const auto denom = static_cast<std::int64_t>(binomial(static_cast<std::int64_t>(n), r - 2));
  const auto num = static_cast<std::int64_t>(h.m()) * static_cast<std::int64_t>(binomial(r, 2));
  cert.inequality_lhs = denom == 0 ? Rational(0) : Rational(num, denom);
  cert.inequality_holds = Rational(static_cast<std::int64_t>(cert.link_degree)) >= cert.inequality_lhs;

  cert.input_free = is_free(h, p).free;
  if (cert.input_free) {
    cert.link_free = is_free(cert.link_graph, cert.link_params).free;
    cert.transfer_holds = *cert.link_free;
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Maximal forbidden subgraphs
// ---------------------------------------------------------------------------

// A subgraph (V', E') with |E'| - |V'| = q+1; V' may hold isolated vertices.
struct ForbiddenPart {
  std::vector<Vertex> vertices;  // ascending
  EdgeSelection edges;
  bool component_union = false;  // V' closed under adjacency and E' induced
  friend bool operator==(const ForbiddenPart&, const ForbiddenPart&) = default;
};

enum class DecompositionVerdict { ResidualFree, MaximalAtK };

inline const char* to_string(DecompositionVerdict v) {
  return v == DecompositionVerdict::ResidualFree ? "residual-free" : "maximal-at-k";
}

struct DecompositionCertificate {
  int k = 0;
  int q = 0;
  std::vector<ForbiddenPart> parts;
  EdgeSelection remainder_edges;
  std::vector<Vertex> remainder_vertices;
  DecompositionVerdict verdict = DecompositionVerdict::ResidualFree;
  std::optional<ForbiddenPart> at_k;  // the k-edge forbidden subgraph that ended the run
  bool edge_partition_check = false;
  bool parts_disjoint = false;
  bool remainder_free = false;
  std::optional<int> z;
  bool ratio_check = false;  // |E(G_i)| / |V(G_i)| <= z / (z-q-1) for every part
};

namespace detail {

inline bool is_component_union(const Hypergraph& g, const std::vector<char>& edge_alive,
                               const std::vector<char>& in_v, const std::vector<char>& in_e) {
  for (EdgeIndex i = 0; i < g.m(); ++i) {
    if (!edge_alive[i] || in_e[i]) continue;
    for (Vertex v : g.edge(i))
      if (in_v[v]) return false;
  }
  return true;
}

}  // namespace detail

// Peels vertex-disjoint maximal forbidden subgraphs with fewer than k edges
// off G. Each one starts from a witness trimmed to deficiency q+1 and grows
// by, in order of preference:
//   1. an outside edge touching V' together with its outside end;
//   2. a missing edge inside V' together with the smallest outside vertex;
//   3. a block of outside edges with nonnegative deficiency (padded with the
//      smallest spare vertices), which is how a closed V' can still grow.
// Growth stops at k edges (then the run ends with MaximalAtK) or when no
// move applies, at which point the subgraph is maximal.
inline DecompositionCertificate decompose_maximal_forbidden(const Hypergraph& g, int k, int q) {
  detail::require_graph(g);
  detail::require(q >= -1, "q >= -1");
  detail::require(k >= q + 3, "k >= q+3");
  detail::require(g.n() >= static_cast<std::size_t>(k - q - 1), "n >= k-q-1");
  const ParamTriple params{2, k, q};
  const std::size_t n = g.n();
  const std::size_t m = g.m();
  DecompositionCertificate cert;
  cert.k = k;
  cert.q = q;
  std::vector<char> vertex_alive(n, 1), edge_alive(m, 1);

  auto residual_indices = [&] {
    std::vector<EdgeIndex> idx;
    for (EdgeIndex i = 0; i < m; ++i)
      if (edge_alive[i]) idx.push_back(i);
    return idx;
  };

  while (true) {
    const auto res_idx = residual_indices();
    if (res_idx.empty()) break;
    const Hypergraph residual = g.restricted_to(EdgeSelection(res_idx));
    const auto verdict = is_free(residual, params);
    if (verdict.free) break;

    std::vector<char> in_v(n, 0), in_e(m, 0);
    std::size_t nv = 0, ne = 0;
    auto add_vertex = [&](Vertex v) {
      if (!in_v[v]) {
        in_v[v] = 1;
        ++nv;
      }
    };
    auto add_edge = [&](EdgeIndex i) {
      in_e[i] = 1;
      ++ne;
      for (Vertex v : g.edge(i)) add_vertex(v);
    };
    for (EdgeIndex j : trim_to_member(residual, *verdict.witness, q)) add_edge(res_idx[j]);

    auto spare_vertex = [&](const std::vector<char>& taken) -> std::optional<Vertex> {
      for (Vertex v = 0; v < n; ++v)
        if (vertex_alive[v] && !in_v[v] && !taken[v]) return v;
      return std::nullopt;
    };
    const std::vector<char> none(n, 0);

    while (ne < static_cast<std::size_t>(k)) {
      bool moved = false;
      for (EdgeIndex i = 0; i < m && !moved; ++i) {
        if (!edge_alive[i] || in_e[i]) continue;
        const Edge& e = g.edge(i);
        if (in_v[e[0]] != in_v[e[1]]) {
          add_edge(i);
          moved = true;
        }
      }
      if (moved) continue;
      if (auto outside = spare_vertex(none)) {
        for (EdgeIndex i = 0; i < m && !moved; ++i) {
          if (!edge_alive[i] || in_e[i]) continue;
          const Edge& e = g.edge(i);
          if (in_v[e[0]] && in_v[e[1]]) {
            add_edge(i);
            add_vertex(*outside);
            moved = true;
          }
        }
      }
      if (moved) continue;
      std::vector<EdgeIndex> outside_idx;
      for (EdgeIndex i = 0; i < m; ++i) {
        if (!edge_alive[i] || in_e[i]) continue;
        const Edge& e = g.edge(i);
        if (!in_v[e[0]] && !in_v[e[1]]) outside_idx.push_back(i);
      }
      if (!outside_idx.empty()) {
        const Hypergraph outside = g.restricted_to(EdgeSelection(outside_idx));
        const auto best = max_deficiency(outside, static_cast<std::size_t>(k) - ne);
        std::size_t spare = 0;
        for (Vertex v = 0; v < n; ++v) spare += (vertex_alive[v] && !in_v[v]) ? 1 : 0;
        if (best.value >= 0 && best.argmax.size() <= spare) {
          std::vector<char> taken(n, 0);
          for (EdgeIndex j : best.argmax)
            for (Vertex v : outside.edge(j)) taken[v] = 1;
          std::vector<Vertex> pad;
          for (long p = 0; p < best.value; ++p) {
            const auto v = spare_vertex(taken);
            taken[*v] = 1;
            pad.push_back(*v);
          }
          for (EdgeIndex j : best.argmax) add_edge(outside_idx[j]);
          for (Vertex v : pad) add_vertex(v);
          moved = true;
        }
      }
      if (!moved) break;
    }

    ForbiddenPart part;
    for (Vertex v = 0; v < n; ++v)
      if (in_v[v]) part.vertices.push_back(v);
    std::vector<EdgeIndex> idx;
    for (EdgeIndex i = 0; i < m; ++i)
      if (in_e[i]) idx.push_back(i);
    part.edges = EdgeSelection(std::move(idx));
    part.component_union = detail::is_component_union(g, edge_alive, in_v, in_e);

    if (ne >= static_cast<std::size_t>(k)) {
      cert.verdict = DecompositionVerdict::MaximalAtK;
      cert.at_k = std::move(part);
      break;
    }
    for (Vertex v : part.vertices) vertex_alive[v] = 0;
    for (EdgeIndex i : part.edges) edge_alive[i] = 0;
    cert.parts.push_back(std::move(part));
  }

  cert.remainder_edges = EdgeSelection(residual_indices());
  for (Vertex v = 0; v < n; ++v)
    if (vertex_alive[v]) cert.remainder_vertices.push_back(v);

  // Every edge in exactly one part or the remainder.
  std::vector<int> owner_count(m, 0);
  for (const auto& part : cert.parts)
    for (EdgeIndex i : part.edges) ++owner_count[i];
  for (EdgeIndex i : cert.remainder_edges) ++owner_count[i];
  cert.edge_partition_check = std::all_of(owner_count.begin(), owner_count.end(), [](int c) { return c == 1; });

  std::vector<int> vertex_owner(n, 0);
  for (const auto& part : cert.parts)
    for (Vertex v : part.vertices) ++vertex_owner[v];
  cert.parts_disjoint = std::all_of(vertex_owner.begin(), vertex_owner.end(), [](int c) { return c <= 1; });

  cert.remainder_free = cert.verdict == DecompositionVerdict::ResidualFree &&
                        (cert.remainder_edges.empty() || is_free(g.restricted_to(cert.remainder_edges), params).free);

  cert.z = z_value(k, q);
  cert.ratio_check = std::all_of(cert.parts.begin(), cert.parts.end(), [&](const ForbiddenPart& part) {
    if (!cert.z) return false;
    const auto e = static_cast<std::int64_t>(part.edges.size());
    const auto v = static_cast<std::int64_t>(part.vertices.size());
    return e * (*cert.z - q - 1) <= static_cast<std::int64_t>(*cert.z) * v;
  });
  return cert;
}

// ---------------------------------------------------------------------------
// Exhaustive dichotomy check
// ---------------------------------------------------------------------------

struct Lemma51Result {
  bool holds = true;
  std::size_t forbidden_count = 0;
  std::size_t maximal_count = 0;
  std::optional<ForbiddenPart> violator;
};

// Enumerates every forbidden subgraph (V', E') of G, decides maximality
// against every larger-order forbidden extension, and checks that each
// maximal one has k edges or is a union of components. Exhaustive, so
// limited to m <= 15 (every graph on 6 vertices).
inline Lemma51Result verify_lemma51(const Hypergraph& g, int k, int q) {
  detail::require_graph(g);
  detail::require(q >= -1, "q >= -1");
  detail::require(k >= q + 3, "k >= q+3");
  detail::require(g.n() >= static_cast<std::size_t>(k - q - 1), "n >= k-q-1");
  if (g.m() > 15) throw Error(ErrorKind::TooLarge, "exhaustive check limited to m <= 15");
  if (g.n() > 64) throw Error(ErrorKind::TooLarge, "exhaustive check limited to n <= 64");
  const std::size_t n = g.n();
  const std::size_t m = g.m();
  const auto ku = static_cast<std::size_t>(k);
  std::vector<std::uint64_t> emask(m);
  for (EdgeIndex i = 0; i < m; ++i)
    for (Vertex v : g.edge(i)) emask[i] |= std::uint64_t{1} << v;
  const std::uint64_t all_vertices = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint32_t all_edges = (std::uint32_t{1} << m) - 1;

  auto cover_of = [&](std::uint32_t s) {
    std::uint64_t c = 0;
    for (std::uint32_t t = s; t; t &= t - 1) c |= emask[std::countr_zero(t)];
    return c;
  };

  // Some E'' strictly above E' (|E''| <= k) fits on |E''|-q-1 <= n vertices
  // containing V'.
  auto extendable = [&](std::uint32_t es, std::uint64_t vs) {
    const int base_e = std::popcount(es);
    const int base_v = std::popcount(vs);
    const std::uint32_t rest = all_edges & ~es;
    for (std::uint32_t a = rest; a; a = (a - 1) & rest) {
      const int size = std::popcount(a);
      if (base_e + size > k || base_v + size > static_cast<int>(n)) continue;
      if (std::popcount(vs | cover_of(a)) <= base_v + size) return true;
    }
    return false;
  };

  Lemma51Result result;
  for (std::uint32_t es = 1; es <= all_edges; ++es) {
    const int size = std::popcount(es);
    if (static_cast<std::size_t>(size) > ku) continue;
    const std::uint64_t cov = cover_of(es);
    const int order = size - q - 1;
    if (order < std::popcount(cov) || order > static_cast<int>(n) || order < 1) continue;
    // V' = cover plus any choice of extra vertices.
    const std::uint64_t free_vertices = all_vertices & ~cov;
    const int extra = order - std::popcount(cov);
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n; ++v)
      if (free_vertices >> v & 1) pool.push_back(v);
    if (static_cast<int>(pool.size()) < extra) continue;
    for_each_combination(pool.size(), static_cast<std::size_t>(extra), [&](const Edge& pick) {
      std::uint64_t vs = cov;
      for (Vertex i : pick) vs |= std::uint64_t{1} << pool[i];
      ++result.forbidden_count;
      if (extendable(es, vs)) return;
      ++result.maximal_count;
      if (static_cast<std::size_t>(size) == ku) return;
      bool closed = true;
      for (EdgeIndex i = 0; i < m && closed; ++i) {
        const bool touches = (emask[i] & vs) != 0;
        const bool inside = (emask[i] & ~vs) == 0;
        const bool chosen = (es >> i & 1) != 0;
        if (touches && !(inside && chosen)) closed = false;
      }
      if (closed || result.violator) return;
      result.holds = false;
      ForbiddenPart part;
      for (Vertex v = 0; v < n; ++v)
        if (vs >> v & 1) part.vertices.push_back(v);
      std::vector<EdgeIndex> idx;
      for (EdgeIndex i = 0; i < m; ++i)
        if (es >> i & 1) idx.push_back(i);
      part.edges = EdgeSelection(std::move(idx));
      result.violator = std::move(part);
    });
  }
  return result;
}

}  // namespace turan
