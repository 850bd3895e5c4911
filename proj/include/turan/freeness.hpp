#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "turan/error.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

struct DeficiencyResult {
  long value = 0;
  EdgeSelection argmax;

  friend bool operator==(const DeficiencyResult&, const DeficiencyResult&) = default;
};

struct FreenessVerdict {
  bool free = true;
  std::optional<EdgeSelection> witness;
  // Exact maximum when a witness exists; empty when the search only proved
  // that the maximum is at most q.
  std::optional<long> max_deficiency_found;
  // F-freeness only: fewer than k-q-1 vertices, so no member fits at all.
  bool pad_impossible = false;
};

struct RetrievalPlan {
  // (item edge index, server vertex), in request order.
  std::vector<std::pair<EdgeIndex, Vertex>> assignment;
};

namespace detail {

// Dense vertex bitset used for disjointness tests while packing components.
class VertexMask {
 public:
  explicit VertexMask(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }

  bool disjoint(const VertexMask& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return false;
    return true;
  }

  void merge(const VertexMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }

  void remove(const VertexMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t hash() const {
    std::size_t x = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) x = (x ^ w) * 0x100000001b3ull;
    return x;
  }

  friend bool operator==(const VertexMask&, const VertexMask&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

// Smallest number of edges a single connected block needs to reach
// deficiency 1. Repeated edges make r+1 possible; simple r-graphs need
// w+1 edges inside some w-set with C(w, r) >= w+1.
inline std::size_t min_positive_block(const Hypergraph& h) {
  const auto r = static_cast<std::size_t>(h.r());
  if (h.allow_multi()) return r + 1;
  for (std::size_t w = r;; ++w) {
    if (binomial(static_cast<std::int64_t>(w), static_cast<std::int64_t>(r)) >= w + 1) return w + 1;
  }
}

// Ordering on (deficiency, size, indices): larger deficiency first, then
// smaller size, then the lexicographically smallest index list.
inline bool better(long d1, const std::vector<EdgeIndex>& s1, long d2, const std::vector<EdgeIndex>& s2) {
  if (d1 != d2) return d1 > d2;
  if (s1.size() != s2.size()) return s1.size() < s2.size();
  return s1 < s2;
}

// Exact maximum of |S| - |cover(S)| over nonempty S with |S| <= k.
//
// Connected selections are enumerated once each with ESU over the line graph
// (edges adjacent when they share a vertex), pruned by the fact that adding
// an edge raises the deficiency by at most one. Disconnected optima are
// unions of vertex-disjoint blocks of positive deficiency; those are
// assembled by a packing search over the positive blocks.
class DeficiencySearch {
 public:
  DeficiencySearch(const Hypergraph& h, std::size_t k, std::optional<long> floor,
                   std::optional<EdgeIndex> anchor, bool first_hit = false, EdgeIndex start = 0)
      : h_(h), k_(k), floor_(floor), anchor_(anchor), first_hit_(first_hit && floor), start_(start), adj_(h.m()),
        mark_(h.m(), 0),
        vcount_(h.n(), 0) {
    std::vector<std::vector<EdgeIndex>> incident(h.n());
    for (EdgeIndex i = 0; i < h.m(); ++i)
      for (Vertex v : h.edge(i)) incident[v].push_back(i);
    for (EdgeIndex i = 0; i < h.m(); ++i) {
      auto& a = adj_[i];
      for (Vertex v : h.edge(i))
        for (EdgeIndex j : incident[v])
          if (j != i) a.push_back(j);
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    pmin_ = min_positive_block(h);
    scratch_ = BlockKey{VertexMask(h.n()), 0};
    packing_possible_ = k_ >= 2 * pmin_ || (anchor_ && k_ >= pmin_ + 1);
  }

  std::optional<DeficiencyResult> run() {
    if (anchor_) {
      phase_ = Phase::Anchor;
      root_ = *anchor_;
      grow_root(*anchor_);
      if (packing_possible_) {
        phase_ = Phase::Others;
        for (EdgeIndex root = 0; root < h_.m() && !done_; ++root) {
          if (root == *anchor_) continue;
          root_ = root;
          grow_root(root);
        }
      }
    } else {
      phase_ = Phase::Plain;
      // Packings are assembled from blocks met at every root, so skipping
      // roots is only sound without them.
      const EdgeIndex first = packing_possible_ ? 0 : start_;
      for (EdgeIndex root = first; root < h_.m() && !done_; ++root) {
        root_ = root;
        grow_root(root);
      }
    }
    if (packing_possible_ && !done_) pack();
    if (!best_) return std::nullopt;
    return DeficiencyResult{best_->first, EdgeSelection(best_->second)};
  }

 private:
  enum class Phase { Plain, Anchor, Others };

  struct Block {
    std::vector<EdgeIndex> indices;  // sorted
    long def;
    VertexMask mask;
  };

  // Blocks with the same vertex set and size are interchangeable inside a
  // packing except for the final index order, and a disjoint union preserves
  // lexicographic order, so only the lexicographically smallest is kept.
  struct BlockKey {
    VertexMask mask;
    std::size_t size;
    friend bool operator==(const BlockKey&, const BlockKey&) = default;
  };
  struct BlockKeyHash {
    std::size_t operator()(const BlockKey& b) const { return b.mask.hash() ^ (b.size * 0x9e3779b97f4a7c15ull); }
  };
  using BlockIndex = std::unordered_map<BlockKey, std::size_t, BlockKeyHash>;

  long target() const {
    long t = std::numeric_limits<long>::min();
    if (floor_) t = *floor_;
    if (best_) t = std::max(t, best_->first);
    return t;
  }

  long current_def() const { return static_cast<long>(current_.size()) - static_cast<long>(covered_); }

  bool allowed(EdgeIndex u) const {
    if (anchor_ && u == *anchor_) return false;
    if (phase_ == Phase::Anchor) return true;
    return u > root_;
  }

  void add_edge(EdgeIndex w) {
    current_.push_back(w);
    for (Vertex v : h_.edge(w))
      if (vcount_[v]++ == 0) ++covered_;
    ++mark_[w];
    for (EdgeIndex u : adj_[w]) ++mark_[u];
  }

  void remove_edge(EdgeIndex w) {
    current_.pop_back();
    for (Vertex v : h_.edge(w))
      if (--vcount_[v] == 0) --covered_;
    --mark_[w];
    for (EdgeIndex u : adj_[w]) --mark_[u];
  }

  void grow_root(EdgeIndex root) {
    add_edge(root);
    if (ext_pool_.empty()) ext_pool_.resize(1);
    auto& ext = ext_pool_[0];
    ext.clear();
    for (EdgeIndex u : adj_[root])
      if (allowed(u)) ext.push_back(u);
    extend(0);
    remove_edge(root);
  }

  void offer_single(long d) {
    if (phase_ == Phase::Others) return;
    if (floor_ && d < *floor_) return;
    if (best_ && d < best_->first) return;
    std::vector<EdgeIndex> sorted = current_;
    std::sort(sorted.begin(), sorted.end());
    if (!best_ || better(d, sorted, best_->first, best_->second)) best_.emplace(d, std::move(sorted));
    done_ = first_hit_;
  }

  void offer_block(long d) {
    const std::size_t s = current_.size();
    if (phase_ == Phase::Anchor) {
      if (s + pmin_ > k_) return;
    } else {
      if (d < 1 || s + (anchor_ ? 1 : pmin_) > k_) return;
    }
    scratch_.mask.clear();
    for (EdgeIndex i : current_)
      for (Vertex v : h_.edge(i)) scratch_.mask.set(v);
    scratch_.size = s;
    auto& list = phase_ == Phase::Anchor ? anchors_ : blocks_;
    auto& index = phase_ == Phase::Anchor ? anchor_index_ : block_index_;
    std::vector<EdgeIndex> sorted = current_;
    std::sort(sorted.begin(), sorted.end());
    auto it = index.find(scratch_);
    if (it != index.end()) {
      if (sorted < list[it->second].indices) list[it->second].indices = std::move(sorted);
      return;
    }
    index.emplace(scratch_, list.size());
    list.push_back(Block{std::move(sorted), d, scratch_.mask});
  }

  // ESU step; the extension set for this depth lives in ext_pool_[depth].
  void extend(std::size_t depth) {
    const long d = current_def();
    const std::size_t s = current_.size();
    offer_single(d);
    if (packing_possible_) offer_block(d);
    if (s >= k_) return;

    const long reach = d + static_cast<long>(k_ - s);
    bool expand = false;
    if (phase_ != Phase::Others) expand = reach >= target();
    if (!expand && packing_possible_ && phase_ != Phase::Anchor) {
      // Still able to become a positive block that leaves room for a partner.
      const std::size_t partner = anchor_ ? 1 : pmin_;
      expand = s + partner < k_ && d + static_cast<long>(k_ - partner - s) >= 1;
    }
    if (!expand) return;

    if (ext_pool_.size() <= depth + 1) ext_pool_.resize(depth + 2);
    while (!ext_pool_[depth].empty() && !done_) {
      const EdgeIndex w = ext_pool_[depth].back();
      ext_pool_[depth].pop_back();
      auto& next = ext_pool_[depth + 1];
      next.assign(ext_pool_[depth].begin(), ext_pool_[depth].end());
      for (EdgeIndex u : adj_[w])
        if (mark_[u] == 0 && allowed(u)) next.push_back(u);
      add_edge(w);
      extend(depth + 1);
      remove_edge(w);
    }
  }

  void pack() {
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.indices < b.indices; });
    std::vector<std::size_t> chosen;
    if (anchor_) {
      for (const Block& a : anchors_) {
        if (done_) break;
        VertexMask used = a.mask;
        pack_from(0, used, a.indices.size(), a.def, chosen, &a);
      }
    } else {
      VertexMask used(h_.n());
      pack_from(0, used, 0, 0, chosen, nullptr);
    }
  }

  void pack_from(std::size_t start, VertexMask& used, std::size_t size, long def,
                 std::vector<std::size_t>& chosen, const Block* anchor) {
    const std::size_t needed = anchor ? 1 : 2;
    if (chosen.size() >= needed) {
      const long t = target();
      if (def >= t) {
        std::vector<EdgeIndex> all = anchor ? anchor->indices : std::vector<EdgeIndex>{};
        for (std::size_t c : chosen) all.insert(all.end(), blocks_[c].indices.begin(), blocks_[c].indices.end());
        std::sort(all.begin(), all.end());
        if (!best_ || better(def, all, best_->first, best_->second)) best_.emplace(def, std::move(all));
        done_ = first_hit_;
      }
    }
    for (std::size_t j = start; j < blocks_.size() && !done_; ++j) {
      const Block& b = blocks_[j];
      if (size + b.indices.size() > k_) continue;
      if (!used.disjoint(b.mask)) continue;
      const std::size_t new_size = size + b.indices.size();
      if (def + b.def + static_cast<long>(k_ - new_size) < target()) continue;
      used.merge(b.mask);
      chosen.push_back(j);
      pack_from(j + 1, used, new_size, def + b.def, chosen, anchor);
      chosen.pop_back();
      used.remove(b.mask);
    }
  }

  const Hypergraph& h_;
  std::size_t k_;
  std::optional<long> floor_;
  std::optional<EdgeIndex> anchor_;
  bool first_hit_ = false;
  bool done_ = false;
  std::vector<std::vector<EdgeIndex>> adj_;
  std::vector<int> mark_;
  std::vector<int> vcount_;
  std::size_t covered_ = 0;
  std::vector<EdgeIndex> current_;
  EdgeIndex root_ = 0;
  Phase phase_ = Phase::Plain;
  std::size_t pmin_ = 0;
  bool packing_possible_ = false;
  EdgeIndex start_ = 0;
  std::optional<std::pair<long, std::vector<EdgeIndex>>> best_;
  std::vector<Block> blocks_;
  std::vector<Block> anchors_;
  BlockIndex block_index_;
  BlockIndex anchor_index_;
  BlockKey scratch_;
  std::vector<std::vector<EdgeIndex>> ext_pool_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Deficiency maximisation
// ---------------------------------------------------------------------------

// Largest deficiency over nonempty selections of at most k edges, with the
// maximiser of smallest size and then smallest index list.
inline DeficiencyResult max_deficiency(const Hypergraph& h, std::size_t k) {
  if (h.m() == 0) throw Error(ErrorKind::EmptyHypergraph, "no edges");
  if (k < 1) throw Error(ErrorKind::EmptySelection, "k must be at least 1");
  return *detail::DeficiencySearch(h, k, std::nullopt, std::nullopt).run();
}

// Same maximum, but only reported when it reaches `floor`; the floor lets
// the search discard anything that cannot get there.
inline std::optional<DeficiencyResult> max_deficiency_at_least(const Hypergraph& h, std::size_t k, long floor) {
  if (h.m() == 0 || k < 1) return std::nullopt;
  return detail::DeficiencySearch(h, k, floor, std::nullopt).run();
}

// Some selection of at most k edges with deficiency >= floor, or nothing.
// Returns the first one met instead of the best, so it is much cheaper than
// max_deficiency_at_least when witnesses are plentiful.
inline std::optional<DeficiencyResult> find_deficient(const Hypergraph& h, std::size_t k, long floor,
                                                      std::optional<EdgeIndex> anchor = std::nullopt) {
  if (anchor && *anchor >= h.m()) throw Error(ErrorKind::IndexOutOfRange, "anchor edge out of range");
  if (h.m() == 0 || k < 1) return std::nullopt;
  return detail::DeficiencySearch(h, k, floor, anchor, true).run();
}

namespace detail {

// First-hit search that assumes no connected witness has its smallest edge
// index below `start`. Returns the same hit as a full search under that
// assumption.
inline std::optional<DeficiencyResult> find_deficient_from(const Hypergraph& h, std::size_t k, long floor,
                                                           EdgeIndex start) {
  if (h.m() == 0 || k < 1) return std::nullopt;
  return DeficiencySearch(h, k, floor, std::nullopt, true, start).run();
}

}  // namespace detail

// Maximum over selections that contain edge `anchor`.
inline std::optional<DeficiencyResult> max_deficiency_containing(const Hypergraph& h, std::size_t k,
                                                                 EdgeIndex anchor,
                                                                 std::optional<long> floor = std::nullopt) {
  if (anchor >= h.m()) throw Error(ErrorKind::IndexOutOfRange, "anchor edge out of range");
  if (k < 1) return std::nullopt;
  return detail::DeficiencySearch(h, k, floor, anchor).run();
}

// Exhaustive oracle over all 2^m selections (m <= 20), walked in Gray-code
// order with incremental vertex counts. Ties: smallest size, then
// lexicographically smallest index list.
inline DeficiencyResult max_deficiency_bruteforce(const Hypergraph& h, std::size_t k) {
  const std::size_t m = h.m();
  if (m == 0) throw Error(ErrorKind::EmptyHypergraph, "no edges");
  if (m > 20) throw Error(ErrorKind::TooLarge, "brute force limited to m <= 20");
  if (k < 1) throw Error(ErrorKind::EmptySelection, "k must be at least 1");

  std::vector<int> count(h.n(), 0);
  long covered = 0;
  std::uint32_t mask = 0;
  std::optional<std::pair<long, std::uint32_t>> best;
  const std::uint32_t total = std::uint32_t{1} << m;
  for (std::uint32_t i = 1; i < total; ++i) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(i));
    mask ^= std::uint32_t{1} << bit;
    if (mask & (std::uint32_t{1} << bit)) {
      for (Vertex v : h.edge(bit))
        if (count[v]++ == 0) ++covered;
    } else {
      for (Vertex v : h.edge(bit))
        if (--count[v] == 0) --covered;
    }
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > k) continue;
    const long d = static_cast<long>(size) - covered;
    if (!best) {
      best.emplace(d, mask);
      continue;
    }
    const auto [bd, bm] = *best;
    const auto bsize = static_cast<std::size_t>(std::popcount(bm));
    bool take = false;
    if (d != bd) {
      take = d > bd;
    } else if (size != bsize) {
      take = size < bsize;
    } else {
      // Equal sizes: the set holding the lowest differing index is smaller.
      const std::uint32_t diff = mask ^ bm;
      take = (mask & (diff & (~diff + 1))) != 0;
    }
    if (take) best.emplace(d, mask);
  }
  std::vector<EdgeIndex> idx;
  for (std::size_t b = 0; b < m; ++b)
    if (best->second & (std::uint32_t{1} << b)) idx.push_back(b);
  return DeficiencyResult{best->first, EdgeSelection(std::move(idx))};
}

// Largest deficiency over selections of exactly k edges whose cover has at
// most `cover_limit` vertices; optionally restricted to selections holding
// `anchor`. Returns the lexicographically first selection of smallest cover.
inline std::optional<DeficiencyResult> max_deficiency_exact_size(const Hypergraph& h, std::size_t k,
                                                                 std::size_t cover_limit,
                                                                 std::optional<EdgeIndex> anchor = std::nullopt) {
  const std::size_t m = h.m();
  if (k == 0 || k > m) return std::nullopt;
  std::vector<int> count(h.n(), 0);
  std::size_t covered = 0;
  std::size_t best_cover = cover_limit + 1;
  std::vector<EdgeIndex> chosen, best;

  auto push = [&](EdgeIndex i) {
    chosen.push_back(i);
    for (Vertex v : h.edge(i))
      if (count[v]++ == 0) ++covered;
  };
  auto pop = [&](EdgeIndex i) {
    chosen.pop_back();
    for (Vertex v : h.edge(i))
      if (--count[v] == 0) --covered;
  };

  auto rec = [&](auto&& self, EdgeIndex start) -> void {
    if (covered >= best_cover) return;
    if (chosen.size() == k) {
      best_cover = covered;
      best = chosen;
      std::sort(best.begin(), best.end());
      return;
    }
    const std::size_t available = m - (anchor ? 1 : 0);
    for (EdgeIndex i = start; i < m; ++i) {
      if (anchor && i == *anchor) continue;
      const std::size_t before = i - ((anchor && *anchor < i) ? 1 : 0);
      if (available - before < k - chosen.size()) return;
      push(i);
      self(self, i + 1);
      pop(i);
    }
  };
  if (anchor) push(*anchor);
  rec(rec, 0);
  if (best.empty()) return std::nullopt;
  return DeficiencyResult{static_cast<long>(k) - static_cast<long>(best_cover), EdgeSelection(best)};
}

// Drops edges from the end of s (in index order) until the deficiency is
// exactly q+1. The result spans exactly |T|-q-1 vertices, so it is itself a
// member of the forbidden family without padding.
inline EdgeSelection trim_to_member(const Hypergraph& h, const EdgeSelection& s, long q) {
  std::vector<int> count(h.n(), 0);
  long covered = 0;
  std::vector<EdgeIndex> prefix;
  for (EdgeIndex i : s) {
    prefix.push_back(i);
    for (Vertex v : h.edge(i))
      if (count[v]++ == 0) ++covered;
    if (static_cast<long>(prefix.size()) - covered == q + 1) return EdgeSelection(prefix);
  }
  throw Error(ErrorKind::InvariantViolation, "selection does not reach deficiency q+1");
}

// ---------------------------------------------------------------------------
// Freeness predicates
// ---------------------------------------------------------------------------

inline void check_uniformity(const Hypergraph& h, const ParamTriple& p) {
  if (h.r() != p.r) {
    throw Error(ErrorKind::UniformityMismatch,
                "hypergraph is " + std::to_string(h.r()) + "-uniform, parameters say r = " + std::to_string(p.r));
  }
}

// H(k,q)-free iff every i <= k edges cover at least i-q vertices.
inline FreenessVerdict is_free(const Hypergraph& h, const ParamTriple& params) {
  const ParamTriple p = validate_params(params.r, params.k, params.q);
  check_uniformity(h, p);
  FreenessVerdict v;
  auto found = max_deficiency_at_least(h, static_cast<std::size_t>(p.k), p.q + 1);
  if (found) {
    v.free = false;
    v.witness = found->argmax;
    v.max_deficiency_found = found->value;
  }
  return v;
}

// F(k,q)-free iff every selection of exactly k edges covers at least k-q
// vertices. Smaller selections are unconstrained.
inline FreenessVerdict is_f_free(const Hypergraph& h, const ParamTriple& params) {
  const ParamTriple p = validate_params(params.r, params.k, params.q);
  check_uniformity(h, p);
  if (p.k < 2) throw ParamError(ErrorKind::KTooSmall, "F-freeness needs k >= 2");
  FreenessVerdict v;
  const auto k = static_cast<std::size_t>(p.k);
  const auto members_order = static_cast<std::size_t>(p.k - p.q - 1);
  if (h.m() < k) return v;
  if (h.n() < members_order) {
    v.pad_impossible = true;
    return v;
  }
  auto found = max_deficiency_exact_size(h, k, members_order);
  if (found) {
    v.free = false;
    v.witness = found->argmax;
    v.max_deficiency_found = found->value;
  }
  return v;
}

// Combinatorial batch code check: every i <= k items can be read from
// distinct servers.
inline FreenessVerdict is_cbc(const Hypergraph& h, std::size_t k) {
  if (k < 1) throw Error(ErrorKind::KTooSmall, "k must be at least 1");
  FreenessVerdict v;
  auto found = max_deficiency_at_least(h, k, 1);
  if (found) {
    v.free = false;
    v.witness = found->argmax;
    v.max_deficiency_found = found->value;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Retrieval
// ---------------------------------------------------------------------------

// Assigns each requested item (edge) a distinct server inside it, by
// augmenting paths tried in ascending item and vertex order. On failure the
// items reachable from the stuck item by alternating paths are reported:
// their union is one vertex short of their count.
inline RetrievalPlan sdr_retrieve(const Hypergraph& h, const std::vector<EdgeIndex>& items) {
  for (EdgeIndex i : items) {
    if (i >= h.m()) throw Error(ErrorKind::IndexOutOfRange, "item " + std::to_string(i) + " out of range");
  }
  {
    std::vector<EdgeIndex> sorted = items;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::DuplicateItem, "an item may be requested only once");
    }
  }
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> owner(h.n(), kNone);  // vertex -> request slot
  std::vector<Vertex> server(items.size(), 0);
  std::vector<char> seen_vertex(h.n(), 0);
  std::vector<std::size_t> visited_slots;

  auto augment = [&](auto&& self, std::size_t slot) -> bool {
    visited_slots.push_back(slot);
    for (Vertex v : h.edge(items[slot])) {
      if (seen_vertex[v]) continue;
      seen_vertex[v] = 1;
      if (owner[v] == kNone || self(self, owner[v])) {
        owner[v] = slot;
        server[slot] = v;
        return true;
      }
    }
    return false;
  };

  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return items[a] < items[b]; });
  for (std::size_t slot : order) {
    std::fill(seen_vertex.begin(), seen_vertex.end(), 0);
    visited_slots.clear();
    if (!augment(augment, slot)) {
      std::vector<EdgeIndex> violator;
      for (std::size_t s : visited_slots) violator.push_back(items[s]);
      std::sort(violator.begin(), violator.end());
      violator.erase(std::unique(violator.begin(), violator.end()), violator.end());
      throw NoSdrError(std::move(violator));
    }
  }
  RetrievalPlan plan;
  for (std::size_t slot = 0; slot < items.size(); ++slot) plan.assignment.emplace_back(items[slot], server[slot]);
  return plan;
}

}  // namespace turan
