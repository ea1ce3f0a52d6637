#include "edgepart/tree_decomp.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#include "edgepart/error.hpp"

namespace edgepart {

namespace {

void require_tree(const Graph& t) {
  if (!classify(t).is_tree) throw DomainError("input graph is not a tree");
}

bool in_targets(std::size_t count, std::size_t alpha) {
  return count == 0 || count == 1 || count == alpha;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(const DegreeSet& d,
                                                                 std::size_t max_degree) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (d.size() >= 8) return out;
  for (std::size_t a = 1; a <= max_degree; ++a) {
    for (std::size_t b = a; b <= max_degree; ++b) {
      const std::size_t sums[] = {1, 2, a, a + 1, b, b + 1, a + b};
      const bool covered = std::all_of(d.values().begin(), d.values().end(), [&](std::size_t x) {
        return std::find(std::begin(sums), std::end(sums), x) != std::end(sums);
      });
      if (covered) out.emplace_back(a, b);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Algorithm 1

namespace {

enum class Label : std::uint8_t { free, red, blue };

Label opposite(Label l) { return l == Label::red ? Label::blue : Label::red; }

}  // namespace

TreeDecision alg1(const RootedTree& t, std::size_t alpha, std::size_t beta) {
  if (alpha < 1 || beta < 1) throw ParameterError("alg1 needs alpha, beta >= 1");
  const std::size_t m = t.num_edges;
  std::vector<Label> forced(m, Label::free);  // g
  std::vector<Label> label(m, Label::free);   // f
  TreeDecision result;

  for (;;) {
    std::fill(label.begin(), label.end(), Label::free);
    bool complete = true;
    for (Vertex v : t.order) {
      const auto& down = t.child_edges[v];
      std::size_t forced_red = 0, forced_blue = 0;
      for (EdgeId e : down) {
        forced_red += forced[e] == Label::red;
        forced_blue += forced[e] == Label::blue;
      }
      const std::size_t free_slots = down.size() - forced_red - forced_blue;
      const Label up = t.parent_edge[v] ? label[*t.parent_edge[v]] : Label::free;
      const std::size_t up_red = up == Label::red, up_blue = up == Label::blue;

      std::optional<std::size_t> red_free;
      for (std::size_t x = 0; x <= free_slots && !red_free; ++x) {
        if (in_targets(forced_red + x + up_red, alpha) &&
            in_targets(forced_blue + free_slots - x + up_blue, beta)) {
          red_free = x;
        }
      }
      if (!red_free) {
        if (!t.parent_edge[v]) return result;  // the root itself is stuck
        const EdgeId pe = *t.parent_edge[v];
        if (forced[pe] != Label::free) return result;
        forced[pe] = opposite(label[pe]);
        ++result.restarts;
        complete = false;
        break;
      }
      std::size_t reds_left = *red_free;
      for (EdgeId e : down) {
        if (forced[e] != Label::free) {
          label[e] = forced[e];
        } else if (reds_left > 0) {
          label[e] = Label::red;
          --reds_left;
        } else {
          label[e] = Label::blue;
        }
      }
    }
    if (result.restarts > m) throw std::logic_error("alg1 exceeded its restart bound");
    if (complete) break;
  }

  std::vector<PartId> part(m);
  for (EdgeId e = 0; e < m; ++e) part[e] = label[e] == Label::red ? 0 : 1;
  result.yes = true;
  result.witness = EdgePartition(2, std::move(part));
  result.alphas = {alpha, beta};
  return result;
}

// ---------------------------------------------------------------------------
// Per-vertex color assignment: target vector enumeration + b-matching.

namespace {

// Assigns each slot one allowed color so that color k receives exactly
// need[k] slots. Kuhn-style augmenting paths over capacitated colors.
class SlotMatcher {
 public:
  SlotMatcher(std::span<const ColorMask> forbidden, std::span<const std::size_t> need)
      : forbidden_(forbidden), need_(need.begin(), need.end()), holders_(need.size()) {}

  std::optional<std::vector<std::uint32_t>> solve() {
    assign_.assign(forbidden_.size(), kNone);
    for (std::size_t s = 0; s < forbidden_.size(); ++s) {
      visited_.assign(need_.size(), 0);
      if (!augment(s)) return std::nullopt;
    }
    return assign_;
  }

 private:
  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

  bool augment(std::size_t slot) {
    for (std::uint32_t k = 0; k < need_.size(); ++k) {
      if (need_[k] == 0 || (forbidden_[slot] >> k) & 1U || visited_[k]) continue;
      visited_[k] = 1;
      if (holders_[k].size() < need_[k]) {
        take(slot, k);
        return true;
      }
      for (std::size_t i = 0; i < holders_[k].size(); ++i) {
        const std::size_t other = holders_[k][i];
        if (augment(other)) {
          // other moved elsewhere; drop it from k and give k to slot.
          holders_[k].erase(std::find(holders_[k].begin(), holders_[k].end(), other));
          take(slot, k);
          return true;
        }
      }
    }
    return false;
  }

  void take(std::size_t slot, std::uint32_t k) {
    assign_[slot] = k;
    holders_[k].push_back(slot);
  }

  std::span<const ColorMask> forbidden_;
  std::vector<std::size_t> need_;
  std::vector<std::vector<std::size_t>> holders_;
  std::vector<std::uint32_t> assign_;
  std::vector<std::uint8_t> visited_;
};

}  // namespace

std::optional<std::vector<std::uint32_t>> vertex_feasible(
    std::span<const ColorMask> forbidden, std::span<const std::size_t> fixed_counts,
    std::optional<std::uint32_t> parent_color, std::span<const std::size_t> alphas) {
  const std::size_t c = alphas.size();
  if (c < 1 || c > kMaxColors) throw ParameterError("color count must be in 1..64");
  if (fixed_counts.size() != c) throw ParameterError("fixed_counts length differs from color count");
  if (parent_color && *parent_color >= c) throw ParameterError("parent color out of range");
  const std::size_t slots = forbidden.size();

  std::vector<std::size_t> fixed(fixed_counts.begin(), fixed_counts.end());
  if (parent_color) ++fixed[*parent_color];
  for (std::size_t k = 0; k < c; ++k) {
    if (fixed[k] > std::max<std::size_t>(1, alphas[k])) {
      throw ParameterError("fixed count for color " + std::to_string(k) +
                           " already exceeds every allowed target");
    }
  }

  // Per-color choices of how many slots to take, ascending.
  std::vector<std::vector<std::size_t>> choices(c);
  for (std::size_t k = 0; k < c; ++k) {
    for (std::size_t target : {std::size_t{0}, std::size_t{1}, alphas[k]}) {
      if (target >= fixed[k] && target - fixed[k] <= slots) choices[k].push_back(target - fixed[k]);
    }
    std::sort(choices[k].begin(), choices[k].end());
    choices[k].erase(std::unique(choices[k].begin(), choices[k].end()), choices[k].end());
    if (choices[k].empty()) return std::nullopt;
  }

  std::vector<std::size_t> need(c, 0);
  std::optional<std::vector<std::uint32_t>> found;
  // Depth-first over colors; remaining = slots still to distribute.
  auto search = [&](auto&& self, std::size_t k, std::size_t remaining) -> bool {
    if (k == c) {
      if (remaining != 0) return false;
      found = SlotMatcher(forbidden, need).solve();
      return found.has_value();
    }
    for (std::size_t take : choices[k]) {
      if (take > remaining) break;
      need[k] = take;
      if (self(self, k + 1, remaining - take)) return true;
    }
    need[k] = 0;
    return false;
  };
  search(search, 0, slots);
  return found;
}

// ---------------------------------------------------------------------------
// Algorithm 2

TreeDecision alg2(const RootedTree& t, std::span<const std::size_t> alphas) {
  const std::size_t c = alphas.size();
  if (c < 1 || c > kMaxColors) throw ParameterError("alg2 needs 1..64 colors");
  if (std::any_of(alphas.begin(), alphas.end(), [](std::size_t a) { return a < 1; })) {
    throw ParameterError("alg2 needs every alpha >= 1");
  }
  const std::size_t m = t.num_edges;
  constexpr auto kFree = static_cast<std::uint32_t>(-1);
  std::vector<ColorMask> forbidden(m, 0);  // l
  std::vector<std::uint32_t> color(m, kFree);  // f
  const std::vector<std::size_t> no_fixed(c, 0);
  std::vector<ColorMask> slot_masks;
  TreeDecision result;

  for (;;) {
    std::fill(color.begin(), color.end(), kFree);
    bool complete = true;
    for (Vertex v : t.order) {
      const auto& down = t.child_edges[v];
      slot_masks.clear();
      for (EdgeId e : down) slot_masks.push_back(forbidden[e]);
      std::optional<std::uint32_t> up;
      if (t.parent_edge[v]) up = color[*t.parent_edge[v]];

      const auto assignment = vertex_feasible(slot_masks, no_fixed, up, alphas);
      if (!assignment) {
        if (!t.parent_edge[v]) return result;
        const EdgeId pe = *t.parent_edge[v];
        const ColorMask bit = ColorMask{1} << color[pe];
        if (forbidden[pe] & bit) return result;
        forbidden[pe] |= bit;
        ++result.restarts;
        complete = false;
        break;
      }
      for (std::size_t j = 0; j < down.size(); ++j) color[down[j]] = (*assignment)[j];
    }
    if (result.restarts > c * m) throw std::logic_error("alg2 exceeded its restart bound");
    if (complete) break;
  }

  result.yes = true;
  result.witness = EdgePartition(c, std::vector<PartId>(color.begin(), color.end()));
  result.alphas.assign(alphas.begin(), alphas.end());
  return result;
}

// ---------------------------------------------------------------------------

TreeDecision wr2_tree(const Graph& t) {
  require_tree(t);
  TreeDecision result;
  if (t.num_edges() == 0) {
    result.yes = true;
    result.witness = EdgePartition(2, {});
    result.alphas = {1, 1};
    return result;
  }
  const RootedTree rooted = bfs_root(t, 0);
  for (auto [a, b] : candidate_pairs(degree_set(t), t.max_degree())) {
    TreeDecision run = alg1(rooted, a, b);
    result.restarts += run.restarts;
    if (run.yes) {
      result.yes = true;
      result.witness = std::move(run.witness);
      result.alphas = std::move(run.alphas);
      return result;
    }
  }
  return result;
}

namespace {

// Can every degree in d be written as a sum of one element of {0, 1, a_k}
// per part? Sums above the maximum degree are discarded.
bool tuple_covers(const DegreeSet& d, std::span<const std::size_t> alphas, std::size_t cap) {
  std::vector<std::uint8_t> reach(cap + 1, 0), next(cap + 1, 0);
  reach[0] = 1;
  for (std::size_t a : alphas) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t s = 0; s <= cap; ++s) {
      if (!reach[s]) continue;
      for (std::size_t add : {std::size_t{0}, std::size_t{1}, a}) {
        if (s + add <= cap) next[s + add] = 1;
      }
    }
    std::swap(reach, next);
  }
  return std::all_of(d.values().begin(), d.values().end(),
                     [&](std::size_t x) { return x <= cap && reach[x]; });
}

}  // namespace

TreeDecision wrc_tree(const Graph& t, std::size_t c) {
  if (c < 1 || c > kMaxColors) throw ParameterError("wrc_tree needs 1 <= c <= 64");
  require_tree(t);
  TreeDecision result;
  if (t.num_edges() == 0) {
    result.yes = true;
    result.witness = EdgePartition(c, {});
    result.alphas.assign(c, 1);
    return result;
  }
  const RootedTree rooted = bfs_root(t, 0);
  const DegreeSet d = degree_set(t);
  const std::size_t max_deg = t.max_degree();

  std::vector<std::size_t> alphas(c, 1);
  for (;;) {
    if (tuple_covers(d, alphas, max_deg)) {
      TreeDecision run = alg2(rooted, alphas);
      result.restarts += run.restarts;
      if (run.yes) {
        result.yes = true;
        result.witness = std::move(run.witness);
        result.alphas = std::move(run.alphas);
        return result;
      }
    }
    // Next nondecreasing tuple in lexicographic order.
    std::size_t i = c;
    while (i > 0 && alphas[i - 1] == max_deg) --i;
    if (i == 0) break;
    const std::size_t v = alphas[i - 1] + 1;
    for (std::size_t j = i - 1; j < c; ++j) alphas[j] = v;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Algorithm 3

BinarySplit alg3(const Graph& t) {
  require_tree(t);
  if (t.num_edges() == 0) throw DomainError("alg3 needs a tree with at least one edge");
  const RootedTree rooted = bfs_root(t, 0);
  const std::size_t max_deg = t.max_degree();
  const std::size_t bits = static_cast<std::size_t>(std::bit_width(max_deg));  // floor(log2)+1

  BinarySplit out;
  out.offset = bits;
  out.labels.assign(t.num_edges(), 0);
  for (Vertex v : rooted.order) {
    const auto& down = rooted.child_edges[v];
    const std::size_t shift = rooted.depth[v] % 2 == 1 ? bits : 0;
    std::size_t next = 0;
    for (std::size_t b = 0; b < bits; ++b) {
      if (!((down.size() >> b) & 1U)) continue;
      for (std::size_t j = 0; j < (std::size_t{1} << b); ++j) out.labels[down[next++]] = b + shift;
    }
    assert(next == down.size());
  }
  std::vector<PartId> part(out.labels.begin(), out.labels.end());
  out.partition = EdgePartition(2 * bits, std::move(part)).compacted();
  return out;
}

EdgePartition sr_tree(const Graph& t) {
  require_tree(t);
  if (t.num_edges() == 0) throw DomainError("sr_tree needs a tree with at least one edge");
  const RootedTree rooted = bfs_root(t, 0);
  const std::size_t max_deg = t.max_degree();
  const std::size_t half = (max_deg + 1) / 2;

  // Greedy proper coloring with max_deg colors along BFS order.
  std::vector<std::size_t> color(t.num_edges(), 0);
  for (Vertex v : rooted.order) {
    const std::size_t up = rooted.parent_edge[v] ? color[*rooted.parent_edge[v]] : SIZE_MAX;
    std::size_t next = 0;
    for (EdgeId e : rooted.child_edges[v]) {
      if (next == up) ++next;
      color[e] = next++;
    }
  }
  std::vector<PartId> part(t.num_edges());
  for (EdgeId e = 0; e < t.num_edges(); ++e) {
    part[e] = static_cast<PartId>(color[e] < half ? color[e] : color[e] - half);
  }
  return EdgePartition(half, std::move(part));
}

}  // namespace edgepart
