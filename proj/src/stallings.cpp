#include "twistsub/stallings.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace twistsub {

namespace {

using Row = StallingsGraph::Row;
constexpr std::int32_t kNone = StallingsGraph::kNone;

constexpr std::size_t idx(EdgeLabel l) { return static_cast<std::size_t>(l); }

Row empty_row() { return {kNone, kNone, kNone, kNone}; }

// Incremental folding with union-find. Adjacency slots may hold stale vertex
// ids; they are always resolved through find(). Conflicting slots queue a
// merge of their targets, and merges propagate until the graph is folded.
class Folder {
 public:
  Folder() { new_vertex(); }

  std::int32_t new_vertex() {
    const auto v = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(v);
    size_.push_back(1);
    adj_.push_back(empty_row());
    return v;
  }

  void add_edge(std::int32_t u, EdgeLabel l, std::int32_t v) {
    u = find(u);
    v = find(v);
    link(u, l, v);
    link(v, inverse(l), u);
    drain();
  }

  std::int32_t find(std::int32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // Resolved adjacency of the surviving vertices, renumbered densely.
  std::pair<std::vector<Row>, std::int32_t> extract(std::int32_t base) {
    std::vector<std::int32_t> dense(parent_.size(), kNone);
    std::int32_t next = 0;
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (find(static_cast<std::int32_t>(v)) == static_cast<std::int32_t>(v)) {
        dense[v] = next++;
      }
    }
    std::vector<Row> rows(static_cast<std::size_t>(next), empty_row());
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (dense[v] == kNone) continue;
      for (std::size_t l = 0; l < kNumLabels; ++l) {
        if (adj_[v][l] != kNone) rows[dense[v]][l] = dense[find(adj_[v][l])];
      }
    }
    return {std::move(rows), dense[find(base)]};
  }

 private:
  void link(std::int32_t x, EdgeLabel l, std::int32_t y) {
    auto& slot = adj_[x][idx(l)];
    if (slot == kNone) {
      slot = y;
    } else {
      pending_.emplace_back(slot, y);
    }
  }

  void drain() {
    while (!pending_.empty()) {
      auto [x, y] = pending_.front();
      pending_.pop_front();
      merge(x, y);
    }
  }

  void merge(std::int32_t x, std::int32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    for (std::size_t l = 0; l < kNumLabels; ++l) {
      const std::int32_t ty = adj_[y][l];
      if (ty == kNone) continue;
      if (adj_[x][l] == kNone) {
        adj_[x][l] = ty;
      } else {
        pending_.emplace_back(adj_[x][l], ty);
      }
    }
  }

  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> size_;
  std::vector<Row> adj_;
  std::deque<std::pair<std::int32_t, std::int32_t>> pending_;
};

int degree(const Row& row) {
  int d = 0;
  for (auto t : row) d += t != kNone;
  return d;
}

// Removes non-base vertices of degree <= 1 until none remain.
void trim_to_core(std::vector<Row>& rows, std::int32_t base,
                  std::vector<bool>& removed) {
  removed.assign(rows.size(), false);
  std::vector<int> deg(rows.size());
  std::deque<std::int32_t> queue;
  for (std::size_t v = 0; v < rows.size(); ++v) {
    deg[v] = degree(rows[v]);
    if (static_cast<std::int32_t>(v) != base && deg[v] <= 1) {
      queue.push_back(static_cast<std::int32_t>(v));
    }
  }
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    if (removed[v]) continue;
    removed[v] = true;
    for (std::size_t l = 0; l < kNumLabels; ++l) {
      const auto t = rows[v][l];
      if (t == kNone) continue;
      rows[v][l] = kNone;
      if (t == v) continue;
      rows[t][l ^ 1u] = kNone;
      if (--deg[t] <= 1 && t != base && !removed[t]) queue.push_back(t);
    }
  }
}

// Breadth-first renumbering from the base in label order.
std::vector<Row> canonicalize(const std::vector<Row>& rows, std::int32_t base,
                              const std::vector<bool>& removed) {
  std::vector<std::int32_t> number(rows.size(), kNone);
  std::vector<std::int32_t> order;
  number[base] = 0;
  order.push_back(base);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto t : rows[order[i]]) {
      if (t != kNone && !removed[t] && number[t] == kNone) {
        number[t] = static_cast<std::int32_t>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<Row> out(order.size(), empty_row());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t l = 0; l < kNumLabels; ++l) {
      const auto t = rows[order[i]][l];
      if (t != kNone) out[i][l] = number[t];
    }
  }
  return out;
}

std::vector<Row> core_canonical(std::vector<Row> rows, std::int32_t base) {
  std::vector<bool> removed;
  trim_to_core(rows, base, removed);
  return canonicalize(rows, base, removed);
}

constexpr char kLabelChar[kNumLabels] = {'a', 'A', 'b', 'B'};

Letter letter_of(std::size_t label) {
  constexpr Letter letters[kNumLabels] = {kA, kAInv, kB, kBInv};
  return letters[label];
}

}  // namespace

StallingsGraph::StallingsGraph() : rows_{empty_row()} {}

StallingsGraph StallingsGraph::from_rows(std::vector<Row> rows,
                                         std::int32_t base) {
  const auto n = static_cast<std::int32_t>(rows.size());
  if (base < 0 || base >= n) {
    throw std::invalid_argument("base vertex out of range");
  }
  for (std::int32_t v = 0; v < n; ++v) {
    for (std::size_t l = 0; l < kNumLabels; ++l) {
      const auto t = rows[v][l];
      if (t == kNone) continue;
      if (t < 0 || t >= n || rows[t][l ^ 1u] != v) {
        throw std::invalid_argument(
            "adjacency rows do not describe a folded graph");
      }
    }
  }
  return StallingsGraph(core_canonical(std::move(rows), base));
}

std::size_t StallingsGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& row : rows_) {
    e += row[idx(EdgeLabel::A)] != kNone;
    e += row[idx(EdgeLabel::B)] != kNone;
  }
  return e;
}

bool StallingsGraph::is_complete() const {
  for (const auto& row : rows_) {
    if (degree(row) != static_cast<int>(kNumLabels)) return false;
  }
  return true;
}

std::string StallingsGraph::dump() const {
  std::string out;
  for (std::size_t v = 0; v < rows_.size(); ++v) {
    for (EdgeLabel l : {EdgeLabel::A, EdgeLabel::B}) {
      const auto t = rows_[v][idx(l)];
      if (t == kNone) continue;
      out += std::to_string(v) + " --" + kLabelChar[idx(l)] + "--> " +
             std::to_string(t) + "\n";
    }
  }
  return out;
}

StallingsGraph build_subgroup_graph(std::span<const TwistWord> generators) {
  Folder folder;
  constexpr std::int32_t base = 0;
  for (const auto& g : generators) {
    const TwistWord w = free_reduce(g);
    std::int32_t current = base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::int32_t next =
          i + 1 == w.size() ? base : folder.new_vertex();
      folder.add_edge(current, label_of(w[i]), next);
      current = next;
    }
  }
  auto [rows, root] = folder.extract(base);
  return StallingsGraph(core_canonical(std::move(rows), root));
}

StallingsGraph build_subgroup_graph(
    std::initializer_list<TwistWord> generators) {
  return build_subgroup_graph(
      std::span<const TwistWord>(generators.begin(), generators.size()));
}

bool member(const StallingsGraph& g, const TwistWord& w) {
  std::int32_t v = 0;
  for (Letter l : free_reduce(w)) {
    v = g.target(v, label_of(l));
    if (v == StallingsGraph::kNone) return false;
  }
  return v == 0;
}

IndexAndRank index_and_rank(const StallingsGraph& g) {
  const auto vertices = g.vertex_count();
  const auto edges = g.edge_count();
  return {g.is_complete() ? Index::finite(vertices) : Index::infinite(),
          static_cast<std::uint64_t>(edges + 1 - vertices)};
}

std::vector<TwistWord> free_basis(const StallingsGraph& g) {
  const auto rows = g.rows();
  const std::size_t n = rows.size();
  // Canonical numbering is already breadth-first, so the tree edge into v is
  // the first edge-end seen from a lower-numbered vertex.
  std::vector<std::pair<std::int32_t, std::size_t>> tree_in(n, {kNone, 0});
  std::vector<std::vector<Letter>> path(n);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t l = 0; l < kNumLabels; ++l) {
      const auto t = rows[v][l];
      if (t == kNone || seen[t]) continue;
      seen[t] = true;
      tree_in[t] = {static_cast<std::int32_t>(v), l};
      path[t] = path[v];
      path[t].push_back(letter_of(l));
    }
  }
  auto is_tree_edge = [&](std::size_t v, std::size_t l, std::int32_t t) {
    return (tree_in[t].first == static_cast<std::int32_t>(v) &&
            tree_in[t].second == l) ||
           (tree_in[v].first == t && tree_in[v].second == (l ^ 1u));
  };
  std::vector<TwistWord> basis;
  for (std::size_t v = 0; v < n; ++v) {
    for (EdgeLabel label : {EdgeLabel::A, EdgeLabel::B}) {
      const std::size_t l = idx(label);
      const auto t = rows[v][l];
      if (t == kNone || is_tree_edge(v, l, t)) continue;
      std::vector<Letter> word = path[v];
      word.push_back(letter_of(l));
      const TwistWord back = invert(TwistWord(path[t]));
      word.insert(word.end(), back.begin(), back.end());
      basis.push_back(free_reduce(TwistWord(std::move(word))));
    }
  }
  return basis;
}

}  // namespace twistsub
