#ifndef TWISTSUB_STALLINGS_HPP_
#define TWISTSUB_STALLINGS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twistsub/algebra.hpp"
#include "twistsub/word.hpp"

namespace twistsub {

/// Edge-end labels in canonical order: a, a^-1, b, b^-1.
enum class EdgeLabel : std::uint8_t { A = 0, AInv = 1, B = 2, BInv = 3 };

inline constexpr std::size_t kNumLabels = 4;

constexpr EdgeLabel label_of(Letter l) {
  if (l.gen == Gen::A) return l.sign > 0 ? EdgeLabel::A : EdgeLabel::AInv;
  return l.sign > 0 ? EdgeLabel::B : EdgeLabel::BInv;
}

constexpr EdgeLabel inverse(EdgeLabel l) {
  return static_cast<EdgeLabel>(static_cast<std::uint8_t>(l) ^ 1u);
}

/// Folded core graph of a finitely generated subgroup of F(a, b).
///
/// Vertex 0 is the base. Vertices are numbered in canonical order: a
/// breadth-first walk from the base that visits neighbours in label order
/// a, a^-1, b, b^-1. Two graphs of the same subgroup therefore compare equal
/// with operator==, independent of generator order or folding order.
class StallingsGraph {
 public:
  static constexpr std::int32_t kNone = -1;
  using Row = std::array<std::int32_t, kNumLabels>;

  /// Single base vertex with no edges (the trivial subgroup).
  StallingsGraph();

  /// Builds a graph from raw adjacency rows. Each row lists, per label, the
  /// target vertex or kNone. The rows must describe a folded graph (every
  /// x -l-> y has y -l^-1-> x); throws std::invalid_argument otherwise. The
  /// result is trimmed to its core and canonically renumbered.
  static StallingsGraph from_rows(std::vector<Row> rows, std::int32_t base = 0);

  std::size_t vertex_count() const { return rows_.size(); }
  /// Number of a-edges plus number of b-edges.
  std::size_t edge_count() const;
  std::int32_t target(std::int32_t vertex, EdgeLabel label) const {
    return rows_[static_cast<std::size_t>(vertex)]
                [static_cast<std::size_t>(label)];
  }
  std::span<const Row> rows() const { return rows_; }

  /// Every vertex carries all four edge-ends.
  bool is_complete() const;

  /// One line per a- or b-edge, "v --a--> w", in canonical vertex order.
  std::string dump() const;

  friend bool operator==(const StallingsGraph&,
                         const StallingsGraph&) = default;

 private:
  explicit StallingsGraph(std::vector<Row> rows) : rows_(std::move(rows)) {}
  friend StallingsGraph build_subgroup_graph(std::span<const TwistWord>);

  std::vector<Row> rows_;
};

StallingsGraph build_subgroup_graph(std::span<const TwistWord> generators);
StallingsGraph build_subgroup_graph(std::initializer_list<TwistWord> generators);

/// Whether the free reduction of w labels a closed path at the base.
bool member(const StallingsGraph& g, const TwistWord& w);

struct IndexAndRank {
  Index index;
  std::uint64_t rank;
  friend bool operator==(const IndexAndRank&, const IndexAndRank&) = default;
};

/// Index in F_2 (vertex count when complete, else Infinite) and the rank
/// E - V + 1 of the subgroup.
IndexAndRank index_and_rank(const StallingsGraph& g);

/// Free basis read off a breadth-first spanning tree: one generator per
/// non-tree edge.
std::vector<TwistWord> free_basis(const StallingsGraph& g);

}  // namespace twistsub

#endif  // TWISTSUB_STALLINGS_HPP_
