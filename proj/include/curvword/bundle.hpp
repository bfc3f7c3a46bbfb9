#pragma once

// Elementary simplicial bundles over an ordered n-simplex.
//
// A bundle is stored by its maximal cells, listed in fiber order: bottom to
// top for interval fibers, once around for circle fibers.  Every maximal cell has one vertex
// over each base vertex, except a single "doubled" base vertex that carries
// two vertices at consecutive fiber levels (consecutive mod the fiber size for
// circle fibers).  Lower faces are implied.
//
// A section is a choice of one level per base vertex.  Cell c runs from its
// lower section `levels` to its upper section, which is `levels` with the
// doubled coordinate advanced by one.  Consecutive cells share a section, so
// the dual graph of a valid interval bundle is a path from the all-zero
// section to the top section, and that of a circle bundle is a cycle that
// winds once around every fiber.
//
// Circle bundles with fewer than three points in some fiber glue to cell
// complexes whose cells can share vertex sets; the stored order is what keeps
// them apart.

#include "curvword/word.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace curvword {

enum class FiberKind { Interval, Circle };

struct LabeledVertex {
  Rank base_vertex = 0;
  std::size_t level = 0;

  friend bool operator==(const LabeledVertex&, const LabeledVertex&) = default;
  friend auto operator<=>(const LabeledVertex&, const LabeledVertex&) = default;
};

struct Cell {
  Rank doubled = 0;
  /// Lower section: levels[v] is the level of the vertex over base vertex v;
  /// the doubled vertex also has the next level.
  std::vector<std::size_t> levels;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class ElementaryBundle {
 public:
  /// Takes `cells` in fiber order.  Circle bundles are rotated to start at
  /// their least cell so that equality ignores the starting point.  Performs
  /// no structural validation.
  ElementaryBundle(std::size_t base_dim, FiberKind kind, std::vector<std::size_t> fiber_sizes,
                   std::vector<Cell> cells);

  std::size_t base_dim() const noexcept { return base_dim_; }
  FiberKind fiber_kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& fiber_sizes() const noexcept { return fiber_sizes_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  /// Upper level of the doubled vertex of `c`.
  std::size_t upper_level(const Cell& c) const;
  /// The n+2 vertices of `c`, ordered by base vertex then level order along the fiber.
  std::vector<LabeledVertex> vertices(const Cell& c) const;
  std::vector<std::size_t> upper_section(const Cell& c) const;

  /// Some fiber has fewer than 3 points, so the glued total space is a cell
  /// complex rather than a simplicial complex.
  bool has_small_fibers() const;
  /// No fiber is small and no section repeats, so the glued total space is an
  /// honest simplicial complex.
  bool is_simplicial() const;

  friend bool operator==(const ElementaryBundle&, const ElementaryBundle&) = default;

 private:
  std::size_t base_dim_;
  FiberKind kind_;
  std::vector<std::size_t> fiber_sizes_;
  std::vector<Cell> cells_;
};

/// Describes the first structural defect, or nullopt for a valid bundle.
std::optional<std::string> check_bundle(const ElementaryBundle& b);
/// Throws InvalidBundle on any structural defect.
void validate_bundle(const ElementaryBundle& b);

/// Recovers the fiber order of an unordered cell list by chaining sections.
/// Returns nullopt when sections are ambiguous (repeated) or do not chain.
std::optional<std::vector<Cell>> order_cells(FiberKind kind, const std::vector<std::size_t>& fiber_sizes,
                                             const std::vector<Cell>& cells);

/// Shelling word of an interval bundle.  Throws InvalidBundle.
Word word_from_bundle(const ElementaryBundle& b);

/// Nerve of the covering of `w` by its per-character intervals.  Vertex
/// (i, j) is the j-th interval of character i.  Throws NotAnNWord.
ElementaryBundle bundle_from_word(const Word& w);

/// Identifies the top and bottom sections.  Throws DegenerateFiber when a
/// fiber would become empty.
ElementaryBundle glue(const ElementaryBundle& b);

/// Glues the bottom and top sections and recuts at the second section.
ElementaryBundle cyclic_shift_bundle(const ElementaryBundle& b);

/// Cyclic word read around a circle bundle.  Throws InvalidBundle.
CyclicWord word_from_s_bundle(const ElementaryBundle& b);

/// Restriction to the face opposite base vertex `i`.
ElementaryBundle restrict(const ElementaryBundle& b, Rank i);

}  // namespace curvword
