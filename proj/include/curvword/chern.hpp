#pragma once

// Chern numbers of triangulated circle bundles over closed oriented surfaces.
//
// Base vertices carry string ids whose global order is the order of the
// vertex list; every triangle lists its vertices in that order, so character
// i of a triangle's word belongs to its i-th vertex.  Each triangle carries
// its coefficient (+1 or -1) in the fundamental cycle and either the cyclic
// word of the bundle over it or the bundle itself with fiber levels numbered
// globally per base vertex.

#include "curvword/bundle.hpp"
#include "curvword/rational.hpp"
#include "curvword/word.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace curvword {

struct SurfaceTriangle {
  std::string id;
  std::array<std::string, 3> vertices;
  int sign = 1;
  CyclicWord word;
  /// Circle bundle over the triangle, when the total complex is known.
  std::optional<ElementaryBundle> total;
};

class TriangulatedSBundle {
 public:
  /// Throws InvalidInput on unknown or unordered vertices, bad signs, duplicate
  /// ids, words that are not 3-character 2-words, and totals that disagree
  /// with the given word.
  TriangulatedSBundle(std::vector<std::string> vertices, std::vector<SurfaceTriangle> triangles);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<SurfaceTriangle>& triangles() const noexcept { return triangles_; }
  /// Position of `id` in the global vertex order.
  std::size_t position(const std::string& id) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<SurfaceTriangle> triangles_;
};

/// Triangle whose word is read off its total bundle.
SurfaceTriangle triangle_from_total(std::string id, std::array<std::string, 3> vertices, int sign,
                                    ElementaryBundle total);

/// Cyclic word of the circle bundle over an ordered 2-simplex.
CyclicWord gauss_word(const ElementaryBundle& total);

struct EdgeIssue {
  std::array<std::string, 2> edge;
  std::string reason;
};

struct CycleReport {
  /// Edges whose weighted boundary coefficient is nonzero.
  std::vector<EdgeIssue> boundary;
  /// Edges over which the adjacent triangles induce different bundles.
  std::vector<EdgeIssue> compatibility;

  bool ok() const noexcept { return boundary.empty() && compatibility.empty(); }
  std::string summary() const;
};

CycleReport validate_cycle(const TriangulatedSBundle& tb);

/// Signed sum of triangle curvatures, without validation.
Rational total_curvature(const TriangulatedSBundle& tb);

/// Curvature summed over the fundamental cycle.  Throws InvalidInput when
/// validate_cycle fails and ValidationGap when the sum is not an integer.
Rational chern_number(const TriangulatedSBundle& tb);

}  // namespace curvword
