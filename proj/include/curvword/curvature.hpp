#pragma once

#include "curvword/rational.hpp"
#include "curvword/word.hpp"

#include <cstddef>
#include <functional>

namespace curvword {

/// Index of a 2-character word.
///
/// With k0 occurrences of rank 0 and k1 of rank 1, count the occurrence pairs
/// (rank-0 letter, rank-1 letter) in which the rank-1 letter stands to the
/// left; the index is (left - right) / (2 k0 k1).  ind("ab") = -1/2.
///
/// Throws NotAnNWord unless `w` is a 1-word.
Rational ind(const Word& w);

/// Curvature of a 3-character word: ind(d0 w) - ind(d1 w) + ind(d2 w).
/// Throws NotAnNWord unless `w` is a 2-word.
Rational curv(const Word& w);

/// Curvature of a rotation class, evaluated on its canonical representative.
Rational curv_cyclic(const CyclicWord& cw);

/// A rational-valued function on n-words.
struct CochainFn {
  std::size_t degree = 0;
  std::function<Rational(const Word&)> eval;

  static CochainFn index();
  static CochainFn curvature();
  static CochainFn zero(std::size_t degree);
};

/// (df)(w) = sum_i (-1)^i f(delta(w, i)) over the n+2 faces of an (n+1)-word.
/// Throws DegreeMismatch when w is not over degree+2 characters.
Rational coboundary(const CochainFn& f, const Word& w);

}  // namespace curvword
