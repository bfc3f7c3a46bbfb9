#include "curvword/curvature.hpp"

#include "curvword/error.hpp"

#include <cstdint>

namespace curvword {

namespace {

void require_n_word(const Word& w, std::size_t n, const char* what) {
  if (w.alphabet_size() != n + 1) {
    throw Error(ErrorKind::NotAnNWord, std::string(what) + " needs a word over " + std::to_string(n + 1) +
                                           " characters, got " + std::to_string(w.alphabet_size()));
  }
  try {
    validate_n_word(w);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAnNWord, std::string(what) + ": " + e.what());
  }
}

// Numerator and denominator of ind before reduction.
struct RawIndex {
  std::int64_t numerator;
  std::int64_t denominator;
};

RawIndex raw_index(const Word& w) {
  std::int64_t k0 = 0;
  std::int64_t k1 = 0;
  std::int64_t left = 0;  // pairs with the rank-1 letter left of the rank-0 letter
  for (Rank r : w.letters()) {
    if (r == 0) {
      ++k0;
      left += k1;
    } else {
      ++k1;
    }
  }
  return {2 * left - k0 * k1, 2 * k0 * k1};
}

}  // namespace

Rational ind(const Word& w) {
  require_n_word(w, 1, "ind");
  const auto raw = raw_index(w);
  return Rational(raw.numerator, raw.denominator);
}

Rational curv(const Word& w) {
  require_n_word(w, 2, "curv");
  // Combine the three faces over a common denominator before reducing once.
  const auto f0 = raw_index(delta(w, 0));
  const auto f1 = raw_index(delta(w, 1));
  const auto f2 = raw_index(delta(w, 2));
  const BigInt num = BigInt(f0.numerator) * f1.denominator * f2.denominator -
                     BigInt(f1.numerator) * f0.denominator * f2.denominator +
                     BigInt(f2.numerator) * f0.denominator * f1.denominator;
  const BigInt den = BigInt(f0.denominator) * f1.denominator * f2.denominator;
  return Rational(num, den);
}

Rational curv_cyclic(const CyclicWord& cw) { return curv(cw.rep()); }

CochainFn CochainFn::index() { return {1, [](const Word& w) { return ind(w); }}; }

CochainFn CochainFn::curvature() { return {2, [](const Word& w) { return curv(w); }}; }

CochainFn CochainFn::zero(std::size_t degree) {
  return {degree, [](const Word&) { return Rational(0); }};
}

Rational coboundary(const CochainFn& f, const Word& w) {
  if (w.alphabet_size() != f.degree + 2) {
    throw Error(ErrorKind::DegreeMismatch, "coboundary of a degree-" + std::to_string(f.degree) +
                                               " cochain needs a word over " + std::to_string(f.degree + 2) +
                                               " characters, got " + std::to_string(w.alphabet_size()));
  }
  validate_n_word(w);
  Rational total;
  for (std::size_t i = 0; i < w.alphabet_size(); ++i) {
    const Rational face = f.eval(delta(w, static_cast<Rank>(i)));
    if (i % 2 == 0) {
      total += face;
    } else {
      total -= face;
    }
  }
  return total;
}

}  // namespace curvword
