#pragma once

// Exhaustive surveys of curvature over rotation classes of 3-character words.

#include "curvword/rational.hpp"
#include "curvword/word.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace curvword {

/// Calls `visit` once per rotation class of words of the given length over
/// `alphabet_size` characters that use every character, in increasing order
/// of the canonical representative.
void for_each_cyclic_word(std::size_t length, std::size_t alphabet_size,
                          const std::function<void(const CyclicWord&)>& visit);

std::vector<CyclicWord> enumerate_cyclic_words(std::size_t length, std::size_t alphabet_size = 3);

struct ValueStat {
  Rational value;
  std::size_t count = 0;
  /// Least canonical representative attaining the value.
  Word example;

  friend bool operator==(const ValueStat&, const ValueStat&) = default;
};

struct LengthSurvey {
  std::size_t length = 0;
  std::size_t classes = 0;
  /// Sorted by value.
  std::vector<ValueStat> values;
  /// Zero-curvature classes split by the palindrome test; sorted.
  std::vector<Word> zero_palindromes;
  std::vector<Word> zero_non_palindromes;
  /// Cyclic palindromes whose curvature is not zero.
  std::size_t nonzero_palindromes = 0;
  std::size_t nonzero_non_palindromes = 0;
  /// Classes with |curv| = 1/2; sorted.
  std::vector<Word> extremal;
  /// Every value lies in [-1/2, 1/2].
  bool in_range = true;

  friend bool operator==(const LengthSurvey&, const LengthSurvey&) = default;
};

struct SurveyReport {
  std::size_t min_length = 0;
  std::size_t max_length = 0;
  std::vector<LengthSurvey> lengths;

  std::size_t total_classes() const;
  /// Attained values merged over all lengths.
  std::vector<ValueStat> merged_values() const;
  bool in_range() const;

  friend bool operator==(const SurveyReport&, const SurveyReport&) = default;
};

/// Surveys every length in [min_length, max_length].  `threads` = 0 picks the
/// hardware concurrency; the report does not depend on it.
/// Throws InvalidInput unless 3 <= min_length <= max_length.
SurveyReport survey(std::size_t min_length, std::size_t max_length, unsigned threads = 0);

/// Zero-curvature classes of length 3..max_length that are not cyclic palindromes.
std::vector<CyclicWord> find_zero_nonpalindromes(std::size_t max_length, unsigned threads = 0);

}  // namespace curvword
