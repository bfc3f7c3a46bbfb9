#pragma once

// Words over ordered finite alphabets.
//
// A character is stored as its rank 0..size-1; rank 0 is the first character
// of the alphabet string, so the alphabet "sel" maps s->0, e->1, l->2.  An
// n-word is a word over n+1 ranks that uses every rank at least once.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace curvword {

using Rank = std::uint8_t;

class Word {
 public:
  Word() = default;
  /// Throws InvalidInput if some letter is >= alphabet_size.
  Word(std::size_t alphabet_size, std::vector<Rank> letters);

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::span<const Rank> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Rank operator[](std::size_t i) const { return letters_[i]; }

  /// Occurrence count of every rank.
  std::vector<std::size_t> multiplicities() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::size_t alphabet_size_ = 0;
  std::vector<Rank> letters_;
};

/// The ordered character set used to read and print words.
class Alphabet {
 public:
  /// Throws InvalidInput on an empty string or repeated characters.
  explicit Alphabet(std::string symbols);

  /// "abc..." with `size` characters.
  static Alphabet standard(std::size_t size);
  /// The distinct characters of `text`, sorted.
  static Alphabet of_text(std::string_view text);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }
  char symbol(Rank r) const;
  Rank rank_of(char c) const;

  /// Throws UnknownCharacter for characters outside the alphabet.
  Word parse(std::string_view text) const;
  std::string render(const Word& w) const;

  /// The alphabet with character `i` removed, matching delta(w, i).
  Alphabet without(Rank i) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

/// A bijection on {0..size-1}; `images()[r]` is the image of r.
class Permutation {
 public:
  /// Throws InvalidInput unless `images` is a bijection.
  explicit Permutation(std::vector<Rank> images);

  static Permutation identity(std::size_t size);
  static Permutation transposition(std::size_t size, Rank i, Rank j);
  /// All size! permutations in lexicographic order of images.
  static std::vector<Permutation> all(std::size_t size);

  std::size_t size() const noexcept { return images_.size(); }
  std::span<const Rank> images() const noexcept { return images_; }
  Rank operator()(Rank r) const { return images_.at(r); }
  /// +1 for even permutations, -1 for odd ones.
  int parity() const noexcept { return parity_; }

  /// Composition (*this after other).
  Permutation operator*(const Permutation& other) const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

 private:
  std::vector<Rank> images_;
  int parity_ = 1;
};

/// Rotation class of a word, held by its lexicographically least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;

  const Word& rep() const noexcept { return rep_; }
  std::size_t alphabet_size() const noexcept { return rep_.alphabet_size(); }
  std::size_t size() const noexcept { return rep_.size(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  friend CyclicWord canonicalize(const Word& w);
  explicit CyclicWord(Word rep) : rep_(std::move(rep)) {}

  Word rep_;
};

/// Returns n = alphabet_size - 1 when every rank occurs in `w`.
/// Throws MissingCharacter naming the first absent rank, InvalidInput on an empty word.
std::size_t validate_n_word(const Word& w);

/// True when every rank occurs at least `k` times; fibers of honest simplicial
/// bundles need k >= 3.
bool has_min_multiplicity(const Word& w, std::size_t k = 3);

/// Deletes every occurrence of rank `i`; larger ranks move down by one.
Word delta(const Word& w, Rank i);

/// Moves the first letter to the end.
Word cyclic_shift(const Word& w);
Word cyclic_shift(const Word& w, std::size_t times);

Word mirror(const Word& w);

/// Replaces every letter r by p(r).  Throws SizeMismatch if p acts on a different alphabet.
Word permute_alphabet(const Word& w, const Permutation& p);

/// Start index of the lexicographically least rotation (Booth's algorithm).
/// For periodic words the smallest such index is returned.
std::size_t least_rotation(std::span<const Rank> letters);

CyclicWord canonicalize(const Word& w);

bool is_cyclic_palindrome(const CyclicWord& cw);

}  // namespace curvword
