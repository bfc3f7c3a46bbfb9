#include "curvword/word.hpp"

#include "curvword/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace curvword {

Word::Word(std::size_t alphabet_size, std::vector<Rank> letters)
    : alphabet_size_(alphabet_size), letters_(std::move(letters)) {
  if (alphabet_size_ > 256) throw Error(ErrorKind::InvalidInput, "alphabets are limited to 256 characters");
  for (Rank r : letters_) {
    if (r >= alphabet_size_) {
      throw Error(ErrorKind::InvalidInput, "letter rank " + std::to_string(r) +
                                               " outside alphabet of size " + std::to_string(alphabet_size_));
    }
  }
}

std::vector<std::size_t> Word::multiplicities() const {
  std::vector<std::size_t> counts(alphabet_size_, 0);
  for (Rank r : letters_) ++counts[r];
  return counts;
}

// ---------------------------------------------------------------------------

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error(ErrorKind::InvalidInput, "empty alphabet");
  if (symbols_.size() > 256) throw Error(ErrorKind::InvalidInput, "alphabets are limited to 256 characters");
  std::array<bool, 256> seen{};
  for (char c : symbols_) {
    auto& slot = seen[static_cast<unsigned char>(c)];
    if (slot) throw Error(ErrorKind::InvalidInput, std::string("alphabet repeats character '") + c + "'");
    slot = true;
  }
}

Alphabet Alphabet::standard(std::size_t size) {
  if (size == 0 || size > 26) throw Error(ErrorKind::InvalidInput, "standard alphabet size must be 1..26");
  std::string s(size, 'a');
  std::iota(s.begin(), s.end(), 'a');
  return Alphabet(std::move(s));
}

Alphabet Alphabet::of_text(std::string_view text) {
  std::string s(text);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return Alphabet(std::move(s));
}

char Alphabet::symbol(Rank r) const {
  if (r >= symbols_.size()) throw Error(ErrorKind::InvalidInput, "rank outside alphabet");
  return symbols_[r];
}

Rank Alphabet::rank_of(char c) const {
  const auto pos = symbols_.find(c);
  if (pos == std::string::npos) {
    throw Error(ErrorKind::UnknownCharacter,
                std::string("character '") + c + "' is not in alphabet \"" + symbols_ + "\"");
  }
  return static_cast<Rank>(pos);
}

Word Alphabet::parse(std::string_view text) const {
  std::vector<Rank> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(rank_of(c));
  return Word(size(), std::move(letters));
}

std::string Alphabet::render(const Word& w) const {
  if (w.alphabet_size() != size()) {
    throw Error(ErrorKind::SizeMismatch, "word over " + std::to_string(w.alphabet_size()) +
                                             " characters rendered with alphabet \"" + symbols_ + "\"");
  }
  std::string out;
  out.reserve(w.size());
  for (Rank r : w.letters()) out.push_back(symbols_[r]);
  return out;
}

Alphabet Alphabet::without(Rank i) const {
  if (i >= size()) throw Error(ErrorKind::InvalidInput, "rank outside alphabet");
  if (size() == 1) throw Error(ErrorKind::InvalidInput, "cannot remove the only character of an alphabet");
  std::string s = symbols_;
  s.erase(i, 1);
  return Alphabet(std::move(s));
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<Rank> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Rank r : images_) {
    if (r >= images_.size() || hit[r]) throw Error(ErrorKind::InvalidInput, "permutation images are not a bijection");
    hit[r] = true;
  }
  // parity from cycle decomposition: sign = (-1)^(size - cycles)
  std::vector<bool> visited(images_.size(), false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (visited[s]) continue;
    ++cycles;
    for (std::size_t x = s; !visited[x]; x = images_[x]) visited[x] = true;
  }
  parity_ = (images_.size() - cycles) % 2 == 0 ? 1 : -1;
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<Rank> images(size);
  std::iota(images.begin(), images.end(), Rank{0});
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t size, Rank i, Rank j) {
  if (i >= size || j >= size) throw Error(ErrorKind::InvalidInput, "transposition outside alphabet");
  std::vector<Rank> images(size);
  std::iota(images.begin(), images.end(), Rank{0});
  std::swap(images[i], images[j]);
  return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(std::size_t size) {
  std::vector<Rank> images(size);
  std::iota(images.begin(), images.end(), Rank{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw Error(ErrorKind::SizeMismatch, "composing permutations of different sizes");
  std::vector<Rank> images(size());
  for (std::size_t r = 0; r < size(); ++r) images[r] = images_[other.images_[r]];
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------

std::size_t validate_n_word(const Word& w) {
  if (w.empty()) throw Error(ErrorKind::InvalidInput, "empty word");
  if (w.alphabet_size() == 0) throw Error(ErrorKind::InvalidInput, "word over an empty alphabet");
  const auto counts = w.multiplicities();
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] == 0) {
      throw Error(ErrorKind::MissingCharacter, "character of rank " + std::to_string(r) + " never occurs");
    }
  }
  return w.alphabet_size() - 1;
}

bool has_min_multiplicity(const Word& w, std::size_t k) {
  const auto counts = w.multiplicities();
  return std::all_of(counts.begin(), counts.end(), [k](std::size_t c) { return c >= k; });
}

Word delta(const Word& w, Rank i) {
  if (i >= w.alphabet_size()) {
    throw Error(ErrorKind::InvalidInput, "face index " + std::to_string(i) + " outside alphabet of size " +
                                             std::to_string(w.alphabet_size()));
  }
  std::vector<Rank> letters;
  letters.reserve(w.size());
  for (Rank r : w.letters()) {
    if (r == i) continue;
    letters.push_back(r > i ? static_cast<Rank>(r - 1) : r);
  }
  return Word(w.alphabet_size() - 1, std::move(letters));
}

Word cyclic_shift(const Word& w) { return cyclic_shift(w, 1); }

Word cyclic_shift(const Word& w, std::size_t times) {
  if (w.empty()) throw Error(ErrorKind::InvalidInput, "cannot shift an empty word");
  std::vector<Rank> letters(w.letters().begin(), w.letters().end());
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(times % letters.size()), letters.end());
  return Word(w.alphabet_size(), std::move(letters));
}

Word mirror(const Word& w) {
  std::vector<Rank> letters(w.letters().rbegin(), w.letters().rend());
  return Word(w.alphabet_size(), std::move(letters));
}

Word permute_alphabet(const Word& w, const Permutation& p) {
  if (p.size() != w.alphabet_size()) {
    throw Error(ErrorKind::SizeMismatch, "permutation of " + std::to_string(p.size()) +
                                             " characters applied to a word over " +
                                             std::to_string(w.alphabet_size()));
  }
  std::vector<Rank> letters;
  letters.reserve(w.size());
  for (Rank r : w.letters()) letters.push_back(p(r));
  return Word(w.alphabet_size(), std::move(letters));
}

std::size_t least_rotation(std::span<const Rank> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  // Booth's failure-function scan over the doubled string.
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t idx) { return s[idx % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Rank sj = at(j);
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i + 1))) {  // here i == -1
      if (sj < at(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

CyclicWord canonicalize(const Word& w) {
  if (w.empty()) return CyclicWord(w);
  return CyclicWord(cyclic_shift(w, least_rotation(w.letters())));
}

bool is_cyclic_palindrome(const CyclicWord& cw) {
  return canonicalize(mirror(cw.rep())) == cw;
}

}  // namespace curvword
