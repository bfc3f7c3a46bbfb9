#include "curvword/explorer.hpp"

#include "curvword/curvature.hpp"
#include "curvword/error.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace curvword {

namespace {

// Fredricksen-Kessler-Maiorana generation: prenecklaces in lexicographic
// order, keeping those whose period divides the length.  These are exactly
// the least rotations.
class NecklaceGenerator {
 public:
  NecklaceGenerator(std::size_t length, std::size_t alphabet_size,
                    const std::function<void(const CyclicWord&)>& visit)
      : length_(length), alphabet_size_(alphabet_size), visit_(visit), a_(length + 1, 0), counts_(alphabet_size, 0) {}

  void run() {
    if (length_ == 0) return;
    generate(1, 1);
  }

 private:
  void generate(std::size_t t, std::size_t p) {
    if (t > length_) {
      if (length_ % p != 0) return;
      if (std::find(counts_.begin(), counts_.end(), 0) != counts_.end()) return;
      visit_(canonicalize(Word(alphabet_size_, std::vector<Rank>(a_.begin() + 1, a_.end()))));
      return;
    }
    // Prune branches that can no longer use every character.
    const auto missing = static_cast<std::size_t>(std::count(counts_.begin(), counts_.end(), 0));
    if (missing > length_ - t + 1) return;

    place(t, a_[t - p]);
    generate(t + 1, p);
    unplace(t);
    for (std::size_t j = a_[t - p] + 1u; j < alphabet_size_; ++j) {
      place(t, static_cast<Rank>(j));
      generate(t + 1, t);
      unplace(t);
    }
  }

  void place(std::size_t t, Rank r) {
    a_[t] = r;
    ++counts_[r];
  }
  void unplace(std::size_t t) { --counts_[a_[t]]; }

  std::size_t length_;
  std::size_t alphabet_size_;
  const std::function<void(const CyclicWord&)>& visit_;
  std::vector<Rank> a_;  // a_[0] stays 0 as the algorithm's sentinel
  std::vector<std::size_t> counts_;
};

struct Accumulator {
  std::map<Rational, ValueStat> values;
  LengthSurvey rows;

  void add(const CyclicWord& cw) {
    static const Rational half(1, 2);
    const Rational c = curv_cyclic(cw);
    ++rows.classes;
    auto [it, inserted] = values.try_emplace(c, ValueStat{c, 0, cw.rep()});
    ++it->second.count;
    if (!inserted && cw.rep() < it->second.example) it->second.example = cw.rep();
    const bool palindrome = is_cyclic_palindrome(cw);
    if (c.is_zero()) {
      (palindrome ? rows.zero_palindromes : rows.zero_non_palindromes).push_back(cw.rep());
    } else if (palindrome) {
      ++rows.nonzero_palindromes;
    } else {
      ++rows.nonzero_non_palindromes;
    }
    if (c.abs() == half) rows.extremal.push_back(cw.rep());
    if (c.abs() > half) rows.in_range = false;
  }

  void merge(Accumulator&& other) {
    for (auto& [value, stat] : other.values) {
      auto [it, inserted] = values.try_emplace(value, stat);
      if (inserted) continue;
      it->second.count += stat.count;
      it->second.example = std::min(it->second.example, stat.example);
    }
    rows.classes += other.rows.classes;
    auto append = [](std::vector<Word>& to, std::vector<Word>& from) {
      to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
    };
    append(rows.zero_palindromes, other.rows.zero_palindromes);
    append(rows.zero_non_palindromes, other.rows.zero_non_palindromes);
    append(rows.extremal, other.rows.extremal);
    rows.nonzero_palindromes += other.rows.nonzero_palindromes;
    rows.nonzero_non_palindromes += other.rows.nonzero_non_palindromes;
    rows.in_range = rows.in_range && other.rows.in_range;
  }

  LengthSurvey finish(std::size_t length) && {
    rows.length = length;
    for (auto& [value, stat] : values) rows.values.push_back(std::move(stat));
    std::sort(rows.zero_palindromes.begin(), rows.zero_palindromes.end());
    std::sort(rows.zero_non_palindromes.begin(), rows.zero_non_palindromes.end());
    std::sort(rows.extremal.begin(), rows.extremal.end());
    return std::move(rows);
  }
};

LengthSurvey survey_length(std::size_t length, unsigned threads) {
  const std::vector<CyclicWord> classes = enumerate_cyclic_words(length, 3);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, classes.size() / 256 + 1));
  std::vector<Accumulator> partial(workers);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (classes.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t begin = std::min(classes.size(), w * chunk);
        const std::size_t end = std::min(classes.size(), begin + chunk);
        for (std::size_t i = begin; i < end; ++i) partial[w].add(classes[i]);
      });
    }
  }
  Accumulator total;
  for (auto& p : partial) total.merge(std::move(p));
  return std::move(total).finish(length);
}

}  // namespace

void for_each_cyclic_word(std::size_t length, std::size_t alphabet_size,
                          const std::function<void(const CyclicWord&)>& visit) {
  if (alphabet_size == 0 || alphabet_size > 256) throw Error(ErrorKind::InvalidInput, "alphabet size must be 1..256");
  NecklaceGenerator(length, alphabet_size, visit).run();
}

std::vector<CyclicWord> enumerate_cyclic_words(std::size_t length, std::size_t alphabet_size) {
  std::vector<CyclicWord> out;
  for_each_cyclic_word(length, alphabet_size, [&](const CyclicWord& cw) { out.push_back(cw); });
  return out;
}

std::size_t SurveyReport::total_classes() const {
  std::size_t n = 0;
  for (const auto& l : lengths) n += l.classes;
  return n;
}

std::vector<ValueStat> SurveyReport::merged_values() const {
  std::map<Rational, ValueStat> merged;
  for (const auto& l : lengths) {
    for (const auto& stat : l.values) {
      auto [it, inserted] = merged.try_emplace(stat.value, stat);
      if (inserted) continue;
      it->second.count += stat.count;
      // Shorter words first, then lexicographic.
      if (stat.example.size() < it->second.example.size() ||
          (stat.example.size() == it->second.example.size() && stat.example < it->second.example)) {
        it->second.example = stat.example;
      }
    }
  }
  std::vector<ValueStat> out;
  for (auto& [value, stat] : merged) out.push_back(std::move(stat));
  return out;
}

bool SurveyReport::in_range() const {
  return std::all_of(lengths.begin(), lengths.end(), [](const LengthSurvey& l) { return l.in_range; });
}

SurveyReport survey(std::size_t min_length, std::size_t max_length, unsigned threads) {
  if (min_length < 3 || min_length > max_length) {
    throw Error(ErrorKind::InvalidInput, "survey needs 3 <= min_length <= max_length");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  SurveyReport report;
  report.min_length = min_length;
  report.max_length = max_length;
  for (std::size_t length = min_length; length <= max_length; ++length) {
    report.lengths.push_back(survey_length(length, threads));
  }
  return report;
}

std::vector<CyclicWord> find_zero_nonpalindromes(std::size_t max_length, unsigned threads) {
  std::vector<CyclicWord> out;
  if (max_length < 3) return out;
  for (const auto& row : survey(3, max_length, threads).lengths) {
    for (const Word& w : row.zero_non_palindromes) out.push_back(canonicalize(w));
  }
  return out;
}

}  // namespace curvword
