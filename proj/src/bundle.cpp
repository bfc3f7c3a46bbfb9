#include "curvword/bundle.hpp"

#include "curvword/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace curvword {

namespace {

std::vector<Cell> least_rotation_of_cells(std::vector<Cell> cells) {
  if (cells.size() < 2) return cells;
  const std::size_t n = cells.size();
  std::size_t best = 0;
  for (std::size_t start = 1; start < n; ++start) {
    for (std::size_t k = 0; k < n; ++k) {
      const Cell& a = cells[(start + k) % n];
      const Cell& b = cells[(best + k) % n];
      if (a == b) continue;
      if (a < b) best = start;
      break;
    }
  }
  std::rotate(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(best), cells.end());
  return cells;
}

std::size_t step(FiberKind kind, std::size_t level, std::size_t fiber_size) {
  return kind == FiberKind::Circle ? (level + 1) % fiber_size : level + 1;
}

std::vector<std::size_t> upper_of(FiberKind kind, const std::vector<std::size_t>& sizes, const Cell& c) {
  auto s = c.levels;
  s[c.doubled] = step(kind, s[c.doubled], sizes[c.doubled]);
  return s;
}

std::string describe(const std::vector<std::size_t>& section) {
  std::string out = "(";
  for (std::size_t i = 0; i < section.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(section[i]);
  }
  return out + ")";
}

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorKind::InvalidBundle, why); }

void require_kind(const ElementaryBundle& b, FiberKind kind, const char* what) {
  if (b.fiber_kind() != kind) {
    invalid(std::string(what) + " needs " + (kind == FiberKind::Interval ? "an interval" : "a circle") + " bundle");
  }
}

}  // namespace

ElementaryBundle::ElementaryBundle(std::size_t base_dim, FiberKind kind, std::vector<std::size_t> fiber_sizes,
                                   std::vector<Cell> cells)
    : base_dim_(base_dim), kind_(kind), fiber_sizes_(std::move(fiber_sizes)), cells_(std::move(cells)) {
  if (kind_ == FiberKind::Circle) cells_ = least_rotation_of_cells(std::move(cells_));
}

std::size_t ElementaryBundle::upper_level(const Cell& c) const {
  return step(kind_, c.levels.at(c.doubled), fiber_sizes_.at(c.doubled));
}

std::vector<LabeledVertex> ElementaryBundle::vertices(const Cell& c) const {
  std::vector<LabeledVertex> out;
  out.reserve(c.levels.size() + 1);
  for (std::size_t v = 0; v < c.levels.size(); ++v) {
    out.push_back({static_cast<Rank>(v), c.levels[v]});
    if (v == c.doubled) out.push_back({static_cast<Rank>(v), upper_level(c)});
  }
  return out;
}

std::vector<std::size_t> ElementaryBundle::upper_section(const Cell& c) const {
  return upper_of(kind_, fiber_sizes_, c);
}

bool ElementaryBundle::has_small_fibers() const {
  return std::any_of(fiber_sizes_.begin(), fiber_sizes_.end(), [](std::size_t m) { return m < 3; });
}

bool ElementaryBundle::is_simplicial() const {
  if (has_small_fibers()) return false;
  std::set<std::vector<std::size_t>> seen;
  for (const Cell& c : cells_) {
    if (!seen.insert(c.levels).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::optional<std::string> check_bundle(const ElementaryBundle& b) {
  const std::size_t n = b.base_dim();
  const auto& sizes = b.fiber_sizes();
  const auto& cells = b.cells();
  const bool circle = b.fiber_kind() == FiberKind::Circle;

  if (n > 255) return "base dimension too large";
  if (sizes.size() != n + 1) {
    return "expected " + std::to_string(n + 1) + " fiber sizes, got " + std::to_string(sizes.size());
  }
  for (std::size_t v = 0; v <= n; ++v) {
    const std::size_t min_size = circle ? 1 : 2;
    if (sizes[v] < min_size) {
      return "fiber over base vertex " + std::to_string(v) + " has " + std::to_string(sizes[v]) + " points";
    }
  }
  if (cells.empty()) return "bundle has no cells";
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Cell& c = cells[k];
    if (c.levels.size() != n + 1) return "cell " + std::to_string(k) + " does not cover every base vertex once";
    if (c.doubled > n) return "cell " + std::to_string(k) + " doubles a vertex outside the base";
    for (std::size_t v = 0; v <= n; ++v) {
      if (c.levels[v] >= sizes[v]) {
        return "cell " + std::to_string(k) + " has level " + std::to_string(c.levels[v]) + " over base vertex " +
               std::to_string(v);
      }
    }
    if (!circle && c.levels[c.doubled] + 1 >= sizes[c.doubled]) {
      return "cell " + std::to_string(k) + " runs past the top of the fiber";
    }
  }

  if (!circle) {
    if (std::any_of(cells.front().levels.begin(), cells.front().levels.end(), [](std::size_t l) { return l != 0; })) {
      return "no bottom cell: the first cell starts at section " + describe(cells.front().levels);
    }
  }
  for (std::size_t k = 0; k + 1 < cells.size() + (circle ? 1 : 0); ++k) {
    const Cell& next = cells[(k + 1) % cells.size()];
    if (b.upper_section(cells[k]) != next.levels) {
      return "cells " + std::to_string(k) + " and " + std::to_string((k + 1) % cells.size()) +
             " do not share a section";
    }
  }
  if (!circle) {
    std::vector<std::size_t> top(sizes.size());
    std::transform(sizes.begin(), sizes.end(), top.begin(), [](std::size_t m) { return m - 1; });
    if (b.upper_section(cells.back()) != top) return "the last cell does not reach the top section";
  } else {
    std::vector<std::size_t> windings(n + 1, 0);
    for (const Cell& c : cells) ++windings[c.doubled];
    for (std::size_t v = 0; v <= n; ++v) {
      if (windings[v] != sizes[v]) {
        return "the cell cycle winds " + std::to_string(windings[v]) + " steps around the fiber of size " +
               std::to_string(sizes[v]) + " over base vertex " + std::to_string(v);
      }
    }
  }
  return std::nullopt;
}

void validate_bundle(const ElementaryBundle& b) {
  if (auto why = check_bundle(b)) invalid(*why);
}

std::optional<std::vector<Cell>> order_cells(FiberKind kind, const std::vector<std::size_t>& fiber_sizes,
                                             const std::vector<Cell>& cells) {
  if (cells.empty()) return std::nullopt;
  std::map<std::vector<std::size_t>, std::size_t> by_lower;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k].levels.size() != fiber_sizes.size() || cells[k].doubled >= fiber_sizes.size()) return std::nullopt;
    if (!by_lower.emplace(cells[k].levels, k).second) return std::nullopt;
  }
  std::size_t current = 0;
  if (kind == FiberKind::Interval) {
    auto it = by_lower.find(std::vector<std::size_t>(fiber_sizes.size(), 0));
    if (it == by_lower.end()) return std::nullopt;
    current = it->second;
  }
  std::vector<Cell> ordered;
  std::vector<bool> used(cells.size(), false);
  while (true) {
    if (used[current]) break;
    used[current] = true;
    ordered.push_back(cells[current]);
    auto it = by_lower.find(upper_of(kind, fiber_sizes, cells[current]));
    if (it == by_lower.end()) break;
    current = it->second;
  }
  if (ordered.size() != cells.size()) return std::nullopt;
  return ordered;
}

// ---------------------------------------------------------------------------

Word word_from_bundle(const ElementaryBundle& b) {
  require_kind(b, FiberKind::Interval, "word_from_bundle");
  validate_bundle(b);
  std::vector<Rank> letters;
  letters.reserve(b.cells().size());
  for (const Cell& c : b.cells()) letters.push_back(c.doubled);
  Word w(b.base_dim() + 1, std::move(letters));
  try {
    validate_n_word(w);
  } catch (const Error& e) {
    invalid(std::string("shelling word is not an n-word: ") + e.what());
  }
  return w;
}

ElementaryBundle bundle_from_word(const Word& w) {
  try {
    validate_n_word(w);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAnNWord, e.what());
  }
  const std::size_t n = w.alphabet_size() - 1;
  // One maximal cell per letter: the two intervals meeting at the letter plus
  // the interval of every other character that contains it.  Intervals are
  // numbered by how many occurrences of their character precede them.
  std::vector<std::size_t> seen(n + 1, 0);
  std::vector<Cell> cells;
  cells.reserve(w.size());
  for (Rank r : w.letters()) {
    cells.push_back({r, seen});
    ++seen[r];
  }
  std::vector<std::size_t> sizes(n + 1);
  std::transform(seen.begin(), seen.end(), sizes.begin(), [](std::size_t k) { return k + 1; });
  return ElementaryBundle(n, FiberKind::Interval, std::move(sizes), std::move(cells));
}

ElementaryBundle glue(const ElementaryBundle& b) {
  require_kind(b, FiberKind::Interval, "glue");
  for (std::size_t v = 0; v < b.fiber_sizes().size(); ++v) {
    if (b.fiber_sizes()[v] < 2) {
      throw Error(ErrorKind::DegenerateFiber,
                  "gluing would leave no points over base vertex " + std::to_string(v));
    }
  }
  validate_bundle(b);
  std::vector<std::size_t> sizes = b.fiber_sizes();
  for (auto& m : sizes) --m;
  std::vector<Cell> cells = b.cells();
  for (Cell& c : cells) {
    for (std::size_t v = 0; v < sizes.size(); ++v) c.levels[v] %= sizes[v];
  }
  return ElementaryBundle(b.base_dim(), FiberKind::Circle, std::move(sizes), std::move(cells));
}

ElementaryBundle cyclic_shift_bundle(const ElementaryBundle& b) {
  require_kind(b, FiberKind::Interval, "cyclic_shift_bundle");
  validate_bundle(b);
  const auto& sizes = b.fiber_sizes();
  const Rank moved = b.cells().front().doubled;
  // The bottom cell is glued on above the top section; levels over the moved
  // vertex drop by one because its lowest point is cut away.
  std::vector<Cell> cells(b.cells().begin() + 1, b.cells().end());
  for (Cell& c : cells) --c.levels[moved];
  Cell top{moved, {}};
  top.levels.resize(sizes.size());
  for (std::size_t v = 0; v < sizes.size(); ++v) top.levels[v] = sizes[v] - 1;
  top.levels[moved] = sizes[moved] - 2;
  cells.push_back(std::move(top));
  return ElementaryBundle(b.base_dim(), FiberKind::Interval, sizes, std::move(cells));
}

CyclicWord word_from_s_bundle(const ElementaryBundle& b) {
  require_kind(b, FiberKind::Circle, "word_from_s_bundle");
  validate_bundle(b);
  std::vector<Rank> letters;
  letters.reserve(b.cells().size());
  for (const Cell& c : b.cells()) letters.push_back(c.doubled);
  return canonicalize(Word(b.base_dim() + 1, std::move(letters)));
}

ElementaryBundle restrict(const ElementaryBundle& b, Rank i) {
  if (b.base_dim() == 0) throw Error(ErrorKind::InvalidInput, "a bundle over a point has no faces");
  if (i > b.base_dim()) {
    throw Error(ErrorKind::InvalidInput, "face index " + std::to_string(i) + " outside base of dimension " +
                                             std::to_string(b.base_dim()));
  }
  validate_bundle(b);
  std::vector<std::size_t> sizes = b.fiber_sizes();
  sizes.erase(sizes.begin() + i);
  std::vector<Cell> cells;
  for (const Cell& c : b.cells()) {
    if (c.doubled == i) continue;  // collapses onto a face of its neighbours
    Cell r{static_cast<Rank>(c.doubled > i ? c.doubled - 1 : c.doubled), c.levels};
    r.levels.erase(r.levels.begin() + i);
    cells.push_back(std::move(r));
  }
  return ElementaryBundle(b.base_dim() - 1, b.fiber_kind(), std::move(sizes), std::move(cells));
}

}  // namespace curvword
