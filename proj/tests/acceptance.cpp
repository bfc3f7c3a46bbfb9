// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "curvword/bundle.hpp"
#include "curvword/chern.hpp"
#include "curvword/curvature.hpp"
#include "curvword/explorer.hpp"
#include "curvword/json_io.hpp"
#include "oracle/oracles.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace curvword;

namespace {

const std::string kData = CURVWORD_TEST_DATA;

/// Collects failure messages for one criterion; keeps the first few.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool ok() const { return failed_ == 0 && checks_ > 0; }
  std::size_t checks() const { return checks_; }
  std::string detail() const {
    std::ostringstream os;
    os << failed_ << " of " << checks_ << " checks failed";
    for (const auto& f : failures_) os << "\n      " << f;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

TriangulatedSBundle load(const std::string& name) {
  return json_io::sbundle_from_json(json_io::read_file(kData + "/" + name));
}

TriangulatedSBundle reoriented(const TriangulatedSBundle& tb) {
  auto tris = tb.triangles();
  for (auto& t : tris) t.sign = -t.sign;
  return TriangulatedSBundle(tb.vertices(), std::move(tris));
}

TriangulatedSBundle mirrored(const TriangulatedSBundle& tb) {
  auto tris = tb.triangles();
  for (auto& t : tris) {
    t.word = canonicalize(mirror(t.word.rep()));
    t.total.reset();
  }
  return TriangulatedSBundle(tb.vertices(), std::move(tris));
}

TriangulatedSBundle product(const oracle::Surface& s, std::size_t m) {
  std::string text;
  for (std::size_t k = 0; k < m; ++k) text += "abc";
  const ElementaryBundle total = glue(bundle_from_word(Alphabet::standard(3).parse(text)));
  std::vector<std::string> ids;
  for (int v : s.vertices) ids.push_back(std::to_string(v));
  std::vector<SurfaceTriangle> tris;
  for (std::size_t t = 0; t < s.triangles.size(); ++t) {
    const auto& v = s.triangles[t];
    tris.push_back(triangle_from_total("t" + std::to_string(t),
                                       {std::to_string(v[0]), std::to_string(v[1]), std::to_string(v[2])},
                                       s.signs[t], total));
  }
  return TriangulatedSBundle(ids, std::move(tris));
}

/// Top simplices of the total space glued from per-triangle complexes.
std::vector<std::vector<std::pair<std::string, std::size_t>>> total_space(const TriangulatedSBundle& tb) {
  std::vector<std::vector<std::pair<std::string, std::size_t>>> top;
  for (const auto& t : tb.triangles()) {
    for (const Cell& c : t.total->cells()) {
      std::vector<std::pair<std::string, std::size_t>> s;
      for (const auto& v : t.total->vertices(c)) s.emplace_back(t.vertices[v.base_vertex], v.level);
      top.push_back(std::move(s));
    }
  }
  return top;
}

Check golden_values() {
  Check c;
  auto expect = [&](const char* alphabet, const char* word, Rational value) {
    const Rational got = curv(Alphabet(alphabet).parse(word));
    c.expect(got == value, std::string(word) + " -> " + got.to_string() + ", expected " + value.to_string());
  };
  expect("sel", "selllesseels", R(-1, 16));
  expect("cat", "cattactact", R(1, 18));
  expect("aps", "papaspaspsa", R(1, 24));
  expect("lgu", "lguguglu", R(0));
  return c;
}

Check rotation_invariance() {
  Check c;
  for (std::size_t len = 3; len <= 10; ++len) {
    oracle::for_each_word(3, len, [&](const std::vector<Rank>& l) {
      if (!oracle::uses_all(l, 3)) return;
      Word w(3, l);
      const Rational base = curv(w);
      bool same = true;
      for (std::size_t s = 1; s < len; ++s) {
        w = cyclic_shift(w);
        same = same && curv(w) == base;
      }
      c.expect(same, "rotation changes curv of " + oracle::letters_of(Word(3, l)));
    });
  }
  return c;
}

Check cocycle() {
  Check c;
  oracle::for_each_n_word(4, 8, [&](const Word& w) {
    c.expect(coboundary(CochainFn::curvature(), w).is_zero(), "d Curv != 0 on " + oracle::letters_of(w));
  });
  return c;
}

Check symmetries() {
  Check c;
  const auto perms = Permutation::all(3);
  oracle::for_each_n_word(3, 8, [&](const Word& w) {
    const Rational v = curv(w);
    for (const auto& p : perms) {
      c.expect(curv(permute_alphabet(w, p)) == R(p.parity()) * v, "parity rule fails on " + oracle::letters_of(w));
    }
    c.expect(curv(mirror(w)) == -v, "mirror rule fails on " + oracle::letters_of(w));
  });
  const Permutation swap = Permutation::transposition(2, 0, 1);
  oracle::for_each_n_word(2, 10, [&](const Word& w) {
    c.expect(ind(permute_alphabet(w, swap)) == -ind(w), "ind swap fails on " + oracle::letters_of(w));
  });
  return c;
}

Check range_and_extremes(const SurveyReport& report) {
  Check c;
  for (const auto& l : report.lengths) {
    for (const auto& v : l.values) {
      c.expect(v.value >= R(-1, 2) && v.value <= R(1, 2), "value " + v.value.to_string() + " out of range");
    }
  }
  for (std::size_t i = 1; i <= 5; ++i) {
    for (std::size_t j = 1; j <= 5; ++j) {
      for (std::size_t k = 1; k <= 5; ++k) {
        const std::string s = std::string(i, 'a') + std::string(j, 'b') + std::string(k, 'c');
        c.expect(curv(Alphabet("abc").parse(s)).abs() == R(1, 2), "block word " + s);
      }
    }
  }
  return c;
}

Check palindromes() {
  // Palindrome test done by brute force over rotations, not by the library.
  Check c;
  for (std::size_t len = 3; len <= 12; ++len) {
    for_each_cyclic_word(len, 3, [&](const CyclicWord& cw) {
      const Word& w = cw.rep();
      const Word m = mirror(w);
      bool palindrome = false;
      Word r = w;
      for (std::size_t s = 0; s < len && !palindrome; ++s, r = cyclic_shift(r)) palindrome = r == m;
      if (palindrome) c.expect(curv(w).is_zero(), "palindrome " + oracle::letters_of(w) + " has nonzero curv");
    });
  }
  return c;
}

Check word_bundle_isomorphism() {
  Check c;
  auto visit = [&](const Word& w) {
    const std::string s = oracle::letters_of(w);
    const ElementaryBundle b = bundle_from_word(w);
    c.expect(word_from_bundle(b) == w, "W(B(w)) != w for " + s);
    c.expect(bundle_from_word(word_from_bundle(b)) == b, "B(W(b)) != b for " + s);
    for (Rank i = 0; i < w.alphabet_size(); ++i) {
      c.expect(word_from_bundle(restrict(b, i)) == delta(w, i), "restrict/delta for " + s);
    }
    const ElementaryBundle g = glue(b);
    c.expect(word_from_s_bundle(g) == canonicalize(word_from_bundle(b)), "glue diagram for " + s);
    if (w.alphabet_size() == 3) {
      for (Rank i = 0; i < 3; ++i) {
        c.expect(word_from_s_bundle(restrict(g, i)) == canonicalize(delta(w, i)), "glued restrict for " + s);
      }
    }
  };
  oracle::for_each_n_word(2, 7, visit);
  oracle::for_each_n_word(3, 7, visit);
  return c;
}

Check hopf() {
  Check c;
  const TriangulatedSBundle total = load("hopf_total.json");
  const TriangulatedSBundle words = load("hopf_words.json");
  c.expect(chern_number(total) == R(1), "Hopf (total complex) gives " + chern_number(total).to_string());
  c.expect(chern_number(words) == R(1), "Hopf (words) gives " + chern_number(words).to_string());
  c.expect(chern_number(reoriented(total)) == R(-1), "reversed base orientation does not negate");
  c.expect(chern_number(mirrored(total)) == R(-1), "reversed fiber orientation does not negate");

  // The data must be an honest triangulation of a homology 3-sphere.
  bool simplicial = true;
  for (const auto& t : total.triangles()) simplicial = simplicial && t.total->is_simplicial();
  c.expect(simplicial, "Hopf total complex is not simplicial");
  const auto top = total_space(total);
  for (std::int64_t p : {2, 3, 5, 1000003}) {
    const auto b = oracle::betti_mod_p(top, p);
    c.expect(b == std::vector<std::size_t>{1, 0, 0, 1}, "Hopf total space is not a homology sphere mod " + std::to_string(p));
  }

  for (const auto& s : {oracle::tetrahedron_boundary(), oracle::octahedron(), oracle::torus()}) {
    for (std::size_t m = 1; m <= 4; ++m) {
      c.expect(chern_number(product(s, m)).is_zero(), "product bundle is not 0");
    }
  }
  const auto prod = total_space(product(oracle::tetrahedron_boundary(), 3));
  c.expect(oracle::betti_mod_p(prod, 2) == std::vector<std::size_t>{1, 1, 1, 1}, "product total space is not S2 x S1");
  return c;
}

Check integrality() {
  Check c;
  std::vector<TriangulatedSBundle> corpus;
  for (const char* name : {"hopf_total.json", "hopf_words.json", "twisted_zero_total.json"}) corpus.push_back(load(name));
  for (const auto& s : {oracle::tetrahedron_boundary(), oracle::octahedron(), oracle::torus()}) {
    for (std::size_t m = 1; m <= 4; ++m) corpus.push_back(product(s, m));
  }
  const std::size_t base = corpus.size();
  for (std::size_t k = 0; k < base; ++k) {
    corpus.push_back(reoriented(corpus[k]));
    corpus.push_back(mirrored(corpus[k]));
  }
  for (const auto& tb : corpus) {
    c.expect(validate_cycle(tb).ok(), "corpus entry fails validation");
    try {
      c.expect(chern_number(tb).is_integer(), "non-integer Chern number");
    } catch (const std::exception& e) {
      c.expect(false, e.what());
    }
  }
  return c;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  int failed = 0;
  SurveyReport report;

  auto run = [&](int id, const std::string& name, const std::function<Check()>& body) {
    const auto start = Clock::now();
    Check c;
    std::string error;
    try {
      c = body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool ok = error.empty() && c.ok();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << name << "  (" << c.checks() << " checks, "
              << std::fixed << std::setprecision(2) << secs << " s)\n";
    if (!error.empty()) std::cout << "      exception: " << error << "\n";
    if (error.empty() && !ok) std::cout << "      " << c.detail() << "\n";
    std::cout.flush();
  };

  run(1, "reference curvature values", golden_values);
  run(2, "rotation invariance, all 3-character words of length <= 10", rotation_invariance);
  run(3, "cocycle: d Curv = 0 on all 4-character words of length <= 8", cocycle);
  run(4, "parity, mirror and index swap symmetries", symmetries);
  run(5, "range [-1/2, 1/2] over lengths 3..12 and block-word extremes", [&] {
    report = survey(3, 12);
    return range_and_extremes(report);
  });
  run(6, "every cyclic palindrome of length <= 12 has curvature 0", palindromes);
  run(7, "word/bundle isomorphism, functoriality, gluing diagram (length <= 7)", word_bundle_isomorphism);
  run(8, "Hopf bundle = +1, product bundles = 0, orientation reversal negates", hopf);
  run(9, "Chern numbers are integers on the whole test corpus", integrality);

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
