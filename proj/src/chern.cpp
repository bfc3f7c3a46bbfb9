#include "curvword/chern.hpp"

#include "curvword/curvature.hpp"
#include "curvword/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace curvword {

namespace {

[[noreturn]] void bad_input(const std::string& why) { throw Error(ErrorKind::InvalidInput, why); }

struct Incidence {
  std::size_t triangle;
  Rank opposite;  // local index of the vertex not on the edge
};

}  // namespace

TriangulatedSBundle::TriangulatedSBundle(std::vector<std::string> vertices, std::vector<SurfaceTriangle> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!seen.emplace(vertices_[i], i).second) bad_input("vertex id '" + vertices_[i] + "' listed twice");
  }
  std::unordered_map<std::string, std::size_t> ids;
  for (const SurfaceTriangle& t : triangles_) {
    if (!ids.emplace(t.id, 0).second) bad_input("triangle id '" + t.id + "' used twice");
    std::array<std::size_t, 3> pos{};
    for (std::size_t k = 0; k < 3; ++k) {
      auto it = seen.find(t.vertices[k]);
      if (it == seen.end()) bad_input("triangle '" + t.id + "' uses unknown vertex '" + t.vertices[k] + "'");
      pos[k] = it->second;
    }
    if (!(pos[0] < pos[1] && pos[1] < pos[2])) {
      bad_input("triangle '" + t.id + "' must list distinct vertices in increasing global order");
    }
    if (t.sign != 1 && t.sign != -1) bad_input("triangle '" + t.id + "' has sign other than +1 or -1");
    if (t.word.alphabet_size() != 3) bad_input("triangle '" + t.id + "' needs a word over 3 characters");
    try {
      validate_n_word(t.word.rep());
    } catch (const Error& e) {
      bad_input("triangle '" + t.id + "': " + e.what());
    }
    if (t.total) {
      CyclicWord from_total;
      try {
        from_total = gauss_word(*t.total);
      } catch (const Error& e) {
        bad_input("triangle '" + t.id + "': " + e.what());
      }
      if (!(from_total == t.word)) bad_input("triangle '" + t.id + "': word disagrees with its total bundle");
    }
  }
}

std::size_t TriangulatedSBundle::position(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == id) return i;
  }
  bad_input("unknown vertex '" + id + "'");
}

SurfaceTriangle triangle_from_total(std::string id, std::array<std::string, 3> vertices, int sign,
                                    ElementaryBundle total) {
  CyclicWord word = gauss_word(total);
  return {std::move(id), std::move(vertices), sign, std::move(word), std::move(total)};
}

CyclicWord gauss_word(const ElementaryBundle& total) {
  if (total.base_dim() != 2) throw Error(ErrorKind::InvalidBundle, "the bundle over a triangle has base dimension 2");
  if (total.fiber_kind() != FiberKind::Circle) throw Error(ErrorKind::InvalidBundle, "Gauss words need circle bundles");
  return word_from_s_bundle(total);
}

std::string CycleReport::summary() const {
  std::ostringstream os;
  for (const auto& issue : boundary) {
    os << "boundary [" << issue.edge[0] << "," << issue.edge[1] << "]: " << issue.reason << "\n";
  }
  for (const auto& issue : compatibility) {
    os << "edge [" << issue.edge[0] << "," << issue.edge[1] << "]: " << issue.reason << "\n";
  }
  return os.str();
}

CycleReport validate_cycle(const TriangulatedSBundle& tb) {
  // Edges keyed by vertex positions so that reports come out in global order.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Incidence>> edges;
  std::map<std::pair<std::size_t, std::size_t>, long> coefficient;
  const auto& tris = tb.triangles();
  for (std::size_t t = 0; t < tris.size(); ++t) {
    for (Rank k = 0; k < 3; ++k) {
      const auto& v = tris[t].vertices;
      const std::string& a = v[k == 0 ? 1 : 0];
      const std::string& b = v[k == 2 ? 1 : 2];
      const auto key = std::make_pair(tb.position(a), tb.position(b));
      edges[key].push_back({t, k});
      coefficient[key] += (k % 2 == 0 ? 1 : -1) * tris[t].sign;
    }
  }

  CycleReport report;
  for (const auto& [key, incident] : edges) {
    const std::array<std::string, 2> edge{tb.vertices()[key.first], tb.vertices()[key.second]};
    if (const long c = coefficient[key]; c != 0) {
      report.boundary.push_back({edge, "coefficient " + std::to_string(c) + " in the boundary of the cycle"});
    }
    const Alphabet alphabet = Alphabet::standard(2);
    const CyclicWord first = canonicalize(delta(tris[incident[0].triangle].word.rep(), incident[0].opposite));
    bool words_agree = true;
    for (const auto& inc : incident) {
      if (!(canonicalize(delta(tris[inc.triangle].word.rep(), inc.opposite)) == first)) words_agree = false;
    }
    if (!words_agree) {
      std::string why = "induced words differ:";
      for (const auto& inc : incident) {
        why += " " + tris[inc.triangle].id + "->" +
               alphabet.render(canonicalize(delta(tris[inc.triangle].word.rep(), inc.opposite)).rep());
      }
      report.compatibility.push_back({edge, why});
      continue;
    }
    const bool all_totals = std::all_of(incident.begin(), incident.end(),
                                        [&](const Incidence& inc) { return tris[inc.triangle].total.has_value(); });
    if (!all_totals) continue;
    const ElementaryBundle reference = restrict(*tris[incident[0].triangle].total, incident[0].opposite);
    for (const auto& inc : incident) {
      if (!(restrict(*tris[inc.triangle].total, inc.opposite) == reference)) {
        report.compatibility.push_back(
            {edge, "total complexes of " + tris[incident[0].triangle].id + " and " + tris[inc.triangle].id +
                       " restrict to different bundles"});
        break;
      }
    }
  }
  return report;
}

Rational total_curvature(const TriangulatedSBundle& tb) {
  Rational sum;
  for (const SurfaceTriangle& t : tb.triangles()) {
    const Rational c = curv_cyclic(t.word);
    if (t.sign > 0) {
      sum += c;
    } else {
      sum -= c;
    }
  }
  return sum;
}

Rational chern_number(const TriangulatedSBundle& tb) {
  const CycleReport report = validate_cycle(tb);
  if (!report.ok()) throw Error(ErrorKind::InvalidInput, "not a closed triangulated bundle:\n" + report.summary());
  Rational sum = total_curvature(tb);
  if (!sum.is_integer()) {
    throw Error(ErrorKind::ValidationGap, "curvature sums to the non-integer " + sum.to_string());
  }
  return sum;
}

}  // namespace curvword
