#include "curvword/json_io.hpp"

#include "curvword/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace curvword::json_io {

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorKind::InvalidInput, why); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) malformed(std::string("expected an object with field '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) malformed(std::string("missing field '") + name + "'");
  return *it;
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) malformed(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::string as_id(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  malformed("ids must be strings or integers");
}

// Ids that read back as the same integer are written as JSON numbers.
Json id_to_json(const std::string& id) {
  long long value = 0;
  const auto [end, ec] = std::from_chars(id.data(), id.data() + id.size(), value);
  if (ec == std::errc() && end == id.data() + id.size() && std::to_string(value) == id) return value;
  return id;
}

Cell cell_from_json(const Json& jc, std::size_t n, FiberKind kind, const std::vector<std::size_t>& sizes) {
  if (!jc.is_array() || jc.size() != n + 2) malformed("every cell needs " + std::to_string(n + 2) + " vertices");
  std::vector<std::vector<std::size_t>> levels(n + 1);
  for (const Json& jv : jc) {
    if (!jv.is_array() || jv.size() != 2) malformed("vertices are [base_vertex, level] pairs");
    const std::size_t base = as_size(jv[0], "base vertex");
    if (base > n) malformed("base vertex " + std::to_string(base) + " outside the base simplex");
    levels[base].push_back(as_size(jv[1], "level"));
  }
  Cell cell;
  cell.levels.resize(n + 1);
  bool found_doubled = false;
  for (std::size_t v = 0; v <= n; ++v) {
    if (levels[v].size() == 1) {
      cell.levels[v] = levels[v][0];
      continue;
    }
    if (levels[v].size() != 2 || found_doubled) malformed("a cell needs exactly one doubled base vertex");
    found_doubled = true;
    cell.doubled = static_cast<Rank>(v);
    const std::size_t x = levels[v][0];
    const std::size_t y = levels[v][1];
    const std::size_t m = sizes[v];
    if (kind == FiberKind::Interval) {
      if (std::max(x, y) != std::min(x, y) + 1) malformed("doubled vertex levels must be consecutive");
      cell.levels[v] = std::min(x, y);
    } else if (m >= 3 && (y + 1) % m == x) {
      cell.levels[v] = y;
    } else {
      // Lower level listed first; for fibers of size 1 and 2 this is the only reading.
      if (m == 0 || (x + 1) % m != y) malformed("doubled vertex levels must be consecutive around the fiber");
      cell.levels[v] = x;
    }
  }
  return cell;
}

Json value_stats_to_json(const std::vector<ValueStat>& stats, const Alphabet& alphabet) {
  Json out = Json::array();
  for (const auto& s : stats) {
    out.push_back({{"value", s.value.to_string()}, {"count", s.count}, {"example", alphabet.render(s.example)}});
  }
  return out;
}

Json words_to_json(const std::vector<Word>& words, const Alphabet& alphabet) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(alphabet.render(w));
  return out;
}

}  // namespace

Json to_json(const Word& w, const Alphabet& alphabet) {
  return {{"alphabet", alphabet.symbols()}, {"word", alphabet.render(w)}};
}

std::pair<Word, Alphabet> word_from_json(const Json& j) {
  const Json& ja = field(j, "alphabet");
  const Json& jw = field(j, "word");
  if (!ja.is_string() || !jw.is_string()) malformed("'alphabet' and 'word' must be strings");
  Alphabet alphabet(ja.get<std::string>());
  Word w = alphabet.parse(jw.get<std::string>());
  return {std::move(w), std::move(alphabet)};
}

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) malformed("rationals are encoded as strings");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const ElementaryBundle& b) {
  Json cells = Json::array();
  for (const Cell& c : b.cells()) {
    Json jc = Json::array();
    for (const LabeledVertex& v : b.vertices(c)) jc.push_back({v.base_vertex, v.level});
    cells.push_back(std::move(jc));
  }
  return {{"base_dim", b.base_dim()},
          {"fiber", b.fiber_kind() == FiberKind::Interval ? "interval" : "circle"},
          {"fiber_sizes", b.fiber_sizes()},
          {"cells", std::move(cells)}};
}

ElementaryBundle bundle_from_json(const Json& j) {
  const std::size_t n = as_size(field(j, "base_dim"), "base_dim");
  if (n > 255) malformed("base_dim too large");
  const Json& jf = field(j, "fiber");
  FiberKind kind;
  if (jf == "interval") {
    kind = FiberKind::Interval;
  } else if (jf == "circle") {
    kind = FiberKind::Circle;
  } else {
    malformed("fiber must be \"interval\" or \"circle\"");
  }
  const Json& js = field(j, "fiber_sizes");
  if (!js.is_array() || js.size() != n + 1) malformed("fiber_sizes needs base_dim + 1 entries");
  std::vector<std::size_t> sizes;
  for (const Json& m : js) sizes.push_back(as_size(m, "fiber size"));
  const Json& jc = field(j, "cells");
  if (!jc.is_array()) malformed("cells must be an array");
  std::vector<Cell> cells;
  for (const Json& c : jc) cells.push_back(cell_from_json(c, n, kind, sizes));
  if (auto ordered = order_cells(kind, sizes, cells)) cells = std::move(*ordered);
  ElementaryBundle b(n, kind, std::move(sizes), std::move(cells));
  validate_bundle(b);
  return b;
}

Json to_json(const TriangulatedSBundle& tb) {
  Json vertices = Json::array();
  for (const auto& v : tb.vertices()) vertices.push_back(id_to_json(v));
  Json triangles = Json::array();
  const Alphabet abc = Alphabet::standard(3);
  for (const SurfaceTriangle& t : tb.triangles()) {
    Json jt = {{"id", id_to_json(t.id)},
               {"v", {id_to_json(t.vertices[0]), id_to_json(t.vertices[1]), id_to_json(t.vertices[2])}},
               {"sign", t.sign},
               {"word", to_json(t.word.rep(), abc)}};
    if (t.total) jt["total"] = to_json(*t.total);
    triangles.push_back(std::move(jt));
  }
  return {{"vertices", std::move(vertices)}, {"triangles", std::move(triangles)}};
}

TriangulatedSBundle sbundle_from_json(const Json& j) {
  const Json& jv = field(j, "vertices");
  if (!jv.is_array()) malformed("vertices must be an array");
  std::vector<std::string> vertices;
  for (const Json& v : jv) vertices.push_back(as_id(v));
  const Json& jt = field(j, "triangles");
  if (!jt.is_array()) malformed("triangles must be an array");
  std::vector<SurfaceTriangle> triangles;
  for (const Json& t : jt) {
    SurfaceTriangle tri;
    tri.id = as_id(field(t, "id"));
    const Json& tv = field(t, "v");
    if (!tv.is_array() || tv.size() != 3) malformed("triangle '" + tri.id + "' needs three vertices");
    for (std::size_t k = 0; k < 3; ++k) tri.vertices[k] = as_id(tv[k]);
    const Json& ts = field(t, "sign");
    if (!ts.is_number_integer()) malformed("triangle '" + tri.id + "' sign must be +1 or -1");
    tri.sign = ts.get<int>();
    const bool has_word = t.contains("word");
    if (t.contains("total")) {
      try {
        tri.total = bundle_from_json(t["total"]);
        tri.word = gauss_word(*tri.total);
      } catch (const Error& e) {
        throw Error(e.kind(), "triangle '" + tri.id + "': " + e.what());
      }
    } else if (!has_word) {
      malformed("triangle '" + tri.id + "' needs a 'word' or a 'total' bundle");
    }
    if (has_word) {
      auto [w, alphabet] = word_from_json(t["word"]);
      if (alphabet.size() != 3) malformed("triangle '" + tri.id + "' needs a 3-character alphabet");
      const CyclicWord cw = canonicalize(w);
      if (tri.total && !(cw == tri.word)) malformed("triangle '" + tri.id + "': word disagrees with its total bundle");
      tri.word = cw;
    }
    triangles.push_back(std::move(tri));
  }
  return TriangulatedSBundle(std::move(vertices), std::move(triangles));
}

Json to_json(const CycleReport& report) {
  auto issues = [](const std::vector<EdgeIssue>& list) {
    Json out = Json::array();
    for (const auto& i : list) out.push_back({{"edge", {id_to_json(i.edge[0]), id_to_json(i.edge[1])}}, {"reason", i.reason}});
    return out;
  };
  return {{"ok", report.ok()}, {"boundary", issues(report.boundary)}, {"compatibility", issues(report.compatibility)}};
}

Json to_json(const SurveyReport& report) {
  const Alphabet abc = Alphabet::standard(3);
  Json lengths = Json::array();
  for (const LengthSurvey& l : report.lengths) {
    lengths.push_back({{"length", l.length},
                       {"classes", l.classes},
                       {"in_range", l.in_range},
                       {"values", value_stats_to_json(l.values, abc)},
                       {"zero_curvature",
                        {{"palindromes", words_to_json(l.zero_palindromes, abc)},
                         {"non_palindromes", words_to_json(l.zero_non_palindromes, abc)}}},
                       {"nonzero_palindromes", l.nonzero_palindromes},
                       {"nonzero_non_palindromes", l.nonzero_non_palindromes},
                       {"extremal", words_to_json(l.extremal, abc)}});
  }
  return {{"alphabet", abc.symbols()},
          {"min_length", report.min_length},
          {"max_length", report.max_length},
          {"total_classes", report.total_classes()},
          {"in_range", report.in_range()},
          {"values", value_stats_to_json(report.merged_values(), abc)},
          {"lengths", std::move(lengths)}};
}

std::string survey_table(const SurveyReport& report) {
  const Alphabet abc = Alphabet::standard(3);
  std::ostringstream os;
  os << std::left << std::setw(8) << "length" << std::setw(10) << "classes" << std::setw(9) << "values"
     << std::setw(12) << "zero+pal" << std::setw(14) << "zero+nonpal" << std::setw(14) << "nonzero+pal"
     << std::setw(10) << "extremal" << "range\n";
  for (const LengthSurvey& l : report.lengths) {
    os << std::setw(8) << l.length << std::setw(10) << l.classes << std::setw(9) << l.values.size() << std::setw(12)
       << l.zero_palindromes.size() << std::setw(14) << l.zero_non_palindromes.size() << std::setw(14)
       << l.nonzero_palindromes << std::setw(10) << l.extremal.size() << (l.in_range ? "ok" : "VIOLATED") << "\n";
  }
  const auto merged = report.merged_values();
  os << "\n" << merged.size() << " distinct values over " << report.total_classes() << " classes\n";
  os << std::setw(12) << "value" << std::setw(10) << "count" << "example\n";
  for (const auto& s : merged) {
    os << std::setw(12) << s.value.to_string() << std::setw(10) << s.count << abc.render(s.example) << "\n";
  }
  return os.str();
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    malformed("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw IoError("error while writing '" + path + "'");
}

}  // namespace curvword::json_io
