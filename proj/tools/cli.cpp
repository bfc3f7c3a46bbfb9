#include "cli.hpp"

#include "curvword/bundle.hpp"
#include "curvword/chern.hpp"
#include "curvword/curvature.hpp"
#include "curvword/error.hpp"
#include "curvword/explorer.hpp"
#include "curvword/json_io.hpp"
#include "curvword/word.hpp"

#include <CLI11.hpp>

#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace curvword::cli {

namespace {

using json_io::Json;

struct Options {
  bool json = false;
  std::string output;
  std::string alphabet;
  std::string word;
  std::string file;
  int index = 0;
  std::size_t times = 1;
  std::size_t min_length = 3;
  std::size_t max_length = 8;
  unsigned threads = 0;
};

class Session {
 public:
  Session(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

  std::pair<Word, Alphabet> word() const {
    std::string text = opt_.word;
    if (text.empty() || text == "-") {
      std::getline(in_, text);
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
      if (text.empty()) throw Error(ErrorKind::InvalidInput, "no word given on the command line or standard input");
    }
    Alphabet alphabet = opt_.alphabet.empty() ? Alphabet::of_text(text) : Alphabet(opt_.alphabet);
    Word w = alphabet.parse(text);
    return {std::move(w), std::move(alphabet)};
  }

  /// Writes `text` (plus a newline) to --output when given, else to stdout.
  void emit(const std::string& text) const {
    if (opt_.output.empty()) {
      out_ << text << "\n";
    } else {
      json_io::write_file(opt_.output, text + "\n");
    }
  }

  void emit(const std::string& plain, const Json& structured) const {
    emit(opt_.json ? structured.dump(2) : plain);
  }

 private:
  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
};

void print_error(std::ostream& err, bool json, std::string_view kind, const std::string& message) {
  if (json) {
    err << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
  } else {
    err << "error: " << kind << ": " << message << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Curvature of cyclic words and Chern numbers of triangulated circle bundles", "curvword"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Print machine-readable JSON");
  app.add_option("-o,--output", opt.output, "Write the result to this file");

  auto add_word = [&](CLI::App* sub) {
    sub->add_option("word", opt.word, "Word, or '-' to read it from standard input");
    sub->add_option("-a,--alphabet", opt.alphabet, "Ordered alphabet, first character = rank 0 (default: sorted letters)");
  };

  const Session session(opt, in, out);
  std::function<void()> action;

  auto* ind_cmd = app.add_subcommand("ind", "Index of a 2-character word");
  add_word(ind_cmd);
  ind_cmd->callback([&] {
    action = [&] {
      auto [w, alphabet] = session.word();
      const Rational v = ind(w);
      session.emit(v.to_string(), {{"alphabet", alphabet.symbols()}, {"word", alphabet.render(w)}, {"ind", v.to_string()}});
    };
  });

  auto* curv_cmd = app.add_subcommand("curv", "Curvature of a 3-character word");
  add_word(curv_cmd);
  curv_cmd->callback([&] {
    action = [&] {
      auto [w, alphabet] = session.word();
      const Rational v = curv(w);
      session.emit(v.to_string(), {{"alphabet", alphabet.symbols()}, {"word", alphabet.render(w)}, {"curv", v.to_string()}});
    };
  });

  auto* delta_cmd = app.add_subcommand("delta", "Delete every occurrence of one character");
  add_word(delta_cmd);
  delta_cmd->add_option("index", opt.index, "Rank of the character to delete")->required();
  delta_cmd->callback([&] {
    action = [&] {
      auto [w, alphabet] = session.word();
      if (opt.index < 0 || static_cast<std::size_t>(opt.index) >= alphabet.size()) {
        throw Error(ErrorKind::InvalidInput, "index outside the alphabet");
      }
      const Rank i = static_cast<Rank>(opt.index);
      const Word d = delta(w, i);
      const Alphabet rest = alphabet.without(i);
      session.emit(rest.render(d), json_io::to_json(d, rest));
    };
  });

  auto* w2b_cmd = app.add_subcommand("word-to-bundle", "Interval bundle of a word");
  add_word(w2b_cmd);
  w2b_cmd->callback([&] {
    action = [&] { session.emit(json_io::to_json(bundle_from_word(session.word().first)).dump(1)); };
  });

  auto* b2w_cmd = app.add_subcommand("bundle-to-word", "Shelling word of an interval bundle, cyclic word of a circle bundle");
  b2w_cmd->add_option("file", opt.file, "Bundle JSON file")->required();
  b2w_cmd->add_option("-a,--alphabet", opt.alphabet, "Alphabet for printing (default: a, b, c, ...)");
  b2w_cmd->callback([&] {
    action = [&] {
      const ElementaryBundle b = json_io::bundle_from_json(json_io::read_file(opt.file));
      const Alphabet alphabet = opt.alphabet.empty() ? Alphabet::standard(b.base_dim() + 1) : Alphabet(opt.alphabet);
      const Word w = b.fiber_kind() == FiberKind::Interval ? word_from_bundle(b) : word_from_s_bundle(b).rep();
      Json j = json_io::to_json(w, alphabet);
      j["cyclic"] = b.fiber_kind() == FiberKind::Circle;
      session.emit(alphabet.render(w), j);
    };
  });

  auto* glue_cmd = app.add_subcommand("glue", "Glue the ends of an interval bundle into a circle bundle");
  glue_cmd->add_option("file", opt.file, "Interval bundle JSON file")->required();
  glue_cmd->callback([&] {
    action = [&] {
      const ElementaryBundle b = glue(json_io::bundle_from_json(json_io::read_file(opt.file)));
      if (b.has_small_fibers()) err << "warning: a fiber has fewer than 3 points; the result is a cell complex\n";
      session.emit(json_io::to_json(b).dump(1));
    };
  });

  auto* shift_cmd = app.add_subcommand("shift", "Cyclic shift of a word, or of an interval bundle with --bundle");
  add_word(shift_cmd);
  shift_cmd->add_option("-n,--times", opt.times, "Number of shifts");
  shift_cmd->add_option("--bundle", opt.file, "Shift the interval bundle in this JSON file instead");
  shift_cmd->callback([&] {
    action = [&] {
      if (!opt.file.empty()) {
        ElementaryBundle b = json_io::bundle_from_json(json_io::read_file(opt.file));
        for (std::size_t k = 0; k < opt.times; ++k) b = cyclic_shift_bundle(b);
        session.emit(json_io::to_json(b).dump(1));
        return;
      }
      auto [w, alphabet] = session.word();
      const Word s = cyclic_shift(w, opt.times);
      session.emit(alphabet.render(s), json_io::to_json(s, alphabet));
    };
  });

  auto* chern_cmd = app.add_subcommand("chern", "Chern number of a triangulated circle bundle over a surface");
  chern_cmd->add_option("file", opt.file, "Surface bundle JSON file")->required();
  chern_cmd->callback([&] {
    action = [&] {
      const TriangulatedSBundle tb = json_io::sbundle_from_json(json_io::read_file(opt.file));
      const Rational c = chern_number(tb);
      Json triangles = Json::array();
      for (const auto& t : tb.triangles()) {
        triangles.push_back({{"id", t.id},
                             {"sign", t.sign},
                             {"word", Alphabet::standard(3).render(t.word.rep())},
                             {"curv", curv_cyclic(t.word).to_string()}});
      }
      session.emit(c.to_string(), {{"chern", c.to_string()}, {"triangles", std::move(triangles)}});
    };
  });

  auto* survey_cmd = app.add_subcommand("survey", "Curvature values over all rotation classes of 3-character words");
  survey_cmd->add_option("--min", opt.min_length, "Shortest length (>= 3)");
  survey_cmd->add_option("--max", opt.max_length, "Longest length");
  survey_cmd->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  survey_cmd->callback([&] {
    action = [&] {
      const SurveyReport report = survey(opt.min_length, opt.max_length, opt.threads);
      const std::string doc = json_io::to_json(report).dump(1);
      if (!opt.output.empty()) json_io::write_file(opt.output, doc + "\n");
      out << (opt.json && opt.output.empty() ? doc + "\n" : json_io::survey_table(report));
    };
  });

  auto* scan_cmd = app.add_subcommand("palindrome-scan", "Zero-curvature classes that are not cyclic palindromes");
  scan_cmd->add_option("--max", opt.max_length, "Longest length");
  scan_cmd->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  scan_cmd->callback([&] {
    action = [&] {
      const auto found = find_zero_nonpalindromes(opt.max_length, opt.threads);
      const Alphabet abc = Alphabet::standard(3);
      Json list = Json::array();
      std::ostringstream plain;
      plain << found.size() << " zero-curvature non-palindromic classes up to length " << opt.max_length;
      for (const auto& cw : found) {
        list.push_back(abc.render(cw.rep()));
        plain << "\n" << abc.render(cw.rep());
      }
      session.emit(plain.str(), {{"max_length", opt.max_length}, {"count", found.size()}, {"words", std::move(list)}});
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    print_error(err, opt.json, "Usage", e.what());
    return 1;
  }

  try {
    if (action) action();
    return 0;
  } catch (const Error& e) {
    print_error(err, opt.json, to_string(e.kind()), e.what());
    return 1;
  } catch (const json_io::IoError& e) {
    print_error(err, opt.json, "IoError", e.what());
    return 2;
  }
}

}  // namespace curvword::cli
