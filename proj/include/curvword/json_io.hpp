#pragma once

// JSON forms of the library's values.
//
//   word:     {"alphabet": "cat", "word": "cattactact"}
//   rational: the string "p/q", or "p" for integers
//   bundle:   {"base_dim": n, "fiber": "interval"|"circle", "fiber_sizes": [...],
//              "cells": [[[base, level], ...], ...]}
//   surface:  {"vertices": [...], "triangles": [{"id", "v", "sign", "word" | "total"}]}
//
// Cells may be listed in any order when their sections chain unambiguously;
// otherwise the listed order is taken as the fiber order.  The doubled vertex
// of a cell is read in fiber order (lower level first) when its fiber has two
// points.

#include "curvword/bundle.hpp"
#include "curvword/chern.hpp"
#include "curvword/explorer.hpp"
#include "curvword/rational.hpp"
#include "curvword/word.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace curvword::json_io {

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

Json to_json(const Word& w, const Alphabet& alphabet);
/// Throws InvalidInput on missing fields, UnknownCharacter on foreign letters.
std::pair<Word, Alphabet> word_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const ElementaryBundle& b);
/// Throws InvalidInput on malformed documents and InvalidBundle on invalid bundles.
ElementaryBundle bundle_from_json(const Json& j);

Json to_json(const TriangulatedSBundle& tb);
TriangulatedSBundle sbundle_from_json(const Json& j);

Json to_json(const CycleReport& report);

/// Example words are rendered over the alphabet "abc".
Json to_json(const SurveyReport& report);
/// Fixed-width table, one block per length.
std::string survey_table(const SurveyReport& report);

/// Throws IoError when the file cannot be read and InvalidInput when it does not parse.
Json read_file(const std::string& path);
/// Throws IoError when the file cannot be written.
void write_file(const std::string& path, const std::string& contents);

}  // namespace curvword::json_io
