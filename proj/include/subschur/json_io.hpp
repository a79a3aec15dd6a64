#pragma once

// JSON file formats used by the command-line tool.
//
// A matrix is a list of rows; each entry is a [re, im] pair, or a bare number
// as shorthand for [x, 0]. A sequence file is
//
//   { "q": 2, "blocks": [M0, M1, ...], "alpha": 0.5 }
//
// with "alpha" optional. Reports are written with a fixed key order and every
// float printed with 17 significant digits, so a report parses back to the
// identical doubles and identical inputs give byte-identical output.

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "subschur/sequence.hpp"

namespace subschur::io {

using Json = nlohmann::ordered_json;

struct SequenceFile {
  MomentSequence sequence;
  std::optional<double> alpha;
};

/// Parse a matrix. `rows` is used when the JSON has no rows to infer it from
/// (an empty list denotes a rows x 0 matrix).
Matrix parse_matrix(const Json& j, std::optional<Index> rows = std::nullopt);
Json matrix_to_json(const Matrix& m);

SequenceFile parse_sequence_file(const Json& j);
Json sequence_to_json(const MomentSequence& s);

/// Read and parse a JSON document from `path`; "-" reads from `stdin_stream`.
Json read_json(const std::string& path, std::istream& stdin_stream);

/// Deterministic serialization (2-space indent, numeric arrays inline, %.17g).
std::string dump(const Json& j);

}  // namespace subschur::io
