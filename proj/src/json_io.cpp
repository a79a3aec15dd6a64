#include "subschur/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace subschur::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

Complex parse_entry(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  fail("matrix entry must be a number or a [re, im] pair, got " + e.dump());
}

std::string format_double(double x) {
  if (!std::isfinite(x)) fail("cannot serialize a non-finite number");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string text = buf;
  // keep a float marker so -0 and integral values parse back as doubles
  if (text.find_first_of(".eE") == std::string::npos) text += ".0";
  return text;
}

// Arrays nested at most two deep (a matrix row of [re, im] pairs) print on one line.
bool is_flat(const Json& j, int depth = 1) {
  if (depth > 2) return false;
  for (const auto& e : j) {
    if (e.is_object()) return false;
    if (e.is_array() && !is_flat(e, depth + 1)) return false;
  }
  return true;
}

void write(std::ostream& out, const Json& j, int indent);

void write_inline(std::ostream& out, const Json& j) {
  if (j.is_array()) {
    out << '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out << ", ";
      write_inline(out, j[i]);
    }
    out << ']';
  } else if (j.is_number_float()) {
    out << format_double(j.get<double>());
  } else {
    out << j.dump();
  }
}

void write(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out << pad << Json(it.key()).dump() << ": ";
      write(out, it.value(), indent + 2);
      if (i + 1 < j.size()) out << ',';
      out << '\n';
    }
    out << close << '}';
  } else if (j.is_array()) {
    if (j.empty() || is_flat(j)) {
      write_inline(out, j);
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad;
      write(out, j[i], indent + 2);
      if (i + 1 < j.size()) out << ',';
      out << '\n';
    }
    out << close << ']';
  } else {
    write_inline(out, j);
  }
}

}  // namespace

Matrix parse_matrix(const Json& j, std::optional<Index> rows) {
  if (!j.is_array()) fail("matrix must be a list of rows");
  if (j.empty()) {
    if (!rows) fail("empty matrix with unknown row count");
    return Matrix(*rows, 0);
  }
  const auto r = static_cast<Index>(j.size());
  if (rows && *rows != r) {
    throw Error(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(r) +
                                                  " rows, expected " + std::to_string(*rows));
  }
  if (!j[0].is_array()) fail("matrix rows must be lists");
  const auto c = static_cast<Index>(j[0].size());
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != c) {
      fail("matrix rows must all have " + std::to_string(c) + " entries");
    }
    for (Index k = 0; k < c; ++k) m(i, k) = parse_entry(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) {
      row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SequenceFile parse_sequence_file(const Json& j) {
  if (!j.is_object()) fail("sequence file must be a JSON object");
  if (!j.contains("q") || !j["q"].is_number_integer() || j["q"].get<long>() < 1) {
    fail("sequence file needs a positive integer field \"q\"");
  }
  const auto q = static_cast<Index>(j["q"].get<long>());
  if (!j.contains("blocks") || !j["blocks"].is_array() || j["blocks"].empty()) {
    fail("sequence file needs a nonempty list \"blocks\"");
  }
  std::vector<Matrix> blocks;
  for (const auto& b : j["blocks"]) {
    if (!b.is_array() || static_cast<Index>(b.size()) != q) {
      fail("every block must be " + std::to_string(q) + "x" + std::to_string(q));
    }
    Matrix m = parse_matrix(b, q);
    if (m.cols() != q) fail("every block must be " + std::to_string(q) + "x" + std::to_string(q));
    blocks.push_back(std::move(m));
  }
  std::optional<double> alpha;
  if (j.contains("alpha") && !j["alpha"].is_null()) {
    if (!j["alpha"].is_number()) fail("\"alpha\" must be a number");
    alpha = j["alpha"].get<double>();
  }
  return {MomentSequence(std::move(blocks)), alpha};
}

Json sequence_to_json(const MomentSequence& s) {
  Json blocks = Json::array();
  for (const auto& b : s.blocks()) blocks.push_back(matrix_to_json(b));
  Json out = Json::object();
  out["q"] = s.block_size();
  out["blocks"] = std::move(blocks);
  return out;
}

Json read_json(const std::string& path, std::istream& stdin_stream) {
  try {
    if (path == "-") return Json::parse(stdin_stream);
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

std::string dump(const Json& j) {
  std::ostringstream out;
  write(out, j, 0);
  out << '\n';
  return out.str();
}

}  // namespace subschur::io
