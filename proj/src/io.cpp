#include "symplectica/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace symplectica {

std::string format_significant(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%#.*g", digits, x);
  return buf;
}

std::string format_exact(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string serialize_matrix(const SquareMatrix& m, MatrixFormat format) {
  const int n = m.dim();
  if (format == MatrixFormat::Json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int k = 0; k < n; ++k) row.push_back(m(i, k));
      rows.push_back(std::move(row));
    }
    j["data"] = std::move(rows);
    return j.dump() + "\n";
  }
  std::string out = std::to_string(n) + "\n";
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (k) out += ' ';
      out += format_exact(m(i, k));
    }
    out += '\n';
  }
  return out;
}

namespace {

SquareMatrix parse_json_matrix(const std::string& payload) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(payload);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("invalid json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw Error(ErrorKind::BadInput, "json matrix needs an integer field 'n'");
  if (!j.contains("data") || !j["data"].is_array())
    throw Error(ErrorKind::BadInput, "json matrix needs an array field 'data'");
  const int n = j["n"].get<int>();
  if (n < 1) throw Error(ErrorKind::BadInput, "dimension must be >= 1");
  if (static_cast<int>(j["data"].size()) != n)
    throw Error(ErrorKind::BadInput, "'data' must hold n rows");
  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : j["data"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::BadInput, "each row must hold n numbers");
    for (const auto& v : row) {
      if (!v.is_number()) throw Error(ErrorKind::BadInput, "matrix entries must be numbers");
      entries.push_back(v.get<double>());
    }
  }
  SquareMatrix m(n, std::move(entries));
  m.require_finite();
  return m;
}

SquareMatrix parse_text_matrix(const std::string& payload) {
  std::istringstream in(payload);
  int n = 0;
  if (!(in >> n) || n < 1)
    throw Error(ErrorKind::BadInput, "text matrix must start with a positive dimension");
  std::vector<double> entries(static_cast<size_t>(n) * n);
  for (auto& v : entries)
    if (!(in >> v)) throw Error(ErrorKind::BadInput, "expected n*n numeric entries");
  double extra;
  if (in >> extra) throw Error(ErrorKind::BadInput, "trailing data after n*n entries");
  SquareMatrix m(n, std::move(entries));
  m.require_finite();
  return m;
}

}  // namespace

SquareMatrix parse_matrix(const std::string& payload, MatrixFormat format) {
  return format == MatrixFormat::Json ? parse_json_matrix(payload) : parse_text_matrix(payload);
}

SquareMatrix parse_matrix_auto(const std::string& payload) {
  const size_t first = payload.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && payload[first] == '{')
    return parse_json_matrix(payload);
  return parse_text_matrix(payload);
}

SquareMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix_auto(buf.str());
}

void write_matrix_file(const std::string& path, const SquareMatrix& m, MatrixFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::BadInput, "cannot write '" + path + "'");
  out << serialize_matrix(m, format);
}

}  // namespace symplectica
