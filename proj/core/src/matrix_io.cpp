#include "sdiep/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "sdiep/constructor.hpp"
#include "sdiep/error.hpp"

namespace sdiep {

DenseMatrix clamp_entry_dust(DenseMatrix m) {
  for (double& v : m.entries())
    if (v < 0.0 && v >= -kEntryTolerance) v = 0.0;
  return m;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string matrix_to_json(const DenseMatrix& m, const std::vector<JsonMember>& extra) {
  std::string out = "{\"n\": " + std::to_string(m.size()) + ", \"entries\": [";
  const auto e = m.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ", ";
    out += format_double(e[i]);
  }
  out += "]";
  for (const auto& [key, value] : extra) {
    out += ", " + nlohmann::json(key).dump() + ": " + value;
  }
  out += "}\n";
  return out;
}

std::string matrix_to_csv(const DenseMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

DenseMatrix matrix_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid matrix JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
    throw ParseError("matrix JSON needs members \"n\" and \"entries\"");
  }
  const auto& jn = doc["n"];
  const auto& je = doc["entries"];
  if (!jn.is_number_unsigned() || !je.is_array()) throw ParseError("matrix JSON has wrong member types");
  const auto n = jn.get<std::size_t>();
  if (je.size() != n * n) throw ParseError("matrix JSON: entries has " + std::to_string(je.size()) +
                                            " values, expected " + std::to_string(n * n));
  std::vector<double> entries;
  entries.reserve(je.size());
  for (const auto& v : je) {
    if (!v.is_number()) throw ParseError("matrix JSON: non-numeric entry");
    entries.push_back(v.get<double>());
  }
  return DenseMatrix(n, std::move(entries));
}

DenseMatrix matrix_from_csv(std::string_view text) {
  std::vector<double> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t count = 0;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      std::string_view tok = rest.substr(0, comma);
      while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
      while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("matrix CSV: bad value on row " + std::to_string(rows + 1));
      }
      entries.push_back(v);
      ++count;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (rows == 0) cols = count;
    else if (count != cols) throw ParseError("matrix CSV: ragged rows");
    ++rows;
  }
  if (rows == 0) throw ParseError("matrix CSV is empty");
  if (rows != cols) throw ParseError("matrix CSV is not square");
  return DenseMatrix(rows, std::move(entries));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

DenseMatrix read_matrix_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return matrix_from_json(text);
  return matrix_from_csv(text);
}

} // namespace sdiep
