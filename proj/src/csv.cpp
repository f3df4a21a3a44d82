#include "ghz/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ghz {

namespace {

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

std::string format_csv_body(const SweepResult& result) {
  std::string out;
  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    if (i) out += ',';
    out += result.columns[i];
  }
  out += '\n';
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_value(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_csv(const SweepResult& result) {
  std::string out;
  for (const auto& line : result.metadata) out += "# " + line + '\n';
  return out + format_csv_body(result);
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) {
    throw std::runtime_error("cannot open " + path.string() + " for writing: " +
                             std::strerror(errno));
  }
  os << format_csv(result);
  os.flush();
  if (!os) throw std::runtime_error("write failed for " + path.string());
}

SweepResult parse_csv(const std::string& text) {
  SweepResult result;
  std::istringstream is(text);
  bool have_header = false;
  std::size_t line_no = 0;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string meta = line.substr(1);
      if (!meta.empty() && meta.front() == ' ') meta.erase(0, 1);
      result.metadata.push_back(std::move(meta));
      continue;
    }
    if (!have_header) {
      result.columns = split(line, ',');
      have_header = true;
      continue;
    }
    std::vector<double> row;
    for (const auto& field : split(line, ',')) {
      char* end = nullptr;
      const double v = std::strtod(field.c_str(), &end);
      if (field.empty() || end != field.c_str() + field.size()) {
        throw std::runtime_error("csv line " + std::to_string(line_no) + ": bad number '" +
                                 field + "'");
      }
      row.push_back(v);
    }
    if (row.size() != result.columns.size()) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected " +
                               std::to_string(result.columns.size()) + " fields");
    }
    result.rows.push_back(std::move(row));
  }
  if (!have_header) throw std::runtime_error("csv has no header row");
  return result;
}

SweepResult read_csv(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path.string() + " for reading");
  std::ostringstream buf;
  buf << is.rdbuf();
  try {
    return parse_csv(buf.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace ghz
