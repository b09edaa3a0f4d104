#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "solarsim/errors.hpp"

namespace solarsim::csv {

/// Parsed CSV table: header names plus numeric rows. Lines starting with '#'
/// and blank lines are skipped.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  int column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    throw FormatError("csv: missing column '" + name + "'");
  }
};

inline Table read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("csv: cannot open " + path);
  Table t;
  std::string line;
  bool have_header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!have_header) {
      t.header = cells;
      have_header = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) {
      try {
        std::size_t pos = 0;
        row.push_back(std::stod(c, &pos));
      } catch (const std::exception&) {
        throw FormatError("csv: bad number '" + c + "' at " + path + ":" +
                          std::to_string(lineno));
      }
    }
    if (row.size() != t.header.size())
      throw FormatError("csv: wrong field count at " + path + ":" +
                        std::to_string(lineno));
    t.rows.push_back(std::move(row));
  }
  if (!have_header) throw FormatError("csv: empty file " + path);
  return t;
}

class Writer {
 public:
  Writer(const std::string& path, const std::vector<std::string>& header)
      : out_(path) {
    if (!out_) throw FormatError("csv: cannot write " + path);
    out_.precision(17);
    for (std::size_t i = 0; i < header.size(); ++i)
      out_ << header[i] << (i + 1 < header.size() ? "," : "\n");
  }

  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
      out_ << values[i] << (i + 1 < values.size() ? "," : "\n");
  }

 private:
  std::ofstream out_;
};

}  // namespace solarsim::csv
