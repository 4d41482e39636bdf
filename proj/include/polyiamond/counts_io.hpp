#pragma once

// Counts files: CSV with a header line and rows "n,value", n = 1, 2, ...
// Values are decimal integers of any length.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "polyiamond/bigint.hpp"
#include "polyiamond/enumerate.hpp"
#include "polyiamond/errors.hpp"

namespace polyiamond {

inline void write_counts_csv(std::ostream& out, const CountTable& table, const std::string& column = "count") {
  out << "n," << column << '\n';
  for (int n = 1; n <= table.n_max(); ++n) out << n << ',' << table.values[n].get_str() << '\n';
}

inline CountTable read_counts_csv(std::istream& in, Representation rep) {
  CountTable table{rep, {BigInt(0)}, Provenance::File};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InputError("counts file line " + std::to_string(line_no) + ": expected n,value");
    std::string first = line.substr(0, comma), second = line.substr(comma + 1);
    auto trim = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
    };
    trim(first);
    trim(second);
    if (first == "n" && table.values.size() == 1) continue;  // header
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(first, &used);
      if (used != first.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("counts file line " + std::to_string(line_no) + ": bad index '" + first + "'");
    }
    if (n != table.n_max() + 1)
      throw InputError("counts file line " + std::to_string(line_no) + ": indices must run 1, 2, 3, ...");
    BigInt value;
    if (second.empty() || second.find_first_not_of("0123456789") != std::string::npos || value.set_str(second, 10) != 0)
      throw InputError("counts file line " + std::to_string(line_no) + ": bad value '" + second + "'");
    table.values.push_back(value);
  }
  if (table.n_max() < 1) throw InputError("counts file holds no rows");
  return table;
}

inline CountTable load_counts_csv(const std::string& path, Representation rep) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open counts file '" + path + "'");
  return read_counts_csv(in, rep);
}

}  // namespace polyiamond
