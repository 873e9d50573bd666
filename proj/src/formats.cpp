#include "tmt/formats.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace tmt {

std::string to_bfile(const std::vector<BfileEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += std::to_string(e.index);
    out += ' ';
    out += e.value;
    out += '\n';
  }
  return out;
}

std::vector<BfileEntry> parse_bfile(std::istream& in) {
  std::vector<BfileEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    BfileEntry e;
    std::string extra;
    if (!(fields >> e.index >> e.value) || (fields >> extra))
      throw std::invalid_argument("b-file line " + std::to_string(lineno) +
                                  ": expected \"index value\"");
    entries.push_back(std::move(e));
  }
  return entries;
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  };
  append_row(header);
  for (const auto& row : rows) {
    if (row.size() != header.size())
      throw std::invalid_argument("csv row width does not match header");
    append_row(row);
  }
  return out;
}

}  // namespace tmt
