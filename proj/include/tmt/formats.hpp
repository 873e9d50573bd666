#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tmt {

// One line of a b-file: "index value".
struct BfileEntry {
  std::uint64_t index;
  std::string value;
};

// Single space separator, newline-terminated lines, indices as given.
std::string to_bfile(const std::vector<BfileEntry>& entries);

// Inverse of to_bfile. Blank lines and lines starting with '#' are skipped;
// anything else must be exactly two whitespace-separated fields.
std::vector<BfileEntry> parse_bfile(std::istream& in);

// Comma-separated rows under a header line. Fields are emitted verbatim;
// callers only pass decimal numbers and bare identifiers.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

}  // namespace tmt
