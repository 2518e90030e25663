#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "harmon/error.hpp"

namespace harmon {

// RFC-4180 rows: comma-separated cells, optional double-quoting with ""
// escapes, quoted cells may contain commas and newlines, CRLF and LF both
// accepted as row separators, trailing newline optional. Cells come back
// verbatim. Row numbers in errors are 1-based and physical.
std::vector<std::vector<std::string>> parse_csv_rows(std::string_view text);

}  // namespace harmon
