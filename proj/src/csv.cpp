#include "harmon/csv.hpp"

namespace harmon {

std::vector<std::vector<std::string>> parse_csv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool cell_was_quoted = false;
  bool row_started = false;
  std::size_t row_number = 1;
  std::size_t pos = 0;

  auto end_cell = [&] {
    row.push_back(std::move(cell));
    cell.clear();
    cell_was_quoted = false;
  };
  auto end_row = [&] {
    end_cell();
    rows.push_back(std::move(row));
    row.clear();
    row_started = false;
    ++row_number;
  };

  while (pos < text.size()) {
    char c = text[pos];
    if (c == '"') {
      if (!cell.empty() || cell_was_quoted) {
        throw CsvError(row_number, "unexpected '\"' inside a cell");
      }
      row_started = true;
      cell_was_quoted = true;
      ++pos;
      for (;;) {
        if (pos >= text.size()) {
          throw CsvError(row_number, "unterminated quoted cell");
        }
        char q = text[pos];
        if (q == '"') {
          if (pos + 1 < text.size() && text[pos + 1] == '"') {
            cell += '"';
            pos += 2;
          } else {
            ++pos;
            break;
          }
        } else {
          cell += q;
          ++pos;
        }
      }
      if (pos < text.size() && text[pos] != ',' && text[pos] != '\r' &&
          text[pos] != '\n') {
        throw CsvError(row_number, "text after closing '\"'");
      }
      continue;
    }
    if (c == ',') {
      row_started = true;
      end_cell();
      ++pos;
      continue;
    }
    if (c == '\r' || c == '\n') {
      if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') ++pos;
      ++pos;
      if (row_started || !cell.empty() || cell_was_quoted) {
        end_row();
      } else {
        // A bare newline with nothing on the line: an empty row, which the
        // callers treat as ragged. Represent it as a single empty cell.
        rows.push_back({std::string()});
        ++row_number;
      }
      continue;
    }
    row_started = true;
    cell += c;
    ++pos;
  }
  if (row_started || !cell.empty() || cell_was_quoted) end_row();
  return rows;
}

}  // namespace harmon
