#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "propclass/errors.hpp"

namespace propclass {

// Minimal RFC-4180-style CSV: double-quoted fields may contain commas and
// doubled quotes. Listing locations ("Bojongsoang, Bandung") need this.

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) {
    raise(ErrorKind::MalformedRow, "unterminated quote in CSV row: " + line);
  }
  fields.push_back(current);
  return fields;
}

inline std::string csv_escape(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string join_csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(fields[i]);
  }
  return out;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorKind::IoError, "cannot open " + path);
  }
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      // strip a UTF-8 BOM if present
      if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        line.erase(0, 3);
      }
      table.header = split_csv_line(line);
      first = false;
      continue;
    }
    if (line.empty()) continue;
    table.rows.push_back(split_csv_line(line));
  }
  if (first) {
    raise(ErrorKind::IoError, "empty CSV file: " + path);
  }
  return table;
}

inline void write_csv(const std::string& path,
                      const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    raise(ErrorKind::IoError, "cannot write " + path);
  }
  out << join_csv_row(header) << '\n';
  for (const auto& row : rows) {
    out << join_csv_row(row) << '\n';
  }
  if (!out) {
    raise(ErrorKind::IoError, "failed while writing " + path);
  }
}

}  // namespace propclass
