#include "wignerd/serialize.hpp"

#include <cstdio>
#include <ostream>

namespace wigner {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

void write_cell_csv(std::ostream& os, const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c))
    os << *i;
  else if (const auto* d = std::get_if<double>(&c))
    os << format_real(*d);
  else
    os << std::get<std::string>(c);
}

void write_cell_json(std::ostream& os, const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c))
    os << *i;
  else if (const auto* d = std::get_if<double>(&c))
    os << format_real(*d);
  else
    os << '"' << json_escape(std::get<std::string>(c)) << '"';
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

void write_csv(std::ostream& os, const RecordTable& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) os << ',';
    os << table.columns[c];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      write_cell_csv(os, row[c]);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const RecordTable& table,
                const MetaFields& meta) {
  os << "{\n  \"meta\": {";
  for (std::size_t i = 0; i < meta.size(); ++i) {
    if (i) os << ", ";
    os << '"' << json_escape(meta[i].first) << "\": ";
    write_cell_json(os, meta[i].second);
  }
  os << "},\n  \"data\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << (r ? ",\n    {" : "\n    {");
    const auto& row = table.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ", ";
      os << '"' << json_escape(table.columns[c]) << "\": ";
      write_cell_json(os, row[c]);
    }
    os << '}';
  }
  os << "\n  ]\n}\n";
}

}  // namespace wigner
