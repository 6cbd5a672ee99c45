#include "sge/table_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace sge {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const OutputDoc& doc, std::ostream& os) {
  for (std::size_t c = 0; c < doc.columns.size(); ++c) {
    if (c) os << ',';
    os << doc.columns[c];
  }
  os << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << format_double(row[c]);
    }
    os << '\n';
  }
}

void write_json(const OutputDoc& doc, std::ostream& os) {
  nlohmann::json meta;
  meta["command"] = doc.command;
  meta["columns"] = doc.columns;
  meta["timestamp"] = doc.timestamp;
  meta["config"] = doc.config;

  nlohmann::json out;
  out["metadata"] = meta;
  out["rows"] = doc.rows;
  os << out.dump(2) << '\n';
}

}  // namespace sge
