#ifndef SGE_TABLE_IO_HPP
#define SGE_TABLE_IO_HPP

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace sge {

/// Uniform tabular output document: a named column set, numeric rows and
/// the flat key-value configuration that reproduces the run.
struct OutputDoc {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::map<std::string, std::string> config;
  std::string timestamp;
};

/// Comma-separated output, one header row, numeric fields with 17
/// significant digits (lossless for doubles).
void write_csv(const OutputDoc& doc, std::ostream& os);

/// Single JSON document: {"metadata": {command, config, columns,
/// timestamp}, "rows": [...]}. Numbers round-trip exactly.
void write_json(const OutputDoc& doc, std::ostream& os);

/// 17-significant-digit decimal form of a double.
std::string format_double(double v);

}  // namespace sge

#endif
