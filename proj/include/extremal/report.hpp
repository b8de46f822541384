#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace extremal {

/// One output record. Column order follows insertion order.
struct ReportRow {
  std::vector<std::pair<std::string, std::string>> labels;
  std::vector<std::pair<std::string, double>> values;
  std::string provenance;

  ReportRow& label(std::string key, std::string value);
  ReportRow& value(std::string key, double v);
};

enum class OutputFormat { Csv, JsonLines };

/// Streams rows as CSV (header from the first row) or JSON lines. Doubles are
/// written with 17 significant digits so that they re-parse exactly.
class RowWriter {
 public:
  RowWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}
  void write(const ReportRow& row);

 private:
  std::ostream& out_;
  OutputFormat format_;
  bool header_done_ = false;
  std::vector<std::string> columns_;
};

std::string format_double(double v);

}  // namespace extremal
