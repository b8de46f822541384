#include "extremal/report.hpp"

#include <cmath>
#include <cstdio>

#include "extremal/errors.hpp"
#include "json.hpp"

namespace extremal {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

ReportRow& ReportRow::label(std::string key, std::string value) {
  labels.emplace_back(std::move(key), std::move(value));
  return *this;
}

ReportRow& ReportRow::value(std::string key, double v) {
  values.emplace_back(std::move(key), v);
  return *this;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void RowWriter::write(const ReportRow& row) {
  if (row.provenance.empty()) throw Error("report row without provenance");
  for (const auto& [k, v] : row.values) {
    if (!std::isfinite(v)) throw Error("report value '" + k + "' is not finite");
  }
  if (format_ == OutputFormat::JsonLines) {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : row.labels) j[k] = v;
    for (const auto& [k, v] : row.values) j[k] = v;
    j["provenance"] = row.provenance;
    out_ << j.dump() << '\n';
    return;
  }
  std::vector<std::string> cols;
  for (const auto& [k, v] : row.labels) cols.push_back(k);
  for (const auto& [k, v] : row.values) cols.push_back(k);
  cols.push_back("provenance");
  if (!header_done_) {
    columns_ = cols;
    for (std::size_t i = 0; i < cols.size(); ++i) out_ << (i ? "," : "") << csv_field(cols[i]);
    out_ << '\n';
    header_done_ = true;
  } else if (cols != columns_) {
    throw Error("report rows with differing columns cannot share one CSV stream");
  }
  bool first = true;
  auto emit = [&](const std::string& s) {
    out_ << (first ? "" : ",") << s;
    first = false;
  };
  for (const auto& [k, v] : row.labels) emit(csv_field(v));
  for (const auto& [k, v] : row.values) emit(format_double(v));
  emit(csv_field(row.provenance));
  out_ << '\n';
}

}  // namespace extremal
