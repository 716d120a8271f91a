#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "burgess/interval.hpp"
#include "burgess/runs.hpp"

namespace burgess::report {

// One flat record with a fixed field order; doubles are printed with 17
// significant digits so CSV and JSON round-trip exactly.
class ReportRow {
 public:
  using Value = std::variant<std::monostate, std::uint64_t, std::int64_t,
                             double, bool, std::string>;

  ReportRow& add(std::string name, Value v);
  ReportRow& add_interval(const std::string& name, const Interval& iv);
  ReportRow& add_empty(std::string name);

  const std::vector<std::pair<std::string, Value>>& fields() const {
    return fields_;
  }

  std::string csv_header() const;
  std::string csv_line() const;
  std::string json_object() const;

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

std::string format_double(double v);  // %.17g, locale-independent

enum class Format { kCsv, kJson };

// Streams rows as CSV (header once) or a JSON array.
class Writer {
 public:
  Writer(std::ostream& out, Format format);
  ~Writer();
  void write(const ReportRow& row);
  void finish();

 private:
  std::ostream& out_;
  Format format_;
  bool first_ = true;
  bool finished_ = false;
};

// The fixed scan schema:
// p,e,order,H,N,value_num,value_den,brauer,burgess_lo,burgess_hi,
// burgess_applicable  (burgess fields empty below p = 5*10^4)
ReportRow run_record_row(const runs::RunRecord& rec);

}  // namespace burgess::report
