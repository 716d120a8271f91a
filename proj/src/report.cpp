#include "burgess/report.hpp"

#include <cstdio>

namespace burgess::report {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ReportRow& ReportRow::add(std::string name, Value v) {
  fields_.emplace_back(std::move(name), std::move(v));
  return *this;
}

ReportRow& ReportRow::add_interval(const std::string& name,
                                   const Interval& iv) {
  add(name + "_lo", iv.lo());
  add(name + "_hi", iv.hi());
  return *this;
}

ReportRow& ReportRow::add_empty(std::string name) {
  fields_.emplace_back(std::move(name), std::monostate{});
  return *this;
}

namespace {

std::string value_to_csv(const ReportRow::Value& v) {
  struct V {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::uint64_t x) const { return std::to_string(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(double x) const { return format_double(x); }
    std::string operator()(bool x) const { return x ? "1" : "0"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(V{}, v);
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string value_to_json(const ReportRow::Value& v) {
  struct V {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(std::uint64_t x) const { return std::to_string(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(double x) const { return format_double(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& s) const {
      return "\"" + json_escape(s) + "\"";
    }
  };
  return std::visit(V{}, v);
}

}  // namespace

std::string ReportRow::csv_header() const {
  std::string out;
  for (size_t i = 0; i < fields_.size(); ++i) {
    if (i) out.push_back(',');
    out += fields_[i].first;
  }
  return out;
}

std::string ReportRow::csv_line() const {
  std::string out;
  for (size_t i = 0; i < fields_.size(); ++i) {
    if (i) out.push_back(',');
    out += value_to_csv(fields_[i].second);
  }
  return out;
}

std::string ReportRow::json_object() const {
  std::string out = "{";
  for (size_t i = 0; i < fields_.size(); ++i) {
    if (i) out.push_back(',');
    out += "\"" + json_escape(fields_[i].first) + "\":";
    out += value_to_json(fields_[i].second);
  }
  out.push_back('}');
  return out;
}

Writer::Writer(std::ostream& out, Format format) : out_(out), format_(format) {
  if (format_ == Format::kJson) out_ << "[\n";
}

Writer::~Writer() {
  if (!finished_) finish();
}

void Writer::write(const ReportRow& row) {
  if (format_ == Format::kCsv) {
    if (first_) out_ << row.csv_header() << '\n';
    out_ << row.csv_line() << '\n';
  } else {
    if (!first_) out_ << ",\n";
    out_ << "  " << row.json_object();
  }
  first_ = false;
}

void Writer::finish() {
  if (finished_) return;
  if (format_ == Format::kJson) out_ << (first_ ? "]\n" : "\n]\n");
  out_.flush();
  finished_ = true;
}

ReportRow run_record_row(const runs::RunRecord& rec) {
  ReportRow row;
  row.add("p", rec.p)
      .add("e", rec.e)
      .add("order", rec.order)
      .add("H", rec.H)
      .add("N", rec.N)
      .add("value_num", rec.value.num())
      .add("value_den", rec.value.den())
      .add("brauer", rec.brauer_hi);
  if (rec.burgess) {
    row.add("burgess_lo", rec.burgess->lo());
    row.add("burgess_hi", rec.burgess->hi());
  } else {
    row.add_empty("burgess_lo");
    row.add_empty("burgess_hi");
  }
  row.add("burgess_applicable", rec.burgess_applicable);
  return row;
}

}  // namespace burgess::report
