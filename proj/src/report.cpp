#include "repstat/report.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace repstat {

namespace {

using nlohmann::json;

// Round a double through its 10-significant-digit decimal form so that the
// JSON number carries exactly the documented precision.
double round_sig10(double x) { return std::stod(format_sig10(x)); }

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (const char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (const char ch : text) {
    if (ch == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::optional<IntervalKind> kind_from_string(std::string_view name) {
  if (name == "confidence") return IntervalKind::confidence;
  if (name == "prediction") return IntervalKind::prediction;
  return std::nullopt;
}

std::optional<IntervalTarget> target_from_string(std::string_view name) {
  if (name == "parameter_p") return IntervalTarget::parameter_p;
  if (name == "statistic_pN") return IntervalTarget::statistic_p_N;
  if (name == "statistic_meanN") return IntervalTarget::statistic_mean_N;
  return std::nullopt;
}

std::string csv_interval_row(const IntervalRecord& rec) {
  const Interval& iv = rec.interval;
  std::string row;
  row += to_string(rec.method);
  row += ',';
  row += to_string(iv.target);
  row += ',';
  row += to_string(iv.kind);
  row += ',';
  row += format_sig10(iv.lower);
  row += ',';
  row += format_sig10(iv.upper);
  row += ',';
  row += format_sig10(iv.level);
  row += ',';
  row += format_sig10(iv.width());
  row += ",,,,";  // coverage, coverage_se, replicates not applicable
  row += iv.degenerate ? "1" : "0";
  row += ",\n";  // no seed for a deterministic interval
  return row;
}

std::string csv_coverage_row(const CoverageRow& row, std::uint64_t seed) {
  std::string out;
  out += to_string(row.method);
  out += ',';
  out += to_string(row.target);
  out += ',';
  out += to_string(row.kind);
  out += ",,,";  // lower/upper not applicable
  out += format_sig10(row.nominal_level);
  out += ',';
  out += format_sig10(row.mean_width);
  out += ',';
  out += format_sig10(row.coverage);
  out += ',';
  out += format_sig10(row.coverage_se);
  out += ',';
  out += std::to_string(row.replicates_used);
  out += ',';
  out += std::to_string(row.degenerate_count);
  out += ',';
  out += std::to_string(seed);
  out += '\n';
  return out;
}

json interval_json(const IntervalRecord& rec) {
  const Interval& iv = rec.interval;
  json j;
  j["record"] = "interval";
  j["method"] = to_string(rec.method);
  j["target"] = to_string(iv.target);
  j["kind"] = to_string(iv.kind);
  j["lower"] = round_sig10(iv.lower);
  j["upper"] = round_sig10(iv.upper);
  j["level"] = round_sig10(iv.level);
  j["width"] = round_sig10(iv.width());
  j["degenerate"] = iv.degenerate;
  j["small_sample"] = iv.small_sample;
  if (rec.fpc) j["fpc"] = round_sig10(*rec.fpc);
  return j;
}

json report_json(const CoverageReport& report) {
  json j;
  j["record"] = "coverage";
  j["seed"] = report.seed;
  j["rows"] = json::array();
  for (const CoverageRow& row : report.rows) {
    json r;
    r["method"] = to_string(row.method);
    r["target"] = to_string(row.target);
    r["kind"] = to_string(row.kind);
    r["level"] = round_sig10(row.nominal_level);
    r["coverage"] = round_sig10(row.coverage);
    r["coverage_se"] = round_sig10(row.coverage_se);
    r["mean_width"] = round_sig10(row.mean_width);
    r["replicates"] = row.replicates_used;
    r["degenerate_count"] = row.degenerate_count;
    j["rows"].push_back(r);
  }
  return j;
}

std::string table_pair(std::string_view key, std::string_view value) {
  std::string line(key);
  line.resize(16, ' ');
  line += value;
  line += '\n';
  return line;
}

}  // namespace

const char* const kCsvHeader =
    "method,target,kind,lower,upper,level,width,coverage,coverage_se,"
    "replicates,degenerate_count,seed\n";

std::optional<OutputFormat> format_from_string(
    std::string_view name) noexcept {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string format_sig10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string_view to_string(GapScale scale) noexcept {
  switch (scale) {
    case GapScale::true_p:
      return "true-p";
    case GapScale::plug_in_sample:
      return "plug-in-n";
    case GapScale::plug_in_rep:
      return "plug-in-N";
  }
  return "?";
}

std::optional<GapScale> gap_scale_from_string(std::string_view name) noexcept {
  if (name == "true-p") return GapScale::true_p;
  if (name == "plug-in-n") return GapScale::plug_in_sample;
  if (name == "plug-in-N") return GapScale::plug_in_rep;
  return std::nullopt;
}

std::string render_interval(const IntervalRecord& record, OutputFormat fmt) {
  const Interval& iv = record.interval;
  switch (fmt) {
    case OutputFormat::csv:
      return kCsvHeader + csv_interval_row(record);
    case OutputFormat::json:
      return interval_json(record).dump() + "\n";
    case OutputFormat::table:
      break;
  }
  std::string out;
  out += table_pair("method", to_string(record.method));
  out += table_pair("kind", to_string(iv.kind));
  out += table_pair("target", to_string(iv.target));
  out += table_pair("level", format_sig10(iv.level));
  out += table_pair("lower", format_sig10(iv.lower));
  out += table_pair("upper", format_sig10(iv.upper));
  out += table_pair("width", format_sig10(iv.width()));
  out += table_pair("degenerate", iv.degenerate ? "yes" : "no");
  out += table_pair("small-sample", iv.small_sample ? "yes" : "no");
  if (record.fpc) out += table_pair("fpc", format_sig10(*record.fpc));
  return out;
}

std::string render_report(const CoverageReport& report, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::csv: {
      std::string out = kCsvHeader;
      for (const CoverageRow& row : report.rows)
        out += csv_coverage_row(row, report.seed);
      return out;
    }
    case OutputFormat::json:
      return report_json(report).dump() + "\n";
    case OutputFormat::table:
      break;
  }
  std::ostringstream out;
  out << "seed " << report.seed << "\n";
  out << "method            target           kind        level        "
         "coverage     coverage_se  mean_width   replicates  degenerate\n";
  for (const CoverageRow& row : report.rows) {
    char line[256];
    std::snprintf(line, sizeof(line),
                  "%-17s %-16s %-11s %-12s %-12s %-12s %-12s %-11llu %llu\n",
                  std::string(to_string(row.method)).c_str(),
                  std::string(to_string(row.target)).c_str(),
                  std::string(to_string(row.kind)).c_str(),
                  format_sig10(row.nominal_level).c_str(),
                  format_sig10(row.coverage).c_str(),
                  format_sig10(row.coverage_se).c_str(),
                  format_sig10(row.mean_width).c_str(),
                  static_cast<unsigned long long>(row.replicates_used),
                  static_cast<unsigned long long>(row.degenerate_count));
    out << line;
  }
  return out.str();
}

std::string render_diagnostic(const DiagnosticRecord& record,
                              OutputFormat fmt) {
  const LimitDiagnostic& d = record.diagnostic;
  switch (fmt) {
    case OutputFormat::csv: {
      std::string out = "scale,ks_stat,mean,variance,used,excluded,seed\n";
      out += std::string(to_string(record.scale)) + ',' +
             format_sig10(d.ks_stat) + ',' + format_sig10(d.mean) + ',' +
             format_sig10(d.variance) + ',' + std::to_string(d.used) + ',' +
             std::to_string(d.excluded) + ',' + std::to_string(record.seed) +
             '\n';
      return out;
    }
    case OutputFormat::json: {
      json j;
      j["record"] = "diagnostic";
      j["scale"] = to_string(record.scale);
      j["ks_stat"] = round_sig10(d.ks_stat);
      j["mean"] = round_sig10(d.mean);
      j["variance"] = round_sig10(d.variance);
      j["used"] = d.used;
      j["excluded"] = d.excluded;
      j["seed"] = record.seed;
      return j.dump() + "\n";
    }
    case OutputFormat::table:
      break;
  }
  std::string out;
  out += table_pair("scale", to_string(record.scale));
  out += table_pair("ks_stat", format_sig10(d.ks_stat));
  out += table_pair("mean", format_sig10(d.mean));
  out += table_pair("variance", format_sig10(d.variance));
  out += table_pair("used", std::to_string(d.used));
  out += table_pair("excluded", std::to_string(d.excluded));
  out += table_pair("seed", std::to_string(record.seed));
  return out;
}

std::optional<IntervalRecord> parse_interval_csv(const std::string& text) try {
  const auto rows = lines_of(text);
  if (rows.size() != 2) return std::nullopt;
  const auto f = split(rows[1], ',');
  if (f.size() != 12) return std::nullopt;
  const auto method = method_from_string(f[0]);
  const auto target = target_from_string(f[1]);
  const auto kind = kind_from_string(f[2]);
  if (!method || !target || !kind) return std::nullopt;
  IntervalRecord rec;
  rec.method = *method;
  rec.interval.target = *target;
  rec.interval.kind = *kind;
  rec.interval.lower = std::stod(f[3]);
  rec.interval.upper = std::stod(f[4]);
  rec.interval.level = std::stod(f[5]);
  rec.interval.degenerate = f[10] == "1";
  return rec;
} catch (const std::exception&) {
  return std::nullopt;
}

std::optional<IntervalRecord> parse_interval_json(const std::string& text) try {
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || j.value("record", "") != "interval")
    return std::nullopt;
  const auto method = method_from_string(j.at("method").get<std::string>());
  const auto target = target_from_string(j.at("target").get<std::string>());
  const auto kind = kind_from_string(j.at("kind").get<std::string>());
  if (!method || !target || !kind) return std::nullopt;
  IntervalRecord rec;
  rec.method = *method;
  rec.interval.target = *target;
  rec.interval.kind = *kind;
  rec.interval.lower = j.at("lower").get<double>();
  rec.interval.upper = j.at("upper").get<double>();
  rec.interval.level = j.at("level").get<double>();
  rec.interval.degenerate = j.at("degenerate").get<bool>();
  rec.interval.small_sample = j.at("small_sample").get<bool>();
  if (j.contains("fpc")) rec.fpc = j.at("fpc").get<double>();
  return rec;
} catch (const std::exception&) {
  return std::nullopt;
}

std::optional<CoverageReport> parse_report_csv(const std::string& text) try {
  const auto rows = lines_of(text);
  if (rows.size() < 2) return std::nullopt;
  CoverageReport report;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = split(rows[i], ',');
    if (f.size() != 12) return std::nullopt;
    const auto method = method_from_string(f[0]);
    const auto target = target_from_string(f[1]);
    const auto kind = kind_from_string(f[2]);
    if (!method || !target || !kind) return std::nullopt;
    CoverageRow row;
    row.method = *method;
    row.target = *target;
    row.kind = *kind;
    row.nominal_level = std::stod(f[5]);
    row.mean_width = std::stod(f[6]);
    row.coverage = std::stod(f[7]);
    row.coverage_se = std::stod(f[8]);
    row.replicates_used = std::stoull(f[9]);
    row.degenerate_count = std::stoull(f[10]);
    report.seed = std::stoull(f[11]);
    report.rows.push_back(row);
  }
  return report;
} catch (const std::exception&) {
  return std::nullopt;
}

std::optional<CoverageReport> parse_report_json(const std::string& text) try {
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || j.value("record", "") != "coverage")
    return std::nullopt;
  CoverageReport report;
  report.seed = j.at("seed").get<std::uint64_t>();
  for (const json& r : j.at("rows")) {
    const auto method = method_from_string(r.at("method").get<std::string>());
    const auto target = target_from_string(r.at("target").get<std::string>());
    const auto kind = kind_from_string(r.at("kind").get<std::string>());
    if (!method || !target || !kind) return std::nullopt;
    CoverageRow row;
    row.method = *method;
    row.target = *target;
    row.kind = *kind;
    row.nominal_level = r.at("level").get<double>();
    row.coverage = r.at("coverage").get<double>();
    row.coverage_se = r.at("coverage_se").get<double>();
    row.mean_width = r.at("mean_width").get<double>();
    row.replicates_used = r.at("replicates").get<std::uint64_t>();
    row.degenerate_count = r.at("degenerate_count").get<std::uint64_t>();
    report.rows.push_back(row);
  }
  return report;
} catch (const std::exception&) {
  return std::nullopt;
}

std::optional<DiagnosticRecord> parse_diagnostic_csv(const std::string& text) try {
  const auto rows = lines_of(text);
  if (rows.size() != 2) return std::nullopt;
  const auto f = split(rows[1], ',');
  if (f.size() != 7) return std::nullopt;
  const auto scale = gap_scale_from_string(f[0]);
  if (!scale) return std::nullopt;
  DiagnosticRecord rec;
  rec.scale = *scale;
  rec.diagnostic.ks_stat = std::stod(f[1]);
  rec.diagnostic.mean = std::stod(f[2]);
  rec.diagnostic.variance = std::stod(f[3]);
  rec.diagnostic.used = std::stoull(f[4]);
  rec.diagnostic.excluded = std::stoull(f[5]);
  rec.seed = std::stoull(f[6]);
  return rec;
} catch (const std::exception&) {
  return std::nullopt;
}

std::optional<DiagnosticRecord> parse_diagnostic_json(
    const std::string& text) try {
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || j.value("record", "") != "diagnostic")
    return std::nullopt;
  const auto scale = gap_scale_from_string(j.at("scale").get<std::string>());
  if (!scale) return std::nullopt;
  DiagnosticRecord rec;
  rec.scale = *scale;
  rec.diagnostic.ks_stat = j.at("ks_stat").get<double>();
  rec.diagnostic.mean = j.at("mean").get<double>();
  rec.diagnostic.variance = j.at("variance").get<double>();
  rec.diagnostic.used = j.at("used").get<std::uint64_t>();
  rec.diagnostic.excluded = j.at("excluded").get<std::uint64_t>();
  rec.seed = j.at("seed").get<std::uint64_t>();
  return rec;
} catch (const std::exception&) {
  return std::nullopt;
}

}  // namespace repstat
