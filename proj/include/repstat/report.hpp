#ifndef REPSTAT_REPORT_HPP
#define REPSTAT_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "repstat/interval.hpp"
#include "repstat/study.hpp"

namespace repstat {

enum class OutputFormat { table, csv, json };

std::optional<OutputFormat> format_from_string(std::string_view name) noexcept;

/// Floating-point fields are serialized with 10 significant digits; counts
/// and seeds are serialized exactly.
std::string format_sig10(double x);

/// One computed interval plus its presentation metadata.
struct IntervalRecord {
  Method method = Method::wald;
  Interval interval;
  std::optional<double> fpc;  // sqrt(1 - n/N) for the N-based methods
};

/// One limit-diagnostic result plus the configuration echo.
struct DiagnosticRecord {
  LimitDiagnostic diagnostic;
  GapScale scale = GapScale::true_p;
  std::uint64_t seed = 0;
};

std::string_view to_string(GapScale scale) noexcept;
std::optional<GapScale> gap_scale_from_string(std::string_view name) noexcept;

// CSV uses one fixed column order shared by interval and coverage rows:
// method,target,kind,lower,upper,level,width,coverage,coverage_se,
// replicates,degenerate_count,seed. Fields that do not apply to a record
// stay empty.
extern const char* const kCsvHeader;

std::string render_interval(const IntervalRecord& record, OutputFormat fmt);
std::string render_report(const CoverageReport& report, OutputFormat fmt);
std::string render_diagnostic(const DiagnosticRecord& record,
                              OutputFormat fmt);

// Inverse of the CSV/JSON renderings (round-trip checked by tests).
std::optional<IntervalRecord> parse_interval_csv(const std::string& text);
std::optional<IntervalRecord> parse_interval_json(const std::string& text);
std::optional<CoverageReport> parse_report_csv(const std::string& text);
std::optional<CoverageReport> parse_report_json(const std::string& text);
std::optional<DiagnosticRecord> parse_diagnostic_csv(const std::string& text);
std::optional<DiagnosticRecord> parse_diagnostic_json(const std::string& text);

}  // namespace repstat

#endif  // REPSTAT_REPORT_HPP
