#ifndef CANTOR_RENDER_HPP
#define CANTOR_RENDER_HPP

#include "cantor/analysis.hpp"
#include "cantor/families.hpp"
#include "cantor/staircase.hpp"
#include "cantor/verify.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace cantor {

enum class OutputFormat { table, json, csv };
enum class FractionStyle { reduced, paper };

struct OutputConfig {
  OutputFormat format = OutputFormat::table;
  FractionStyle fraction_style = FractionStyle::reduced;
  unsigned precision = 6;
};

OutputFormat parse_output_format(std::string_view text);
FractionStyle parse_fraction_style(std::string_view text);

/// Endpoint rendered the way the reference tables print it: numerator over
/// the display denominator q^n, where the numerator value * q^n may itself
/// be fractional (always a terminating decimal for middle-alpha endpoints,
/// e.g. "2.5/16"; falls back to a fraction otherwise).
std::string paper_fraction(const Rational& value, unsigned q, unsigned n);

/// Full endpoint table in the reference layout: a k=0 row holding the base
/// interval, then k = 1..2^n, columns a, b, [a,b].
std::string endpoint_table_text(const EndpointTable& table, unsigned q,
                                FractionStyle style);

// --- JSON / CSV schemas ------------------------------------------------------
// Fractions appear as canonical reduced strings ("num/den", integers bare).
// Every *_to_json has a matching *_from_json so outputs round-trip.

nlohmann::json interval_set_to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const nlohmann::json& j);
std::string interval_set_to_csv(const IntervalSet& s);

nlohmann::json gap_list_to_json(const GapList& gaps);
GapList gap_list_from_json(const nlohmann::json& j);
std::string gap_list_to_csv(const GapList& gaps);

nlohmann::json endpoint_table_to_json(const EndpointTable& table);
EndpointTable endpoint_table_from_json(const nlohmann::json& j);
std::string endpoint_table_to_csv(const EndpointTable& table);

nlohmann::json report_to_json(const ComparisonReport& report);
ComparisonReport report_from_json(const nlohmann::json& j);

nlohmann::json cdf_samples_to_json(const std::vector<CdfSample>& samples, unsigned stage);
std::pair<std::vector<CdfSample>, unsigned> cdf_samples_from_json(const nlohmann::json& j);
std::string cdf_samples_to_csv(const std::vector<CdfSample>& samples, unsigned stage);

nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_from_json(const nlohmann::json& j);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

nlohmann::json gap_statistics_to_json(const GapStatistics& stats);
GapStatistics gap_statistics_from_json(const nlohmann::json& j);

nlohmann::json dimension_to_json(const DimensionResult& dim);
DimensionResult dimension_from_json(const nlohmann::json& j);

nlohmann::json measure_profile_to_json(const std::vector<std::pair<unsigned, Rational>>& rows);
std::vector<std::pair<unsigned, Rational>> measure_profile_from_json(const nlohmann::json& j);

}  // namespace cantor

#endif
