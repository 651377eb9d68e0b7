#include "cantor/render.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace cantor {

namespace {

using nlohmann::json;

// Exact decimal rendering, or nullopt if the value does not terminate.
std::optional<std::string> exact_decimal(const Rational& x) {
  BigInt den = x.den();
  unsigned twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  unsigned digits = std::max(twos, fives);
  if (digits == 0) return x.num().str();

  BigInt scaled = boost::multiprecision::abs(x.num());
  for (unsigned i = 0; i < digits - twos; ++i) scaled *= 2;
  for (unsigned i = 0; i < digits - fives; ++i) scaled *= 5;
  std::string body = scaled.str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return x.sign() < 0 ? "-" + body : body;
}

// Display width in code points (the table headers contain a two-byte glyph).
std::size_t display_width(const std::string& s) {
  std::size_t width = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++width;
  }
  return width;
}

std::string pad(std::string s, std::size_t width) {
  std::size_t have = display_width(s);
  if (have < width) s.append(width - have, ' ');
  return s;
}

json fraction_json(const Rational& r) { return r.to_string(); }

Rational fraction_from_json(const json& j) { return Rational::parse(j.get<std::string>()); }

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::table;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format \"" + std::string(text) + "\"");
}

FractionStyle parse_fraction_style(std::string_view text) {
  if (text == "reduced") return FractionStyle::reduced;
  if (text == "paper") return FractionStyle::paper;
  throw std::invalid_argument("unknown fraction style \"" + std::string(text) + "\"");
}

std::string paper_fraction(const Rational& value, unsigned q, unsigned n) {
  Rational numerator = value * pow(Rational(q), n);
  std::string num_text;
  if (auto dec = exact_decimal(numerator)) {
    num_text = *dec;
  } else {
    num_text = numerator.to_string();
  }
  BigInt display_den = 1;
  for (unsigned i = 0; i < n; ++i) display_den *= q;
  return num_text + "/" + display_den.str();
}

std::string endpoint_table_text(const EndpointTable& table, unsigned q,
                                FractionStyle style) {
  auto show = [&](const Rational& v) {
    return style == FractionStyle::paper ? paper_fraction(v, q, table.stage)
                                         : v.to_string();
  };

  std::vector<std::array<std::string, 4>> rows;
  auto add_row = [&](std::string k, const Rational& a, const Rational& b) {
    std::string sa = show(a), sb = show(b);
    std::string combo = "[" + sa + "," + sb + "]";
    rows.push_back({std::move(k), std::move(sa), std::move(sb), std::move(combo)});
  };
  rows.push_back({"", "a_(n,k)(α)", "b_(n,k)(α)",
                  "[a_(n,k)(α),b_(n,k)(α)]"});
  add_row("k=0", Rational(0), Rational(1));
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    add_row("k=" + std::to_string(i + 1), table.rows[i].first, table.rows[i].second);
  }

  std::array<std::size_t, 4> widths{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 4; ++c) {
      widths[c] = std::max(widths[c], display_width(row[c]));
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 4; ++c) {
      line += pad(row[c], widths[c]);
      if (c + 1 < 4) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

json interval_set_to_json(const IntervalSet& s) {
  json arr = json::array();
  for (const ClosedInterval& iv : s.parts()) {
    arr.push_back(json::array({fraction_json(iv.lo), fraction_json(iv.hi)}));
  }
  return arr;
}

IntervalSet interval_set_from_json(const json& j) {
  std::vector<ClosedInterval> parts;
  for (const auto& pair : j) {
    parts.emplace_back(fraction_from_json(pair.at(0)), fraction_from_json(pair.at(1)));
  }
  return normalize(std::move(parts));
}

std::string interval_set_to_csv(const IntervalSet& s) {
  std::ostringstream out;
  out << "lo_num,lo_den,hi_num,hi_den\n";
  for (const ClosedInterval& iv : s.parts()) {
    out << iv.lo.num() << "," << iv.lo.den() << "," << iv.hi.num() << "," << iv.hi.den()
        << "\n";
  }
  return out.str();
}

json gap_list_to_json(const GapList& gaps) {
  json arr = json::array();
  for (const Gap& g : gaps) {
    arr.push_back(json::array({fraction_json(g.lo), fraction_json(g.hi)}));
  }
  return arr;
}

GapList gap_list_from_json(const json& j) {
  std::vector<Gap> gaps;
  for (const auto& pair : j) {
    gaps.emplace_back(fraction_from_json(pair.at(0)), fraction_from_json(pair.at(1)));
  }
  return GapList(std::move(gaps));
}

std::string gap_list_to_csv(const GapList& gaps) {
  std::ostringstream out;
  out << "lo_num,lo_den,hi_num,hi_den\n";
  for (const Gap& g : gaps) {
    out << g.lo.num() << "," << g.lo.den() << "," << g.hi.num() << "," << g.hi.den()
        << "\n";
  }
  return out.str();
}

json endpoint_table_to_json(const EndpointTable& table) {
  json rows = json::array();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    rows.push_back({{"k", i + 1},
                    {"a", fraction_json(table.rows[i].first)},
                    {"b", fraction_json(table.rows[i].second)}});
  }
  return {{"stage", table.stage}, {"rows", rows}};
}

EndpointTable endpoint_table_from_json(const json& j) {
  EndpointTable table;
  table.stage = j.at("stage").get<unsigned>();
  for (const auto& row : j.at("rows")) {
    table.rows.emplace_back(fraction_from_json(row.at("a")),
                            fraction_from_json(row.at("b")));
  }
  return table;
}

std::string endpoint_table_to_csv(const EndpointTable& table) {
  std::ostringstream out;
  out << "k,a_num,a_den,b_num,b_den\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& [a, b] = table.rows[i];
    out << (i + 1) << "," << a.num() << "," << a.den() << "," << b.num() << ","
        << b.den() << "\n";
  }
  return out.str();
}

json report_to_json(const ComparisonReport& report) {
  json j{{"left_label", report.left_label},
         {"right_label", report.right_label},
         {"stage", report.stage},
         {"equal", report.equal},
         {"left_minus_right", interval_set_to_json(report.left_minus_right)},
         {"right_minus_left", interval_set_to_json(report.right_minus_left)}};
  j["witness"] = report.witness ? json(fraction_json(*report.witness)) : json(nullptr);
  return j;
}

ComparisonReport report_from_json(const json& j) {
  ComparisonReport report;
  report.left_label = j.at("left_label").get<std::string>();
  report.right_label = j.at("right_label").get<std::string>();
  report.stage = j.at("stage").get<unsigned>();
  report.equal = j.at("equal").get<bool>();
  report.left_minus_right = interval_set_from_json(j.at("left_minus_right"));
  report.right_minus_left = interval_set_from_json(j.at("right_minus_left"));
  if (!j.at("witness").is_null()) {
    report.witness = fraction_from_json(j.at("witness"));
  }
  return report;
}

json cdf_samples_to_json(const std::vector<CdfSample>& samples, unsigned stage) {
  json arr = json::array();
  for (const CdfSample& s : samples) {
    arr.push_back({{"x", fraction_json(s.x)},
                   {"lower", fraction_json(s.lower)},
                   {"upper", fraction_json(s.upper)},
                   {"stage", stage}});
  }
  return arr;
}

std::pair<std::vector<CdfSample>, unsigned> cdf_samples_from_json(const json& j) {
  std::vector<CdfSample> samples;
  unsigned stage = 0;
  for (const auto& row : j) {
    samples.push_back({fraction_from_json(row.at("x")), fraction_from_json(row.at("lower")),
                       fraction_from_json(row.at("upper"))});
    stage = row.at("stage").get<unsigned>();
  }
  return {std::move(samples), stage};
}

std::string cdf_samples_to_csv(const std::vector<CdfSample>& samples, unsigned stage) {
  std::ostringstream out;
  out << "x_num,x_den,lower_num,lower_den,upper_num,upper_den,stage\n";
  for (const CdfSample& s : samples) {
    out << s.x.num() << "," << s.x.den() << "," << s.lower.num() << "," << s.lower.den()
        << "," << s.upper.num() << "," << s.upper.den() << "," << stage << "\n";
  }
  return out.str();
}

json sweep_to_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const SweepRow& row : rows) {
    arr.push_back({{"t", fraction_json(row.t)},
                   {"length", fraction_json(row.length)},
                   {"components", row.components}});
  }
  return arr;
}

std::vector<SweepRow> sweep_from_json(const json& j) {
  std::vector<SweepRow> rows;
  for (const auto& row : j) {
    rows.push_back({fraction_from_json(row.at("t")), fraction_from_json(row.at("length")),
                    row.at("components").get<std::size_t>()});
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "t_num,t_den,intersection_length_num,intersection_length_den,component_count\n";
  for (const SweepRow& row : rows) {
    out << row.t.num() << "," << row.t.den() << "," << row.length.num() << ","
        << row.length.den() << "," << row.components << "\n";
  }
  return out.str();
}

json gap_statistics_to_json(const GapStatistics& stats) {
  json histogram = json::array();
  for (const auto& [length, multiplicity] : stats.histogram) {
    histogram.push_back({{"length", fraction_json(length)}, {"multiplicity", multiplicity}});
  }
  return {{"stage", stats.stage},
          {"count", stats.count},
          {"min_gap", fraction_json(stats.min_gap)},
          {"max_gap", fraction_json(stats.max_gap)},
          {"total_gap", fraction_json(stats.total_gap)},
          {"histogram", histogram}};
}

GapStatistics gap_statistics_from_json(const json& j) {
  GapStatistics stats;
  stats.stage = j.at("stage").get<unsigned>();
  stats.count = j.at("count").get<std::size_t>();
  stats.min_gap = fraction_from_json(j.at("min_gap"));
  stats.max_gap = fraction_from_json(j.at("max_gap"));
  stats.total_gap = fraction_from_json(j.at("total_gap"));
  for (const auto& row : j.at("histogram")) {
    stats.histogram.emplace_back(fraction_from_json(row.at("length")),
                                 row.at("multiplicity").get<std::size_t>());
  }
  return stats;
}

json dimension_to_json(const DimensionResult& dim) {
  return {{"map_count", dim.map_count},
          {"ratio_reciprocal", dim.ratio_reciprocal},
          {"dimension", dim.decimal}};
}

DimensionResult dimension_from_json(const json& j) {
  DimensionResult dim;
  dim.map_count = j.at("map_count").get<unsigned>();
  dim.ratio_reciprocal = j.at("ratio_reciprocal").get<unsigned>();
  dim.decimal = j.at("dimension").get<std::string>();
  dim.value = std::stod(dim.decimal);
  return dim;
}

json measure_profile_to_json(const std::vector<std::pair<unsigned, Rational>>& rows) {
  json arr = json::array();
  for (const auto& [n, measure] : rows) {
    arr.push_back({{"n", n}, {"measure", fraction_json(measure)}});
  }
  return arr;
}

std::vector<std::pair<unsigned, Rational>> measure_profile_from_json(const json& j) {
  std::vector<std::pair<unsigned, Rational>> rows;
  for (const auto& row : j) {
    rows.emplace_back(row.at("n").get<unsigned>(), fraction_from_json(row.at("measure")));
  }
  return rows;
}

}  // namespace cantor
