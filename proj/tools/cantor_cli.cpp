#include "cantor/families.hpp"
#include "cantor/kernels.hpp"
#include "cantor/render.hpp"
#include "cantor/staircase.hpp"
#include "cantor/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cantor;

namespace {

struct GlobalOptions {
  std::string format = "table";
  std::string fraction_style = "reduced";
  unsigned precision = 6;
  std::string out_file;

  OutputFormat fmt() const { return parse_output_format(format); }
  FractionStyle style() const { return parse_fraction_style(fraction_style); }
};

void emit(const GlobalOptions& global, const std::string& text) {
  if (global.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(global.out_file);
  if (!file) {
    throw std::runtime_error("cannot open output file \"" + global.out_file + "\"");
  }
  file << text;
}

std::string interval_lines(const IntervalSet& s) {
  std::ostringstream out;
  for (const ClosedInterval& iv : s.parts()) {
    out << "[" << iv.lo << "," << iv.hi << "]\n";
  }
  return out.str();
}

std::string gap_lines(const GapList& gaps) {
  std::ostringstream out;
  for (const Gap& g : gaps) {
    out << "(" << g.lo << "," << g.hi << ")\n";
  }
  return out.str();
}

WeightVector resolve_weights(const FamilySpec& spec, const std::string& weights_arg) {
  if (weights_arg.empty()) {
    return WeightVector::uniform(map_count(spec));
  }
  std::vector<Rational> weights;
  std::size_t pos = 0;
  while (pos <= weights_arg.size()) {
    std::size_t comma = weights_arg.find(',', pos);
    std::string tok = weights_arg.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    weights.push_back(Rational::parse(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return WeightVector(std::move(weights));
}

int run_endpoints(const GlobalOptions& global, unsigned p, unsigned q, unsigned n,
                  bool serial) {
  EndpointTable table =
      serial ? gamma3_endpoints(p, q, n) : kernels::gamma3_endpoint_table(p, q, n);
  switch (global.fmt()) {
    case OutputFormat::table:
      emit(global, endpoint_table_text(table, q, global.style()));
      break;
    case OutputFormat::json:
      emit(global, endpoint_table_to_json(table).dump(2) + "\n");
      break;
    case OutputFormat::csv:
      emit(global, endpoint_table_to_csv(table));
      break;
  }
  return 0;
}

int run_gaps(const GlobalOptions& global, const FamilySpec& spec, unsigned n,
             bool conjectured) {
  GapList gaps;
  if (const auto* g1 = std::get_if<Gamma1>(&spec)) {
    gaps = gamma1_gaps(g1->q, n);
  } else if (const auto* g2 = std::get_if<Gamma2>(&spec)) {
    gaps = conjectured ? gamma2_gaps_conjectured(g2->q, n) : gamma2_gaps(g2->q, n);
  } else if (const auto* g3 = std::get_if<Gamma3>(&spec)) {
    gaps = gamma3_level_gaps(g3->p, g3->q, n);
  } else {
    // digit specs have no per-level formula; report the cumulative complement
    gaps = gaps_within(digit_stage(std::get<DigitIFS>(spec), n),
                       ClosedInterval(Rational(0), Rational(1)));
  }
  switch (global.fmt()) {
    case OutputFormat::table:
      emit(global, gap_lines(gaps));
      break;
    case OutputFormat::json:
      emit(global, gap_list_to_json(gaps).dump(2) + "\n");
      break;
    case OutputFormat::csv:
      emit(global, gap_list_to_csv(gaps));
      break;
  }
  return 0;
}

int run_stage(const GlobalOptions& global, const FamilySpec& spec, unsigned n,
              bool stats) {
  IntervalSet s = stage_set(spec, n);
  if (!stats) {
    switch (global.fmt()) {
      case OutputFormat::table:
        emit(global, interval_lines(s));
        break;
      case OutputFormat::json:
        emit(global, interval_set_to_json(s).dump(2) + "\n");
        break;
      case OutputFormat::csv:
        emit(global, interval_set_to_csv(s));
        break;
    }
    return 0;
  }

  if (global.fmt() == OutputFormat::csv) {
    emit(global, interval_set_to_csv(s));  // stats are table/json only
    return 0;
  }
  ClosedInterval unit(Rational(0), Rational(1));
  GapStatistics gap_stats = gap_statistics(s, unit, n);
  std::string thickness = "n/a";
  if (s.component_count() >= 2) {
    try {
      thickness = thickness_proxy(s, unit).to_string();
    } catch (const std::domain_error&) {
    }
  }
  if (global.fmt() == OutputFormat::json) {
    nlohmann::json j{{"spec", to_string(spec)},
                     {"stage", n},
                     {"intervals", interval_set_to_json(s)},
                     {"component_count", s.component_count()},
                     {"total_length", total_length(s).to_string()},
                     {"gap_statistics", gap_statistics_to_json(gap_stats)},
                     {"thickness_proxy", thickness}};
    emit(global, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << interval_lines(s);
    out << "components " << s.component_count() << "\n";
    out << "total_length " << total_length(s) << "\n";
    out << "gap_count " << gap_stats.count << "\n";
    out << "gap_total " << gap_stats.total_gap << "\n";
    for (const auto& [len, mult] : gap_stats.histogram) {
      out << "gap_length " << len << " x" << mult << "\n";
    }
    out << "thickness_proxy " << thickness << "\n";
    emit(global, out.str());
  }
  return 0;
}

int run_measure(const GlobalOptions& global, unsigned p, unsigned q, int profile) {
  Rational limit = gamma3_measure(p, q);
  if (profile < 0) {
    switch (global.fmt()) {
      case OutputFormat::table:
        emit(global, limit.to_string() + "\n");
        break;
      case OutputFormat::json: {
        nlohmann::json j{{"p", p}, {"q", q}, {"measure", limit.to_string()}};
        emit(global, j.dump(2) + "\n");
        break;
      }
      case OutputFormat::csv:
        emit(global, "measure_num,measure_den\n" + limit.num().str() + "," +
                         limit.den().str() + "\n");
        break;
    }
    return 0;
  }

  auto rows = gamma3_measure_profile(p, q, static_cast<unsigned>(profile));
  switch (global.fmt()) {
    case OutputFormat::table: {
      std::ostringstream out;
      for (const auto& [n, measure] : rows) {
        out << n << " " << measure << "\n";
      }
      out << "limit " << limit << "\n";
      emit(global, out.str());
      break;
    }
    case OutputFormat::json: {
      nlohmann::json j{{"p", p},
                       {"q", q},
                       {"limit", limit.to_string()},
                       {"profile", measure_profile_to_json(rows)}};
      emit(global, j.dump(2) + "\n");
      break;
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "n,measure_num,measure_den\n";
      for (const auto& [n, measure] : rows) {
        out << n << "," << measure.num() << "," << measure.den() << "\n";
      }
      emit(global, out.str());
      break;
    }
  }
  return 0;
}

int run_dim(const GlobalOptions& global, const std::string& spec_text, unsigned maps,
            unsigned ratio) {
  DimensionResult dim =
      spec_text.empty()
          ? hausdorff_dimension(maps, ratio, global.precision)
          : family_dimension(parse_family_spec(spec_text), global.precision);
  switch (global.fmt()) {
    case OutputFormat::table: {
      std::ostringstream out;
      if (dim.ratio_reciprocal > 1) {
        out << "log " << dim.map_count << " / log " << dim.ratio_reciprocal << " = ";
      }
      out << dim.decimal << "\n";
      emit(global, out.str());
      break;
    }
    case OutputFormat::json:
      emit(global, dimension_to_json(dim).dump(2) + "\n");
      break;
    case OutputFormat::csv:
      emit(global, "map_count,ratio_reciprocal,dimension\n" +
                       std::to_string(dim.map_count) + "," +
                       std::to_string(dim.ratio_reciprocal) + "," + dim.decimal + "\n");
      break;
  }
  return 0;
}

int run_cdf(const GlobalOptions& global, const FamilySpec& spec,
            const std::string& weights_arg, const std::string& x_arg, unsigned samples,
            unsigned n, bool serial) {
  WeightVector weights = resolve_weights(spec, weights_arg);
  std::vector<CdfSample> rows;
  if (!x_arg.empty()) {
    Rational x = Rational::parse(x_arg);
    CdfBound bound = cdf_bounds(spec, weights, x, n);
    rows.push_back({x, bound.lower, bound.upper});
  } else {
    rows = serial ? staircase_samples(spec, weights, samples, n)
                  : kernels::staircase_samples(spec, weights, samples, n);
  }
  switch (global.fmt()) {
    case OutputFormat::table: {
      std::ostringstream out;
      for (const CdfSample& s : rows) {
        out << s.x << " " << s.lower << " " << s.upper << "\n";
      }
      emit(global, out.str());
      break;
    }
    case OutputFormat::json:
      emit(global, cdf_samples_to_json(rows, n).dump(2) + "\n");
      break;
    case OutputFormat::csv:
      emit(global, cdf_samples_to_csv(rows, n));
      break;
  }
  return 0;
}

int run_verify(const GlobalOptions& global, const std::string& which, unsigned p,
               unsigned q, unsigned n, bool conjectured) {
  std::vector<ComparisonReport> reports;
  bool hard = false;  // mismatches are failures, not measurements
  if (which == "gamma3") {
    reports = verify_gamma3(p, q, n);
    hard = true;
  } else if (which == "digit") {
    reports = verify_digit_characterization(p, q, n);
  } else if (which == "gamma2") {
    reports = conjectured ? verify_gamma2_conjectured(q, n) : verify_gamma2_formula(q, n);
  } else if (which == "corollary") {
    reports = verify_corollary(n);
    hard = true;
  } else {
    throw std::invalid_argument("unknown verification \"" + which +
                                "\" (expected gamma3|digit|gamma2|corollary)");
  }

  bool all_equal = true;
  for (const ComparisonReport& report : reports) all_equal &= report.equal;

  // For digit-set comparisons, report whether each witness belongs to the
  // limit set as well (stage differences alone do not settle it).
  std::vector<std::pair<Rational, bool>> witness_membership;
  if (which == "digit") {
    DigitIFS digits = gamma3_digit_spec(p, q);
    for (const ComparisonReport& report : reports) {
      if (report.witness) {
        witness_membership.emplace_back(*report.witness,
                                        limit_membership(digits, *report.witness));
      }
    }
  }

  switch (global.fmt()) {
    case OutputFormat::table: {
      std::ostringstream out;
      for (const ComparisonReport& report : reports) {
        out << "stage " << report.stage << ": " << report.left_label << " vs "
            << report.right_label << ": ";
        if (report.equal) {
          out << "equal\n";
        } else {
          out << "differ; witness " << report.witness->to_string() << "\n";
        }
      }
      if (all_equal) {
        out << "equal at all stages 0.." << n << "\n";
      }
      for (const auto& [witness, member] : witness_membership) {
        out << "witness " << witness << " in limit digit set: " << (member ? "yes" : "no")
            << "\n";
      }
      emit(global, out.str());
      break;
    }
    case OutputFormat::json: {
      nlohmann::json jreports = nlohmann::json::array();
      for (const ComparisonReport& report : reports) jreports.push_back(report_to_json(report));
      nlohmann::json j{{"which", which}, {"all_equal", all_equal}, {"reports", jreports}};
      if (which == "digit") {
        nlohmann::json jw = nlohmann::json::array();
        for (const auto& [witness, member] : witness_membership) {
          jw.push_back({{"witness", witness.to_string()}, {"in_limit_digit_set", member}});
        }
        j["witness_membership"] = jw;
      }
      emit(global, j.dump(2) + "\n");
      break;
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "stage,equal,witness,left_minus_right_components,right_minus_left_components\n";
      for (const ComparisonReport& report : reports) {
        out << report.stage << "," << (report.equal ? 1 : 0) << ","
            << (report.witness ? report.witness->to_string() : "") << ","
            << report.left_minus_right.component_count() << ","
            << report.right_minus_left.component_count() << "\n";
      }
      emit(global, out.str());
      break;
    }
  }

  if (hard && !all_equal) {
    std::cerr << "verification failed: representations disagree\n";
    return 3;
  }
  return 0;
}

int run_intersect(const GlobalOptions& global, const FamilySpec& a, const FamilySpec& b,
                  const std::string& t_arg, unsigned sweep, const std::string& t_min,
                  const std::string& t_max, unsigned n, bool serial) {
  if (!t_arg.empty()) {
    Rational t = Rational::parse(t_arg);
    auto [cut, length] = translate_intersection(a, b, t, n);
    switch (global.fmt()) {
      case OutputFormat::table: {
        std::ostringstream out;
        out << interval_lines(cut);
        out << "length " << length << "\n";
        out << "components " << cut.component_count() << "\n";
        emit(global, out.str());
        break;
      }
      case OutputFormat::json: {
        nlohmann::json j{{"a", to_string(a)},
                         {"b", to_string(b)},
                         {"t", t.to_string()},
                         {"stage", n},
                         {"intersection", interval_set_to_json(cut)},
                         {"length", length.to_string()},
                         {"components", cut.component_count()}};
        emit(global, j.dump(2) + "\n");
        break;
      }
      case OutputFormat::csv:
        emit(global, sweep_to_csv({{t, length, cut.component_count()}}));
        break;
    }
    return 0;
  }

  if (sweep < 2) {
    throw std::invalid_argument("--sweep needs at least 2 offsets");
  }
  Rational lo = Rational::parse(t_min);
  Rational hi = Rational::parse(t_max);
  if (hi < lo) {
    throw std::invalid_argument("--t-min must not exceed --t-max");
  }
  std::vector<Rational> offsets;
  offsets.reserve(sweep);
  Rational span = hi - lo;
  for (unsigned i = 0; i < sweep; ++i) {
    offsets.push_back(lo + span * Rational(BigInt(i), BigInt(sweep - 1)));
  }
  std::vector<SweepRow> rows = serial ? intersection_sweep(a, b, offsets, n)
                                      : kernels::intersection_sweep(a, b, offsets, n);
  switch (global.fmt()) {
    case OutputFormat::table: {
      std::ostringstream out;
      for (const SweepRow& row : rows) {
        out << row.t << " " << row.length << " " << row.components << "\n";
      }
      emit(global, out.str());
      break;
    }
    case OutputFormat::json:
      emit(global, sweep_to_json(rows).dump(2) + "\n");
      break;
    case OutputFormat::csv:
      emit(global, sweep_to_csv(rows));
      break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact construction and analysis of deterministic Cantor sets on [0,1].\n"
      "Family specs: gamma1:q=5 | gamma2:q=4 | gamma3:p=1,q=4 | digit:base=6,A=0,1,4,5"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format: table|json|csv")
      ->capture_default_str();
  app.add_option("--fraction-style", global.fraction_style,
                 "Fraction rendering for endpoint tables: reduced|paper")
      ->capture_default_str();
  app.add_option("--precision", global.precision,
                 "Decimal digits for irrational approximations")
      ->capture_default_str();
  app.add_option("--out", global.out_file, "Write output to a file instead of stdout");

  // endpoints
  unsigned ep_p = 1, ep_q = 3, ep_n = 2;
  bool ep_serial = false;
  auto* endpoints = app.add_subcommand(
      "endpoints", "Endpoint table of the middle-(p/q) construction at stage n");
  endpoints->add_option("p", ep_p, "numerator of the ratio")->required();
  endpoints->add_option("q", ep_q, "denominator of the ratio")->required();
  endpoints->add_option("n", ep_n, "stage")->required();
  endpoints->add_flag("--serial", ep_serial, "use the serial reference recursion");
  endpoints->fallthrough();

  // gaps
  std::string gaps_spec;
  unsigned gaps_n = 1;
  bool gaps_conjectured = false;
  auto* gaps = app.add_subcommand(
      "gaps",
      "Deleted open intervals: the literal level-n formula family for gamma1/gamma2, the "
      "level-n middles for gamma3, the cumulative complement for digit specs");
  gaps->add_option("spec", gaps_spec, "family spec")->required();
  gaps->add_option("-n,--stage", gaps_n, "stage / level")->required();
  gaps->add_flag("--conjectured-correction", gaps_conjectured,
                 "gamma2 only: widened deletions (qk+1,qk+q-1)/q^n; NOT the literal "
                 "formula, offered for comparison experiments");
  gaps->fallthrough();

  // stage
  std::string stage_spec;
  unsigned stage_n = 1;
  bool stage_stats = false;
  auto* stage = app.add_subcommand("stage", "Stage-n retained set of a family");
  stage->add_option("spec", stage_spec, "family spec")->required();
  stage->add_option("-n,--stage", stage_n, "stage")->required();
  stage->add_flag("--stats", stage_stats,
                  "append total length, gap statistics and the finite-stage "
                  "thickness proxy");
  stage->fallthrough();

  // measure
  unsigned measure_p = 1, measure_q = 3;
  int measure_profile = -1;
  auto* measure =
      app.add_subcommand("measure", "Exact limit Lebesgue measure of gamma3(p/q)");
  measure->add_option("p", measure_p, "numerator")->required();
  measure->add_option("q", measure_q, "denominator")->required();
  measure->add_option("--profile", measure_profile,
                      "emit exact stage measures for n = 0..N");
  measure->fallthrough();

  // dim
  std::string dim_spec;
  unsigned dim_maps = 0, dim_ratio = 0;
  auto* dim = app.add_subcommand(
      "dim", "Hausdorff dimension log(K)/log(1/r) of a uniform-ratio family");
  dim->add_option("spec", dim_spec,
                  "family spec (a positive-measure gamma3 reports dimension 1)");
  dim->add_option("--maps", dim_maps, "map count K");
  dim->add_option("--ratio-reciprocal", dim_ratio, "reciprocal 1/r of the common ratio");
  dim->fallthrough();

  // cdf
  std::string cdf_spec, cdf_weights, cdf_x;
  unsigned cdf_samples = 0, cdf_n = 8;
  bool cdf_serial = false;
  auto* cdf = app.add_subcommand(
      "cdf", "Stage-n brackets of the self-similar measure's staircase CDF");
  cdf->add_option("spec", cdf_spec, "family spec")->required();
  cdf->add_option("-n,--stage", cdf_n, "stage")->required();
  cdf->add_option("-w,--weights", cdf_weights,
                  "comma-separated per-map weights (default uniform)");
  cdf->add_option("--x", cdf_x, "evaluate at a single rational point");
  cdf->add_option("--samples", cdf_samples, "equally spaced sample count (>= 2)");
  cdf->add_flag("--serial", cdf_serial, "use the serial reference sampler");
  cdf->fallthrough();

  // verify
  std::string verify_which;
  unsigned verify_p = 1, verify_q = 3, verify_n = 8;
  bool verify_conjectured = false;
  auto* verify = app.add_subcommand(
      "verify",
      "Cross-representation comparisons: gamma3 (recursion vs nested construction; a "
      "mismatch fails), digit (2q-ary digit set vs nested; measured), gamma2 (literal "
      "gap formula vs digit set; measured), corollary (all four middle-third "
      "representations; a mismatch fails)");
  verify->add_option("which", verify_which, "gamma3|digit|gamma2|corollary")->required();
  verify->add_option("-p", verify_p, "gamma3/digit ratio numerator");
  verify->add_option("-q", verify_q, "family parameter q");
  verify->add_option("-n,--stages", verify_n, "compare stages 0..n");
  verify->add_flag("--conjectured-correction", verify_conjectured,
                   "gamma2 only: compare the widened non-paper deletions instead");
  verify->fallthrough();

  // intersect
  std::string int_a, int_b, int_t, int_tmin = "-1", int_tmax = "1";
  unsigned int_sweep = 0, int_n = 4;
  bool int_serial = false;
  auto* intersect_cmd = app.add_subcommand(
      "intersect", "Stage-n intersection of one family with a translate of another");
  intersect_cmd->add_option("a", int_a, "first family spec")->required();
  intersect_cmd->add_option("b", int_b, "second family spec (translated by t)")->required();
  intersect_cmd->add_option("-n,--stage", int_n, "stage")->required();
  intersect_cmd->add_option("--t", int_t, "single rational offset (use --t=-1/3 form)");
  intersect_cmd->add_option("--sweep", int_sweep, "offset grid size (>= 2)");
  intersect_cmd->add_option("--t-min", int_tmin, "sweep start")->capture_default_str();
  intersect_cmd->add_option("--t-max", int_tmax, "sweep end")->capture_default_str();
  intersect_cmd->add_flag("--serial", int_serial, "use the serial reference sweep");
  intersect_cmd->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*endpoints) {
      validate(Gamma3{ep_p, ep_q});
      return run_endpoints(global, ep_p, ep_q, ep_n, ep_serial);
    }
    if (*gaps) {
      return run_gaps(global, parse_family_spec(gaps_spec), gaps_n, gaps_conjectured);
    }
    if (*stage) {
      return run_stage(global, parse_family_spec(stage_spec), stage_n, stage_stats);
    }
    if (*measure) {
      return run_measure(global, measure_p, measure_q, measure_profile);
    }
    if (*dim) {
      if (dim_spec.empty() && (dim_maps == 0 || dim_ratio == 0)) {
        throw std::invalid_argument("dim needs a family spec or --maps and --ratio-reciprocal");
      }
      return run_dim(global, dim_spec, dim_maps, dim_ratio);
    }
    if (*cdf) {
      if (cdf_x.empty() == (cdf_samples == 0)) {
        throw std::invalid_argument("cdf needs exactly one of --x or --samples");
      }
      return run_cdf(global, parse_family_spec(cdf_spec), cdf_weights, cdf_x,
                     cdf_samples, cdf_n, cdf_serial);
    }
    if (*verify) {
      return run_verify(global, verify_which, verify_p, verify_q, verify_n,
                        verify_conjectured);
    }
    if (*intersect_cmd) {
      if (int_t.empty() == (int_sweep == 0)) {
        throw std::invalid_argument("intersect needs exactly one of --t or --sweep");
      }
      return run_intersect(global, parse_family_spec(int_a), parse_family_spec(int_b),
                           int_t, int_sweep, int_tmin, int_tmax, int_n, int_serial);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 0;
}
