// Command-line front end: simple-method estimation, least-squares fitting,
// model comparison, Gini computation and curve emission for plotting.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lorenz/lorenz.hpp"

namespace {

using lorenz::DecileShares;
using lorenz::FitResult;
using lorenz::GofReport;
using lorenz::GroupedDistribution;
using lorenz::KakwaniParams;
using lorenz::LorenzCurve;
using lorenz::ReportTable;
using lorenz::WeightedParams;

enum class Format { table, csv, jsonl };

struct Display {
  Format format = Format::table;
  std::optional<int> precision;  // overrides per-column defaults

  int decimals_for(int column_default) const {
    return precision ? *precision : column_default;
  }
};

constexpr int kShareDecimals = 4;
constexpr int kParamDecimals = 2;
constexpr int kStatDecimals = 6;

std::optional<int> env_precision() {
  const char* env = std::getenv("LORENZ_PRECISION");
  if (!env || !*env) return std::nullopt;
  try {
    const int p = std::stoi(env);
    if (p >= 0 && p <= 17) return p;
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring invalid LORENZ_PRECISION value '" << env << "'\n";
  return std::nullopt;
}

void render_text_table(const ReportTable& table, std::ostream& out) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back(table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> rendered;
    rendered.reserve(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
      rendered.push_back(lorenz::detail::render_cell(row[i], table.column_precision(i)));
    cells.push_back(std::move(rendered));
  }
  std::vector<std::size_t> width(table.columns.size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << std::left << row[i];
    out << "\n";
  }
}

void render_jsonl(const ReportTable& table, std::ostream& out) {
  for (const auto& row : table.rows) {
    nlohmann::json obj;
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      if (const auto* text = std::get_if<std::string>(&row[i]))
        obj[table.columns[i]] = *text;
      else
        obj[table.columns[i]] = std::get<double>(row[i]);
    }
    out << obj.dump() << "\n";
  }
}

void emit(const ReportTable& table, const std::string& title, const Display& display) {
  switch (display.format) {
    case Format::table:
      if (!title.empty()) std::cout << "== " << title << " ==\n";
      render_text_table(table, std::cout);
      std::cout << "\n";
      break;
    case Format::csv:
      if (!title.empty()) std::cout << "# " << title << "\n";
      lorenz::write_report_csv(table, std::cout);
      break;
    case Format::jsonl:
      render_jsonl(table, std::cout);
      break;
  }
}

void emit_note(const std::string& note, const Display& display) {
  if (display.format == Format::csv)
    std::cout << "# " << note << "\n";
  else if (display.format == Format::table)
    std::cout << "note: " << note << "\n\n";
  // json-lines output stays strictly one object per row; notes go to stderr
  else
    std::cerr << "note: " << note << "\n";
}

std::vector<GroupedDistribution> load_records(const std::string& input_path, bool builtin) {
  if (builtin) return lorenz::builtin_dataset();
  std::vector<std::string> warnings;
  std::vector<GroupedDistribution> records;
  if (input_path == "-") {
    records = lorenz::parse_grouped_csv(std::cin, &warnings);
  } else {
    std::ifstream in(input_path);
    if (!in) throw std::invalid_argument("cannot open input file: " + input_path);
    records = lorenz::parse_grouped_csv(in, &warnings);
  }
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  return records;
}

ReportTable gof_table(const std::vector<std::pair<std::string, GofReport>>& reports,
                      const Display& display) {
  ReportTable t;
  t.columns = {"country", "r_squared", "mse", "mae", "mas", "iim", "ks_d", "ks_p", "ks_method"};
  const int stat = display.decimals_for(kStatDecimals);
  t.precision = {-1, stat, stat, stat, stat, stat, stat, stat, -1};
  for (const auto& [name, r] : reports)
    t.rows.push_back({name, r.r_squared, r.mse, r.mae, r.mas, r.iim, r.ks_d, r.ks_p,
                      std::string(r.ks_method)});
  return t;
}

// ---------------------------------------------------------------- simple

struct SimpleArgs {
  double gini = 0.0;
  double m = 0.10;
  double bottom = 0.0;
  double top = 0.0;
  std::optional<double> ratio;
  std::string actual_file;
  bool clamp = false;
};

int cmd_simple(const SimpleArgs& args, const Display& display) {
  lorenz::TailShareObservation obs;
  obs.m = args.m;
  obs.bottom_share = args.bottom;
  obs.top_share = args.top;
  obs.ratio = args.ratio;
  const lorenz::SimpleEstimate estimate = lorenz::estimate_simple(args.gini, obs, args.clamp);
  const LorenzCurve curve(estimate.params);

  ReportTable params;
  params.columns = {"p", "k", "gini_closed_form", "degenerate", "clamped"};
  const int pd = display.decimals_for(kParamDecimals);
  params.precision = {pd, pd, display.decimals_for(kStatDecimals), -1, -1};
  params.rows.push_back({estimate.params.p, estimate.params.k,
                         lorenz::gini_weighted_closed(estimate.params).value,
                         std::string(estimate.degenerate ? "yes" : "no"),
                         std::string(estimate.clamped ? "yes" : "no")});
  emit(params, "simple-method estimate", display);
  if (estimate.degenerate)
    emit_note("gini = 0 is the degenerate case: every k yields the diagonal; k = 0.5 by "
              "convention",
              display);
  if (estimate.clamped)
    emit_note("raw k fell outside [0, 1] and was clamped to the nearest bound", display);
  emit_note("the estimate matches the bottom/top share ratio, not the individual shares",
            display);

  const DecileShares est = lorenz::decile_shares(curve);
  std::optional<DecileShares> actual;
  if (!args.actual_file.empty()) {
    const auto records = load_records(args.actual_file, false);
    for (const auto& rec : records)
      if (rec.deciles) {
        actual = rec.deciles;
        break;
      }
    if (!actual)
      throw std::invalid_argument("no record with decile shares in " + args.actual_file);
  }

  ReportTable shares;
  shares.columns = actual ? std::vector<std::string>{"decile", "actual", "estimate"}
                          : std::vector<std::string>{"decile", "estimate"};
  const int sd = display.decimals_for(kShareDecimals);
  shares.precision = actual ? std::vector<int>{-1, sd, sd} : std::vector<int>{-1, sd};
  for (int i = 0; i < 10; ++i) {
    std::vector<ReportTable::Cell> row{std::string("D") + std::to_string(i + 1)};
    if (actual) row.push_back(actual->values[i]);
    row.push_back(est[i]);
    shares.rows.push_back(std::move(row));
  }
  emit(shares, "estimated income shares by decile", display);

  if (actual) {
    const std::vector<std::pair<std::string, GofReport>> reports{
        {"estimate", lorenz::full_report(*actual, est)}};
    emit(gof_table(reports, display), "goodness of fit", display);
  }
  return 0;
}

// ------------------------------------------------------------------- fit

struct FitArgs {
  std::string input;
  bool builtin = false;
  std::string model = "weighted";
  std::string objective = "cumulative";
  lorenz::SimplexConfig config;
};

lorenz::FitObjective parse_objective(const std::string& name) {
  if (name == "cumulative") return lorenz::FitObjective::cumulative;
  if (name == "shares") return lorenz::FitObjective::shares;
  throw std::invalid_argument("unknown objective: " + name);
}

int cmd_fit(const FitArgs& args, const Display& display) {
  const auto records = load_records(args.input, args.builtin);
  const lorenz::FitObjective objective = parse_objective(args.objective);

  ReportTable params;
  const int pd = display.decimals_for(kParamDecimals);
  const int stat = display.decimals_for(kStatDecimals);
  if (args.model == "weighted") {
    params.columns = {"country", "year", "p", "k", "sse", "r_squared_fit",
                      "converged", "gini_observed", "gini_estimated"};
    params.precision = {-1, 0, pd, pd, -1, stat, -1, stat, stat};
  } else {
    params.columns = {"country", "year", "a", "alpha", "beta", "sse", "r_squared_fit",
                      "converged", "gini_observed", "gini_estimated"};
    params.precision = {-1, 0, pd, pd, pd, -1, stat, -1, stat, stat};
  }

  ReportTable shares;
  shares.columns = {"decile"};
  const int sd = display.decimals_for(kShareDecimals);
  shares.precision = {-1};
  for (int i = 0; i < 10; ++i)
    shares.rows.push_back({std::string("D") + std::to_string(i + 1)});

  std::vector<std::pair<std::string, GofReport>> reports;
  for (const auto& rec : records) {
    if (!rec.deciles) {
      std::cerr << "warning: skipping " << rec.country << " " << rec.year
                << ": no decile shares\n";
      continue;
    }
    DecileShares est;
    std::vector<ReportTable::Cell> row{rec.country, static_cast<double>(rec.year)};
    if (args.model == "weighted") {
      std::vector<WeightedParams> extra;
      if (const auto* ten = rec.tail_observation(0.10)) {
        const auto simple = lorenz::estimate_simple(rec.gini, *ten, /*clamp=*/true);
        extra.push_back(simple.params);
      }
      const FitResult<WeightedParams> fit =
          lorenz::fit_weighted(*rec.deciles, objective, args.config, extra);
      est = lorenz::decile_shares(LorenzCurve(fit.params));
      row.insert(row.end(),
                 {fit.params.p, fit.params.k, fit.sse, fit.r_squared,
                  std::string(fit.converged ? "yes" : "no"), rec.gini,
                  lorenz::gini_weighted_closed(fit.params).value});
    } else if (args.model == "kakwani") {
      const FitResult<KakwaniParams> fit =
          lorenz::fit_kakwani(*rec.deciles, objective, args.config);
      est = lorenz::decile_shares(LorenzCurve(fit.params));
      row.insert(row.end(),
                 {fit.params.a, fit.params.alpha, fit.params.beta, fit.sse, fit.r_squared,
                  std::string(fit.converged ? "yes" : "no"), rec.gini,
                  lorenz::gini_kakwani_beta(fit.params).value});
    } else {
      throw std::invalid_argument("unknown model: " + args.model);
    }
    params.rows.push_back(std::move(row));
    shares.columns.push_back(rec.country + " actual");
    shares.columns.push_back(rec.country + " estimate");
    shares.precision.push_back(sd);
    shares.precision.push_back(sd);
    for (int i = 0; i < 10; ++i) {
      shares.rows[i].push_back(rec.deciles->values[i]);
      shares.rows[i].push_back(est[i]);
    }
    reports.emplace_back(rec.country, lorenz::full_report(*rec.deciles, est));
  }
  emit(params, "fitted parameters (" + args.model + ", " + args.objective + " objective)",
       display);
  emit(shares, "income shares by decile", display);
  emit(gof_table(reports, display), "goodness of fit", display);
  return 0;
}

// --------------------------------------------------------------- compare

int cmd_compare(const std::string& input, bool builtin, const lorenz::SimplexConfig& config,
                const Display& display) {
  const auto records = load_records(input, builtin);
  const int pd = display.decimals_for(kParamDecimals);
  const int sd = display.decimals_for(kShareDecimals);
  const int stat = display.decimals_for(kStatDecimals);

  ReportTable params;
  params.columns = {"country", "p", "k", "a", "alpha", "beta"};
  params.precision = {-1, pd, pd, pd, pd, pd};

  ReportTable shares;
  shares.columns = {"decile"};
  shares.precision = {-1};
  for (int i = 0; i < 10; ++i)
    shares.rows.push_back({std::string("D") + std::to_string(i + 1)});

  ReportTable gini;
  gini.columns = {"country", "observed", "weighted_closed_form", "kakwani_beta_function",
                  "kakwani_grouped_integration"};
  gini.precision = {-1, stat, stat, stat, stat};

  std::vector<std::pair<std::string, GofReport>> reports;
  for (const auto& rec : records) {
    if (!rec.deciles) {
      std::cerr << "warning: skipping " << rec.country << " " << rec.year
                << ": no decile shares\n";
      continue;
    }
    const auto points = lorenz::points_from_decile_shares(*rec.deciles);
    const auto wfit = lorenz::fit_weighted(points, config);
    const auto kfit = lorenz::fit_kakwani(points, config);
    const DecileShares west = lorenz::decile_shares(LorenzCurve(wfit.params));
    const DecileShares kest = lorenz::decile_shares(LorenzCurve(kfit.params));

    params.rows.push_back({rec.country, wfit.params.p, wfit.params.k, kfit.params.a,
                           kfit.params.alpha, kfit.params.beta});
    shares.columns.insert(shares.columns.end(),
                          {rec.country + " actual", rec.country + " weighted",
                           rec.country + " kakwani"});
    shares.precision.insert(shares.precision.end(), {sd, sd, sd});
    for (int i = 0; i < 10; ++i) {
      shares.rows[i].push_back(rec.deciles->values[i]);
      shares.rows[i].push_back(west[i]);
      shares.rows[i].push_back(kest[i]);
    }
    reports.emplace_back(rec.country + " weighted", lorenz::full_report(*rec.deciles, west));
    reports.emplace_back(rec.country + " kakwani", lorenz::full_report(*rec.deciles, kest));
    gini.rows.push_back({rec.country, rec.gini, lorenz::gini_weighted_closed(wfit.params).value,
                         lorenz::gini_kakwani_beta(kfit.params).value,
                         lorenz::gini_grouped(kest).value});
  }
  emit(params, "fitted parameters", display);
  emit(shares, "income shares by decile", display);
  emit(gof_table(reports, display), "goodness of fit", display);
  emit(gini, "gini index comparison", display);
  emit_note("kakwani_grouped_integration integrates the fitted curve's decile points by the "
            "trapezoid rule, the grouped-data convention; kakwani_beta_function is the exact "
            "2aB(alpha+1, beta+1)",
            display);
  return 0;
}

// ----------------------------------------------------------------- curve

struct CurveArgs {
  std::string model = "weighted";
  std::optional<double> p, k, a, alpha, beta;
  std::optional<double> gini, m, bottom, top, ratio;
  int samples = 101;
  bool with_diagonal = false;
};

int cmd_curve(const CurveArgs& args, const Display& display) {
  std::optional<LorenzCurve> curve;
  if (args.model == "weighted") {
    if (args.gini) {
      lorenz::TailShareObservation obs;
      obs.m = args.m.value_or(0.10);
      obs.bottom_share = args.bottom.value_or(0.0);
      obs.top_share = args.top.value_or(0.0);
      obs.ratio = args.ratio;
      curve = LorenzCurve(lorenz::estimate_simple(*args.gini, obs).params);
    } else if (args.p && args.k) {
      curve = LorenzCurve(WeightedParams{*args.p, *args.k});
    } else {
      throw std::invalid_argument("weighted curve needs --p and --k, or --gini with tail flags");
    }
  } else if (args.model == "kakwani") {
    if (!(args.a && args.alpha && args.beta))
      throw std::invalid_argument("kakwani curve needs --a, --alpha and --beta");
    curve = LorenzCurve(KakwaniParams{*args.a, *args.alpha, *args.beta});
  } else {
    throw std::invalid_argument("unknown model: " + args.model);
  }
  if (args.samples < 2) throw std::invalid_argument("--samples must be >= 2");

  ReportTable t;
  t.columns = args.with_diagonal ? std::vector<std::string>{"x", "y", "diagonal"}
                                 : std::vector<std::string>{"x", "y"};
  const int sd = display.decimals_for(kStatDecimals);
  t.precision = args.with_diagonal ? std::vector<int>{sd, sd, sd} : std::vector<int>{sd, sd};
  for (int i = 0; i < args.samples; ++i) {
    const double x = static_cast<double>(i) / (args.samples - 1);
    std::vector<ReportTable::Cell> row{x, (*curve)(x)};
    if (args.with_diagonal) row.push_back(x);
    t.rows.push_back(std::move(row));
  }
  emit(t, "lorenz curve points", display);
  return 0;
}

// ------------------------------------------------------------------ gini

int cmd_gini(const std::string& model, const std::string& method, std::optional<double> p,
             std::optional<double> k, std::optional<double> a, std::optional<double> alpha,
             std::optional<double> beta) {
  lorenz::GiniValue value;
  if (model == "weighted") {
    if (!(p && k)) throw std::invalid_argument("weighted model needs --p and --k");
    const WeightedParams params{*p, *k};
    if (method == "closed")
      value = lorenz::gini_weighted_closed(params);
    else if (method == "quadrature")
      value = lorenz::gini_quadrature(LorenzCurve(params));
    else
      throw std::invalid_argument("method '" + method +
                                  "' is incompatible with the weighted model (use closed or "
                                  "quadrature)");
  } else if (model == "kakwani") {
    if (!(a && alpha && beta))
      throw std::invalid_argument("kakwani model needs --a, --alpha and --beta");
    const KakwaniParams params{*a, *alpha, *beta};
    if (method == "beta")
      value = lorenz::gini_kakwani_beta(params);
    else if (method == "quadrature")
      value = lorenz::gini_quadrature(LorenzCurve(params));
    else
      throw std::invalid_argument(
          "method '" + method + "' is incompatible with the kakwani model (use beta or "
          "quadrature)");
  } else {
    throw std::invalid_argument("unknown model: " + model);
  }
  std::cout << std::fixed << std::setprecision(6) << value.value << "\n";
  return 0;
}

// ---------------------------------------------------------------- report

int cmd_report_paper(const Display& display) {
  const auto& records = lorenz::builtin_dataset();

  for (double m : {0.10, 0.05}) {
    ReportTable t;
    t.columns = {"country", "year", "gini", "bottom", "top", "ratio", "p", "k", "r_squared"};
    const int pd = display.decimals_for(kParamDecimals);
    t.precision = {-1, 0, -1, -1, -1, -1, pd, pd, display.decimals_for(kShareDecimals)};
    for (const auto& rec : records) {
      const auto* obs = rec.tail_observation(m);
      const auto estimate = lorenz::estimate_simple(rec.gini, *obs);
      const DecileShares est = lorenz::decile_shares(LorenzCurve(estimate.params));
      t.rows.push_back({rec.country, static_cast<double>(rec.year), rec.gini, obs->bottom_share,
                        obs->top_share, obs->effective_ratio(), estimate.params.p,
                        estimate.params.k,
                        lorenz::r_squared(rec.deciles->values, est.values)});
    }
    std::ostringstream title;
    title << "simple method, " << static_cast<int>(m * 100 + 0.5) << "% tails";
    emit(t, title.str(), display);

    ReportTable st;
    st.columns = {"decile"};
    st.precision = {-1};
    const int sd = display.decimals_for(kShareDecimals);
    for (int i = 0; i < 10; ++i) st.rows.push_back({std::string("D") + std::to_string(i + 1)});
    std::vector<std::pair<std::string, GofReport>> reports;
    for (const auto& rec : records) {
      const auto* obs = rec.tail_observation(m);
      const auto estimate = lorenz::estimate_simple(rec.gini, *obs);
      const DecileShares est = lorenz::decile_shares(LorenzCurve(estimate.params));
      st.columns.insert(st.columns.end(), {rec.country + " actual", rec.country + " estimate"});
      st.precision.insert(st.precision.end(), {sd, sd});
      for (int i = 0; i < 10; ++i) {
        st.rows[i].push_back(rec.deciles->values[i]);
        st.rows[i].push_back(est[i]);
      }
      reports.emplace_back(rec.country, lorenz::full_report(*rec.deciles, est));
    }
    emit(st, title.str() + ": income shares by decile", display);
    emit(gof_table(reports, display), title.str() + ": goodness of fit", display);
  }

  FitArgs fit_args;
  fit_args.builtin = true;
  fit_args.model = "weighted";
  cmd_fit(fit_args, display);
  fit_args.model = "kakwani";
  cmd_fit(fit_args, display);
  return cmd_compare("", true, lorenz::SimplexConfig{}, display);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorenz curve estimation from sparse inequality indicators"};
  app.require_subcommand(1);

  Display display;
  display.precision = env_precision();
  std::string format = "table";
  std::optional<int> precision_flag;
  app.add_option("--format", format, "output format: table, csv, jsonl")
      ->check(CLI::IsMember({"table", "csv", "jsonl"}))
      ->capture_default_str();
  app.add_option("--precision", precision_flag,
                 "decimal places for all numeric output (overrides LORENZ_PRECISION)");

  SimpleArgs simple_args;
  CLI::App* simple = app.add_subcommand("simple",
                                        "estimate (p, k) from the Gini index and one tail pair");
  simple->add_option("--gini", simple_args.gini, "observed Gini index")->required();
  simple->add_option("--m", simple_args.m, "tail fraction, e.g. 0.10")->required();
  simple->add_option("--bottom", simple_args.bottom, "bottom m-fraction income share")
      ->required();
  simple->add_option("--top", simple_args.top, "top m-fraction income share")->required();
  double ratio_value = 0.0;
  CLI::Option* ratio_opt =
      simple->add_option("--ratio", ratio_value,
                         "published bottom/top ratio, when more precise than the shares");
  simple->add_option("--actual", simple_args.actual_file,
                     "grouped CSV with actual decile shares for goodness of fit");
  simple->add_flag("--clamp", simple_args.clamp, "clamp out-of-range k to [0, 1]");

  FitArgs fit_args;
  CLI::App* fit = app.add_subcommand("fit", "least-squares fit to decile data");
  fit->add_option("--input", fit_args.input, "grouped CSV input ('-' for stdin)");
  fit->add_flag("--builtin", fit_args.builtin, "use the built-in four-country dataset");
  fit->add_option("--model", fit_args.model, "weighted or kakwani")
      ->check(CLI::IsMember({"weighted", "kakwani"}))
      ->capture_default_str();
  fit->add_option("--objective", fit_args.objective, "cumulative or shares")
      ->check(CLI::IsMember({"cumulative", "shares"}))
      ->capture_default_str();

  std::string compare_input;
  bool compare_builtin = false;
  CLI::App* compare = app.add_subcommand("compare", "weighted vs kakwani side by side");
  compare->add_option("--input", compare_input, "grouped CSV input");
  compare->add_flag("--builtin", compare_builtin, "use the built-in four-country dataset");

  CurveArgs curve_args;
  CLI::App* curve = app.add_subcommand("curve", "emit plot-ready curve points");
  curve->add_option("--model", curve_args.model, "weighted or kakwani")
      ->check(CLI::IsMember({"weighted", "kakwani"}))
      ->capture_default_str();
  curve->add_option("--p", curve_args.p, "weighted exponent p");
  curve->add_option("--k", curve_args.k, "weighted pareto weight k");
  curve->add_option("--a", curve_args.a, "kakwani scale a");
  curve->add_option("--alpha", curve_args.alpha, "kakwani alpha");
  curve->add_option("--beta", curve_args.beta, "kakwani beta");
  curve->add_option("--gini", curve_args.gini, "estimate weighted params from gini + tails");
  curve->add_option("--m", curve_args.m, "tail fraction for --gini");
  curve->add_option("--bottom", curve_args.bottom, "bottom share for --gini");
  curve->add_option("--top", curve_args.top, "top share for --gini");
  curve->add_option("--ratio", curve_args.ratio, "tail ratio for --gini");
  curve->add_option("--samples", curve_args.samples, "number of evenly spaced points")
      ->capture_default_str();
  curve->add_flag("--with-diagonal", curve_args.with_diagonal, "also emit the diagonal");

  std::string gini_model = "weighted", gini_method = "closed";
  std::optional<double> gp, gk, ga, galpha, gbeta;
  CLI::App* gini = app.add_subcommand("gini", "Gini index of a parameterized curve");
  gini->add_option("--model", gini_model, "weighted or kakwani")
      ->check(CLI::IsMember({"weighted", "kakwani"}))
      ->capture_default_str();
  gini->add_option("--method", gini_method, "closed, quadrature or beta")
      ->check(CLI::IsMember({"closed", "quadrature", "beta"}))
      ->capture_default_str();
  gini->add_option("--p", gp, "weighted exponent p");
  gini->add_option("--k", gk, "weighted pareto weight k");
  gini->add_option("--a", ga, "kakwani scale a");
  gini->add_option("--alpha", galpha, "kakwani alpha");
  gini->add_option("--beta", gbeta, "kakwani beta");

  bool report_paper = false;
  CLI::App* report = app.add_subcommand("report", "bundled report runs");
  report->add_flag("--paper", report_paper, "run the full four-country pipeline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (format == "csv") display.format = Format::csv;
  else if (format == "jsonl") display.format = Format::jsonl;
  if (precision_flag) display.precision = precision_flag;
  if (ratio_opt->count() > 0) simple_args.ratio = ratio_value;

  try {
    if (simple->parsed()) return cmd_simple(simple_args, display);
    if (fit->parsed()) {
      if (!fit_args.builtin && fit_args.input.empty())
        throw std::invalid_argument("fit: provide --input FILE or --builtin");
      return cmd_fit(fit_args, display);
    }
    if (compare->parsed()) {
      if (!compare_builtin && compare_input.empty())
        throw std::invalid_argument("compare: provide --input FILE or --builtin");
      return cmd_compare(compare_input, compare_builtin, lorenz::SimplexConfig{}, display);
    }
    if (curve->parsed()) return cmd_curve(curve_args, display);
    if (gini->parsed()) return cmd_gini(gini_model, gini_method, gp, gk, ga, galpha, gbeta);
    if (report->parsed()) {
      if (!report_paper) throw std::invalid_argument("report: only --paper is available");
      return cmd_report_paper(display);
    }
  } catch (const lorenz::KOutOfRangeError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const lorenz::NoValidFitError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const lorenz::NonConvergenceError<WeightedParams>& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 4;
  } catch (const lorenz::NonConvergenceError<KakwaniParams>& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 4;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
