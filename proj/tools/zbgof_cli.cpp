// Command-line front end: test a data file for normality, inspect the null
// theory (cumulants, quantiles), and run power / reproduction studies.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "zbgof/alternatives.hpp"
#include "zbgof/competitors.hpp"
#include "zbgof/cumulants.hpp"
#include "zbgof/delta.hpp"
#include "zbgof/errors.hpp"
#include "zbgof/pearson.hpp"
#include "zbgof/simulation.hpp"
#include "zbgof/tables.hpp"
#include "zbgof/z_statistic.hpp"

namespace {

using nlohmann::json;
using namespace zbgof;

struct Options {
  std::string input_path;
  double a = 1.0;
  double alpha = 0.05;
  std::string method = "pearson";
  std::uint64_t reps = 20000;
  std::uint64_t seed = 20260826;
  std::string alt;
  std::string stat;
  std::size_t n = 50;
  std::string output = "human";
  bool asymptotic = false;
  std::string table = "table1";
};

// newline-separated reals; '#' starts a comment; blank lines skipped
std::vector<double> read_data_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::vector<double> values;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(b, e - b + 1);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("bad number '" + tok + "' at line " + std::to_string(lineno), lineno);
    }
  }
  if (values.empty()) throw ParseError("no data in '" + path + "'", lineno);
  return values;
}

void emit(const Options& opt, const json& human_order, const std::string& human_text) {
  if (opt.output == "json")
    std::printf("%s\n", human_order.dump(2).c_str());
  else
    std::fputs(human_text.c_str(), stdout);
}

int run_test(const Options& opt) {
  Sample sample(read_data_file(opt.input_path));
  TuningParam a(opt.a);
  double z = z_statistic(scale_residuals(sample), a);

  double p_value, critical;
  std::string provenance;
  if (opt.method == "pearson") {
    PearsonFit fit = pearson_fit(moment_summary(a));
    p_value = pearson_pvalue(fit, z);
    critical = pearson_quantile(fit, 1.0 - opt.alpha);
    provenance = "pearson fit of the asymptotic null law";
  } else {
    if (opt.reps < 1000) throw InvalidParams("montecarlo method needs --reps >= 1000");
    CompetitorId stat{CompetitorId::Kind::Z, opt.a};
    auto null_values =
        simulate_null_statistics(stat, sample.size(), opt.reps, SeedSpec{opt.seed, 0});
    std::uint64_t exceed = 0;
    for (double v : null_values) exceed += v >= z;
    p_value = static_cast<double>(exceed + 1) / static_cast<double>(opt.reps + 1);
    critical = empirical_quantile(null_values, 1.0 - opt.alpha);
    provenance = "simulated null distribution (" + std::to_string(opt.reps) + " replications)";
  }
  bool reject = z > critical;

  json out{{"command", "test"},
           {"input", opt.input_path},
           {"n", sample.size()},
           {"a", opt.a},
           {"alpha", opt.alpha},
           {"method", opt.method},
           {"statistic", z},
           {"p_value", p_value},
           {"critical_value", critical},
           {"critical_value_source", provenance},
           {"reject", reject}};
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "Z_{n,a} normality test\n"
                "  n               = %zu\n"
                "  a               = %g\n"
                "  statistic       = %.6f\n"
                "  p-value         = %.6f\n"
                "  critical value  = %.6f  (alpha = %g, %s)\n"
                "  reject = %s\n",
                sample.size(), opt.a, z, p_value, critical, opt.alpha, provenance.c_str(),
                reject ? "true" : "false");
  emit(opt, out, buf);
  return 0;
}

int run_cumulants(const Options& opt) {
  TuningParam a(opt.a);
  CumulantSet set = cumulant_set(a);
  MomentSummary m = moment_summary(set);
  json out{{"command", "cumulants"},
           {"a", opt.a},
           {"kappa", {set.kappa[0], set.kappa[1], set.kappa[2], set.kappa[3]}},
           {"mean", m.mean},
           {"variance", m.variance},
           {"sqrt_beta1", m.sqrt_beta1},
           {"beta2", m.beta2}};
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "cumulants of Z_{inf,a} at a = %g\n"
                "  kappa1 = %.10g\n  kappa2 = %.10g\n  kappa3 = %.10g\n  kappa4 = %.10g\n"
                "  mean = %.4f  variance = %.4f  sqrt(beta1) = %.4f  beta2 = %.4f\n",
                opt.a, set.kappa[0], set.kappa[1], set.kappa[2], set.kappa[3], m.mean, m.variance,
                m.sqrt_beta1, m.beta2);
  emit(opt, out, buf);
  return 0;
}

int run_quantiles(const Options& opt) {
  const std::vector<double> levels = {0.01, 0.05, 0.1, 0.9, 0.95, 0.99};
  TuningParam a(opt.a);
  json qmap = json::object();
  std::string text = "quantiles at a = " + std::to_string(opt.a) + "\n";
  if (opt.asymptotic) {
    PearsonFit fit = pearson_fit(moment_summary(a));
    for (double q : levels) {
      double v = pearson_quantile(fit, q);
      char key[16], line[96];
      std::snprintf(key, sizeof key, "%g", q);
      std::snprintf(line, sizeof line, "  q = %-5g -> %.5f%s\n", q, v,
                    q <= 0.1 ? "  (lower tail: approximation unreliable)" : "");
      qmap[key] = v;
      text += line;
    }
    json out{{"command", "quantiles"}, {"a", opt.a}, {"source", "asymptotic-pearson"},
             {"quantiles", qmap}};
    emit(opt, out, text);
    return 0;
  }
  if (opt.reps < 1000) throw InvalidParams("simulated quantiles need --reps >= 1000");
  QuantileTable table =
      simulate_critical_values(opt.n, a, levels, opt.reps, SeedSpec{opt.seed, 0});
  for (const auto& [q, v] : table.quantiles) {
    char key[16], line[64];
    std::snprintf(key, sizeof key, "%g", q);
    std::snprintf(line, sizeof line, "  q = %-5g -> %.5f\n", q, v);
    qmap[key] = v;
    text += line;
  }
  json out{{"command", "quantiles"}, {"a", opt.a},       {"n", opt.n},
           {"replications", opt.reps}, {"seed", opt.seed}, {"source", "simulated"},
           {"quantiles", qmap}};
  emit(opt, out, text);
  return 0;
}

int run_power(const Options& opt) {
  if (opt.alt.empty()) throw UnknownAlternativeName("power needs --alt");
  AlternativeSpec alt = parse_alternative(opt.alt);
  CompetitorId stat = opt.stat.empty() ? CompetitorId{CompetitorId::Kind::Z, opt.a}
                                       : CompetitorId::parse(opt.stat);
  auto null_values = simulate_null_statistics(stat, opt.n, opt.reps, SeedSpec{opt.seed, 0},
                                              VarianceDivisor::kNminusOne);
  double critical =
      empirical_quantile(null_values, stat.rejects_small() ? opt.alpha : 1.0 - opt.alpha);
  PowerEntry entry =
      power_study(alt, opt.n, stat, opt.alpha, opt.reps, SeedSpec{opt.seed, 1}, critical);
  json out{{"command", "power"},
           {"alternative", alt.name()},
           {"statistic", stat.name()},
           {"n", opt.n},
           {"alpha", opt.alpha},
           {"replications", opt.reps},
           {"seed", opt.seed},
           {"critical_value", critical},
           {"rejection_rate", entry.rejection_rate},
           {"mc_std_error", entry.mc_std_error}};
  char buf[384];
  std::snprintf(buf, sizeof buf,
                "power of %s against %s, n = %zu, alpha = %g\n"
                "  critical value = %.6f (self-simulated)\n"
                "  rejection rate = %.4f  (MC std error %.4f, %llu replications)\n",
                stat.name().c_str(), alt.name().c_str(), opt.n, opt.alpha, critical,
                entry.rejection_rate, entry.mc_std_error,
                static_cast<unsigned long long>(opt.reps));
  emit(opt, out, buf);
  return 0;
}

int run_delta(const Options& opt) {
  if (opt.alt.empty()) throw UnknownAlternativeName("delta needs --alt");
  AlternativeSpec alt = parse_alternative(opt.alt);
  DeltaResult res =
      delta_discrepancy(alt, QuadratureSpec{}, opt.reps, SeedSpec{opt.seed, 0},
                        TuningParam(opt.a));
  const char* method =
      res.method == DeltaResult::Method::AnalyticCf ? "analytic-cf" : "monte-carlo-cf";
  json out{{"command", "delta"},  {"alternative", alt.name()}, {"a", opt.a},
           {"delta", res.delta},  {"std_error", res.std_error}, {"method", method}};
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "delta discrepancy of %s at a = %g\n  delta = %.8g  (std error %.3g, %s)\n",
                alt.name().c_str(), opt.a, res.delta, res.std_error, method);
  emit(opt, out, buf);
  return 0;
}

int run_reproduce(const Options& opt) {
  TableId id;
  if (opt.table == "table1")
    id = TableId::Table1;
  else if (opt.table == "table2")
    id = TableId::Table2;
  else if (opt.table == "table3" || opt.table == "table3-subset")
    id = TableId::Table3Subset;
  else
    throw InvalidParams("unknown table '" + opt.table + "'");
  ReplicationBudget budget;
  budget.table2_reps = opt.reps;
  budget.table3_reps = opt.reps;
  json report = reproduce_table(id, budget, SeedSpec{opt.seed, 0});
  if (opt.output == "json") {
    std::printf("%s\n", report.dump(2).c_str());
    return 0;
  }
  std::printf("reproduction report: %s\n", report["table"].get<std::string>().c_str());
  for (const auto& cell : report["cells"]) {
    if (cell.contains("error")) {
      std::printf("  %-44s ERROR %s\n", cell["cell_id"].get<std::string>().c_str(),
                  cell["error"].get<std::string>().c_str());
      continue;
    }
    std::printf("  %-44s paper %-10.5g got %-10.5g %s\n",
                cell["cell_id"].get<std::string>().c_str(), cell["paper_value"].get<double>(),
                cell["reproduced_value"].get<double>(),
                cell["pass"].get<bool>() ? "pass" : "FAIL");
  }
  std::printf("all_pass = %s\n", report["all_pass"].get<bool>() ? "true" : "false");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-bias transform normality test Z_{n,a}"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--a", opt.a, "tuning parameter of the Gaussian weight")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "master seed");
    cmd->add_option("--output", opt.output, "output format")
        ->check(CLI::IsMember({"human", "json"}));
  };

  CLI::App* test = app.add_subcommand("test", "test a data file for normality");
  test->add_option("input", opt.input_path, "data file (newline-separated reals, '#' comments)")
      ->required();
  test->add_option("--alpha", opt.alpha, "test level")->check(CLI::Range(1e-12, 1.0));
  test->add_option("--method", opt.method, "p-value method")
      ->check(CLI::IsMember({"pearson", "montecarlo"}));
  test->add_option("--reps", opt.reps, "montecarlo replications");
  add_common(test);

  CLI::App* cumulants = app.add_subcommand("cumulants", "cumulants of the asymptotic null law");
  add_common(cumulants);

  CLI::App* quantiles = app.add_subcommand("quantiles", "null critical values");
  quantiles->add_flag("--asymptotic", opt.asymptotic, "use the Pearson fit of Z_{inf,a}");
  quantiles->add_option("--n", opt.n, "sample size for simulated quantiles");
  quantiles->add_option("--reps", opt.reps, "replications");
  add_common(quantiles);

  CLI::App* power = app.add_subcommand("power", "rejection rate against an alternative");
  power->add_option("--alt", opt.alt, "alternative, e.g. t(3), nmix(0.5,1,4)")->required();
  power->add_option("--n", opt.n, "sample size");
  power->add_option("--alpha", opt.alpha, "test level")->check(CLI::Range(1e-12, 1.0));
  power->add_option("--reps", opt.reps, "replications");
  power->add_option("--stat", opt.stat, "statistic, e.g. z(1), hv(2.5), bhep, sw");
  add_common(power);

  CLI::App* delta = app.add_subcommand("delta", "population discrepancy of an alternative");
  delta->add_option("--alt", opt.alt, "alternative")->required();
  delta->add_option("--reps", opt.reps, "Monte Carlo budget (non-analytic cf only)");
  add_common(delta);

  CLI::App* reproduce = app.add_subcommand("reproduce", "re-derive published table cells");
  reproduce->add_option("--table", opt.table, "table1 | table2 | table3")->required();
  reproduce->add_option("--reps", opt.reps, "replication budget");
  add_common(reproduce);

  CLI11_PARSE(app, argc, argv);

  try {
    if (test->parsed()) return run_test(opt);
    if (cumulants->parsed()) return run_cumulants(opt);
    if (quantiles->parsed()) return run_quantiles(opt);
    if (power->parsed()) return run_power(opt);
    if (delta->parsed()) return run_delta(opt);
    if (reproduce->parsed()) return run_reproduce(opt);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const DegenerateSample& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const TooFewObservations& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
