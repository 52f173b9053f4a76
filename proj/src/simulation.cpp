#include "zbgof/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "zbgof/errors.hpp"

namespace zbgof {

unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("ZBGOF_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1 && static_cast<unsigned long>(v) < hw) hw = static_cast<unsigned>(v);
  }
  return hw;
}

namespace {

// Runs body(r) for r in [0, count) over the worker pool; body must only
// write to its own slot so results are independent of scheduling.
template <typename Body>
void parallel_for(std::uint64_t count, const Body& body) {
  unsigned workers = worker_count();
  if (workers <= 1 || count < 2 * workers) {
    for (std::uint64_t r = 0; r < count; ++r) body(r);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto run = [&] {
    try {
      for (;;) {
        std::uint64_t r = next.fetch_add(64);
        if (r >= count) return;
        std::uint64_t hi = std::min(r + 64, count);
        for (; r < hi; ++r) body(r);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lk(error_mu);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<double> simulate_null_statistics(const CompetitorId& stat, std::size_t n,
                                             std::uint64_t replications, const SeedSpec& seed,
                                             VarianceDivisor divisor) {
  std::vector<double> out(replications);
  AlternativeSpec null = AlternativeSpec::normal(0.0, 1.0);
  parallel_for(replications, [&](std::uint64_t r) {
    auto eng = make_engine(seed, r);
    Sample s(draw_alternative(null, n, eng));
    out[r] = stat.evaluate(s, divisor);
  });
  return out;
}

double empirical_quantile(std::vector<double> values, double level) {
  if (values.empty()) throw InvalidParams("quantile of empty vector");
  if (!(level > 0.0 && level < 1.0)) throw InvalidParams("quantile level must lie in (0,1)");
  std::sort(values.begin(), values.end());
  double h = (static_cast<double>(values.size()) - 1.0) * level;
  std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= values.size()) return values.back();
  double frac = h - static_cast<double>(lo);
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

QuantileTable simulate_critical_values(std::size_t n, const TuningParam& a,
                                       const std::vector<double>& levels,
                                       std::uint64_t replications, const SeedSpec& seed) {
  if (replications < 1000) throw InvalidParams("need at least 1000 replications");
  CompetitorId stat{CompetitorId::Kind::Z, a.value()};
  auto values = simulate_null_statistics(stat, n, replications, seed);
  QuantileTable table;
  table.n = n;
  table.a = a.value();
  table.replications = replications;
  table.seed = seed;
  for (double level : levels) table.quantiles[level] = empirical_quantile(values, level);
  return table;
}

PowerEntry power_study(const AlternativeSpec& alt, std::size_t n, const CompetitorId& stat,
                       double alpha, std::uint64_t replications, const SeedSpec& seed,
                       double critical_value, VarianceDivisor divisor) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidParams("alpha must lie in (0,1)");
  alt.validate();
  std::vector<unsigned char> reject(replications, 0);
  const bool small = stat.rejects_small();
  parallel_for(replications, [&](std::uint64_t r) {
    auto eng = make_engine(seed, r);
    Sample s(draw_alternative(alt, n, eng));
    double v = stat.evaluate(s, divisor);
    reject[r] = small ? (v < critical_value) : (v > critical_value);
  });
  std::uint64_t hits = 0;
  for (unsigned char b : reject) hits += b;
  PowerEntry entry;
  entry.alternative = alt;
  entry.n = n;
  entry.statistic = stat;
  entry.alpha = alpha;
  entry.replications = replications;
  entry.rejection_rate = static_cast<double>(hits) / static_cast<double>(replications);
  entry.mc_std_error = std::sqrt(entry.rejection_rate * (1.0 - entry.rejection_rate) /
                                 static_cast<double>(replications));
  return entry;
}

double critical_from_table(const QuantileTable& table, const CompetitorId& stat, double alpha) {
  double level = stat.rejects_small() ? alpha : 1.0 - alpha;
  auto it = table.quantiles.find(level);
  if (it == table.quantiles.end()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "no simulated quantile at level %g", level);
    throw MissingCriticalValue(buf);
  }
  return it->second;
}

double critical_from_pearson(const PearsonFit& fit, double alpha) {
  return pearson_quantile(fit, 1.0 - alpha);
}

}  // namespace zbgof
