#include "isodiam/poisoning.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "isodiam/error.hpp"
#include "isodiam/random.hpp"

namespace isodiam {

namespace {

constexpr std::uint64_t kBatchSize = 1u << 16;
constexpr double kZ95 = 1.959963984540054;

std::uint64_t count_batch(const PoisonStrategy& strategy, const PoisonConfig& config, std::uint64_t batch,
                          std::uint64_t size) {
  Rng rng(derive_seed(config.seed, batch));
  const double reach = config.R - 1.0;
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < size;) {
    const Point p{rng.uniform(-reach, reach), rng.uniform(-reach, reach)};
    if (p.x * p.x + p.y * p.y > reach * reach) continue;
    ++s;
    hits += is_lethal(strategy, p, config.lethal_dose);
  }
  return hits;
}

}  // namespace

double PoisonStrategy::total_grams() const {
  double total = density ? density->grams : 0.0;
  for (const PointMass& m : masses) total += m.grams;
  return total;
}

void validate(const PoisonStrategy& strategy, const PoisonConfig& config) {
  if (!(config.R > 2.0) || !std::isfinite(config.R)) throw InputError("pie radius R must exceed 2");
  if (!(config.lethal_dose > 0.0)) throw InputError("lethal dose must be positive");
  if (!(config.h_available >= config.lethal_dose)) throw InputError("available poison must be at least one dose");
  for (const PointMass& m : strategy.masses) {
    if (!(m.grams > 0.0) || !std::isfinite(m.grams)) throw InputError("point masses must be positive");
    if (std::hypot(m.position.x, m.position.y) > config.R) throw InputError("point mass lies outside the pie");
  }
  if (strategy.density) {
    if (!(strategy.density->grams > 0.0)) throw InputError("density grams must be positive");
    if (strategy.density->region.empty()) throw InputError("density region is empty");
    for (const Cell& c : strategy.density->region.cells()) {
      const Point p = strategy.density->region.center(c);
      if (std::hypot(p.x, p.y) > config.R) throw InputError("density cell lies outside the pie");
    }
  }
  const double total = strategy.total_grams();
  if (std::abs(total - config.h_available) > 1e-9 * std::max(1.0, config.h_available)) {
    throw InputError("strategy holds " + std::to_string(total) + " g but h_available is " +
                     std::to_string(config.h_available) + " g");
  }
}

double poison_in_bite(const PoisonStrategy& strategy, Point p) {
  double grams = 0.0;
  for (const PointMass& m : strategy.masses) {
    if (squared_distance(m.position, p) <= 1.0) grams += m.grams;
  }
  if (strategy.density) {
    const auto& region = strategy.density->region;
    const double per_cell = strategy.density->grams / static_cast<double>(region.size());
    std::size_t inside = 0;
    for (const Cell& c : region.cells()) inside += squared_distance(region.center(c), p) <= 1.0;
    grams += per_cell * static_cast<double>(inside);
  }
  return grams;
}

bool is_lethal(const PoisonStrategy& strategy, Point p, double lethal_dose) {
  // Closed "at least one dose"; the relative slack absorbs summation rounding.
  return poison_in_bite(strategy, p) >= lethal_dose * (1.0 - 1e-12);
}

KillReport kill_probability(const PoisonStrategy& strategy, const PoisonConfig& config) {
  validate(strategy, config);
  if (config.samples == 0) throw InputError("samples must be at least 1");

  const std::uint64_t batches = (config.samples + kBatchSize - 1) / kBatchSize;
  std::vector<std::uint64_t> hits(batches, 0);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < batches; b = next++) {
      const std::uint64_t size = std::min(kBatchSize, config.samples - b * kBatchSize);
      hits[b] = count_batch(strategy, config, b, size);
    }
  };
  const auto workers = static_cast<unsigned>(std::clamp<std::uint64_t>(config.threads, 1, batches));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  KillReport report;
  report.samples = config.samples;
  for (auto h : hits) report.hits += h;
  const double n = static_cast<double>(config.samples);
  report.estimate = static_cast<double>(report.hits) / n;
  const double half = kZ95 * std::sqrt(report.estimate * (1.0 - report.estimate) / n);
  report.ci_low = std::max(0.0, report.estimate - half);
  report.ci_high = std::min(1.0, report.estimate + half);
  return report;
}

PixelRegion lethal_region(const PoisonStrategy& strategy, const PoisonConfig& config, double h_grid) {
  validate(strategy, config);
  if (!(h_grid > 0.0)) throw InputError("lethal_region: grid pitch must be positive");
  const double reach = config.R - 1.0;
  const auto extent = static_cast<std::int64_t>(std::ceil(reach / h_grid));
  std::vector<Cell> cells;
  for (std::int64_t j = -extent - 1; j <= extent; ++j) {
    for (std::int64_t i = -extent - 1; i <= extent; ++i) {
      const Point p{(i + 0.5) * h_grid, (j + 0.5) * h_grid};
      if (p.x * p.x + p.y * p.y > reach * reach) continue;
      if (is_lethal(strategy, p, config.lethal_dose)) cells.push_back({i, j});
    }
  }
  return PixelRegion({0.0, 0.0}, h_grid, std::move(cells));
}

}  // namespace isodiam
