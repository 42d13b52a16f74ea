#include "boolnet/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace boolnet {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

double AttractorRecord::mean_basin() const {
  return count == 0 ? 0.0 : static_cast<double>(basin_sum) / static_cast<double>(count);
}

double AttractorRecord::sd_basin() const {
  if (count < 2) return 0.0;
  const u128 n = count;
  const u128 spread = n * basin_sum_sq - static_cast<u128>(basin_sum) * basin_sum;
  const long double var = static_cast<long double>(spread) / (static_cast<long double>(count) * (count - 1));
  return static_cast<double>(std::sqrt(var));
}

double EnsembleStats::fixed_point_only_percent() const {
  return schedules == 0 ? 0.0 : 100.0 * static_cast<double>(fixed_point_only) / static_cast<double>(schedules);
}

std::uint64_t EnsembleStats::cycle_occurrences() const {
  std::uint64_t total = 0;
  for (const auto& c : cycles) total += c.count;
  return total;
}

double EnsembleStats::cycle_percent(const AttractorRecord& record) const {
  const std::uint64_t total = cycle_occurrences();
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(record.count) / static_cast<double>(total);
}

namespace {

// Integer accumulators: merging is associative and commutative, so the result
// does not depend on how schedules are split across workers.
struct Accumulator {
  std::uint64_t schedules = 0;
  std::uint64_t fixed_point_only = 0;
  std::map<std::size_t, std::uint64_t> histogram;
  std::map<std::vector<std::uint64_t>, AttractorRecord> fixed;
  std::map<std::vector<std::uint64_t>, AttractorRecord> cycles;

  void add(const AttractorReport& report) {
    ++schedules;
    std::size_t n_cycles = 0;
    for (const auto& a : report.attractors) {
      auto& bucket = a.kind() == AttractorKind::FixedPoint ? fixed : cycles;
      auto& rec = bucket[a.states];
      rec.states = a.states;
      ++rec.count;
      rec.basin_sum += a.basin;
      rec.basin_sum_sq += a.basin * a.basin;
      if (a.kind() == AttractorKind::LimitCycle) ++n_cycles;
    }
    if (n_cycles == 0) {
      ++fixed_point_only;
    } else {
      ++histogram[n_cycles];
    }
  }

  void merge(const Accumulator& other) {
    schedules += other.schedules;
    fixed_point_only += other.fixed_point_only;
    for (const auto& [k, v] : other.histogram) histogram[k] += v;
    for (const auto* src : {&other.fixed, &other.cycles}) {
      auto& dst = src == &other.fixed ? fixed : cycles;
      for (const auto& [key, rec] : *src) {
        auto& d = dst[key];
        d.states = rec.states;
        d.count += rec.count;
        d.basin_sum += rec.basin_sum;
        d.basin_sum_sq += rec.basin_sum_sq;
      }
    }
  }
};

}  // namespace

EnsembleStats analyze_ensemble(const Network& net, const EnsembleOptions& options) {
  const auto g = InteractionDigraph::of(net);
  if (net.width() > options.analysis.max_width) {
    throw GuardError("state width " + std::to_string(net.width()) + " exceeds the limit of " +
                     std::to_string(options.analysis.max_width));
  }
  std::vector<std::vector<std::size_t>> schedules;
  enumerate_representatives(g, [&](const Representative& r) { schedules.push_back(r.levels); }, options.enumeration);

  AnalysisOptions per_schedule = options.analysis;
  per_schedule.threads = 1;
  const unsigned workers = std::max(1U, std::min<unsigned>(options.analysis.threads,
                                                          static_cast<unsigned>(schedules.size())));
  std::vector<Accumulator> partial(workers);
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < schedules.size(); i += workers) {
      CompiledNetwork compiled(net, schedules[i]);
      partial[w].add(find_attractors(compiled, per_schedule));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  Accumulator total;
  for (const auto& p : partial) total.merge(p);

  EnsembleStats stats;
  stats.network = net.name();
  stats.schedules = total.schedules;
  stats.fixed_point_only = total.fixed_point_only;
  stats.cycle_histogram = std::move(total.histogram);
  for (auto& [key, rec] : total.fixed) stats.fixed_points.push_back(std::move(rec));
  for (auto& [key, rec] : total.cycles) {
    stats.cycle_lengths[rec.states.size()] += rec.count;
    stats.cycles.push_back(std::move(rec));
  }
  std::sort(stats.fixed_points.begin(), stats.fixed_points.end(), [](const auto& a, const auto& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.states < b.states;
  });
  std::sort(stats.cycles.begin(), stats.cycles.end(), [](const auto& a, const auto& b) {
    if (a.count != b.count) return a.count > b.count;
    // Compare exact means without rounding: sum_a / n_a vs sum_b / n_b.
    const auto lhs = static_cast<u128>(a.basin_sum) * b.count;
    const auto rhs = static_cast<u128>(b.basin_sum) * a.count;
    if (lhs != rhs) return lhs > rhs;
    return a.states < b.states;
  });
  return stats;
}

}  // namespace boolnet
