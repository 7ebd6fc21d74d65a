#include "indet/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "indet/prefix_graph.hpp"
#include "indet/reveng.hpp"

namespace indet::bench {
namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

}  // namespace

Rng rng_for_length(std::uint64_t seed, std::size_t n) {
  return Rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(n))));
}

std::uint64_t uniform_inclusive(Rng& rng, std::uint64_t bound) {
  if (bound == UINT64_MAX) return rng();
  const std::uint64_t range = bound + 1;
  // Draws above limit would bias the low residues and are retried.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
  std::uint64_t draw = rng();
  while (draw > limit) draw = rng();
  return draw % range;
}

FeasibleArray gen_random_feasible(std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("random arrays need n >= 1");
  std::vector<std::int64_t> raw(n);
  raw[0] = static_cast<std::int64_t>(n);
  for (std::size_t i = 2; i <= n; ++i) {
    raw[i - 1] = static_cast<std::int64_t>(uniform_inclusive(rng, n - i + 1));
  }
  return validate_feasible(raw);
}

void validate(const BenchConfig& cfg) {
  if (cfg.lengths.empty()) throw std::invalid_argument("no lengths given");
  if (cfg.trials == 0) throw std::invalid_argument("trials must be >= 1");
  for (std::size_t k = 0; k < cfg.lengths.size(); ++k) {
    if (cfg.lengths[k] == 0) throw std::invalid_argument("lengths must be >= 1");
    if (k > 0 && cfg.lengths[k] <= cfg.lengths[k - 1]) {
      throw std::invalid_argument("lengths must be strictly ascending");
    }
  }
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  validate(cfg);
  using Clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  rows.reserve(cfg.lengths.size());
  for (std::size_t n : cfg.lengths) {
    Rng rng = rng_for_length(cfg.seed, n);
    std::vector<double> times;
    times.reserve(cfg.trials);
    double sigma_sum = 0, pos_sum = 0, neg_sum = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const FeasibleArray y = gen_random_feasible(n, rng);

      const auto start = Clock::now();
      const IndeterminateString x = infer(y);
      const auto stop = Clock::now();
      times.push_back(std::chrono::duration<double, std::micro>(stop - start).count());

      const PrefixGraph g = build_prefix_graph(y);
      sigma_sum += static_cast<double>(x.alphabet_size());
      pos_sum += static_cast<double>(g.positive_edges().size());
      neg_sum += static_cast<double>(g.negative_edges().size());
      if (t % 100 == 0 && compute_prefix_table(x) != y) {
        throw std::logic_error("round trip failed at n = " + std::to_string(n));
      }
    }
    const double trials = static_cast<double>(cfg.trials);
    BenchRow row;
    row.n = n;
    row.trials = cfg.trials;
    row.mean_us = std::accumulate(times.begin(), times.end(), 0.0) / trials;
    row.median_us = median_of(times);
    row.max_us = *std::max_element(times.begin(), times.end());
    row.mean_sigma = sigma_sum / trials;
    row.mean_pos_edges = pos_sum / trials;
    row.mean_neg_edges = neg_sum / trials;
    rows.push_back(row);
  }
  return rows;
}

void write_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << kCsvHeader << '\n';
  std::ostringstream line;
  line.imbue(std::locale::classic());
  line << std::fixed;
  for (const auto& r : rows) {
    line.str("");
    line << r.n << ',' << r.trials << ',' << std::setprecision(3) << r.mean_us
         << ',' << r.median_us << ',' << r.max_us << ',' << std::setprecision(4)
         << r.mean_sigma << ',' << r.mean_pos_edges << ',' << r.mean_neg_edges;
    out << line.str() << '\n';
  }
}

void write_csv(const std::string& path, std::span<const BenchRow> rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_csv(out, rows);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<BenchRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("missing or unexpected CSV header");
  }
  std::vector<BenchRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    BenchRow r;
    char c1, c2, c3, c4, c5, c6, c7;
    fields >> r.n >> c1 >> r.trials >> c2 >> r.mean_us >> c3 >> r.median_us >>
        c4 >> r.max_us >> c5 >> r.mean_sigma >> c6 >> r.mean_pos_edges >> c7 >>
        r.mean_neg_edges;
    if (!fields || c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',' ||
        c5 != ',' || c6 != ',' || c7 != ',') {
      throw std::invalid_argument("malformed CSV row: " + line);
    }
    rows.push_back(r);
  }
  return rows;
}

double growth_trend(std::span<const BenchRow> rows) {
  std::set<std::size_t> distinct;
  for (const auto& r : rows) {
    if (r.n == 0 || !(r.mean_us > 0)) {
      throw std::invalid_argument("growth fit needs n >= 1 and positive times");
    }
    distinct.insert(r.n);
  }
  if (distinct.size() < 3) {
    throw std::invalid_argument("growth fit needs at least 3 distinct lengths");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double lx = std::log(static_cast<double>(r.n));
    const double ly = std::log(r.mean_us);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(rows.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace indet::bench
