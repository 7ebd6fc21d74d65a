// Timing harness: random feasible arrays, wall-clock timing of infer, CSV
// reports, and a log-log growth fit.

#ifndef INDET_BENCH_HPP_
#define INDET_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "indet/strings.hpp"

namespace indet::bench {

/// 64-bit Mersenne Twister, seeded per length. Bounded draws use rejection
/// sampling on the raw 64-bit output (not std::uniform_int_distribution,
/// whose algorithm varies between standard libraries) so arrays reproduce
/// everywhere.
using Rng = std::mt19937_64;

/// Stream for one length: seeded from splitmix64(seed ^ splitmix64(n)).
Rng rng_for_length(std::uint64_t seed, std::size_t n);

/// Uniform draw from 0..bound inclusive.
std::uint64_t uniform_inclusive(Rng& rng, std::uint64_t bound);

/// y[1] = n, each later y[i] uniform over 0..n-i+1. Requires n >= 1.
FeasibleArray gen_random_feasible(std::size_t n, Rng& rng);

struct BenchConfig {
  std::vector<std::size_t> lengths;  // ascending, each >= 1
  std::size_t trials = 1;
  std::uint64_t seed = 1;
};

/// Throws std::invalid_argument if the config breaks its invariants.
void validate(const BenchConfig& cfg);

struct BenchRow {
  std::size_t n = 0;
  std::size_t trials = 0;
  double mean_us = 0;
  double median_us = 0;
  double max_us = 0;
  double mean_sigma = 0;
  double mean_pos_edges = 0;
  double mean_neg_edges = 0;
};

inline constexpr const char* kCsvHeader =
    "n,trials,mean_us,median_us,max_us,mean_sigma,mean_pos_edges,mean_neg_edges";

/// Times infer (graph construction included) on cfg.trials fresh arrays per
/// length. One trial in 100 is round-trip checked outside the timed region;
/// a failure throws std::logic_error.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

void write_csv(std::ostream& out, std::span<const BenchRow> rows);
/// Writes to `path`; throws std::runtime_error if it cannot be opened.
void write_csv(const std::string& path, std::span<const BenchRow> rows);

/// Parses a report produced by write_csv. Throws std::invalid_argument on a
/// bad header or row.
std::vector<BenchRow> read_csv(std::istream& in);

/// Least-squares slope of log(mean_us) against log(n). Needs at least three
/// rows with distinct n and positive times, else std::invalid_argument.
double growth_trend(std::span<const BenchRow> rows);

}  // namespace indet::bench

#endif  // INDET_BENCH_HPP_
