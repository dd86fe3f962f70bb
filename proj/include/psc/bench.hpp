#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "psc/field.hpp"
#include "psc/powproj.hpp"
#include "psc/unipoly.hpp"

namespace psc {

enum class BenchAlgo { ComposeFast, ComposeHorner, PowprojFast, PowprojNaive };

std::string_view to_string(BenchAlgo algo) noexcept;
std::optional<BenchAlgo> parse_bench_algo(std::string_view name) noexcept;

struct BenchRecord {
    BenchAlgo algo;
    std::size_t n;
    std::size_t m;
    u64 seed;
    double elapsed_ms;
};

struct BenchOptions {
    std::vector<std::size_t> n_list;
    /// m = n unless set.
    std::optional<std::size_t> fixed_m;
    std::size_t reps = 5;
    u64 seed = 1;
    std::vector<BenchAlgo> algos = {BenchAlgo::ComposeFast, BenchAlgo::PowprojFast};
    u64 modulus = kDefaultPrime;
};

/// Random instance drawn from SplitMix64(seed): f (m coefficients), then
/// g (n coefficients), then w (n weights).
struct BenchInstance {
    UniPoly f;
    UniPoly g;
    LinearForm w;
};
BenchInstance make_bench_instance(std::size_t n, std::size_t m, u64 seed, const PrimeModulus& mod);

/// Times every enabled algorithm on the instance with seed `seed + rep`,
/// for each n and rep, sequentially. The baselines use poly_mul, i.e. the
/// O(m M(n)) Horner scheme. on_record is called after each measurement.
std::vector<BenchRecord> run_bench(const BenchOptions& options,
                                   const std::function<void(const BenchRecord&)>& on_record = {});

inline constexpr std::string_view kBenchCsvHeader = "algo,n,m,seed,elapsed_ms";
void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);
void write_bench_row(std::ostream& out, const BenchRecord& record);

/// Median elapsed time over the records matching (algo, n); nullopt if none.
std::optional<double> median_ms(std::span<const BenchRecord> records, BenchAlgo algo, std::size_t n);

}  // namespace psc
