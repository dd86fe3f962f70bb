#include "psc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "psc/compose.hpp"
#include "psc/random.hpp"
#include "psc/reference.hpp"

namespace psc {

std::string_view to_string(BenchAlgo algo) noexcept {
    switch (algo) {
        case BenchAlgo::ComposeFast: return "compose_fast";
        case BenchAlgo::ComposeHorner: return "compose_horner";
        case BenchAlgo::PowprojFast: return "powproj_fast";
        case BenchAlgo::PowprojNaive: return "powproj_naive";
    }
    return "unknown";
}

std::optional<BenchAlgo> parse_bench_algo(std::string_view name) noexcept {
    for (BenchAlgo a : {BenchAlgo::ComposeFast, BenchAlgo::ComposeHorner, BenchAlgo::PowprojFast,
                        BenchAlgo::PowprojNaive}) {
        if (to_string(a) == name) return a;
    }
    return std::nullopt;
}

BenchInstance make_bench_instance(std::size_t n, std::size_t m, u64 seed, const PrimeModulus& mod) {
    SplitMix64 rng(seed);
    BenchInstance inst;
    inst.f = rng.poly(m, mod);
    inst.g = rng.poly(n, mod);
    inst.w = LinearForm(rng.poly(n, mod));
    return inst;
}

namespace {

// Keeps results observable so the timed calls are not optimized away.
volatile u64 g_sink = 0;

double time_once(BenchAlgo algo, const BenchInstance& inst, std::size_t n, std::size_t m,
                 const PrimeModulus& mod) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    UniPoly out;
    switch (algo) {
        case BenchAlgo::ComposeFast:
            out = compose_series(inst.f, inst.g, n, mod);
            break;
        case BenchAlgo::ComposeHorner:
            out = reference::compose_horner(inst.f, inst.g, n, mod, reference::Multiplication::Fast);
            break;
        case BenchAlgo::PowprojFast:
            out = power_projection(inst.w, inst.g, n, m, mod);
            break;
        case BenchAlgo::PowprojNaive:
            out = reference::powproj_naive(inst.w, inst.g, n, m, mod, reference::Multiplication::Fast);
            break;
    }
    const auto stop = clock::now();
    g_sink = g_sink + out.coeff(0).value;
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    // Keep elapsed_ms strictly positive even at timer resolution.
    return std::max(ms, 1e-6);
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& opt,
                                   const std::function<void(const BenchRecord&)>& on_record) {
    const PrimeModulus mod(opt.modulus);
    std::vector<BenchRecord> records;
    for (std::size_t n : opt.n_list) {
        const std::size_t m = opt.fixed_m.value_or(n);
        for (std::size_t rep = 0; rep < opt.reps; ++rep) {
            const u64 seed = opt.seed + rep;
            const BenchInstance inst = make_bench_instance(n, m, seed, mod);
            for (BenchAlgo algo : opt.algos) {
                const BenchRecord r{algo, n, m, seed, time_once(algo, inst, n, m, mod)};
                records.push_back(r);
                if (on_record) on_record(r);
            }
        }
    }
    return records;
}

void write_bench_row(std::ostream& out, const BenchRecord& r) {
    char ms[64];
    std::snprintf(ms, sizeof ms, "%.6f", r.elapsed_ms);
    out << to_string(r.algo) << ',' << r.n << ',' << r.m << ',' << r.seed << ',' << ms << '\n';
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
    out << kBenchCsvHeader << '\n';
    for (const auto& r : records) write_bench_row(out, r);
}

std::optional<double> median_ms(std::span<const BenchRecord> records, BenchAlgo algo, std::size_t n) {
    std::vector<double> times;
    for (const auto& r : records) {
        if (r.algo == algo && r.n == n) times.push_back(r.elapsed_ms);
    }
    if (times.empty()) return std::nullopt;
    std::sort(times.begin(), times.end());
    const std::size_t k = times.size();
    return k % 2 == 1 ? times[k / 2] : 0.5 * (times[k / 2 - 1] + times[k / 2]);
}

}  // namespace psc
