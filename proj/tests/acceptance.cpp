// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "psc/bench.hpp"
#include "psc/bipoly.hpp"
#include "psc/compose.hpp"
#include "psc/powproj.hpp"
#include "psc/random.hpp"
#include "psc/reference.hpp"

using namespace psc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool ok;
    std::string detail;
};

int failures = 0;

void report(int id, const char* name, const Verdict& v) {
    std::printf("%s %d %s: %s\n", v.ok ? "PASS" : "FAIL", id, name, v.detail.c_str());
    std::fflush(stdout);
    if (!v.ok) ++failures;
}

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

const PrimeModulus kNtt;
const PrimeModulus kCrt(1000000007);

Verdict oracle_equivalence() {
    const auto start = Clock::now();
    std::size_t mismatches = 0, instances = 0;
    for (const PrimeModulus* mod : {&kNtt, &kCrt}) {
        SplitMix64 rng(mod->value());
        for (int t = 0; t < 1000; ++t, ++instances) {
            const std::size_t n = rng.uniform(1, 64), m = rng.uniform(1, 64);
            const UniPoly f = rng.poly(m, *mod);
            const UniPoly g = rng.poly(rng.uniform(0, n), *mod);
            const LinearForm w(rng.poly(n, *mod));
            if (compose_series(f, g, n, *mod) != reference::compose_horner(f, g, n, *mod)) ++mismatches;
            if (power_projection(w, g, n, m, *mod) != reference::powproj_naive(w, g, n, m, *mod))
                ++mismatches;
        }
    }
    const double elapsed = seconds_since(start);
    return {mismatches == 0 && elapsed < 60.0,
            fmt("%zu instances per routine, %zu mismatches, %.2f s", instances, mismatches, elapsed)};
}

Verdict duality() {
    using reference::Route;
    SplitMix64 rng(2);
    std::size_t bad = 0;
    for (int t = 0; t < 1000; ++t) {
        const PrimeModulus& mod = t % 2 ? kCrt : kNtt;
        const std::size_t n = rng.uniform(1, 64), m = rng.uniform(1, 64);
        const UniPoly f = rng.poly(m, mod);
        const UniPoly g = rng.poly(rng.uniform(0, n), mod);
        const LinearForm w(rng.poly(n, mod));
        for (Route c : {Route::Fast, Route::Oracle})
            for (Route p : {Route::Fast, Route::Oracle})
                if (!reference::duality_check(f, g, w, n, m, mod, c, p)) ++bad;
    }
    return {bad == 0, fmt("1000 instances x 4 pairings, %zu failures", bad)};
}

Verdict reciprocal() {
    SplitMix64 rng(3);
    std::size_t bad = 0;
    for (const PrimeModulus* mod : {&kNtt, &kCrt}) {
        for (std::size_t n : {1, 2, 3, 5, 64, 1000, 4096}) {
            UniPoly f = rng.poly(n, *mod);
            f[0] = FieldElem{1};
            UniPoly prod = truncate(poly_mul(f, poly_recip(f, n, *mod), *mod), n);
            if (prod != truncate(UniPoly::one(1), n)) ++bad;
        }
    }
    return {bad == 0, fmt("7 sizes x 2 primes, %zu failures", bad)};
}

Verdict kronecker() {
    SplitMix64 rng(4);
    std::size_t bad = 0;
    auto random_bipoly = [&](const PrimeModulus& mod) {
        const std::size_t nx = rng.uniform(1, 64);
        const std::size_t ny = rng.uniform(1, 1024 / nx);
        BiPoly a(nx, ny);
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < ny; ++j) a(i, j) = rng.element(mod);
        return a;
    };
    for (int t = 0; t < 200; ++t) {
        const PrimeModulus& mod = t % 2 ? kCrt : kNtt;
        const BiPoly a = random_bipoly(mod), b = random_bipoly(mod);
        if (bipoly_mul(a, b, mod) != bipoly_mul_schoolbook(a, b, mod)) ++bad;
    }
    return {bad == 0, fmt("200 instances, %zu mismatches", bad)};
}

Verdict bidegrees() {
    SplitMix64 rng(5);
    std::string detail;
    bool ok = true;
    for (auto [n, m] : {std::pair<std::size_t, std::size_t>{1000, 1000}, {4096, 64}, {64, 4096}}) {
        GraeffeTrace ct, pt;
        compose_series(rng.poly(m, kNtt), rng.poly(n, kNtt), n, kNtt, &ct);
        power_projection(LinearForm(rng.poly(n, kNtt)), rng.poly(n, kNtt), n, m, kNtt, &pt);
        for (const GraeffeTrace* t : {&ct, &pt}) {
            if (auto v = find_bidegree_violation(*t)) {
                ok = false;
                detail += fmt("(%zu,%zu) %s; ", n, m, v->c_str());
            }
        }
        detail += fmt("(%zu,%zu) %zu+%zu levels ok; ", n, m, ct.levels.size(), pt.levels.size());
    }
    return {ok, detail};
}

Verdict scaling() {
    BenchOptions opts;
    for (std::size_t n = 1u << 12; n <= 1u << 17; n <<= 1) opts.n_list.push_back(n);
    opts.reps = 5;
    opts.algos = {BenchAlgo::ComposeFast};
    double total_top = 0.0;
    const auto records = run_bench(opts, [&](const BenchRecord& r) {
        if (r.n == opts.n_list.back()) total_top += r.elapsed_ms / 1000.0;
    });
    bool ok = total_top < 30.0;
    std::string detail = "medians ms:";
    double prev = 0.0;
    for (std::size_t n : opts.n_list) {
        const double t = *median_ms(records, BenchAlgo::ComposeFast, n);
        detail += fmt(" %zu=%.1f", n, t);
        if (prev > 0.0) {
            const double ratio = t / prev;
            detail += fmt("(x%.2f)", ratio);
            ok = ok && ratio <= 3.0;
        }
        prev = t;
    }
    detail += fmt("; 5 reps at 2^17 took %.2f s", total_top);
    return {ok, detail};
}

Verdict baseline_separation() {
    BenchOptions opts;
    opts.n_list = {4096};
    opts.reps = 5;
    opts.algos = {BenchAlgo::ComposeFast, BenchAlgo::ComposeHorner};
    const auto records = run_bench(opts);
    const double fast = *median_ms(records, BenchAlgo::ComposeFast, 4096);
    const double horner = *median_ms(records, BenchAlgo::ComposeHorner, 4096);
    return {fast * 5.0 <= horner,
            fmt("compose_fast %.1f ms, compose_horner %.1f ms, speedup %.1fx", fast, horner,
                horner / fast)};
}

Verdict edge_cases() {
    SplitMix64 rng(8);
    std::vector<std::string> failed;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) failed.emplace_back(what);
    };
    for (const PrimeModulus* mod : {&kNtt, &kCrt}) {
        const PrimeModulus& m = *mod;
        const UniPoly f = rng.poly(9, m), g = rng.poly(12, m);
        const LinearForm w(rng.poly(12, m));

        expect(compose_series(f, g, 1, m) == reference::compose_horner(f, g, 1, m), "compose n=1");
        expect(power_projection(LinearForm(std::vector<FieldElem>{w[0]}), truncate(g, 1), 1, 9, m) ==
                   reference::powproj_naive(LinearForm(std::vector<FieldElem>{w[0]}), truncate(g, 1), 1, 9, m),
               "powproj n=1");

        UniPoly c = UniPoly::zeros(12);
        c[0] = f[0];
        expect(compose_series(truncate(f, 1), g, 12, m) == c, "compose m=1");
        expect(power_projection(w, g, 12, 1, m) == UniPoly(std::vector<FieldElem>{w[0]}),
               "powproj m=1");

        expect(compose_series(UniPoly(), g, 12, m) == UniPoly::zeros(12), "compose f=0");
        expect(compose_series(UniPoly::zeros(9), g, 12, m) == UniPoly::zeros(12), "compose f=0 padded");

        expect(compose_series(f, UniPoly(), 12, m) == c, "compose g=0");
        UniPoly w0 = UniPoly::zeros(9);
        w0[0] = w[0];
        expect(power_projection(w, UniPoly(), 12, 9, m) == w0, "powproj g=0");

        UniPoly shifted = g;
        if (shifted[0].value == 0) shifted[0] = FieldElem{1};
        expect(compose_series(f, shifted, 12, m) == reference::compose_horner(f, shifted, 12, m),
               "compose g(0)!=0");
        expect(power_projection(w, shifted, 12, 9, m) == reference::powproj_naive(w, shifted, 12, 9, m),
               "powproj g(0)!=0");

        expect(power_projection(LinearForm(UniPoly::zeros(12)), g, 12, 9, m) == UniPoly::zeros(9),
               "powproj w=0");
    }
    std::string detail = failed.empty() ? "n=1, m=1, f=0, g=0, g(0)!=0, w=0 on both primes" : "failed:";
    for (const auto& f : failed) detail += " " + f;
    return {failed.empty(), detail};
}

}  // namespace

int main() {
    report(1, "oracle equivalence", oracle_equivalence());
    report(2, "duality", duality());
    report(3, "reciprocal", reciprocal());
    report(4, "kronecker", kronecker());
    report(5, "bidegree bounds", bidegrees());
    report(6, "softly-linear scaling", scaling());
    report(7, "baseline separation", baseline_separation());
    report(8, "edge cases", edge_cases());
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
