#include "psc/selftest.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "psc/bipoly.hpp"
#include "psc/compose.hpp"
#include "psc/powproj.hpp"
#include "psc/random.hpp"
#include "psc/reference.hpp"
#include "psc/trace.hpp"

namespace psc {

std::size_t SelftestReport::passed() const {
    std::size_t total = 0;
    for (const auto& s : suites) total += s.passed;
    return total;
}

std::size_t SelftestReport::failed() const {
    std::size_t total = 0;
    for (const auto& s : suites) total += s.failed;
    return total;
}

namespace {

struct Case {
    const PrimeModulus& mod;
    SplitMix64& rng;
    std::size_t cap;
};

// Returns an empty string on success, otherwise a short failure note.
using CaseFn = std::function<std::string(Case&)>;

SuiteResult run_suite(const std::string& name, const SelftestOptions& opt, u64 salt,
                      const CaseFn& body) {
    static const PrimeModulus ntt_prime(kDefaultPrime);
    static const PrimeModulus crt_prime(1000000007);
    SuiteResult result;
    result.name = name;
    SplitMix64 rng(opt.seed ^ salt);
    const std::size_t cap = std::max<std::size_t>(opt.size_cap, 1);
    for (std::size_t t = 0; t < opt.trials; ++t) {
        Case c{t % 2 == 0 ? ntt_prime : crt_prime, rng, cap};
        std::string note;
        try {
            note = body(c);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (note.empty()) {
            ++result.passed;
        } else {
            ++result.failed;
            if (result.first_failure.empty()) {
                result.first_failure = "trial " + std::to_string(t) + " (p = " +
                                       std::to_string(c.mod.value()) + "): " + note;
            }
        }
    }
    return result;
}

UniPoly maybe_corrupt(UniPoly f, const SelftestOptions& opt, const PrimeModulus& mod) {
    if (opt.inject_fault && f.len() > 0) f[0] = field_add(f[0], FieldElem{1}, mod);
    return f;
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& opt) {
    SelftestReport report;

    report.suites.push_back(run_suite("compose_vs_horner", opt, 0x11, [&](Case& c) {
        const std::size_t n = c.rng.uniform(1, c.cap), m = c.rng.uniform(1, c.cap);
        const UniPoly f = c.rng.poly(m, c.mod);
        const UniPoly g = c.rng.poly(c.rng.uniform(0, n), c.mod);
        const UniPoly fast = maybe_corrupt(compose_series(f, g, n, c.mod), opt, c.mod);
        return fast == reference::compose_horner(f, g, n, c.mod) ? "" : "composition mismatch";
    }));

    report.suites.push_back(run_suite("powproj_vs_naive", opt, 0x22, [&](Case& c) {
        const std::size_t n = c.rng.uniform(1, c.cap), m = c.rng.uniform(1, c.cap);
        const LinearForm w(c.rng.poly(n, c.mod));
        const UniPoly g = c.rng.poly(c.rng.uniform(0, n), c.mod);
        const UniPoly fast = power_projection(w, g, n, m, c.mod);
        return fast == reference::powproj_naive(w, g, n, m, c.mod) ? "" : "projection mismatch";
    }));

    report.suites.push_back(run_suite("duality", opt, 0x33, [&](Case& c) {
        const std::size_t n = c.rng.uniform(1, c.cap), m = c.rng.uniform(1, c.cap);
        const UniPoly f = c.rng.poly(m, c.mod);
        const UniPoly g = c.rng.poly(c.rng.uniform(0, n), c.mod);
        const LinearForm w(c.rng.poly(n, c.mod));
        const UniPoly composed = maybe_corrupt(compose_series(f, g, n, c.mod), opt, c.mod);
        const UniPoly projected = power_projection(w, g, n, m, c.mod);
        // A corrupted x^0 coefficient only shows when w_0 != 0.
        return reference::duality_holds(f, w, composed, projected, c.mod) ? "" : "duality broken";
    }));

    report.suites.push_back(run_suite("reciprocal", opt, 0x44, [&](Case& c) {
        const std::size_t n = c.rng.uniform(1, 4 * c.cap);
        UniPoly f = c.rng.poly(c.rng.uniform(1, 4 * c.cap), c.mod);
        f[0] = FieldElem{1};
        const UniPoly g = poly_recip(f, n, c.mod);
        const UniPoly check = truncate(poly_mul_schoolbook(f, g, c.mod), n);
        return check == UniPoly::one(n) ? "" : "f * recip(f) != 1";
    }));

    report.suites.push_back(run_suite("kronecker", opt, 0x55, [&](Case& c) {
        const std::size_t side = std::min<std::size_t>(c.cap, 32);
        auto random_bipoly = [&] {
            BiPoly a(c.rng.uniform(1, side), c.rng.uniform(1, side));
            for (std::size_t i = 0; i < a.nx(); ++i)
                for (std::size_t j = 0; j < a.ny(); ++j) a(i, j) = c.rng.element(c.mod);
            return a;
        };
        const BiPoly a = random_bipoly(), b = random_bipoly();
        return bipoly_mul(a, b, c.mod) == bipoly_mul_schoolbook(a, b, c.mod)
                   ? ""
                   : "Kronecker product mismatch";
    }));

    report.suites.push_back(run_suite("bidegree", opt, 0x66, [&](Case& c) {
        const std::size_t n = c.rng.uniform(1, c.cap), m = c.rng.uniform(1, c.cap);
        const UniPoly f = c.rng.poly(m, c.mod);
        const UniPoly g = c.rng.poly(n, c.mod);
        GraeffeTrace trace;
        compose_series(f, g, n, c.mod, &trace);
        if (auto v = find_bidegree_violation(trace)) return "compose " + *v;
        power_projection(LinearForm(c.rng.poly(n, c.mod)), g, n, m, c.mod, &trace);
        if (auto v = find_bidegree_violation(trace)) return "powproj " + *v;
        return std::string();
    }));

    return report;
}

void print_report(const SelftestReport& report, std::ostream& out) {
    for (const auto& s : report.suites) {
        out << (s.failed == 0 ? "PASS " : "FAIL ") << s.name << ": " << s.passed << " passed, "
            << s.failed << " failed\n";
        if (!s.first_failure.empty()) out << "     first failure: " << s.first_failure << '\n';
    }
    out << "total: " << report.passed() << " passed, " << report.failed() << " failed\n";
}

}  // namespace psc
