#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "psc/field.hpp"

namespace psc {

struct SelftestOptions {
    std::size_t size_cap = 64;
    std::size_t trials = 100;
    u64 seed = 1;
    /// Perturbs fast composition results before they are compared, to
    /// confirm the harness reports failures.
    bool inject_fault = false;
};

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string first_failure;
};

struct SelftestReport {
    std::vector<SuiteResult> suites;

    std::size_t passed() const;
    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
};

/// Runs the oracle-equivalence, duality, reciprocal, Kronecker and
/// bidegree suites with `trials` random cases each, alternating between
/// 998244353 and the CRT-path prime 1000000007. Sizes are drawn from
/// [1, size_cap].
SelftestReport run_selftest(const SelftestOptions& options);

void print_report(const SelftestReport& report, std::ostream& out);

}  // namespace psc
