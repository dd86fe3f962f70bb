#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "psc/bench.hpp"
#include "psc/field.hpp"
#include "psc/selftest.hpp"

namespace psc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUnsupportedModulus = 3;
inline constexpr int kExitSelftestFailure = 4;

struct ComposeArgs {
    std::filesystem::path f_file;
    std::filesystem::path g_file;
    std::size_t n = 1;
    u64 modulus = kDefaultPrime;
    std::optional<std::filesystem::path> out_file;  // stdout when absent
};

struct PowprojArgs {
    std::filesystem::path w_file;
    std::filesystem::path g_file;
    std::size_t n = 1;
    std::size_t m = 1;
    u64 modulus = kDefaultPrime;
    std::optional<std::filesystem::path> out_file;
};

struct BenchArgs {
    BenchOptions options;
    std::optional<std::filesystem::path> out_csv;
};

int cmd_compose(const ComposeArgs& args, std::ostream& out, std::ostream& err);
int cmd_powproj(const PowprojArgs& args, std::ostream& out, std::ostream& err);
int cmd_selftest(const SelftestOptions& options, std::ostream& out);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

/// Parses a full command line (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psc::cli
