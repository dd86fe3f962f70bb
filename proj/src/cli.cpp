#include "psc/cli.hpp"

#include <algorithm>
#include <fstream>

#include <CLI11.hpp>

#include "psc/coeff_io.hpp"
#include "psc/compose.hpp"
#include "psc/powproj.hpp"

namespace psc::cli {

namespace {

std::optional<PrimeModulus> open_modulus(u64 p, std::ostream& err) {
    try {
        return PrimeModulus(p);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return std::nullopt;
    }
}

int emit(const std::string& text, const std::optional<std::filesystem::path>& file,
         std::ostream& out, std::ostream& err) {
    if (!file) {
        out << text;
        return kExitOk;
    }
    std::ofstream f(*file, std::ios::binary | std::ios::trunc);
    if (!(f << text) || !f.flush()) {
        err << "error: cannot write " << file->string() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::InvalidModulus ? kExitUnsupportedModulus : kExitInputError;
    }
}

}  // namespace

int cmd_compose(const ComposeArgs& args, std::ostream& out, std::ostream& err) {
    const auto mod = open_modulus(args.modulus, err);
    if (!mod) return kExitUnsupportedModulus;
    return guarded(err, [&] {
        if (args.n < 1) {
            err << "error: --n must be at least 1\n";
            return kExitInputError;
        }
        const UniPoly f = read_coefficient_file(args.f_file, *mod);
        const UniPoly g = read_coefficient_file(args.g_file, *mod);
        return emit(format_coefficients(compose_series(f, g, args.n, *mod)), args.out_file, out, err);
    });
}

int cmd_powproj(const PowprojArgs& args, std::ostream& out, std::ostream& err) {
    const auto mod = open_modulus(args.modulus, err);
    if (!mod) return kExitUnsupportedModulus;
    return guarded(err, [&] {
        if (args.n < 1 || args.m < 1) {
            err << "error: --n and --m must be at least 1\n";
            return kExitInputError;
        }
        const LinearForm w(read_coefficient_file(args.w_file, *mod));
        const UniPoly g = read_coefficient_file(args.g_file, *mod);
        if (w.size() != args.n) {
            err << "error: " << args.w_file.string() << " has " << w.size()
                << " weights but --n is " << args.n << '\n';
            return kExitInputError;
        }
        if (g.len() > args.n) {
            err << "error: " << args.g_file.string() << " has " << g.len()
                << " coefficients, more than --n = " << args.n << '\n';
            return kExitInputError;
        }
        const UniPoly f = power_projection(w, g, args.n, args.m, *mod);
        return emit(format_coefficients(f), args.out_file, out, err);
    });
}

int cmd_selftest(const SelftestOptions& options, std::ostream& out) {
    const SelftestReport report = run_selftest(options);
    print_report(report, out);
    return report.ok() ? kExitOk : kExitSelftestFailure;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    if (!open_modulus(args.options.modulus, err)) return kExitUnsupportedModulus;
    const auto& n_list = args.options.n_list;
    if (n_list.empty() || std::any_of(n_list.begin(), n_list.end(), [](std::size_t n) { return n == 0; }) ||
        (args.options.fixed_m && *args.options.fixed_m == 0)) {
        err << "error: bench sizes must be positive\n";
        return kExitInputError;
    }
    std::ofstream file;
    std::ostream* sink = &out;
    if (args.out_csv) {
        file.open(*args.out_csv, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot write " << args.out_csv->string() << '\n';
            return kExitInputError;
        }
        sink = &file;
    }
    *sink << kBenchCsvHeader << '\n';
    return guarded(err, [&] {
        run_bench(args.options, [&](const BenchRecord& r) {
            write_bench_row(*sink, r);
            sink->flush();
        });
        return kExitOk;
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Power series composition and power projection over prime fields", "psc"};
    app.require_subcommand(1);

    ComposeArgs compose;
    auto* c = app.add_subcommand("compose", "f(g(x)) mod x^n from coefficient files");
    c->add_option("f_file", compose.f_file, "coefficients of f")->required();
    c->add_option("g_file", compose.g_file, "coefficients of g")->required();
    c->add_option("--n", compose.n, "truncation order")->required();
    c->add_option("--modulus", compose.modulus, "odd prime below 2^62")->capture_default_str();
    c->add_option("--out", compose.out_file, "output file (default stdout)");

    PowprojArgs proj;
    auto* p = app.add_subcommand("powproj", "w(g^i mod x^n) for i < m");
    p->add_option("w_file", proj.w_file, "weights w_0..w_{n-1}")->required();
    p->add_option("g_file", proj.g_file, "coefficients of g")->required();
    p->add_option("--n", proj.n, "truncation order")->required();
    p->add_option("--m", proj.m, "number of powers")->required();
    p->add_option("--modulus", proj.modulus, "odd prime below 2^62")->capture_default_str();
    p->add_option("--out", proj.out_file, "output file (default stdout)");

    SelftestOptions self;
    auto* s = app.add_subcommand("selftest", "randomized checks against brute-force oracles");
    s->add_option("--size-cap", self.size_cap, "largest n and m drawn")->capture_default_str();
    s->add_option("--trials", self.trials, "cases per suite")->capture_default_str();
    s->add_option("--seed", self.seed, "SplitMix64 seed")->capture_default_str();
    s->add_flag("--inject-fault", self.inject_fault, "corrupt fast results to test the harness");

    BenchArgs bench;
    std::size_t bench_m = 0;
    std::vector<std::string> algo_names;
    auto* b = app.add_subcommand("bench", "time the algorithms and write CSV");
    b->add_option("--n-list", bench.options.n_list, "comma-separated sizes")
        ->required()
        ->delimiter(',');
    b->add_option("--m", bench_m, "fixed m (default m = n)");
    b->add_option("--reps", bench.options.reps, "repetitions per size")->capture_default_str();
    b->add_option("--seed", bench.options.seed, "base seed; rep r uses seed + r")->capture_default_str();
    b->add_option("--algos", algo_names,
                  "comma-separated: compose_fast,compose_horner,powproj_fast,powproj_naive")
        ->delimiter(',');
    b->add_option("--modulus", bench.options.modulus, "odd prime below 2^62")->capture_default_str();
    b->add_option("--out", bench.out_csv, "CSV file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (*c) return cmd_compose(compose, out, err);
    if (*p) return cmd_powproj(proj, out, err);
    if (*s) return cmd_selftest(self, out);

    if (b->count("--m") > 0) bench.options.fixed_m = bench_m;
    if (!algo_names.empty()) {
        bench.options.algos.clear();
        for (const auto& name : algo_names) {
            const auto algo = parse_bench_algo(name);
            if (!algo) {
                err << "error: unknown algorithm '" << name << "'\n";
                return kExitInputError;
            }
            bench.options.algos.push_back(*algo);
        }
    }
    return cmd_bench(bench, out, err);
}

}  // namespace psc::cli
