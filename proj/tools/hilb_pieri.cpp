#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hilbpieri/cli.hpp"

int main(int argc, char** argv)
{
    using namespace hilb::cli;

    CLI::App app{"Products with the incidence divisor H in the MS basis of the Hilbert scheme of "
                 "points in the plane"};
    app.require_subcommand(1);

    JobConfig cfg;
    const std::map<std::string, Format> formats{{"json", Format::Json}, {"text", Format::Text}, {"latex", Format::Latex}};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json | text | latex")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out-dir", cfg.out_dir, "cache directory (HILB_PIERI_CACHE overrides)");
        sub->add_flag("--check-invariants", cfg.check_invariants, "re-check conservation after every rewrite step");
        sub->add_option("--threads", cfg.threads, "worker threads (0 = OpenMP default)");
    };

    auto* product = app.add_subcommand("product", "expand H . sigma_(a,b,c)");
    product->add_option("--n", cfg.n, "number of points (must equal |a|+|b|+|c|)");
    product->add_option("--a", cfg.a, "comma-separated partition a")->expected(0, 1);
    product->add_option("--b", cfg.b, "comma-separated partition b")->expected(0, 1);
    product->add_option("--c", cfg.c, "comma-separated partition c")->expected(0, 1);
    product->add_flag("--force", cfg.force, "ignore an existing matrix cache");
    common(product);

    auto* matrix = app.add_subcommand("matrix", "every row H . sigma for one n, cached as pieri_N{n}.json");
    matrix->add_option("--n", cfg.n, "number of points")->required();
    matrix->add_flag("--force", cfg.force, "recompute even if the cache file exists");
    common(matrix);

    auto* conjecture = app.add_subcommand("conjecture", "sweep the path-sum conjecture up to a partition weight");
    conjecture->add_option("--max-weight", cfg.max_weight, "largest sum(m) to check")->check(CLI::NonNegativeNumber);
    common(conjecture);

    auto* verify = app.add_subcommand("verify", "golden worked-example suite plus conservation sweep");
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : Usage;
    }

    if (product->parsed())
        cfg.command = Command::Product;
    else if (matrix->parsed())
        cfg.command = Command::Matrix;
    else if (conjecture->parsed())
        cfg.command = Command::Conjecture;
    else
        cfg.command = Command::Verify;

    return run(cfg, std::cout, std::cerr);
}
