// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "hilbpieri/cli.hpp"
#include "hilbpieri/dag.hpp"
#include "hilbpieri/pieri.hpp"
#include "hilbpieri/rewrite.hpp"
#include "hilbpieri/serialize.hpp"
#include "oracles.hpp"

using namespace hilb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

MSTriple sigma(Partition a, Partition b, Partition c) { return MSTriple(std::move(a), std::move(b), std::move(c)); }

std::string fmt_seconds(double s)
{
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << s << "s";
    return os.str();
}

// Each criterion returns "" on success, otherwise a reason.
std::string worked_example()
{
    const std::vector<TripleCoef> expected{
        {sigma({}, {1}, {3, 2}), 1},         {sigma({}, {3}, {2, 1}), 3},        {sigma({1}, {}, {2, 2, 1}), 2},
        {sigma({1}, {1}, {2, 1, 1}), -2},    {sigma({2}, {}, {2, 1, 1}), 2},     {sigma({}, {2}, {3, 1}), 2},
        {sigma({1}, {}, {3, 1, 1}), 2},
    };
    cli::JobConfig cfg;
    cfg.command = cli::Command::Product;
    cfg.n = 6;
    cfg.c = "3,2,1";
    cfg.force = true;
    std::ostringstream out, err;
    const auto t0 = Clock::now();
    const int code = cli::run_product(cfg, out, err);
    const double dt = seconds_since(t0);
    if (code != cli::Success)
        return "exit code " + std::to_string(code) + ": " + err.str();
    auto got = row_from_json(Json::parse(out.str())).output;
    auto want = expected;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want)
        return "row differs: " + out.str();
    if (dt >= 1.0)
        return "took " + fmt_seconds(dt);
    return {};
}

std::string degeneration_multiplicities()
{
    const auto theta = expand_theta_p({2, 1, 0}, 1);
    const FormalSum want_theta{
        {Term(Core{ThetaO{{2, 1, 0}, 1}}), 3},
        {Term(Core{LittlePhi{{1, 1, 0}, 1}}), 2},
        {Term(Core{LittlePhi{{1, 0, 0}, 2}}), 2},
    };
    if (theta != want_theta)
        return "first degeneration gave " + theta.to_string();
    const auto phi = expand_little_phi({1, 1, 0}, 1);
    const FormalSum want_phi{
        {Term(Core{BigPhi{{1, 1, 0}, 1}}), 1},
        {Term(Core{LittlePhi{{1, 0, 0}, 2}}), -2},
        {Term(Core{LittlePhi{{0, 0, 0}, 3}}), -3},
    };
    if (phi != want_phi)
        return "second degeneration gave " + phi.to_string();
    return {};
}

std::string assembly_counts()
{
    const Partition m{2, 1, 1};
    const std::vector<std::pair<Partition, Coef>> table{
        {{1, 1, 1}, 3}, {{2, 1, 0}, 1}, {{1, 1, 0}, 2}, {{2, 0, 0}, 1}, {{1, 0, 0}, 1}};
    for (const auto& [lam, c] : table)
        if (count_assemblies(m, lam) != c)
            return "c(" + m.to_string() + ", " + lam.to_string() + ") = " + std::to_string(count_assemblies(m, lam));

    const auto t0 = Clock::now();
    std::size_t pairs = 0;
    for (int s = 0; s <= 10; ++s) {
        for (const auto& p : partitions_of(s)) {
            for (std::size_t r = std::max<std::size_t>(p.size(), 1); r <= 10; ++r) {
                auto mv = p.vec();
                mv.resize(r, 0);
                const Partition mm(mv);
                // every partition of length r contained in m, by odometer over rows
                std::vector<int> lam(r, 0);
                while (true) {
                    if (std::is_sorted(lam.rbegin(), lam.rend())) {
                        ++pairs;
                        const Coef got = count_assemblies(mm, Partition(lam));
                        const Coef want = oracle::count_assemblies(mv, lam);
                        if (got != want)
                            return "c(" + mm.to_string() + ", " + Partition(lam).to_string() + ") = " +
                                   std::to_string(got) + ", oracle " + std::to_string(want);
                    }
                    std::size_t k = 0;
                    while (k < r && lam[k] == mv[k])
                        lam[k++] = 0;
                    if (k == r)
                        break;
                    ++lam[k];
                }
            }
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 10.0)
        return "exhaustive check took " + fmt_seconds(dt);
    std::cout << "      (" << pairs << " pairs in " << fmt_seconds(dt) << ")\n";
    return {};
}

std::string dag_golden()
{
    const auto dag = build_dag({2, 1, 1}, 1);
    const std::vector<std::tuple<Partition, Partition, Coef>> edges{
        {{2, 1, 1}, {1, 1, 1}, 3}, {{2, 1, 1}, {1, 1, 0}, 2}, {{2, 1, 1}, {1, 0, 0}, 1},
        {{1, 1, 1}, {1, 1, 0}, 1}, {{1, 1, 1}, {1, 0, 0}, 1}, {{1, 1, 1}, {0, 0, 0}, 1},
        {{1, 1, 0}, {1, 0, 0}, 2}, {{1, 1, 0}, {0, 0, 0}, 3}, {{1, 0, 0}, {0, 0, 0}, 3},
    };
    if (dag.edges().size() != edges.size())
        return std::to_string(dag.edges().size()) + " edges";
    for (const auto& [from, to, w] : edges)
        if (dag.weight(from, to) != w)
            return "edge " + from.to_string() + " -> " + to.to_string() + " has weight " +
                   std::to_string(dag.weight(from, to));
    for (const Partition& lam : {Partition{1, 0, 0}, Partition{0, 0, 0}})
        if (path_weight_sum(dag, lam) != 0)
            return "path sum at " + lam.to_string() + " is " + std::to_string(path_weight_sum(dag, lam));
    return {};
}

std::string conjecture_sweep_w8()
{
    const auto t0 = Clock::now();
    const auto reports = conjecture_sweep(8);
    const double dt = seconds_since(t0);
    std::size_t failures = 0;
    std::string first;
    for (const auto& r : reports)
        if (!r.pass && failures++ == 0)
            first = dump_canonical(to_json(r));
    if (failures)
        return std::to_string(failures) + " counterexample(s), first: " + first;
    if (dt >= 300.0)
        return "sweep took " + fmt_seconds(dt);
    std::cout << "      (" << reports.size() << " cases in " << fmt_seconds(dt) << ")\n";
    return {};
}

std::string conservation()
{
    const auto t0 = Clock::now();
    std::size_t steps = 0;
    for (int n = 1; n <= 5; ++n) {
        for (const auto& alpha : enumerate_basis(n)) {
            const Coef codim = alpha.codim() + 1;
            std::string problem;
            RewriteOptions o;
            o.check_each_step = true;
            o.observer = [&](const RewriteStep& step, const FormalSum& state) {
                ++steps;
                for (const auto& [t, c] : state)
                    if (problem.empty() && (t.length() != n || t.codim() != codim))
                        problem = alpha.to_string() + " after " + step.rule + ": " + t.to_string();
            };
            for (const auto& [t, c] : split_h_product(alpha))
                if (problem.empty() && (t.length() != n || t.codim() != codim))
                    problem = alpha.to_string() + " split: " + t.to_string();
            const auto row = intersect_with_h(alpha, o);
            if (!problem.empty())
                return problem;
            for (const auto& [t, c] : row.output)
                if (t.n() != n || t.codim() != codim)
                    return alpha.to_string() + " output " + t.to_string();
        }
    }
    for (const auto& row : pieri_matrix(6))
        for (const auto& [t, c] : row.output)
            if (t.n() != 6 || t.codim() != row.input.codim() + 1)
                return row.input.to_string() + " output " + t.to_string();
    const double dt = seconds_since(t0);
    if (dt >= 300.0)
        return "took " + fmt_seconds(dt);
    std::cout << "      (" << steps << " substitutions observed in " << fmt_seconds(dt) << ")\n";
    return {};
}

std::string dag_engine_equivalence()
{
    RewriteOptions o;
    o.keep_kinds = {core_kind<ThetaO>, core_kind<BigPhi>};
    std::size_t nodes = 0;
    for (const auto& [m, i] : conjecture_cases(7)) {
        const auto dag = build_dag(m, i);
        const auto sums = path_weight_sums(dag);
        const auto cascade = Rewriter(o).cascade(FormalSum{{Term(Core{ThetaP{m, i}}), 1}});
        for (std::size_t v = 1; v < dag.nodes().size(); ++v) {
            const auto& lam = dag.nodes()[v];
            const Coef engine = cascade.coefficient(Term(Core{BigPhi{lam, m.sum() - lam.sum()}}));
            if (engine != sums[v])
                return "m=" + m.to_string() + " i=" + std::to_string(i) + " node " + lam.to_string() + ": DAG " +
                       std::to_string(sums[v]) + ", engine " + std::to_string(engine);
            ++nodes;
        }
        for (const auto& [t, c] : cascade) {
            const auto* big = t.core() ? std::get_if<BigPhi>(&*t.core()) : nullptr;
            if (big && !dag.contains(big->lam))
                return "engine produced Phi outside the DAG: " + t.to_string();
        }
    }
    std::cout << "      (" << nodes << " nodes compared)\n";
    return {};
}

std::string cancellation_trace()
{
    std::vector<Coef> trace;
    RewriteOptions o;
    o.check_each_step = true;
    const Term target(Core{LittlePhi{{0, 0, 0}, 3}});
    o.observer = [&](const RewriteStep& step, const FormalSum& state) {
        if (std::holds_alternative<LittlePhi>(step.core))
            trace.push_back(state.coefficient(target));
    };
    Rewriter(o).cascade(FormalSum{{Term(Core{ThetaP{{2, 1, 0}, 1}}), 1}});
    if (trace.size() < 2)
        return "only " + std::to_string(trace.size()) + " phi substitutions";
    if (trace[0] != -6 || trace[1] != 0)
        return "trace " + std::to_string(trace[0]) + ", " + std::to_string(trace[1]);
    return {};
}

std::string determinism()
{
    const auto first = dump_canonical(matrix_to_json(4, pieri_matrix(4)));
    if (dump_canonical(matrix_to_json(4, pieri_matrix(4))) != first)
        return "second run differs";
    if (dump_canonical(matrix_to_json(4, pieri_matrix_serial(4))) != first)
        return "serial reference differs";
    for (int threads : {1, 2, 4})
        if (dump_canonical(matrix_to_json(4, pieri_matrix(4, threads))) != first)
            return std::to_string(threads) + " threads differ";
    return {};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"worked-example row", worked_example},
        {"degeneration multiplicities", degeneration_multiplicities},
        {"assembly counts", assembly_counts},
        {"DAG golden values", dag_golden},
        {"conjecture sweep to weight 8", conjecture_sweep_w8},
        {"conservation invariants", conservation},
        {"DAG/engine equivalence", dag_engine_equivalence},
        {"cancellation trace", cancellation_trace},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto& [name, run] = criteria[k];
        std::string problem;
        const auto t0 = Clock::now();
        try {
            problem = run();
        } catch (const std::exception& e) {
            problem = std::string("threw: ") + e.what();
        }
        const auto dt = fmt_seconds(seconds_since(t0));
        if (problem.empty()) {
            std::cout << "PASS  " << k + 1 << ". " << name << " (" << dt << ")\n";
        } else {
            ++failures;
            std::cout << "FAIL  " << k + 1 << ". " << name << ": " << problem << "\n";
        }
    }
    std::cout << (failures ? std::to_string(failures) + " criterion(s) failed\n" : "all criteria passed\n");
    return failures ? 1 : 0;
}
