#include "hilbpieri/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hilbpieri/dag.hpp"
#include "hilbpieri/pieri.hpp"
#include "hilbpieri/rewrite.hpp"
#include "hilbpieri/serialize.hpp"

namespace hilb::cli {

namespace {

MSTriple sigma(Partition a, Partition b, Partition c)
{
    return MSTriple(std::move(a), std::move(b), std::move(c));
}

std::string describe(const std::vector<TripleCoef>& terms)
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    for (const auto& [t, c] : terms)
        os << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c) << t.to_string();
    return os.str();
}

template <class T>
std::string diff(const T& actual, const T& expected, auto&& show)
{
    if (actual == expected)
        return {};
    return "expected " + show(expected) + ", got " + show(actual);
}

std::string diff_sum(const FormalSum& actual, const FormalSum& expected)
{
    return diff(actual, expected, [](const FormalSum& s) { return s.to_string(); });
}

std::string diff_terms(const std::vector<TripleCoef>& actual, const std::vector<TripleCoef>& expected)
{
    return diff(actual, expected, describe);
}

std::string diff_parts(const std::vector<Partition>& actual, const std::vector<Partition>& expected)
{
    return diff(actual, expected, [](const std::vector<Partition>& v) {
        std::string s = "{";
        for (const auto& p : v)
            s += p.to_string() + " ";
        return s + "}";
    });
}

std::string diff_int(Coef actual, Coef expected)
{
    return diff(actual, expected, [](Coef v) { return std::to_string(v); });
}

RewriteOptions options_for(bool check)
{
    RewriteOptions o;
    o.check_each_step = check;
    return o;
}

Json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    return Json::parse(in);
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write " + tmp);
        out << text;
        if (!out)
            throw std::runtime_error("write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

void emit(const PieriRow& row, Format format, std::ostream& out)
{
    switch (format) {
    case Format::Json: out << dump_canonical(to_json(row)); break;
    case Format::Text: out << to_text(row); break;
    case Format::Latex: out << to_latex(row) << "\n"; break;
    }
}

}  // namespace

std::filesystem::path cache_dir(const JobConfig& cfg)
{
    if (const char* env = std::getenv("HILB_PIERI_CACHE"); env && *env)
        return env;
    return cfg.out_dir;
}

std::filesystem::path matrix_cache_path(const JobConfig& cfg, int n)
{
    return cache_dir(cfg) / ("pieri_N" + std::to_string(n) + ".json");
}

int run_product(const JobConfig& cfg, std::ostream& out, std::ostream& err)
{
    MSTriple alpha;
    try {
        alpha = sigma(parse_positive_partition(cfg.a), parse_positive_partition(cfg.b), parse_positive_partition(cfg.c));
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return Usage;
    }
    if (cfg.n && *cfg.n != alpha.n()) {
        err << "usage error: --n " << *cfg.n << " does not match the partitions (total " << alpha.n() << ")\n";
        return Usage;
    }

    try {
        const auto cached = matrix_cache_path(cfg, alpha.n());
        if (!cfg.force && alpha.n() >= 1 && std::filesystem::exists(cached)) {
            const Json doc = read_json(cached);
            for (const auto& row : doc.at("rows")) {
                if (triple_from_json(row.at("input")) == alpha) {
                    emit(row_from_json(row), cfg.format, out);
                    return Success;
                }
            }
        }
        emit(intersect_with_h(alpha, options_for(cfg.check_invariants)), cfg.format, out);
        return Success;
    } catch (const EngineError& e) {
        err << "engine failure in rule " << e.rule() << ": " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "engine failure: " << e.what() << "\n";
    }
    return EngineFailure;
}

int run_matrix(const JobConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!cfg.n || *cfg.n < 1) {
        err << "usage error: matrix needs --n >= 1\n";
        return Usage;
    }
    const int n = *cfg.n;
    const auto path = matrix_cache_path(cfg, n);
    try {
        if (!cfg.force && std::filesystem::exists(path)) {
            const auto rows = matrix_from_json(read_json(path));
            out << "cache hit: " << path.string() << " (" << rows.size() << " rows)\n";
            return Success;
        }
        const auto rows = pieri_matrix(n, cfg.threads, options_for(cfg.check_invariants));
        write_text(path, dump_canonical(matrix_to_json(n, rows)));
        out << "wrote " << path.string() << " (" << rows.size() << " rows)\n";
        if (cfg.format == Format::Text)
            for (const auto& row : rows)
                out << to_text(row);
        else if (cfg.format == Format::Latex)
            for (const auto& row : rows)
                out << to_latex(row) << "\n";
        return Success;
    } catch (const EngineError& e) {
        err << "engine failure in rule " << e.rule() << ": " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "matrix failure: " << e.what() << "\n";
    }
    return EngineFailure;
}

int run_conjecture(const JobConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.max_weight < 0) {
        err << "usage error: --max-weight must be nonnegative\n";
        return Usage;
    }
    try {
        const auto reports = conjecture_sweep(cfg.max_weight, cfg.threads);
        Json all = Json::array();
        Json witnesses = Json::array();
        for (const auto& r : reports) {
            all.push_back(to_json(r));
            if (!r.pass)
                witnesses.push_back(to_json(r));
        }
        const bool pass = witnesses.empty();
        const Json doc{
            {"max_weight", cfg.max_weight},
            {"cases", reports.size()},
            {"pass", pass},
            {"counterexamples", witnesses},
            {"reports", std::move(all)},
        };
        const auto path = cache_dir(cfg) / ("conjecture_w" + std::to_string(cfg.max_weight) + ".json");
        write_text(path, dump_canonical(doc));
        out << "checked " << reports.size() << " cases up to weight " << cfg.max_weight << ": "
            << (pass ? "no counterexample" : std::to_string(witnesses.size()) + " counterexample(s)") << "\n"
            << "report: " << path.string() << "\n";
        return pass ? Success : Counterexample;
    } catch (const std::exception& e) {
        err << "conjecture sweep failure: " << e.what() << "\n";
    }
    return EngineFailure;
}

std::vector<TripleCoef> worked_example_row()
{
    return {
        {sigma({}, {1}, {3, 2}), 1},
        {sigma({}, {2}, {3, 1}), 2},
        {sigma({}, {3}, {2, 1}), 3},
        {sigma({1}, {}, {2, 2, 1}), 2},
        {sigma({1}, {}, {3, 1, 1}), 2},
        {sigma({1}, {1}, {2, 1, 1}), -2},
        {sigma({2}, {}, {2, 1, 1}), 2},
    };
}

std::vector<GoldenCase> golden_cases()
{
    return golden_cases(worked_example_row());
}

std::vector<GoldenCase> golden_cases(std::vector<TripleCoef> worked_example)
{
    std::vector<GoldenCase> cases;
    auto add = [&](std::string name, std::string rule, std::function<std::string(bool)> fn) {
        cases.push_back({std::move(name), std::move(rule), std::move(fn)});
    };
    auto phi = [](Partition lam, int q) { return Term(Core{LittlePhi{std::move(lam), q}}); };
    auto big = [](Partition lam, int q) { return Term(Core{BigPhi{std::move(lam), q}}); };

    add("sigma sets of (2,1,1)", "sigma_set", [](bool) {
        return diff_parts(sigma_set({2, 1, 1}, 1), {{1, 1, 1}, {2, 1, 0}}) +
               diff_parts(sigma_set({2, 1, 1}, 3), {{1, 0, 0}});
    });
    add("anchored sigma sets", "sigma_set_anchored", [](bool) {
        return diff_parts(sigma_set_anchored({2, 1, 1}, 1, 3), {{2, 1, 0}}) +
               diff_parts(sigma_set_anchored({2, 1, 0}, 2, 1), {{1, 0, 0}});
    });
    add("assembly counts for m=(2,1,1)", "count_assemblies", [](bool) {
        const Partition m{2, 1, 1};
        return diff_int(count_assemblies(m, {1, 1, 1}), 3) + diff_int(count_assemblies(m, {2, 1, 0}), 1) +
               diff_int(count_assemblies(m, {1, 1, 0}), 2) + diff_int(count_assemblies(m, {2, 0, 0}), 1) +
               diff_int(count_assemblies(m, {1, 0, 0}), 1);
    });
    add("assembly counts of the worked example", "count_assemblies", [](bool) {
        return diff_int(count_assemblies({2, 1, 0}, {1, 0, 0}), 2) +
               diff_int(count_assemblies({1, 1, 0}, {0, 0, 0}), 3);
    });
    add("first degeneration multiplicities", "first_deg_coefficient", [](bool) {
        return diff_int(first_deg_coefficient({2, 1, 0}, 1, {1, 1, 0}), 2) +
               diff_int(first_deg_coefficient({2, 1, 0}, 1, {1, 0, 0}), 2) +
               diff_int(first_deg_coefficient({2, 1, 1}, 1, {1, 1, 1}), 3);
    });
    add("theta length", "term_length", [](bool) {
        return diff_int(Term(Core{ThetaP{{2, 1, 0}, 1}}).length(), 6);
    });
    add("atoms to triples", "triple_from_atoms", [](bool) {
        const std::vector<Atom> first{Atom::b_line(3), Atom::c_moving(2), Atom::c_moving(1)};
        const std::vector<Atom> second{Atom::a_point(1), Atom::c_moving(2), Atom::c_moving(2), Atom::c_moving(1)};
        auto show = [](const MSTriple& t) { return t.to_string(); };
        return diff(triple_from_atoms(first), sigma({}, {3}, {2, 1}), show) +
               diff(triple_from_atoms(second), sigma({1}, {}, {2, 2, 1}), show);
    });
    add("H . sigma_(0,0,(3,2,1)) components", "split_h_product", [](bool) {
        const Partition m{2, 1, 0};
        const FormalSum expected{{Term(Core{ThetaP{m, 1}}), 1}, {Term(Core{ThetaP{m, 2}}), 1}, {Term(Core{ThetaP{m, 3}}), 1}};
        return diff_sum(split_h_product(sigma({}, {}, {3, 2, 1})), expected);
    });
    add("first degeneration of Theta^P_(2,1,0),1", "first-degeneration", [phi](bool) {
        const FormalSum expected{{Term(Core{ThetaO{{2, 1, 0}, 1}}), 3}, {phi({1, 1, 0}, 1), 2}, {phi({1, 0, 0}, 2), 2}};
        return diff_sum(expand_theta_p({2, 1, 0}, 1), expected);
    });
    add("first degeneration with m_i = 0", "first-degeneration", [](bool) {
        return diff_sum(expand_theta_p({2, 1, 0}, 3), FormalSum{{Term(Core{ThetaO{{2, 1, 0}, 3}}), 1}});
    });
    add("Theta^O to basis atoms", "theta-o-to-basis", [](bool) {
        auto show = [](const MSTriple& t) { return t.to_string(); };
        return diff(triple_from_atoms(theta_o_to_atoms({2, 1, 0}, 1)), sigma({}, {3}, {2, 1}), show) +
               diff(triple_from_atoms(theta_o_to_atoms({2, 1, 0}, 2)), sigma({}, {2}, {3, 1}), show);
    });
    add("second degeneration multiplicities", "second-degeneration", [phi, big](bool) {
        const FormalSum first{{big({1, 1, 0}, 1), 1}, {phi({1, 0, 0}, 2), -2}, {phi({0, 0, 0}, 3), -3}};
        const FormalSum second{{big({1, 0, 0}, 2), 1}, {phi({0, 0, 0}, 3), -3}};
        const FormalSum last{{big({0, 0, 0}, 3), 1}};
        return diff_sum(expand_little_phi({1, 1, 0}, 1), first) + diff_sum(expand_little_phi({1, 0, 0}, 2), second) +
               diff_sum(expand_little_phi({0, 0, 0}, 3), last);
    });
    add("Phi to punctual term", "big-phi-to-punctual", [](bool) {
        const Term expected({Atom::c_moving(2), Atom::c_moving(2), Atom::c_moving(1)}, Core{Punct{1}});
        return diff(big_phi_to_term({1, 1, 0}, 1), expected, [](const Term& t) { return t.to_string(); });
    });
    add("punctual recursion q=1,2", "punctual-recursion", [](bool) {
        const FormalSum one{{Term({Atom::a_point(1)}), 1}};
        const FormalSum two{{Term({Atom::b_line(1)}, Core{Punct{1}}), 1}, {Term({Atom::a_point(2)}), -1}};
        return diff_sum(expand_punct(1), one) + diff_sum(expand_punct(2), two);
    });
    add("class of Theta^P_(2,1,0),1", "rewrite_to_ms", [](bool check) {
        const std::vector<TripleCoef> expected{
            {sigma({}, {3}, {2, 1}), 3},
            {sigma({1}, {}, {2, 2, 1}), 2},
            {sigma({1}, {1}, {2, 1, 1}), -2},
            {sigma({2}, {}, {2, 1, 1}), 2},
        };
        return diff_terms(rewrite_to_ms(FormalSum{{Term(Core{ThetaP{{2, 1, 0}, 1}}), 1}}, options_for(check)), expected);
    });
    add("class of Theta^P_(2,1,0),2", "rewrite_to_ms", [](bool check) {
        const std::vector<TripleCoef> expected{{sigma({}, {2}, {3, 1}), 2}, {sigma({1}, {}, {3, 1, 1}), 2}};
        return diff_terms(rewrite_to_ms(FormalSum{{Term(Core{ThetaP{{2, 1, 0}, 2}}), 1}}, options_for(check)), expected);
    });
    add("worked example row H . sigma_(0,0,(3,2,1))", "intersect_with_h", [worked_example](bool check) {
        return diff_terms(intersect_with_h(sigma({}, {}, {3, 2, 1}), options_for(check)).output, worked_example);
    });
    add("DAG for m=(2,1,1), i=1", "build_dag", [](bool) {
        const auto dag = build_dag({2, 1, 1}, 1);
        const std::vector<std::tuple<Partition, Partition, Coef>> expected{
            {{2, 1, 1}, {1, 1, 1}, 3}, {{2, 1, 1}, {1, 1, 0}, 2}, {{2, 1, 1}, {1, 0, 0}, 1},
            {{1, 1, 1}, {1, 1, 0}, 1}, {{1, 1, 1}, {0, 0, 0}, 1}, {{1, 1, 1}, {1, 0, 0}, 1},
            {{1, 1, 0}, {0, 0, 0}, 3}, {{1, 1, 0}, {1, 0, 0}, 2}, {{1, 0, 0}, {0, 0, 0}, 3},
        };
        std::string d = diff_int(static_cast<Coef>(dag.edges().size()), 9);
        for (const auto& [from, to, w] : expected)
            d += diff_int(dag.weight(from, to), w);
        d += diff_int(path_weight_sum(dag, {1, 0, 0}), 0) + diff_int(path_weight_sum(dag, {0, 0, 0}), 0);
        return d;
    });
    add("cancellation of phi^(0,0,0)_3", "second-degeneration", [](bool check) {
        RewriteOptions o = options_for(check);
        std::vector<Coef> trace;
        const Term watched(Core{LittlePhi{{0, 0, 0}, 3}});
        o.observer = [&](const RewriteStep& step, const FormalSum& state) {
            if (std::holds_alternative<LittlePhi>(step.core))
                trace.push_back(state.coefficient(watched));
        };
        Rewriter(o).cascade(FormalSum{{Term(Core{ThetaP{{2, 1, 0}, 1}}), 1}});
        if (trace.size() < 2)
            return std::string("fewer than two phi substitutions");
        return diff_int(trace[0], -6) + diff_int(trace[1], 0);
    });
    return cases;
}

int run_golden_suite(const std::vector<GoldenCase>& cases, bool check_invariants, int sweep_max_n, std::ostream& out)
{
    int failures = 0;
    for (const auto& gc : cases) {
        std::string problem;
        try {
            problem = gc.check(check_invariants);
        } catch (const std::exception& e) {
            problem = std::string("threw: ") + e.what();
        }
        if (problem.empty()) {
            out << "PASS  " << gc.name << "\n";
        } else {
            ++failures;
            out << "FAIL  " << gc.name << " [rule " << gc.rule << "]: " << problem << "\n";
        }
    }

    for (int n = 1; n <= sweep_max_n; ++n) {
        std::size_t checked = 0;
        std::string problem;
        for (const auto& alpha : enumerate_basis(n)) {
            RewriteOptions o;
            o.check_each_step = true;
            const int codim = alpha.codim() + 1;
            o.observer = [&](const RewriteStep& step, const FormalSum& state) {
                for (const auto& [t, c] : state)
                    if (problem.empty() && (t.length() != n || t.codim() != codim))
                        problem = alpha.to_string() + " after " + step.rule + ": " + t.to_string();
            };
            try {
                const auto row = intersect_with_h(alpha, o);
                for (const auto& [t, c] : row.output)
                    if (problem.empty() && (t.n() != n || t.codim() != codim))
                        problem = alpha.to_string() + " output " + t.to_string();
            } catch (const std::exception& e) {
                problem = alpha.to_string() + " threw: " + e.what();
            }
            ++checked;
            if (!problem.empty())
                break;
        }
        if (problem.empty()) {
            out << "PASS  conservation sweep N=" << n << " (" << checked << " classes)\n";
        } else {
            ++failures;
            out << "FAIL  conservation sweep N=" << n << " [rule conservation]: " << problem << "\n";
        }
    }

    out << "note: the punctual recursion sums i = 1..q-1; an upper index of q would add a term of the wrong "
           "codimension.\n";
    out << (failures == 0 ? "verify: all checks passed\n" : "verify: " + std::to_string(failures) + " check(s) failed\n");
    return failures == 0 ? Success : EngineFailure;
}

int run_verify(const JobConfig& cfg, std::ostream& out, std::ostream&)
{
    return run_golden_suite(golden_cases(), cfg.check_invariants, 5, out);
}

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err)
{
    switch (cfg.command) {
    case Command::Product: return run_product(cfg, out, err);
    case Command::Matrix: return run_matrix(cfg, out, err);
    case Command::Conjecture: return run_conjecture(cfg, out, err);
    case Command::Verify: return run_verify(cfg, out, err);
    }
    return Usage;
}

}  // namespace hilb::cli
