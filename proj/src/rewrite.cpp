#include "hilbpieri/rewrite.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace hilb {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Coef sign(int exponent)
{
    return exponent % 2 == 0 ? 1 : -1;
}

// Lower keys are substituted first under Schedule::Canonical.
std::pair<int, int> priority(const Core& core)
{
    return std::visit(overloaded{
                          [](const ThetaP&) { return std::pair{0, 0}; },
                          [](const ThetaO&) { return std::pair{1, 0}; },
                          [](const LittlePhi& c) { return std::pair{2, c.q}; },
                          [](const BigPhi&) { return std::pair{3, 0}; },
                          [](const TwoPoint&) { return std::pair{4, 0}; },
                          [](const Punct& c) { return std::pair{5, -c.q}; },
                      },
                      core);
}

}  // namespace

FormalSum split_h_product(const MSTriple& alpha)
{
    FormalSum out;
    const auto atoms = alpha.atoms();
    auto others = [&](std::size_t skip) {
        std::vector<Atom> ctx;
        for (std::size_t k = 0; k < atoms.size(); ++k)
            if (k != skip)
                ctx.push_back(atoms[k]);
        return ctx;
    };

    // Type A: the line of H meets L_e in a second fixed point.
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (atoms[k].kind == AtomKind::APoint && atoms[k].k >= 2)
            out.add(Term(others(k), Core{TwoPoint{atoms[k].k - 2}}), 1);
    }
    // Type B: the fixed line M_f acquires the fixed point M_f cap L.
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (atoms[k].kind == AtomKind::BLine) {
            auto ctx = others(k);
            ctx.push_back(Atom::a_point(atoms[k].k));
            out.add(Term(std::move(ctx)), 1);
        }
    }
    // Type C: a point of a moving line lands on L. All moving lines go into the core.
    if (!alpha.c.empty()) {
        std::vector<int> shifted;
        for (int v : alpha.c.entries())
            shifted.push_back(v - 1);
        const Partition m(std::move(shifted));
        std::vector<Atom> ctx;
        for (const auto& a : atoms)
            if (a.kind != AtomKind::CMoving)
                ctx.push_back(a);
        std::set<int> values(alpha.c.entries().begin(), alpha.c.entries().end());
        for (int v : values)
            out.add(Term(ctx, Core{ThetaP{m, anchor_index(m, v - 1)}}), 1);
    }
    return out;
}

FormalSum expand_theta_p(const Partition& m, std::size_t i)
{
    if (!is_anchor(m, i))
        throw std::invalid_argument("expand_theta_p: row " + std::to_string(i) + " is not an anchor of " + m.to_string());
    FormalSum out;
    out.add(Term(Core{ThetaO{m, i}}), m.row(i) + 1);
    for (std::size_t j = 1; j <= m.size(); ++j)
        for (const auto& lam : sigma_set_anchored(m, j, i))
            out.add(Term(Core{LittlePhi{lam, static_cast<int>(j)}}), first_deg_coefficient(m, i, lam));
    return out;
}

std::vector<Atom> theta_o_to_atoms(const Partition& m, std::size_t i)
{
    if (!is_anchor(m, i))
        throw std::invalid_argument("theta_o_to_atoms: row " + std::to_string(i) + " is not an anchor of " + m.to_string());
    std::vector<Atom> out;
    out.push_back(Atom::b_line(m.row(i) + 1));
    for (std::size_t j = 1; j <= m.size(); ++j)
        if (j != i)
            out.push_back(Atom::c_moving(m.row(j) + 1));
    return out;
}

FormalSum expand_little_phi(const Partition& lam, int q)
{
    if (q < 1)
        throw std::invalid_argument("expand_little_phi: q must be positive");
    FormalSum out;
    out.add(Term(Core{BigPhi{lam, q}}), 1);
    for (std::size_t j = 1; j <= lam.size(); ++j)
        for (const auto& smaller : sigma_set(lam, j))
            out.add(Term(Core{LittlePhi{smaller, q + static_cast<int>(j)}}), -count_assemblies(lam, smaller));
    return out;
}

Term big_phi_to_term(const Partition& lam, int q)
{
    if (q < 1)
        throw std::invalid_argument("big_phi_to_term: q must be positive");
    std::vector<Atom> atoms;
    for (int v : lam.entries())
        atoms.push_back(Atom::c_moving(v + 1));
    return Term(std::move(atoms), Core{Punct{q}});
}

FormalSum expand_punct(int q)
{
    if (q < 1)
        throw std::invalid_argument("expand_punct: q must be positive");
    FormalSum out;
    for (int i = 1; i <= q - 1; ++i)
        out.add(Term({Atom::b_line(i)}, Core{Punct{q - i}}), sign(i + 1));
    out.add(Term({Atom::a_point(q)}), sign(q - 1));
    return out;
}

FormalSum expand_two_point(int k)
{
    if (k < 0)
        throw std::invalid_argument("expand_two_point: k must be nonnegative");
    FormalSum out;
    for (int i = 0; i <= k; ++i)
        out.add(Term({Atom::a_point(k + 1 - i)}, Core{Punct{i + 1}}), sign(i));
    return out;
}

FormalSum expand_core(const Core& core)
{
    return std::visit(overloaded{
                          [](const ThetaP& c) { return expand_theta_p(c.m, c.i); },
                          [](const ThetaO& c) { return FormalSum{{Term(theta_o_to_atoms(c.m, c.i)), 1}}; },
                          [](const LittlePhi& c) { return expand_little_phi(c.lam, c.q); },
                          [](const BigPhi& c) { return FormalSum{{big_phi_to_term(c.lam, c.q), 1}}; },
                          [](const Punct& c) { return expand_punct(c.q); },
                          [](const TwoPoint& c) { return expand_two_point(c.k); },
                      },
                      core);
}

const char* rule_name(const Core& core)
{
    static constexpr const char* names[] = {
        "first-degeneration", "theta-o-to-basis", "second-degeneration",
        "big-phi-to-punctual", "punctual-recursion", "two-point-recursion",
    };
    return names[core.index()];
}

void check_conservation(const Core& core, const FormalSum& expansion)
{
    const int length = core_length(core);
    const int codim = core_codim(core);
    for (const auto& [t, c] : expansion) {
        if (t.length() != length || t.codim() != codim) {
            std::ostringstream os;
            os << core_to_string(core) << " (length " << length << ", codim " << codim << ") produced "
               << t.to_string() << " (length " << t.length() << ", codim " << t.codim() << ")";
            throw EngineError(rule_name(core), os.str());
        }
    }
}

Rewriter::Rewriter(RewriteOptions options) : options_(std::move(options)) {}

FormalSum Rewriter::cascade(FormalSum state)
{
    std::mt19937_64 rng(options_.seed);
    std::map<Core, FormalSum> expansions;
    auto kept = [&](const Core& c) {
        return std::find(options_.keep_kinds.begin(), options_.keep_kinds.end(), c.index()) != options_.keep_kinds.end();
    };
    stats_.max_terms = std::max(stats_.max_terms, state.size());

    for (;;) {
        std::map<Core, Coef> pending;
        for (const auto& [t, c] : state)
            if (t.core() && !kept(*t.core()))
                pending[*t.core()] = checked_add(pending[*t.core()], c);
        if (pending.empty())
            return state;

        auto chosen = pending.begin();
        if (options_.schedule == Schedule::Random) {
            std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
            std::advance(chosen, static_cast<std::ptrdiff_t>(pick(rng)));
        } else {
            chosen = std::min_element(pending.begin(), pending.end(), [](const auto& x, const auto& y) {
                const auto px = priority(x.first), py = priority(y.first);
                return px != py ? px < py : x.first < y.first;
            });
        }
        const Core core = chosen->first;

        auto [slot, fresh] = expansions.try_emplace(core);
        if (fresh) {
            slot->second = expand_core(core);
            if (options_.check_each_step)
                check_conservation(core, slot->second);
        }
        const FormalSum& expansion = slot->second;

        std::vector<std::pair<Term, Coef>> hits;
        for (const auto& [t, c] : state)
            if (t.core() == core)
                hits.emplace_back(t, c);
        for (const auto& [t, c] : hits) {
            state.erase(t);
            const Term ctx = t.context();
            for (const auto& [u, d] : expansion)
                state.add(ctx.combine(u), checked_mul(c, d));
        }
        ++stats_.rule_applications;
        stats_.max_terms = std::max(stats_.max_terms, state.size());
        if (options_.observer)
            options_.observer(RewriteStep{rule_name(core), core, chosen->second, hits.size()}, state);
    }
}

std::vector<TripleCoef> Rewriter::to_ms(const FormalSum& input)
{
    std::set<std::pair<int, int>> shapes;
    for (const auto& [t, c] : input)
        shapes.emplace(t.length(), t.codim());

    const auto keep = std::exchange(options_.keep_kinds, {});
    const FormalSum reduced = cascade(input);
    options_.keep_kinds = keep;

    std::map<MSTriple, Coef> collected;
    for (const auto& [t, c] : reduced) {
        if (!shapes.contains({t.length(), t.codim()}))
            throw EngineError("endpoint", "output term " + t.to_string() + " has length/codim not present in the input");
        auto& slot = collected[triple_from_atoms(t.atoms())];
        slot = checked_add(slot, c);
    }
    std::vector<TripleCoef> out;
    for (const auto& [triple, c] : collected)
        if (c != 0)
            out.emplace_back(triple, c);
    return out;
}

std::vector<TripleCoef> rewrite_to_ms(const FormalSum& s, const RewriteOptions& options)
{
    return Rewriter(options).to_ms(s);
}

}  // namespace hilb
