#include "hilbpieri/classes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hilb {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int sum_of(const Partition& p) { return p.sum(); }
int len_of(const Partition& p) { return static_cast<int>(p.size()); }

std::string latex_partition(const Partition& p)
{
    if (p.empty())
        return "0";
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < p.size(); ++k)
        os << (k ? "," : "") << p.vec()[k];
    os << ')';
    return os.str();
}

}  // namespace

Atom Atom::make(AtomKind kind, int k)
{
    if (k < 1)
        throw std::invalid_argument("atom size must be at least 1");
    return Atom{kind, k};
}

int Atom::codim() const
{
    switch (kind) {
    case AtomKind::APoint: return k + 1;
    case AtomKind::BLine: return k;
    case AtomKind::CMoving: return k - 1;
    }
    return 0;
}

std::string Atom::to_string() const
{
    const char* tag = kind == AtomKind::APoint ? "A" : kind == AtomKind::BLine ? "B" : "C";
    return std::string(tag) + std::to_string(k);
}

void validate_core(const Core& core)
{
    std::visit(overloaded{
                   [](const ThetaP& c) {
                       if (!is_anchor(c.m, c.i))
                           throw std::invalid_argument("ThetaP: invalid anchor row for " + c.m.to_string());
                   },
                   [](const ThetaO& c) {
                       if (!is_anchor(c.m, c.i))
                           throw std::invalid_argument("ThetaO: invalid anchor row for " + c.m.to_string());
                   },
                   [](const LittlePhi& c) {
                       if (c.q < 1)
                           throw std::invalid_argument("LittlePhi: q must be positive");
                   },
                   [](const BigPhi& c) {
                       if (c.q < 1)
                           throw std::invalid_argument("BigPhi: q must be positive");
                   },
                   [](const Punct& c) {
                       if (c.q < 1)
                           throw std::invalid_argument("Punct: q must be positive");
                   },
                   [](const TwoPoint& c) {
                       if (c.k < 0)
                           throw std::invalid_argument("TwoPoint: k must be nonnegative");
                   },
               },
               core);
}

int core_length(const Core& core)
{
    return std::visit(overloaded{
                          [](const ThetaP& c) { return sum_of(c.m) + len_of(c.m); },
                          [](const ThetaO& c) { return sum_of(c.m) + len_of(c.m); },
                          [](const LittlePhi& c) { return sum_of(c.lam) + len_of(c.lam) + c.q; },
                          [](const BigPhi& c) { return sum_of(c.lam) + len_of(c.lam) + c.q; },
                          [](const Punct& c) { return c.q; },
                          [](const TwoPoint& c) { return c.k + 2; },
                      },
                      core);
}

int core_codim(const Core& core)
{
    return std::visit(overloaded{
                          [](const ThetaP& c) { return sum_of(c.m) + 1; },
                          [](const ThetaO& c) { return sum_of(c.m) + 1; },
                          [](const LittlePhi& c) { return sum_of(c.lam) + c.q + 1; },
                          [](const BigPhi& c) { return sum_of(c.lam) + c.q + 1; },
                          [](const Punct& c) { return c.q + 1; },
                          [](const TwoPoint& c) { return c.k + 4; },
                      },
                      core);
}

const char* core_name(const Core& core)
{
    static constexpr const char* names[] = {"ThetaP", "ThetaO", "LittlePhi", "BigPhi", "Punct", "TwoPoint"};
    return names[core.index()];
}

std::string core_to_string(const Core& core)
{
    std::ostringstream os;
    os << core_name(core);
    std::visit(overloaded{
                   [&](const ThetaP& c) { os << '[' << c.m << ',' << c.i << ']'; },
                   [&](const ThetaO& c) { os << '[' << c.m << ',' << c.i << ']'; },
                   [&](const LittlePhi& c) { os << '[' << c.lam << ',' << c.q << ']'; },
                   [&](const BigPhi& c) { os << '[' << c.lam << ',' << c.q << ']'; },
                   [&](const Punct& c) { os << '[' << c.q << ']'; },
                   [&](const TwoPoint& c) { os << '[' << c.k << ']'; },
               },
               core);
    return os.str();
}

Term::Term(std::vector<Atom> atoms, std::optional<Core> core)
    : atoms_(std::move(atoms)), core_(std::move(core))
{
    std::sort(atoms_.begin(), atoms_.end());
    if (core_)
        validate_core(*core_);
}

int Term::length() const
{
    int total = core_ ? core_length(*core_) : 0;
    for (const auto& a : atoms_)
        total += a.length();
    return total;
}

int Term::codim() const
{
    int total = core_ ? core_codim(*core_) : 0;
    for (const auto& a : atoms_)
        total += a.codim();
    return total;
}

Term Term::combine(const Term& other) const
{
    if (core_ && other.core_)
        throw std::logic_error("cannot combine two terms that both carry a core");
    std::vector<Atom> atoms = atoms_;
    atoms.insert(atoms.end(), other.atoms_.begin(), other.atoms_.end());
    return Term(std::move(atoms), core_ ? core_ : other.core_);
}

std::string Term::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& a : atoms_) {
        os << (first ? "" : "*") << a.to_string();
        first = false;
    }
    if (core_)
        os << (first ? "" : "*") << core_to_string(*core_);
    else if (first)
        os << "1";
    return os.str();
}

Term canonical(const Term& t)
{
    return Term(std::vector<Atom>(t.atoms().begin(), t.atoms().end()), t.core());
}

FormalSum::FormalSum(std::initializer_list<std::pair<Term, Coef>> items)
{
    for (const auto& [t, c] : items)
        add(t, c);
}

void FormalSum::add(const Term& t, Coef coef)
{
    if (coef == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(t, coef);
    if (inserted)
        return;
    it->second = checked_add(it->second, coef);
    if (it->second == 0)
        terms_.erase(it);
}

void FormalSum::add(const FormalSum& other, Coef scale)
{
    for (const auto& [t, c] : other.terms_)
        add(t, checked_mul(c, scale));
}

Coef FormalSum::coefficient(const Term& t) const
{
    auto it = terms_.find(t);
    return it == terms_.end() ? 0 : it->second;
}

std::string FormalSum::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        const Coef mag = c < 0 ? -c : c;
        if (mag != 1)
            os << mag << "*";
        os << t.to_string();
        first = false;
    }
    return os.str();
}

MSTriple::MSTriple(Partition a_, Partition b_, Partition c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_))
{
    for (const Partition* p : {&a, &b, &c})
        if (p->count(0) != 0)
            throw std::invalid_argument("basis triple entries must be positive");
}

int MSTriple::codim() const
{
    return n() + static_cast<int>(a.size()) - static_cast<int>(c.size());
}

std::vector<Atom> MSTriple::atoms() const
{
    std::vector<Atom> out;
    for (int k : a.entries())
        out.push_back(Atom::a_point(k));
    for (int k : b.entries())
        out.push_back(Atom::b_line(k));
    for (int k : c.entries())
        out.push_back(Atom::c_moving(k));
    return out;
}

std::string MSTriple::to_string() const
{
    auto part = [](const Partition& p) { return p.empty() ? std::string("0") : p.to_string(); };
    return "(" + part(a) + "," + part(b) + "," + part(c) + ")";
}

std::string MSTriple::to_latex() const
{
    return "\\sigma_{(" + latex_partition(a) + "," + latex_partition(b) + "," + latex_partition(c) + ")}";
}

MSTriple triple_from_atoms(std::span<const Atom> atoms)
{
    std::vector<int> a, b, c;
    for (const auto& atom : atoms) {
        switch (atom.kind) {
        case AtomKind::APoint: a.push_back(atom.k); break;
        case AtomKind::BLine: b.push_back(atom.k); break;
        case AtomKind::CMoving: c.push_back(atom.k); break;
        }
    }
    return MSTriple(Partition::sort_desc(std::move(a)), Partition::sort_desc(std::move(b)),
                    Partition::sort_desc(std::move(c)));
}

}  // namespace hilb
