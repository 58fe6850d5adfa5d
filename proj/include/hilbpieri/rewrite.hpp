#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbpieri/classes.hpp"

namespace hilb {

/// Raised when a rewrite step breaks length or codimension conservation.
class EngineError : public std::runtime_error {
public:
    EngineError(std::string rule, const std::string& what)
        : std::runtime_error(rule + ": " + what), rule_(std::move(rule)) {}
    const std::string& rule() const { return rule_; }

private:
    std::string rule_;
};

// Single rules. Each returns the expansion of one core; every output term has
// the length and codimension of its input.

/// Components of H . sigma_alpha, split into type A, B and C intersections.
FormalSum split_h_product(const MSTriple& alpha);

/// First degeneration: (m_i + 1) ThetaO(m,i) + sum first_deg_coefficient * LittlePhi(lam, j).
FormalSum expand_theta_p(const Partition& m, std::size_t i);

/// ThetaO(m, i) as basis atoms: BLine(m_i + 1) plus CMoving(m_j + 1) for j != i.
std::vector<Atom> theta_o_to_atoms(const Partition& m, std::size_t i);

/// Second degeneration solved for phi: BigPhi(lam,q) - sum c(lam,lam') LittlePhi(lam', q+j).
FormalSum expand_little_phi(const Partition& lam, int q);

/// BigPhi(lam, q) as CMoving(lam_j + 1) atoms around a Punct(q) core.
Term big_phi_to_term(const Partition& lam, int q);

/// One step of the punctual recursion:
/// sum_{i<q} (-1)^{i+1} BLine(i) Punct(q-i) + (-1)^{q-1} APoint(q).
FormalSum expand_punct(int q);

/// Two fixed points plus k points on their line:
/// sum_{i=0..k} (-1)^i APoint(k+1-i) Punct(i+1).
FormalSum expand_two_point(int k);

/// Dispatches to the rule for the given core.
FormalSum expand_core(const Core& core);
const char* rule_name(const Core& core);

// ---------------------------------------------------------------------------
// Fixpoint driver
// ---------------------------------------------------------------------------

enum class Schedule {
    /// ThetaP, ThetaO, LittlePhi by increasing q, BigPhi, TwoPoint, Punct by decreasing q.
    Canonical,
    /// Uniformly random choice among the cores present (seeded).
    Random,
};

struct RewriteStep {
    const char* rule;
    Core core;
    /// Net coefficient summed over all terms carrying the core, before substitution.
    Coef weight;
    /// Terms touched by the substitution.
    std::size_t terms_replaced;
};

using StepObserver = std::function<void(const RewriteStep&, const FormalSum& state)>;

struct RewriteOptions {
#ifdef NDEBUG
    bool check_each_step = false;
#else
    bool check_each_step = true;
#endif
    Schedule schedule = Schedule::Canonical;
    std::uint64_t seed = 0;
    /// Core kinds (variant indices into Core) that are left unexpanded by cascade().
    std::vector<std::size_t> keep_kinds;
    /// Called after every substitution with the post-step state.
    StepObserver observer;
};

struct RewriteStats {
    std::size_t rule_applications = 0;
    std::size_t max_terms = 0;
};

template <class T>
constexpr std::size_t core_kind = [] {
    if constexpr (std::is_same_v<T, ThetaP>) return 0;
    else if constexpr (std::is_same_v<T, ThetaO>) return 1;
    else if constexpr (std::is_same_v<T, LittlePhi>) return 2;
    else if constexpr (std::is_same_v<T, BigPhi>) return 3;
    else if constexpr (std::is_same_v<T, Punct>) return 4;
    else return 5;
}();

/// Repeatedly substitutes cores by their expansions. One substitution
/// replaces every term carrying the chosen core, distributing each term's
/// context atoms over the expansion.
class Rewriter {
public:
    explicit Rewriter(RewriteOptions options = {});

    /// Expands until no term carries a core outside keep_kinds.
    FormalSum cascade(FormalSum state);

    /// Full reduction to basis triples, sorted canonically, zeros dropped.
    std::vector<TripleCoef> to_ms(const FormalSum& input);

    const RewriteStats& stats() const { return stats_; }

private:
    RewriteOptions options_;
    RewriteStats stats_;
};

std::vector<TripleCoef> rewrite_to_ms(const FormalSum& s, const RewriteOptions& options = {});

/// Length and codimension check of every term of expansion against the core;
/// throws EngineError naming the rule.
void check_conservation(const Core& core, const FormalSum& expansion);

}  // namespace hilb
