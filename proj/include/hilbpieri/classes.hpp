#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hilbpieri/checked.hpp"
#include "hilbpieri/partition.hpp"

namespace hilb {

// ---------------------------------------------------------------------------
// Terminal incidence conditions
// ---------------------------------------------------------------------------

enum class AtomKind : std::uint8_t {
    APoint,   ///< fixed point on a fixed line carrying k scheme points (point included)
    BLine,    ///< fixed line met in k points
    CMoving,  ///< k points collinear with the common center; CMoving(1) is a free point
};

struct Atom {
    AtomKind kind;
    int k;

    static Atom a_point(int k) { return make(AtomKind::APoint, k); }
    static Atom b_line(int k) { return make(AtomKind::BLine, k); }
    static Atom c_moving(int k) { return make(AtomKind::CMoving, k); }
    static Atom make(AtomKind kind, int k);

    int length() const { return k; }
    int codim() const;
    std::string to_string() const;

    friend auto operator<=>(const Atom&, const Atom&) = default;
    friend bool operator==(const Atom&, const Atom&) = default;
};

// ---------------------------------------------------------------------------
// Nonterminal cores. Each carries the loci parameters only; the ambient
// length and codimension follow from them.
// ---------------------------------------------------------------------------

/// Theta^{P,m}_{L,i}: center P general off the line L.
struct ThetaP {
    Partition m;
    std::size_t i;
    friend auto operator<=>(const ThetaP&, const ThetaP&) = default;
};

/// Theta^{O,m}_{L,i}: center on L.
struct ThetaO {
    Partition m;
    std::size_t i;
    friend auto operator<=>(const ThetaO&, const ThetaO&) = default;
};

/// phi^lam_q: length-q punctual part at the center of the moving lines.
struct LittlePhi {
    Partition lam;
    int q;
    friend auto operator<=>(const LittlePhi&, const LittlePhi&) = default;
};

/// Phi^{P,lam}_{Q,q}: length-q punctual part at a general point Q != P.
struct BigPhi {
    Partition lam;
    int q;
    friend auto operator<=>(const BigPhi&, const BigPhi&) = default;
};

/// Length-q punctual subscheme at a general fixed point.
struct Punct {
    int q;
    friend auto operator<=>(const Punct&, const Punct&) = default;
};

/// Two fixed general points plus k more points on the line they span.
struct TwoPoint {
    int k;
    friend auto operator<=>(const TwoPoint&, const TwoPoint&) = default;
};

using Core = std::variant<ThetaP, ThetaO, LittlePhi, BigPhi, Punct, TwoPoint>;

/// Validates the core's parameter invariants; throws std::invalid_argument.
void validate_core(const Core& core);
int core_length(const Core& core);
int core_codim(const Core& core);
const char* core_name(const Core& core);
std::string core_to_string(const Core& core);

// ---------------------------------------------------------------------------
// Terms and formal sums
// ---------------------------------------------------------------------------

/// A multiset of terminal atoms plus at most one core. Atoms are stored
/// sorted, so every Term is canonical by construction.
class Term {
public:
    Term() = default;
    explicit Term(std::vector<Atom> atoms, std::optional<Core> core = std::nullopt);
    explicit Term(Core core) : Term({}, std::move(core)) {}

    std::span<const Atom> atoms() const { return atoms_; }
    const std::optional<Core>& core() const { return core_; }
    bool terminal() const { return !core_.has_value(); }

    int length() const;
    int codim() const;

    /// Same atoms with the core dropped.
    Term context() const { return Term(atoms_); }
    /// Multiset union of atoms; at most one of the two may carry a core.
    Term combine(const Term& other) const;

    std::string to_string() const;

    friend auto operator<=>(const Term&, const Term&) = default;
    friend bool operator==(const Term&, const Term&) = default;

private:
    std::vector<Atom> atoms_;
    std::optional<Core> core_;
};

Term canonical(const Term& t);

/// Map from canonical term to nonzero coefficient.
class FormalSum {
public:
    using Map = std::map<Term, Coef>;

    FormalSum() = default;
    FormalSum(std::initializer_list<std::pair<Term, Coef>> items);

    /// Adds coef * t; drops the entry when it cancels. Overflow throws.
    void add(const Term& t, Coef coef);
    void add(const FormalSum& other, Coef scale = 1);
    Coef coefficient(const Term& t) const;
    void erase(const Term& t) { terms_.erase(t); }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }

    std::string to_string() const;

    friend bool operator==(const FormalSum&, const FormalSum&) = default;

private:
    Map terms_;
};

// ---------------------------------------------------------------------------
// Basis classes
// ---------------------------------------------------------------------------

/// Triple of positive-part partitions indexing sigma_(a,b,c).
struct MSTriple {
    Partition a, b, c;

    MSTriple() = default;
    /// Throws std::invalid_argument if any entry is zero.
    MSTriple(Partition a, Partition b, Partition c);

    int n() const { return a.sum() + b.sum() + c.sum(); }
    int codim() const;
    std::vector<Atom> atoms() const;
    std::string to_string() const;
    std::string to_latex() const;

    /// Lexicographic on (a, b, c) as zero-padded sequences.
    friend auto operator<=>(const MSTriple&, const MSTriple&) = default;
    friend bool operator==(const MSTriple&, const MSTriple&) = default;
};

MSTriple triple_from_atoms(std::span<const Atom> atoms);

using TripleCoef = std::pair<MSTriple, Coef>;

}  // namespace hilb
