#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hilb {

/// Weakly decreasing sequence of nonnegative integers.
///
/// Zeros are significant: (2,1,0) and (2,1) are different partitions, and the
/// length counts trailing zeros. Rows are addressed 1-based in the public API
/// (row 1 is the largest entry), matching the usual partition notation.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> entries);
    /// Throws std::invalid_argument unless entries are nonnegative and weakly decreasing.
    explicit Partition(std::vector<int> entries);

    /// Sorts into weakly decreasing order. Throws on a negative entry.
    static Partition sort_desc(std::vector<int> seq);

    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int sum() const;

    /// 1-based row access; rows past the end read as zero.
    int row(std::size_t i) const { return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0; }

    std::span<const int> entries() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }

    std::size_t count(int value) const;
    Partition without_zeros() const;
    /// Removes row i (1-based).
    Partition without_row(std::size_t i) const;
    /// Removes one entry equal to value. Throws if absent.
    Partition without_value(int value) const;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions m - 1_S (re-sorted) over row subsets S with |S| = j and
/// m_p >= 1 for p in S. Deduplicated, ascending order.
std::vector<Partition> sigma_set(const Partition& m, std::size_t j);

/// As sigma_set, restricted to subsets containing row i (1-based).
/// Requires is_anchor(m, i) and 1 <= j <= r; empty when m_i = 0.
std::vector<Partition> sigma_set_anchored(const Partition& m, std::size_t j, std::size_t i);

/// Number of row subsets S of lam with |S| = sum(m) - sum(lam) such that
/// sort_desc(lam + 1_S) = m. Product of binomials over entry values.
std::int64_t count_assemblies(const Partition& m, const Partition& lam);

/// Multiplicity of phi^lam in the first degeneration of Theta^{P,m}_{L,i}:
/// l * c(m with row i removed, lam with one entry m_i - 1 removed), where l is
/// the number of entries of lam equal to m_i - 1.
std::int64_t first_deg_coefficient(const Partition& m, std::size_t i, const Partition& lam);

/// Largest row index i with m_i = v. Throws if v does not occur.
std::size_t anchor_index(const Partition& m, int v);

/// True when row i is the last row of its value block: m_i > m_{i+1}, or i = r
/// (so an all-zero tail may be anchored at its final row).
bool is_anchor(const Partition& m, std::size_t i);

/// All partitions of n with positive parts, in reverse lexicographic order
/// ((n) first, (1,...,1) last).
std::vector<Partition> partitions_of(int n);

/// Parses "3,2,1" (empty string -> empty partition). Entries must be positive
/// and weakly decreasing; throws std::invalid_argument otherwise.
Partition parse_positive_partition(const std::string& text);

}  // namespace hilb
