#pragma once

#include <vector>

#include "hilbpieri/classes.hpp"
#include "hilbpieri/rewrite.hpp"

namespace hilb {

/// H . sigma_input expanded in the basis, with engine statistics.
struct PieriRow {
    MSTriple input;
    std::vector<TripleCoef> output;
    std::size_t rule_applications = 0;
    std::size_t max_terms = 0;

    /// Equality on the mathematical content only.
    bool same_terms(const PieriRow& other) const { return input == other.input && output == other.output; }
};

PieriRow intersect_with_h(const MSTriple& alpha, const RewriteOptions& options = {});

/// All triples (a,b,c) of positive-part partitions with total n, sorted canonically.
std::vector<MSTriple> enumerate_basis(int n);

/// The divisor H = sigma_(0,(1),(1,...,1)) for n >= 1.
MSTriple h_divisor(int n);

/// Reference implementation: one row at a time on the calling thread.
std::vector<PieriRow> pieri_matrix_serial(int n, const RewriteOptions& options = {});

/// Rows computed by an OpenMP worker pool; result order matches
/// enumerate_basis(n) regardless of thread count. threads <= 0 uses the
/// OpenMP default.
std::vector<PieriRow> pieri_matrix(int n, int threads = 0, const RewriteOptions& options = {});

}  // namespace hilb
