#include "hilbpieri/pieri.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include <omp.h>

namespace hilb {

PieriRow intersect_with_h(const MSTriple& alpha, const RewriteOptions& options)
{
    Rewriter rewriter(options);
    PieriRow row;
    row.input = alpha;
    row.output = rewriter.to_ms(split_h_product(alpha));
    row.rule_applications = rewriter.stats().rule_applications;
    row.max_terms = rewriter.stats().max_terms;
    return row;
}

std::vector<MSTriple> enumerate_basis(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_basis: negative n");
    std::vector<MSTriple> out;
    for (int a_sum = 0; a_sum <= n; ++a_sum)
        for (int b_sum = 0; a_sum + b_sum <= n; ++b_sum)
            for (const auto& a : partitions_of(a_sum))
                for (const auto& b : partitions_of(b_sum))
                    for (const auto& c : partitions_of(n - a_sum - b_sum))
                        out.emplace_back(a, b, c);
    std::sort(out.begin(), out.end());
    return out;
}

MSTriple h_divisor(int n)
{
    if (n < 1)
        throw std::invalid_argument("h_divisor: n must be positive");
    return MSTriple({}, Partition{1}, Partition(std::vector<int>(static_cast<std::size_t>(n - 1), 1)));
}

std::vector<PieriRow> pieri_matrix_serial(int n, const RewriteOptions& options)
{
    if (n < 1)
        throw std::invalid_argument("pieri_matrix: n must be positive");
    std::vector<PieriRow> rows;
    for (const auto& alpha : enumerate_basis(n))
        rows.push_back(intersect_with_h(alpha, options));
    return rows;
}

std::vector<PieriRow> pieri_matrix(int n, int threads, const RewriteOptions& options)
{
    if (n < 1)
        throw std::invalid_argument("pieri_matrix: n must be positive");
    const auto basis = enumerate_basis(n);
    const auto count = static_cast<std::ptrdiff_t>(basis.size());
    std::vector<PieriRow> rows(basis.size());
    std::exception_ptr failure;
    const int workers = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        try {
            rows[static_cast<std::size_t>(k)] = intersect_with_h(basis[static_cast<std::size_t>(k)], options);
        } catch (...) {
#pragma omp critical(hilb_pieri_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

}  // namespace hilb
