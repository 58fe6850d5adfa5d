#pragma once

// Independent brute-force references used only by the tests. Nothing here
// calls into the closed forms it is compared against.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hilbpieri/classes.hpp"
#include "hilbpieri/dag.hpp"
#include "hilbpieri/partition.hpp"
#include "hilbpieri/pieri.hpp"

namespace oracle {

using hilb::Coef;
using hilb::Partition;

inline std::vector<int> sorted_desc(std::vector<int> v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

/// Calls f(mask) for every subset of {0..r-1} of size j.
inline void for_each_subset(std::size_t r, std::size_t j, const std::function<void(unsigned)>& f)
{
    for (unsigned mask = 0; mask < (1u << r); ++mask)
        if (static_cast<std::size_t>(__builtin_popcount(mask)) == j)
            f(mask);
}

inline std::set<std::vector<int>> sigma_set(const std::vector<int>& m, std::size_t j, int anchor_row = 0)
{
    std::set<std::vector<int>> out;
    for_each_subset(m.size(), j, [&](unsigned mask) {
        if (anchor_row > 0 && !(mask & (1u << (anchor_row - 1))))
            return;
        std::vector<int> v = m;
        for (std::size_t p = 0; p < m.size(); ++p) {
            if (mask & (1u << p)) {
                if (v[p] == 0)
                    return;
                --v[p];
            }
        }
        out.insert(sorted_desc(v));
    });
    return out;
}

inline Coef count_assemblies(const std::vector<int>& m, const std::vector<int>& lam)
{
    int j = 0;
    for (std::size_t p = 0; p < m.size(); ++p)
        j += m[p] - lam[p];
    if (j < 0)
        return 0;
    Coef count = 0;
    for_each_subset(lam.size(), static_cast<std::size_t>(j), [&](unsigned mask) {
        std::vector<int> v = lam;
        for (std::size_t p = 0; p < v.size(); ++p)
            if (mask & (1u << p))
                ++v[p];
        if (sorted_desc(v) == m)
            ++count;
    });
    return count;
}

/// Sum over explicit root -> target paths of (-1)^{n+1} * prod(weights).
inline Coef brute_path_sum(const hilb::WeightedDag& dag, std::size_t target, std::size_t* paths = nullptr)
{
    Coef total = 0;
    std::size_t count = 0;
    std::function<void(std::size_t, int, Coef)> walk = [&](std::size_t node, int len, Coef prod) {
        if (node == target && len > 0) {
            total += (len % 2 == 1 ? 1 : -1) * prod;
            ++count;
            return;
        }
        for (const auto& e : dag.edges())
            if (e.from == node)
                walk(e.to, len + 1, prod * e.weight);
    };
    walk(0, 0, 1);
    if (paths)
        *paths = count;
    return total;
}

/// Coefficients of prod_{k>=1} 1/((1-z^{k-1}t^k)(1-z^k t^k)(1-z^{k+1}t^k)),
/// indexed [n][codim]: the Betti numbers of P^{2[n]} by complex codimension.
inline std::vector<std::vector<Coef>> gottsche_betti(int max_n)
{
    const int max_d = 2 * max_n + 1;
    std::vector<std::vector<Coef>> series(max_n + 1, std::vector<Coef>(max_d + 1, 0));
    series[0][0] = 1;
    for (int k = 1; k <= max_n; ++k) {
        for (int shift : {k - 1, k, k + 1}) {
            // multiply by 1/(1 - z^shift t^k)
            for (int n = k; n <= max_n; ++n)
                for (int d = shift; d <= max_d; ++d)
                    series[n][d] += series[n - k][d - shift];
        }
    }
    return series;
}

/// Multiplies sum c_t sigma_t by H using the engine's rows, n points.
inline std::map<hilb::MSTriple, Coef> times_h(const std::map<hilb::MSTriple, Coef>& cls,
                                              std::map<hilb::MSTriple, std::vector<hilb::TripleCoef>>& memo)
{
    std::map<hilb::MSTriple, Coef> out;
    for (const auto& [t, c] : cls) {
        auto it = memo.find(t);
        if (it == memo.end())
            it = memo.emplace(t, hilb::intersect_with_h(t).output).first;
        for (const auto& [u, d] : it->second)
            out[u] += c * d;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline Coef double_factorial_odd(int n)
{
    Coef r = 1;
    for (int k = 2 * n - 1; k > 1; k -= 2)
        r *= k;
    return r;
}

}  // namespace oracle
