// Serial reference vs OpenMP sweep timings for the two batch workloads.
#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "hilbpieri/dag.hpp"
#include "hilbpieri/pieri.hpp"

namespace {

template <class F>
double seconds(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv)
{
    const int n = argc > 1 ? std::atoi(argv[1]) : 7;
    const int weight = argc > 2 ? std::atoi(argv[2]) : 9;
    const int threads = omp_get_max_threads();

    std::size_t rows_serial = 0, rows_parallel = 0;
    const double ts = seconds([&] { rows_serial = hilb::pieri_matrix_serial(n).size(); });
    const double tp = seconds([&] { rows_parallel = hilb::pieri_matrix(n, threads).size(); });
    std::cout << "pieri_matrix n=" << n << " rows=" << rows_serial << " serial " << ts << " s, parallel(" << threads
              << ") " << tp << " s, speedup " << ts / tp << "\n";

    std::size_t cases_serial = 0, cases_parallel = 0;
    const double cs = seconds([&] { cases_serial = hilb::conjecture_sweep_serial(weight).size(); });
    const double cp = seconds([&] { cases_parallel = hilb::conjecture_sweep(weight, threads).size(); });
    std::cout << "conjecture_sweep w=" << weight << " cases=" << cases_serial << " serial " << cs << " s, parallel("
              << threads << ") " << cp << " s, speedup " << cs / cp << "\n";

    return rows_serial == rows_parallel && cases_serial == cases_parallel ? 0 : 1;
}
