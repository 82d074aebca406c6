// Serial reference against the OpenMP kernels. Prints one line per case:
//   kernel  case  serial_ms  parallel_ms  speedup  same
// --quick keeps it under a second (used as a smoke test).

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ucert/certificates.hpp"
#include "ucert/kronecker.hpp"
#include "ucert/saxl.hpp"
#include "ucert/symfunc.hpp"

using namespace ucert;

namespace {

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool all_same = true;

template <class T>
void row(const std::string& kernel, const std::string& name, std::function<T()> serial,
         std::function<T()> parallel) {
    // cold caches for both so neither run rides on the other's memo
    clear_character_cache();
    T a{}, b{};
    const double ts = time_ms([&] { a = serial(); });
    clear_character_cache();
    const double tp = time_ms([&] { b = parallel(); });
    const bool same = a == b;
    all_same = all_same && same;
    std::cout << std::left << std::setw(14) << kernel << std::setw(40) << name << std::right
              << std::fixed << std::setprecision(2) << std::setw(10) << ts << std::setw(10) << tp
              << std::setw(8) << (tp > 0 ? ts / tp : 0.0) << "  " << (same ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#endif
    std::cout << "kernel        case                                     serial_ms  par_ms speedup  same\n";

    const std::vector<int> ds = quick ? std::vector<int>{3, 4} : std::vector<int>{3, 4, 5};
    for (int d : ds) {
        const auto xi = staircase(d);
        for (const auto& tau : partitions_of(xi.size())) {
            if (tau[0] <= static_cast<int>(xi.size()) - d) continue;
            const PartitionTriple t{xi, xi, tau};
            row<Integer>("kronecker", t.str(), [&] { return kronecker_serial(t); },
                         [&] { return kronecker(t); });
            break;
        }
    }
    if (!quick) {
        const PartitionTriple big{Partition{9, 9}, Partition{9, 9}, Partition{6, 6, 6}};
        row<Integer>("kronecker", big.str(), [&] { return kronecker_serial(big); },
                     [&] { return kronecker(big); });
    }

    const Partition mu{5, 4};
    for (const auto& seq : example2_sequences()) {
        const PartitionTriple t{mu, mu, Partition{4, 3, 1, 1}};
        row<Multiplicity>("multiplicity", seq.str(), [&] { return multiplicity_serial(seq, t); },
                          [&] { return multiplicity(seq, t); });
    }
    const int nmax = quick ? 8 : 12;
    const auto seq = theo2_sequence(nmax);
    const auto m = mu_max(nmax);
    const PartitionTriple t{m, m, column(nmax)};
    row<Multiplicity>("multiplicity", seq.str(), [&] { return multiplicity_serial(seq, t); },
                      [&] { return multiplicity(seq, t); });

    return all_same ? 0 : 1;
}
