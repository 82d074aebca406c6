#include "ucert/kronecker.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ucert/symfunc.hpp"

namespace ucert {

namespace {

void check_query(const PartitionTriple& mu, const KroneckerOptions& opts) {
    if (mu[0].size() != mu[1].size() || mu[0].size() != mu[2].size())
        throw std::invalid_argument("kronecker: partitions of different sizes");
    const int n = mu.size();
    if (n > opts.max_n) {
        std::ostringstream msg;
        msg << "kronecker: n=" << n << " exceeds max_n=" << opts.max_n << " (about "
            << kronecker_cost_estimate(n) << " character evaluations); raise max_n to force";
        throw FeasibilityError(msg.str());
    }
}

// chi chi chi * (n!/z); dividing the total by n! once keeps every term integral.
Integer weighted_term(const PartitionTriple& mu, const Partition& lambda) {
    const auto a = character_value(mu[0], lambda);
    if (a == 0) return 0;
    const auto b = character_value(mu[1], lambda);
    if (b == 0) return 0;
    const auto c = character_value(mu[2], lambda);
    return Integer(a) * b * c * class_size(lambda);
}

Integer finish(const Integer& total, int n) {
    const auto nf = factorial(n);
    if (total % nf != 0)
        throw IntegralityError("kronecker: character sum not divisible by n! (character table bug)");
    Integer g = total / nf;
    if (g < 0) throw IntegralityError("kronecker: negative coefficient (character table bug)");
    return g;
}

}  // namespace

double kronecker_cost_estimate(int n) {
    const double p = static_cast<double>(partition_count(n));
    return 3.0 * p * p;
}

Integer kronecker_serial(const PartitionTriple& mu, const KroneckerOptions& opts) {
    check_query(mu, opts);
    Integer total = 0;
    for (const auto& lambda : partitions_of(mu.size())) total += weighted_term(mu, lambda);
    return finish(total, mu.size());
}

Integer kronecker(const PartitionTriple& mu, const KroneckerOptions& opts) {
    check_query(mu, opts);
    const auto classes = partitions_of(mu.size());
    const auto count = static_cast<long>(classes.size());
    std::vector<Integer> terms(classes.size());
    std::exception_ptr failure;

#ifdef _OPENMP
    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#endif
    for (long i = 0; i < count; ++i) {
        try {
            terms[i] = weighted_term(mu, classes[i]);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(ucert_kron_failure)
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    Integer total = 0;
    for (const auto& t : terms) total += t;
    return finish(total, mu.size());
}

std::optional<Comparability> saxl_dominance_witness(int d, const Partition& tau) {
    const auto xi = staircase(d);
    if (tau.size() != xi.size())
        throw std::invalid_argument("saxl_dominance_witness: |tau| must be d(d+1)/2");
    const bool below = dominates(xi, tau);
    const bool above = dominates(tau, xi);
    if (below && above) return Comparability::Equal;
    if (below) return Comparability::XiBelowTau;
    if (above) return Comparability::TauBelowXi;
    return std::nullopt;
}

const char* to_string(Comparability c) {
    switch (c) {
        case Comparability::XiBelowTau: return "xi_d <= tau";
        case Comparability::TauBelowXi: return "tau <= xi_d";
        case Comparability::Equal: return "tau = xi_d";
    }
    return "?";
}

}  // namespace ucert
