#include "ucert/saxl.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ucert {

const char* to_string(SaxlTag t) {
    switch (t) {
        case SaxlTag::FundamentalImaginary: return "FundamentalImaginary";
        case SaxlTag::ImaginaryViaReduction: return "ImaginaryViaReduction";
        case SaxlTag::RealRoot: return "RealRoot";
        case SaxlTag::DominanceKronecker: return "DominanceKronecker";
        case SaxlTag::TableCertificate: return "TableCertificate";
    }
    return "?";
}

namespace {

SaxlVerdict fail(SaxlVerdict v, std::string why) {
    v.ok = false;
    v.failure = std::move(why);
    return v;
}

// the per-tau loop is already parallel
KroneckerOptions kron_opts(int n) { return {std::max(20, n), 1}; }

}  // namespace

SaxlVerdict verify_saxl_case(int d, const Partition& tau, const SaxlOptions& opts) {
    if (d < 1) throw std::invalid_argument("verify_saxl_case: d must be positive");
    const auto xi = staircase(d);
    const int n = xi.size();
    if (tau.size() != n)
        throw std::invalid_argument("verify_saxl_case: |tau| must be d(d+1)/2 = " + std::to_string(n));

    SaxlVerdict v;
    v.d = d;
    v.tau = tau;
    const PartitionTriple t{xi, xi, tau};
    const int t1 = tau[0];

    try {
        // case (3); d = 1 has n - d = 0 and is left to the root table
        if (t1 > n - d && d >= 2) {
            v.tag = SaxlTag::DominanceKronecker;
            v.evidence.dominance = saxl_dominance_witness(d, tau);
            const auto c = v.evidence.dominance;
            if (!c || *c == Comparability::TauBelowXi)
                return fail(v, "case (3): xi_d is not dominated by tau");
            if (d <= opts.kronecker_max_d || opts.force_kronecker) {
                v.evidence.g = kronecker(t, kron_opts(n));
                if (*v.evidence.g <= 0) return fail(v, "case (3): g = 0");
            } else {
                v.evidence.external = true;
            }
            v.ok = true;
            return v;
        }

        const auto vec = dimvector_of(t);
        if (t1 <= n - 2 * d) {
            v.tag = SaxlTag::FundamentalImaginary;
            if (!is_fundamental_imaginary(vec)) return fail(v, "delta >= 0 but v is not in M");
            v.ok = true;
            return v;
        }

        if (d >= 7) {
            v.tag = SaxlTag::ImaginaryViaReduction;
            v.evidence.trajectory = staircase_reduce(d, tau);
            v.ok = true;
            return v;
        }

        // d <= 6: the table rows
        auto rc = classify(vec);
        switch (rc.tag) {
            case RootTag::Real:
                v.tag = SaxlTag::RealRoot;
                v.evidence.equivalent = dynkin_equivalent(rc);
                break;
            case RootTag::Imaginary:
                v.tag = SaxlTag::ImaginaryViaReduction;
                break;
            case RootTag::NotRoot:
                v.tag = SaxlTag::TableCertificate;
                v.evidence.g = kronecker(t, kron_opts(n));
                if (*v.evidence.g <= 0) {
                    v.evidence.root = std::move(rc);
                    return fail(v, "not a root and g = 0");
                }
                break;
        }
        if (rc.tag != RootTag::NotRoot && !(replay(vec, rc.trail) == rc.terminal))
            return fail(v, "reflection trail does not replay to its terminal vector");
        v.evidence.root = std::move(rc);
        v.ok = true;
        return v;
    } catch (const std::exception& e) {
        return fail(v, e.what());
    }
}

SaxlReport verify_saxl_all(int d, const SaxlOptions& opts) {
    if (d < 1 || d > opts.max_d)
        throw FeasibilityError("verify_saxl_all: d=" + std::to_string(d) + " outside 1.." +
                               std::to_string(opts.max_d));
    const auto taus = partitions_of(staircase(d).size());
    SaxlReport r;
    r.d = d;
    r.verdicts.resize(taus.size());
    const auto count = static_cast<long>(taus.size());

#ifdef _OPENMP
    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (long i = 0; i < count; ++i) r.verdicts[i] = verify_saxl_case(d, taus[i], opts);

    for (const auto& v : r.verdicts) {
        ++r.counts[v.tag];
        if (!v.ok) ++r.failures;
    }
    return r;
}

TripleTypeSeq theo2_sequence(int n) {
    if (n < 1) throw std::invalid_argument("theo2_sequence: n must be positive");
    return column_family(2, n / 2, n);
}

Theo2Result theo2_certificate(int n, const Partition& mu, const MultiplicityOptions& opts) {
    if (mu.size() != n) throw std::invalid_argument("theo2_certificate: |mu| != n");
    if (!dominates(mu, mu_max(n)))
        throw std::invalid_argument("theo2_certificate: mu is not dominated by mu_max(n)");

    Theo2Result r;
    const auto seq = theo2_sequence(n);
    const auto plain = project(seq, 1);
    r.dim_mu = c_gen(plain, mu);
    r.dim_column = c_gen(plain, column(n));
    r.column_trivial = r.dim_column == 1;
    for (const auto& cls : weyl_classes(seq))
        if (trace_on_hom(plain, cls, column(n)) != 1) r.column_trivial = false;

    auto cert = certify_with({mu, mu, column(n)}, seq, "column-2", opts);
    if (!cert)
        throw IntegralityError("theo2_certificate: M = 0 for mu=(" + mu.str() + "), n=" +
                               std::to_string(n));
    r.cert = std::move(*cert);
    return r;
}

ConjectureReport conjecture_scan(int n, const ConjectureOptions& opts) {
    if (n < 1 || n > opts.max_n)
        throw FeasibilityError("conjecture_scan: n=" + std::to_string(n) + " outside 1.." +
                               std::to_string(opts.max_n));
    ConjectureReport r;
    r.n = n;
    const int half = (n + 1) / 2;
    const auto parts = partitions_of(n);
    for (const auto& mu : parts) {
        if (mu[0] > half) {
            ColumnData c;
            c.mu = mu;
            const PartitionTriple t{mu, mu, column(n)};
            c.g = kronecker(t, {std::max(20, n), opts.search.threads});
            c.root = classify(dimvector_of(t)).tag;
            r.outside.push_back(std::move(c));
            continue;
        }
        for (const auto& tau : parts) {
            ScanEntry e{mu, tau, find_certificate({mu, mu, tau}, opts.search)};
            if (e.cert)
                ++r.certified;
            else
                ++r.inconclusive;
            r.entries.push_back(std::move(e));
        }
    }
    return r;
}

}  // namespace ucert
