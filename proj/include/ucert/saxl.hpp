#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ucert/arith.hpp"
#include "ucert/certificates.hpp"
#include "ucert/kronecker.hpp"
#include "ucert/partition.hpp"
#include "ucert/quiver.hpp"

namespace ucert {

enum class SaxlTag {
    FundamentalImaginary,
    ImaginaryViaReduction,
    RealRoot,
    DominanceKronecker,
    TableCertificate,
};
const char* to_string(SaxlTag t);

/// What was checked for one (d, tau). Only the fields relevant to the tag are set.
struct SaxlEvidence {
    /// classify() result for the table cases (d <= 6).
    std::optional<RootClass> root;
    /// Dynkin-support equivalent of a real root.
    std::optional<PartitionTriple> equivalent;
    /// delta trajectory for d >= 7.
    std::optional<StaircaseTrajectory> trajectory;
    std::optional<Comparability> dominance;
    /// Kronecker coefficient when it was computed.
    std::optional<Integer> g;
    /// Case (3) accepted on the dominance premise alone (no g computed).
    bool external = false;
};

struct SaxlVerdict {
    int d = 0;
    Partition tau;
    SaxlTag tag = SaxlTag::TableCertificate;
    bool ok = false;
    /// Empty when ok; otherwise which check failed.
    std::string failure;
    SaxlEvidence evidence;
};

struct SaxlOptions {
    /// verify_saxl_all refuses d above this.
    int max_d = 7;
    /// Largest d for which case (3) is checked by computing g directly.
    int kronecker_max_d = 5;
    /// Compute g for case (3) at every d (n = 21, 28 is slow).
    bool force_kronecker = false;
    int threads = 0;
};

/// Picks the case of the proof that applies to (xi_d, xi_d, tau) and checks it.
/// Throws std::invalid_argument when |tau| != d(d+1)/2.
SaxlVerdict verify_saxl_case(int d, const Partition& tau, const SaxlOptions& opts = {});

struct SaxlReport {
    int d = 0;
    /// One verdict per tau, in canonical order.
    std::vector<SaxlVerdict> verdicts;
    std::map<SaxlTag, int> counts;
    int failures = 0;
    bool all_pass() const noexcept { return failures == 0; }
};

/// Every tau of d(d+1)/2, OpenMP-parallel over tau; output order is fixed.
SaxlReport verify_saxl_all(int d, const SaxlOptions& opts = {});

/// ((1^2),(1^2),(1^2))^k [((1),(1),(1))] with k = floor(n/2).
TripleTypeSeq theo2_sequence(int n);

struct Theo2Result {
    Certificate cert;
    /// c_gen of the projection at mu (dimension of C^mu).
    std::int64_t dim_mu = 0;
    /// dim C^(1^n), and whether every W class acts on it by +1.
    std::int64_t dim_column = 0;
    bool column_trivial = false;
};

/// Certificate for (mu, mu, (1^n)) when mu is dominated by mu_max(n).
/// Throws std::invalid_argument on the precondition and IntegralityError
/// if M came out 0.
Theo2Result theo2_certificate(int n, const Partition& mu,
                              const MultiplicityOptions& opts = {});

struct ScanEntry {
    Partition mu;
    Partition tau;
    std::optional<Certificate> cert;
};

struct ColumnData {
    Partition mu;
    Integer g;
    RootTag root = RootTag::NotRoot;
};

struct ConjectureReport {
    int n = 0;
    std::vector<ScanEntry> entries;
    int certified = 0;
    int inconclusive = 0;
    /// mu_1 > ceil(n/2): g((mu,mu,(1^n))) and the root status of v.
    std::vector<ColumnData> outside;
};

struct ConjectureOptions {
    int max_n = 8;
    CertificateSearch search;
};

/// Tries to certify U != 0 for every mu with mu_1 <= ceil(n/2) and every tau.
/// Inconclusive pairs are reported, not treated as failures.
ConjectureReport conjecture_scan(int n, const ConjectureOptions& opts = {});

}  // namespace ucert
