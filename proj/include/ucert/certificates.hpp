#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ucert/arith.hpp"
#include "ucert/partition.hpp"
#include "ucert/quiver.hpp"
#include "ucert/symfunc.hpp"

namespace ucert {

/// Type sequence over triples: multiset of (triple, mult), blocks in
/// descending order of the lexicographic triple order.
class TripleTypeSeq {
public:
    struct Block {
        PartitionTriple omega;
        int mult;
        bool operator==(const Block&) const = default;
    };

    TripleTypeSeq() = default;
    TripleTypeSeq(std::initializer_list<Block> blocks);
    void add(const PartitionTriple& omega, int mult = 1);

    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    int size() const noexcept { return size_; }
    /// |W| = prod mult_j!
    Integer weyl_order() const;
    /// Number of conjugacy classes of W = prod p(mult_j).
    std::int64_t class_count() const;

    bool operator==(const TripleTypeSeq&) const = default;
    std::string str() const;

private:
    std::vector<Block> blocks_;
    int size_ = 0;
};

/// ((1^a),(1^a),(1^a))^k ((1),(1),(1))^(n - a k)
TripleTypeSeq column_family(int a, int k, int n);

/// Coordinate projection (coord = 1, 2, 3) with equal partitions merged.
TypeSeqPlain project(const TripleTypeSeq& seq, int coord);

struct Multiplicity {
    std::int64_t value = 0;
    bool operator==(const Multiplicity&) const = default;
};

struct MultiplicityOptions {
    /// Refuse when W has more conjugacy classes than this.
    std::int64_t class_cap = 100000;
    int threads = 0;
};

/// <C^mu_{omega°}, 1>_W = |W|^-1 sum over classes of |class| prod_i Tr(w, C^{mu^i}).
/// OpenMP-parallel over the classes of W.
Multiplicity multiplicity(const TripleTypeSeq& seq, const PartitionTriple& mu,
                          const MultiplicityOptions& opts = {});

/// Single-threaded reference.
Multiplicity multiplicity_serial(const TripleTypeSeq& seq, const PartitionTriple& mu,
                                 const MultiplicityOptions& opts = {});

/// One cycle type per block, enumerating all classes of W.
std::vector<std::vector<Partition>> weyl_classes(const TripleTypeSeq& seq);

/// Tr(w, C^{mu^coord}) through the projection, for a class given per block.
std::int64_t coordinate_trace(const TripleTypeSeq& seq, const std::vector<Partition>& classes,
                              int coord, const Partition& mu);

/// Irreducible of W = prod_j S_{mult_j}: one partition of mult_j per block.
using WeylIrrep = std::vector<Partition>;

/// C^nu_{omega°} split into irreducibles of W (zero multiplicities dropped),
/// from the traces and the character table of each factor.
std::map<WeylIrrep, std::int64_t> decompose_hom(const TypeSeqPlain& seq, const Partition& nu);

struct BlockEvidence {
    PartitionTriple omega;
    RootClass root;
};

struct BlockRootReport {
    bool ok = true;
    std::vector<BlockEvidence> blocks;
};

/// Classifies v_omega on Gamma_omega for each distinct block.
BlockRootReport block_roots_ok(const TripleTypeSeq& seq);

struct Certificate {
    PartitionTriple mu;
    TripleTypeSeq seq;
    std::vector<BlockEvidence> blocks;
    Multiplicity m;
    /// Which candidate rule produced it: "root", "kronecker", "column-a", "search".
    std::string rule;
};

struct CertificateSearch {
    /// Candidate sequences examined in the open-ended enumeration step.
    std::int64_t budget = 5000;
    std::int64_t class_cap = 100000;
    int max_n = 20;
    int threads = 0;
};

/// Tries, in order: the single block mu; all-trivial blocks; the column
/// families a = 2, 3; then enumeration of sequences of root blocks, fewest
/// distinct blocks first. nullopt proves nothing.
std::optional<Certificate> find_certificate(const PartitionTriple& mu,
                                            const CertificateSearch& opts = {});

/// Re-classifies every block and recomputes M with the serial kernel.
bool verify_certificate(const Certificate& cert);

/// Builds a certificate for a given sequence, or nullopt if a block is not a
/// root or M = 0.
std::optional<Certificate> certify_with(const PartitionTriple& mu, const TripleTypeSeq& seq,
                                        const std::string& rule,
                                        const MultiplicityOptions& opts = {});

struct Example1Table {
    Partition mu;
    std::vector<Partition> taus;
    std::vector<TripleTypeSeq> rows;
    /// values[row][tau]
    std::vector<std::vector<std::int64_t>> values;
    std::vector<std::int64_t> sums;
};

/// The five M rows for n = 4 and their column sums. Only mu = (2,2) is
/// accepted: the summation rule is known to hold there because every block
/// involved is a real root.
Example1Table example1_sum(const Partition& mu = Partition{2, 2});

/// The four sequences ((1^2)^3)^k ((1)^3)^(9-2k), k = 0, 1, 3, 4.
std::vector<TripleTypeSeq> example2_sequences();

}  // namespace ucert
