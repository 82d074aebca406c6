#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ucert/arith.hpp"
#include "ucert/partition.hpp"

namespace ucert {

// ---------------------------------------------------------------------------
// Characters of the symmetric group
// ---------------------------------------------------------------------------

/// chi^lambda at cycle type mu, by memoized Murnaghan-Nakayama recursion on
/// the largest part of mu. Safe to call concurrently.
std::int64_t character_value(const Partition& lambda, const Partition& mu);

/// Entries cached by character_value; 0 disables the cap. When the cap is
/// reached the cache is flushed.
void set_character_cache_cap(std::size_t cap);
std::size_t character_cache_size();
void clear_character_cache();

// ---------------------------------------------------------------------------
// Symmetric functions in the Schur and power-sum bases
// ---------------------------------------------------------------------------

/// Integer combination of Schur functions s_lambda, all |lambda| = degree.
class SchurPoly {
public:
    SchurPoly() = default;
    explicit SchurPoly(int degree) : degree_(degree) {}
    static SchurPoly schur(const Partition& lambda, std::int64_t coeff = 1);

    int degree() const noexcept { return degree_; }
    const std::map<Partition, std::int64_t>& terms() const noexcept { return terms_; }
    std::int64_t coeff(const Partition& lambda) const;
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Add c * s_lambda; zero results are erased.
    void add(const Partition& lambda, std::int64_t c);

    SchurPoly& operator+=(const SchurPoly& o);
    SchurPoly& operator-=(const SchurPoly& o);
    SchurPoly operator*(std::int64_t c) const;

    bool operator==(const SchurPoly&) const = default;

private:
    int degree_ = 0;
    std::map<Partition, std::int64_t> terms_;
};

/// Rational combination of power sums p_mu, all |mu| = degree.
class PowerPoly {
public:
    PowerPoly() = default;
    explicit PowerPoly(int degree) : degree_(degree) {}
    static PowerPoly power(const Partition& mu, const Rational& coeff = 1);

    int degree() const noexcept { return degree_; }
    const std::map<Partition, Rational>& terms() const noexcept { return terms_; }
    Rational coeff(const Partition& mu) const;

    void add(const Partition& mu, const Rational& c);

    /// Product in the p-basis: p_a * p_b = p_{a ∪ b}.
    PowerPoly operator*(const PowerPoly& o) const;

    /// Plethystic substitution x -> x^d: p_mu -> p_{d mu}.
    PowerPoly power_substitute(int d) const;

    bool operator==(const PowerPoly&) const = default;

private:
    int degree_ = 0;
    std::map<Partition, Rational> terms_;
};

/// Union of two partitions as multisets of parts.
Partition merge_parts(const Partition& a, const Partition& b);

PowerPoly schur_to_power(const SchurPoly& f);

/// Inverse of schur_to_power. Throws IntegralityError naming the first
/// Schur coefficient that is not an integer.
SchurPoly power_to_schur(const PowerPoly& f);

/// Littlewood-Richardson coefficient c^nu_{lambda mu} by LR tableau count.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_lambda * s_mu expanded by LR tableau enumeration.
SchurPoly lr_product(const Partition& lambda, const Partition& mu);
SchurPoly lr_product(const SchurPoly& f, const SchurPoly& g);

/// s_lambda * s_(1^r): add r boxes, no two in the same row.
SchurPoly pieri_column(const Partition& lambda, int r);

/// Hall inner product in which the Schur functions are orthonormal.
Integer hall_pairing(const SchurPoly& f, const SchurPoly& g);

/// <f, p_mu> for a Schur-expanded f: sum of coeff(lambda) * chi^lambda_mu.
Integer hall_pairing(const SchurPoly& f, const Partition& power_mu);

// ---------------------------------------------------------------------------
// Types and type sequences
// ---------------------------------------------------------------------------

/// Type omega: multiset of (d, lambda) with multiplicities. Entries are kept
/// in descending order of (d, lambda).
class Type {
public:
    struct Entry {
        int d;
        Partition lambda;
        int mult;
        bool operator==(const Entry&) const = default;
    };

    Type() = default;
    void add(int d, const Partition& lambda, int mult = 1);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    int size() const noexcept { return size_; }
    bool operator==(const Type&) const = default;
    auto operator<=>(const Type& o) const {
        return key() <=> o.key();
    }
    std::string str() const;

private:
    std::vector<std::tuple<int, Partition, int>> key() const;
    std::vector<Entry> entries_;
    int size_ = 0;
};

/// s_omega = prod_i s_{lambda_i}(x^{d_i})^{m_i} in the Schur basis.
/// Products are taken in the p-basis and converted once.
SchurPoly eval_type(const Type& omega);

/// Plain type sequence omega°: multiset of partitions with multiplicities,
/// blocks in descending canonical order.
class TypeSeqPlain {
public:
    struct Block {
        Partition lambda;
        int mult;
        bool operator==(const Block&) const = default;
    };

    TypeSeqPlain() = default;
    void add(const Partition& lambda, int mult = 1);

    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    int size() const noexcept { return size_; }
    bool operator==(const TypeSeqPlain&) const = default;
    std::string str() const;

private:
    std::vector<Block> blocks_;
    int size_ = 0;
};

/// Schur expansion of prod_blocks s_lambda^mult.
SchurPoly induced_product(const TypeSeqPlain& seq);

/// dim C^nu_{omega°} = <s_nu, prod s_lambda^mult>.
std::int64_t c_gen(const TypeSeqPlain& seq, const Partition& nu);

/// The type attached to omega° and a class of W_{omega°} given by one cycle
/// type per block (|classes[j]| = mult_j).
Type type_of_class(const TypeSeqPlain& seq, const std::vector<Partition>& classes);

/// Tr(w, C^mu_{omega°}) for w of the given per-block cycle types.
std::int64_t trace_on_hom(const TypeSeqPlain& seq, const std::vector<Partition>& classes,
                          const Partition& mu);

}  // namespace ucert
