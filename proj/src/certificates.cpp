#include "ucert/certificates.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ucert {

// --- TripleTypeSeq --------------------------------------------------------

TripleTypeSeq::TripleTypeSeq(std::initializer_list<Block> blocks) {
    for (const auto& b : blocks) add(b.omega, b.mult);
}

void TripleTypeSeq::add(const PartitionTriple& omega, int mult) {
    if (mult < 1 || omega.size() == 0)
        throw std::invalid_argument("TripleTypeSeq block needs mult >= 1 and a nonempty triple");
    size_ = checked_add(size_, checked_mul(omega.size(), mult));
    for (auto& b : blocks_) {
        if (b.omega == omega) {
            b.mult += mult;
            return;
        }
    }
    blocks_.push_back({omega, mult});
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& a, const Block& b) { return a.omega > b.omega; });
}

Integer TripleTypeSeq::weyl_order() const {
    Integer w = 1;
    for (const auto& b : blocks_) w *= factorial(b.mult);
    return w;
}

std::int64_t TripleTypeSeq::class_count() const {
    std::int64_t c = 1;
    for (const auto& b : blocks_) c = checked_mul(c, partition_count(b.mult));
    return c;
}

std::string TripleTypeSeq::str() const {
    std::string s;
    for (const auto& b : blocks_) {
        s += b.omega.str();
        if (b.mult != 1) s += "^" + std::to_string(b.mult);
    }
    return s;
}

TripleTypeSeq column_family(int a, int k, int n) {
    if (a < 1 || k < 0 || a * k > n) throw std::invalid_argument("column_family: need a*k <= n");
    TripleTypeSeq seq;
    if (k > 0) seq.add({column(a), column(a), column(a)}, k);
    if (n - a * k > 0) seq.add({column(1), column(1), column(1)}, n - a * k);
    return seq;
}

TypeSeqPlain project(const TripleTypeSeq& seq, int coord) {
    if (coord < 1 || coord > 3) throw std::invalid_argument("project: coord must be 1, 2 or 3");
    TypeSeqPlain out;
    for (const auto& b : seq.blocks()) out.add(b.omega[coord - 1], b.mult);
    return out;
}

// --- multiplicity ---------------------------------------------------------

namespace {

std::vector<std::vector<Partition>> cartesian_partitions(const std::vector<int>& sizes) {
    std::vector<std::vector<Partition>> out{{}};
    for (int m : sizes) {
        const auto options = partitions_of(m);
        std::vector<std::vector<Partition>> next;
        next.reserve(out.size() * options.size());
        for (const auto& prefix : out)
            for (const auto& rho : options) {
                next.push_back(prefix);
                next.back().push_back(rho);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

std::vector<std::vector<Partition>> weyl_classes(const TripleTypeSeq& seq) {
    std::vector<int> sizes;
    for (const auto& b : seq.blocks()) sizes.push_back(b.mult);
    return cartesian_partitions(sizes);
}

std::int64_t coordinate_trace(const TripleTypeSeq& seq, const std::vector<Partition>& classes,
                              int coord, const Partition& mu) {
    if (mu.size() != seq.size()) throw std::invalid_argument("coordinate_trace: size mismatch");
    if (classes.size() != seq.blocks().size())
        throw std::invalid_argument("coordinate_trace: need one cycle type per block");
    Type t;
    for (std::size_t j = 0; j < classes.size(); ++j)
        for (int c : classes[j].parts()) t.add(c, seq.blocks()[j].omega[coord - 1]);
    return eval_type(t).coeff(mu);
}

namespace {

void check_multiplicity_query(const TripleTypeSeq& seq, const PartitionTriple& mu,
                              const MultiplicityOptions& opts) {
    if (seq.size() != mu.size()) throw std::invalid_argument("multiplicity: size mismatch");
    const auto classes = seq.class_count();
    if (classes > opts.class_cap)
        throw FeasibilityError("multiplicity: W has " + std::to_string(classes) +
                               " classes, above the cap of " + std::to_string(opts.class_cap));
}

Integer class_term(const TripleTypeSeq& seq, const std::vector<Partition>& classes,
                   const PartitionTriple& mu) {
    Integer prod = 1;
    for (int i = 1; i <= 3; ++i) {
        const auto tr = coordinate_trace(seq, classes, i, mu[i - 1]);
        if (tr == 0) return 0;
        prod *= tr;
    }
    for (const auto& rho : classes) prod *= class_size(rho);
    return prod;
}

Multiplicity finish(const Integer& total, const TripleTypeSeq& seq) {
    const auto w = seq.weyl_order();
    if (total % w != 0)
        throw IntegralityError("multiplicity: class sum not divisible by |W| for " + seq.str());
    const Integer m = total / w;
    if (m < 0) throw IntegralityError("multiplicity: negative value for " + seq.str());
    return {to_int64(m)};
}

}  // namespace

Multiplicity multiplicity_serial(const TripleTypeSeq& seq, const PartitionTriple& mu,
                                 const MultiplicityOptions& opts) {
    check_multiplicity_query(seq, mu, opts);
    Integer total = 0;
    for (const auto& cls : weyl_classes(seq)) total += class_term(seq, cls, mu);
    return finish(total, seq);
}

Multiplicity multiplicity(const TripleTypeSeq& seq, const PartitionTriple& mu,
                          const MultiplicityOptions& opts) {
    check_multiplicity_query(seq, mu, opts);
    const auto classes = weyl_classes(seq);
    const auto count = static_cast<long>(classes.size());
    std::vector<Integer> terms(classes.size());
    std::exception_ptr failure;

#ifdef _OPENMP
    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (long c = 0; c < count; ++c) {
        try {
            terms[c] = class_term(seq, classes[c], mu);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(ucert_mult_failure)
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    Integer total = 0;
    for (const auto& t : terms) total += t;
    return finish(total, seq);
}

std::map<WeylIrrep, std::int64_t> decompose_hom(const TypeSeqPlain& seq, const Partition& nu) {
    if (nu.size() != seq.size()) throw std::invalid_argument("decompose_hom: size mismatch");
    std::vector<int> sizes;
    Integer order = 1;
    for (const auto& b : seq.blocks()) {
        sizes.push_back(b.mult);
        order *= factorial(b.mult);
    }
    const auto classes = cartesian_partitions(sizes);
    // weighted traces first; each irrep is then one inner product
    std::vector<Integer> weighted;
    weighted.reserve(classes.size());
    for (const auto& cls : classes) {
        Integer w = trace_on_hom(seq, cls, nu);
        for (const auto& rho : cls) w *= class_size(rho);
        weighted.push_back(w);
    }
    std::map<WeylIrrep, std::int64_t> out;
    for (const auto& irrep : cartesian_partitions(sizes)) {
        Integer s = 0;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (weighted[c] == 0) continue;
            Integer term = weighted[c];
            for (std::size_t j = 0; j < irrep.size(); ++j)
                term *= character_value(irrep[j], classes[c][j]);
            s += term;
        }
        if (s % order != 0) throw IntegralityError("decompose_hom: non-integral multiplicity");
        if (s != 0) out.emplace(irrep, to_int64(s / order));
    }
    return out;
}

// --- roots and certificates -----------------------------------------------

namespace {

const RootClass& classify_triple(const PartitionTriple& omega) {
    static std::mutex mutex;
    static std::map<PartitionTriple, RootClass> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(omega); it != memo.end()) return it->second;
    }
    auto rc = classify(dimvector_of(omega));
    std::lock_guard lock(mutex);
    return memo.try_emplace(omega, std::move(rc)).first->second;
}

bool contained(const Partition& inner, const Partition& outer) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

}  // namespace

BlockRootReport block_roots_ok(const TripleTypeSeq& seq) {
    BlockRootReport r;
    for (const auto& b : seq.blocks()) {
        r.blocks.push_back({b.omega, classify_triple(b.omega)});
        if (!r.blocks.back().root.is_root()) r.ok = false;
    }
    return r;
}

std::optional<Certificate> certify_with(const PartitionTriple& mu, const TripleTypeSeq& seq,
                                        const std::string& rule, const MultiplicityOptions& opts) {
    auto roots = block_roots_ok(seq);
    if (!roots.ok) return std::nullopt;
    const auto m = multiplicity(seq, mu, opts);
    if (m.value == 0) return std::nullopt;
    return Certificate{mu, seq, std::move(roots.blocks), m, rule};
}

bool verify_certificate(const Certificate& cert) {
    if (cert.seq.size() != cert.mu.size() || cert.m.value < 1) return false;
    for (const auto& b : cert.seq.blocks()) {
        // fresh classification and trail replay, bypassing the memo
        const auto v = dimvector_of(b.omega);
        const auto rc = classify(v);
        if (!rc.is_root()) return false;
        if (!(replay(v, rc.trail) == rc.terminal)) return false;
    }
    MultiplicityOptions opts;
    opts.class_cap = std::max<std::int64_t>(opts.class_cap, cert.seq.class_count());
    return multiplicity_serial(cert.seq, cert.mu, opts) == cert.m;
}

std::optional<Certificate> find_certificate(const PartitionTriple& mu,
                                            const CertificateSearch& opts) {
    const int n = mu.size();
    if (n == 0) return std::nullopt;
    MultiplicityOptions mopts{opts.class_cap, opts.threads};
    std::set<std::string> tried;

    auto attempt = [&](const TripleTypeSeq& seq, const std::string& rule) -> std::optional<Certificate> {
        if (!tried.insert(seq.str()).second) return std::nullopt;
        if (seq.class_count() > opts.class_cap) return std::nullopt;
        for (int i = 1; i <= 3; ++i)
            if (c_gen(project(seq, i), mu[i - 1]) == 0) return std::nullopt;
        return certify_with(mu, seq, rule, mopts);
    };

    // (a) v_mu itself
    if (auto c = attempt(TripleTypeSeq{{mu, 1}}, "root")) return c;
    // (b) all-trivial blocks: M is the Kronecker coefficient
    if (n <= opts.max_n)
        if (auto c = attempt(column_family(1, 0, n), "kronecker")) return c;
    // (c) column families
    for (int a : {2, 3})
        for (int k = n / a; k >= 1; --k)
            if (auto c = attempt(column_family(a, k, n), "column-" + std::to_string(a))) return c;

    // (d) sequences of root blocks whose coordinates fit inside mu
    std::vector<PartitionTriple> candidates;
    for (int s = n; s >= 1; --s) {
        std::vector<Partition> coords[3];
        for (int i = 0; i < 3; ++i)
            for (const auto& p : partitions_of(s))
                if (contained(p, mu[i])) coords[i].push_back(p);
        std::vector<PartitionTriple> level;
        for (const auto& a : coords[0])
            for (const auto& b : coords[1])
                for (const auto& c : coords[2]) {
                    PartitionTriple t{a, b, c};
                    if (classify_triple(t).is_root()) level.push_back(t);
                }
        std::sort(level.begin(), level.end(), std::greater<>());
        candidates.insert(candidates.end(), level.begin(), level.end());
    }

    std::int64_t examined = 0;
    std::optional<Certificate> found;
    TripleTypeSeq current;
    std::vector<std::pair<std::size_t, int>> chosen;

    // choose `left` more distinct blocks from candidates[from..] filling `remaining` boxes
    std::function<bool(std::size_t, int, int)> rec = [&](std::size_t from, int left,
                                                        int remaining) -> bool {
        if (left == 0) {
            if (remaining != 0) return false;
            TripleTypeSeq seq;
            for (auto [idx, m] : chosen) seq.add(candidates[idx], m);
            if (tried.count(seq.str())) return false;
            if (++examined > opts.budget) return true;
            if ((found = attempt(seq, "search"))) return true;
            return false;
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
            const int s = candidates[i].size();
            for (int m = remaining / s; m >= 1; --m) {
                chosen.emplace_back(i, m);
                const bool stop = rec(i + 1, left - 1, remaining - m * s);
                chosen.pop_back();
                if (stop) return true;
            }
        }
        return false;
    };
    for (int blocks = 1; blocks <= n && !found && examined <= opts.budget; ++blocks)
        rec(0, blocks, n);
    return found;
}

// --- worked examples ------------------------------------------------------

Example1Table example1_sum(const Partition& mu) {
    if (!(mu == Partition{2, 2}))
        throw std::invalid_argument("example1_sum: the summation rule is only established for mu=(2,2)");
    Example1Table t;
    t.mu = mu;
    t.taus = partitions_of(4);
    const PartitionTriple one{Partition{1}, Partition{1}, Partition{1}};
    const PartitionTriple c3{column(3), column(3), column(3)};
    const PartitionTriple e6{column(3), column(3), Partition{2, 1}};
    t.rows = {column_family(1, 0, 4), column_family(2, 2, 4), column_family(2, 1, 4),
              TripleTypeSeq{{c3, 1}, {one, 1}}, TripleTypeSeq{{e6, 1}, {one, 1}}};
    t.sums.assign(t.taus.size(), 0);
    for (const auto& seq : t.rows) {
        auto& row = t.values.emplace_back();
        for (std::size_t j = 0; j < t.taus.size(); ++j) {
            const auto m = multiplicity(seq, {mu, mu, t.taus[j]}).value;
            row.push_back(m);
            t.sums[j] += m;
        }
    }
    return t;
}

std::vector<TripleTypeSeq> example2_sequences() {
    return {column_family(2, 0, 9), column_family(2, 1, 9), column_family(2, 3, 9),
            column_family(2, 4, 9)};
}

}  // namespace ucert
