#include "ucert/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace ucert {

// --- SchurPoly ------------------------------------------------------------

SchurPoly SchurPoly::schur(const Partition& lambda, std::int64_t coeff) {
    SchurPoly f(lambda.size());
    f.add(lambda, coeff);
    return f;
}

std::int64_t SchurPoly::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
}

void SchurPoly::add(const Partition& lambda, std::int64_t c) {
    if (c == 0) return;
    if (lambda.size() != degree_)
        throw std::invalid_argument("SchurPoly: term of degree " + std::to_string(lambda.size()) +
                                    " added to degree " + std::to_string(degree_));
    auto [it, inserted] = terms_.try_emplace(lambda, 0);
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

SchurPoly& SchurPoly::operator+=(const SchurPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

SchurPoly& SchurPoly::operator-=(const SchurPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [p, c] : o.terms_) add(p, checked_mul(c, -1));
    return *this;
}

SchurPoly SchurPoly::operator*(std::int64_t c) const {
    SchurPoly r(degree_);
    for (const auto& [p, v] : terms_) r.add(p, checked_mul(v, c));
    return r;
}

// --- PowerPoly ------------------------------------------------------------

PowerPoly PowerPoly::power(const Partition& mu, const Rational& coeff) {
    PowerPoly f(mu.size());
    f.add(mu, coeff);
    return f;
}

Rational PowerPoly::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PowerPoly::add(const Partition& mu, const Rational& c) {
    if (c == 0) return;
    if (mu.size() != degree_) throw std::invalid_argument("PowerPoly: degree mismatch");
    auto [it, inserted] = terms_.try_emplace(mu, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<>());
    return Partition(std::move(parts));
}

PowerPoly PowerPoly::operator*(const PowerPoly& o) const {
    PowerPoly r(degree_ + o.degree_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) r.add(merge_parts(a, b), ca * cb);
    return r;
}

PowerPoly PowerPoly::power_substitute(int d) const {
    if (d < 1) throw std::invalid_argument("power_substitute: d must be positive");
    PowerPoly r(degree_ * d);
    for (const auto& [mu, c] : terms_) {
        std::vector<int> parts = mu.parts();
        for (int& p : parts) p = checked_mul(p, d);
        r.add(Partition(std::move(parts)), c);
    }
    return r;
}

// --- base change ----------------------------------------------------------

namespace {

const PowerPoly& schur_power_expansion(const Partition& lambda) {
    static std::mutex mutex;
    static std::map<Partition, PowerPoly> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    }
    PowerPoly f(lambda.size());
    for (const auto& mu : partitions_of(lambda.size())) {
        const auto chi = character_value(lambda, mu);
        if (chi != 0) f.add(mu, Rational(Integer(chi), z_order(mu)));
    }
    std::lock_guard lock(mutex);
    return memo.try_emplace(lambda, std::move(f)).first->second;
}

}  // namespace

PowerPoly schur_to_power(const SchurPoly& f) {
    PowerPoly r(f.degree());
    for (const auto& [lambda, c] : f.terms())
        for (const auto& [mu, v] : schur_power_expansion(lambda).terms()) r.add(mu, v * c);
    return r;
}

SchurPoly power_to_schur(const PowerPoly& f) {
    SchurPoly r(f.degree());
    if (f.terms().empty()) return r;
    for (const auto& lambda : partitions_of(f.degree())) {
        Rational acc = 0;
        for (const auto& [mu, c] : f.terms()) {
            const auto chi = character_value(lambda, mu);
            if (chi != 0) acc += c * chi;
        }
        if (acc == 0) continue;
        r.add(lambda, to_int64(require_integer(acc, "power_to_schur coefficient of s_(" +
                                                        lambda.str() + ")")));
    }
    return r;
}

// --- Littlewood-Richardson ------------------------------------------------

namespace {

/// Enumerates LR tableaux of shape nu/outer_start with content `content`,
/// adding one horizontal strip per label subject to the lattice condition.
class LrEnumerator {
public:
    LrEnumerator(const Partition& base, const Partition& content)
        : content_(content.parts()),
          rows_(base.length() + content.length()),
          shape_(rows_, 0),
          counts_(rows_, std::vector<int>(content_.size(), 0)) {
        for (int i = 0; i < base.length(); ++i) shape_[i] = base[i];
    }

    std::map<Partition, std::int64_t> run() {
        label(0);
        return out_;
    }

private:
    void label(std::size_t k) {
        if (k == content_.size()) {
            std::vector<int> parts;
            for (int x : shape_)
                if (x > 0) parts.push_back(x);
            auto& slot = out_[Partition(std::move(parts))];
            slot = checked_add(slot, 1);
            return;
        }
        const auto old = shape_;
        fill(k, 0, content_[k], 0, 0, old);
    }

    void fill(std::size_t k, int r, int remaining, int cum_k, int cum_prev_above,
              const std::vector<int>& old) {
        if (r == rows_) {
            if (remaining == 0) label(k + 1);
            return;
        }
        int cap = remaining;
        if (r > 0) cap = std::min(cap, old[r - 1] - old[r]);
        if (k > 0) cap = std::min(cap, cum_prev_above - cum_k);
        if (cap < 0) return;
        const int prev_here = k > 0 ? counts_[r][k - 1] : 0;
        for (int x = cap; x >= 0; --x) {
            shape_[r] += x;
            counts_[r][k] = x;
            fill(k, r + 1, remaining - x, cum_k + x, cum_prev_above + prev_here, old);
            shape_[r] -= x;
            counts_[r][k] = 0;
        }
    }

    std::vector<int> content_;
    int rows_;
    std::vector<int> shape_;
    std::vector<std::vector<int>> counts_;
    std::map<Partition, std::int64_t> out_;
};

}  // namespace

SchurPoly lr_product(const Partition& lambda, const Partition& mu) {
    // the coefficient is symmetric; use the smaller partition as content
    const bool swap = mu.size() > lambda.size() ||
                      (mu.size() == lambda.size() && mu.length() > lambda.length());
    const auto& base = swap ? mu : lambda;
    const auto& content = swap ? lambda : mu;
    SchurPoly r(lambda.size() + mu.size());
    for (const auto& [nu, c] : LrEnumerator(base, content).run()) r.add(nu, c);
    return r;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    return lr_product(lambda, mu).coeff(nu);
}

SchurPoly lr_product(const SchurPoly& f, const SchurPoly& g) {
    SchurPoly r(f.degree() + g.degree());
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) r += lr_product(a, b) * checked_mul(ca, cb);
    return r;
}

SchurPoly pieri_column(const Partition& lambda, int r) {
    if (r < 0) throw std::invalid_argument("pieri_column: r must be nonnegative");
    SchurPoly out(lambda.size() + r);
    const int rows = lambda.length() + r;
    std::vector<int> shape(rows, 0);
    for (int i = 0; i < lambda.length(); ++i) shape[i] = lambda[i];

    auto rec = [&](auto&& self, int row, int left) -> void {
        if (left == 0) {
            std::vector<int> parts;
            for (int x : shape)
                if (x > 0) parts.push_back(x);
            out.add(Partition(std::move(parts)), 1);
            return;
        }
        if (row == rows || rows - row < left) return;
        // add a box to this row if the row stays no longer than the one above
        if (row == 0 || shape[row] + 1 <= shape[row - 1]) {
            ++shape[row];
            self(self, row + 1, left - 1);
            --shape[row];
        }
        self(self, row + 1, left);
    };
    rec(rec, 0, r);
    return out;
}

Integer hall_pairing(const SchurPoly& f, const SchurPoly& g) {
    if (!f.is_zero() && !g.is_zero() && f.degree() != g.degree())
        throw std::invalid_argument("hall_pairing: degree mismatch");
    Integer acc = 0;
    for (const auto& [p, c] : f.terms()) {
        const auto d = g.coeff(p);
        if (d != 0) acc += Integer(c) * d;
    }
    return acc;
}

Integer hall_pairing(const SchurPoly& f, const Partition& power_mu) {
    if (!f.is_zero() && f.degree() != power_mu.size())
        throw std::invalid_argument("hall_pairing: degree mismatch");
    Integer acc = 0;
    for (const auto& [lambda, c] : f.terms()) acc += Integer(c) * character_value(lambda, power_mu);
    return acc;
}

// --- types ----------------------------------------------------------------

void Type::add(int d, const Partition& lambda, int mult) {
    if (d < 1 || mult < 1 || lambda.empty())
        throw std::invalid_argument("Type entry needs d >= 1, mult >= 1, nonempty partition");
    size_ = checked_add(size_, checked_mul(checked_mul(d, lambda.size()), mult));
    for (auto& e : entries_) {
        if (e.d == d && e.lambda == lambda) {
            e.mult += mult;
            return;
        }
    }
    entries_.push_back({d, lambda, mult});
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        if (a.d != b.d) return a.d > b.d;
        return a.lambda > b.lambda;
    });
}

std::vector<std::tuple<int, Partition, int>> Type::key() const {
    std::vector<std::tuple<int, Partition, int>> k;
    k.reserve(entries_.size());
    for (const auto& e : entries_) k.emplace_back(e.d, e.lambda, e.mult);
    return k;
}

std::string Type::str() const {
    std::string s;
    for (const auto& e : entries_) {
        s += "(" + std::to_string(e.d) + ",(" + e.lambda.str() + "))";
        if (e.mult != 1) s += "^" + std::to_string(e.mult);
    }
    return s;
}

SchurPoly eval_type(const Type& omega) {
    static std::mutex mutex;
    static std::map<Type, SchurPoly> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(omega); it != memo.end()) return it->second;
    }
    PowerPoly acc = PowerPoly::power(Partition{});
    for (const auto& e : omega.entries()) {
        const auto factor = schur_to_power(SchurPoly::schur(e.lambda)).power_substitute(e.d);
        for (int i = 0; i < e.mult; ++i) acc = acc * factor;
    }
    auto result = power_to_schur(acc);
    std::lock_guard lock(mutex);
    return memo.try_emplace(omega, std::move(result)).first->second;
}

void TypeSeqPlain::add(const Partition& lambda, int mult) {
    if (mult < 1 || lambda.empty())
        throw std::invalid_argument("TypeSeqPlain block needs mult >= 1 and a nonempty partition");
    size_ = checked_add(size_, checked_mul(lambda.size(), mult));
    for (auto& b : blocks_) {
        if (b.lambda == lambda) {
            b.mult += mult;
            return;
        }
    }
    blocks_.push_back({lambda, mult});
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& a, const Block& b) { return a.lambda > b.lambda; });
}

std::string TypeSeqPlain::str() const {
    std::string s;
    for (const auto& b : blocks_) {
        s += "(" + b.lambda.str() + ")";
        if (b.mult != 1) s += "^" + std::to_string(b.mult);
    }
    return s;
}

SchurPoly induced_product(const TypeSeqPlain& seq) {
    static std::mutex mutex;
    static std::map<std::string, SchurPoly> memo;
    const auto key = seq.str();
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    SchurPoly acc = SchurPoly::schur(Partition{});
    for (const auto& b : seq.blocks())
        for (int i = 0; i < b.mult; ++i) acc = lr_product(acc, SchurPoly::schur(b.lambda));
    std::lock_guard lock(mutex);
    return memo.try_emplace(key, std::move(acc)).first->second;
}

std::int64_t c_gen(const TypeSeqPlain& seq, const Partition& nu) {
    if (seq.size() != nu.size()) throw std::invalid_argument("c_gen: size mismatch");
    return induced_product(seq).coeff(nu);
}

Type type_of_class(const TypeSeqPlain& seq, const std::vector<Partition>& classes) {
    if (classes.size() != seq.blocks().size())
        throw std::invalid_argument("type_of_class: need one cycle type per block");
    Type t;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        const auto& b = seq.blocks()[j];
        if (classes[j].size() != b.mult)
            throw std::invalid_argument("type_of_class: cycle type size must equal block multiplicity");
        for (int c : classes[j].parts()) t.add(c, b.lambda);
    }
    return t;
}

std::int64_t trace_on_hom(const TypeSeqPlain& seq, const std::vector<Partition>& classes,
                          const Partition& mu) {
    if (seq.size() != mu.size()) throw std::invalid_argument("trace_on_hom: size mismatch");
    return eval_type(type_of_class(seq, classes)).coeff(mu);
}

}  // namespace ucert
