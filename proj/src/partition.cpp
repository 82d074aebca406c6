#include "ucert/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace ucert {

namespace {

void validate(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad integer '" + std::string(s) + "' in partition");
    return v;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate(parts_);
    for (int p : parts_) size_ = checked_add(size_, p);
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 1 : parts_.front() + 1, 0);
    for (int p : parts_) ++m[p];
    return m;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const noexcept {
    if (size_ != o.size_) return size_ <=> o.size_;
    // decreasing lexicographic: the larger sequence comes first
    const auto n = std::min(parts_.size(), o.parts_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (parts_[i] != o.parts_[i]) return o.parts_[i] <=> parts_[i];
    return o.parts_.size() <=> parts_.size();
}

std::string Partition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
}

PartitionTriple::PartitionTriple(Partition a, Partition b, Partition c)
    : mu{std::move(a), std::move(b), std::move(c)} {
    if (mu[0].size() != mu[1].size() || mu[0].size() != mu[2].size())
        throw std::invalid_argument("triple partitions must have equal size");
}

std::strong_ordering PartitionTriple::operator<=>(const PartitionTriple& o) const noexcept {
    for (int i = 0; i < 3; ++i)
        if (auto c = mu[i] <=> o.mu[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string PartitionTriple::str() const {
    return "(" + mu[0].str() + ")(" + mu[1].str() + ")(" + mu[2].str() + ")";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Reverse-lexicographic successor walk starting from (n).
    std::vector<int> a{n};
    while (true) {
        out.emplace_back(a);
        // find rightmost part > 1
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) break;
        int k = --a.back();
        int rem = ones + 1;
        while (rem > 0) {
            int take = std::min(k, rem);
            a.push_back(take);
            rem -= take;
        }
    }
    return out;
}

std::int64_t partition_count(int n) {
    if (n < 0) return 0;
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m) p[m] = checked_add(p[m], p[m - k]);
    return p[n];
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> c;
    if (lambda.empty()) return {};
    c.reserve(lambda[0]);
    for (int j = 1; j <= lambda[0]; ++j) {
        int count = 0;
        for (int p : lambda.parts()) {
            if (p >= j) ++count;
            else break;
        }
        c.push_back(count);
    }
    return Partition(std::move(c));
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("dominates: size mismatch");
    int a = 0, b = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        a += lambda[i];
        b += mu[i];
        if (a > b) return false;
    }
    return true;
}

Integer z_order(const Partition& lambda) {
    Integer z = 1;
    const auto m = lambda.multiplicities();
    for (std::size_t k = 1; k < m.size(); ++k) {
        for (int j = 0; j < m[k]; ++j) z *= static_cast<int>(k);
        z *= factorial(m[k]);
    }
    return z;
}

Integer class_size(const Partition& lambda) {
    return factorial(lambda.size()) / z_order(lambda);
}

Partition staircase(int d) {
    if (d < 1) throw std::invalid_argument("staircase: d must be positive");
    std::vector<int> p;
    for (int i = d; i >= 1; --i) p.push_back(i);
    return Partition(std::move(p));
}

Partition mu_max(int n) {
    if (n < 1) throw std::invalid_argument("mu_max: n must be positive");
    const int k = n / 2;
    if (n % 2 == 0) return Partition{k, k};
    return k == 0 ? Partition{1} : Partition{k + 1, k};
}

Partition column(int n) {
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

std::string compact_str(const Partition& lambda) {
    std::string s;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (!s.empty()) s += ',';
        s += std::to_string(p[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

Partition parse_partition(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == '(' && text.back() == ')') {
        text.remove_prefix(1);
        text.remove_suffix(1);
    }
    std::vector<int> parts;
    if (text.empty()) return {};
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto item = text.substr(start, end - start);
        auto caret = item.find('^');
        if (caret == std::string_view::npos) {
            parts.push_back(parse_int(item));
        } else {
            int value = parse_int(item.substr(0, caret));
            int reps = parse_int(item.substr(caret + 1));
            if (reps < 0) throw std::invalid_argument("negative exponent in partition");
            parts.insert(parts.end(), static_cast<std::size_t>(reps), value);
        }
        start = end + 1;
    }
    return Partition(std::move(parts));
}

PartitionTriple parse_triple(std::string_view text) {
    std::vector<Partition> ps;
    std::size_t start = 0;
    while (true) {
        auto end = text.find('/', start);
        ps.push_back(parse_partition(text.substr(start, end == std::string_view::npos
                                                             ? std::string_view::npos
                                                             : end - start)));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (ps.size() != 3) throw std::invalid_argument("triple needs three partitions separated by '/'");
    return {ps[0], ps[1], ps[2]};
}

}  // namespace ucert
