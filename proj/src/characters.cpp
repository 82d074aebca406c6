#include <algorithm>
#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "ucert/symfunc.hpp"

namespace ucert {

namespace {

struct KeyHash {
    std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
        PartitionHash h;
        return h(k.first) * 31u + h(k.second);
    }
};

struct CharacterCache {
    std::shared_mutex mutex;
    std::unordered_map<std::pair<Partition, Partition>, std::int64_t, KeyHash> values;
    std::atomic<std::size_t> cap{0};
};

CharacterCache& cache() {
    static CharacterCache c;
    return c;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int j = 0; j < len; ++j) {
        int p = beta[j] - (len - 1 - j);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

std::int64_t mn_recursive(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return 1;  // lambda is empty too: sizes agree

    auto& c = cache();
    auto key = std::make_pair(lambda, mu);
    {
        std::shared_lock lock(c.mutex);
        if (auto it = c.values.find(key); it != c.values.end()) return it->second;
    }

    const int r = mu[0];
    const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));

    const int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);

    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
        const int b = beta[i];
        const int t = b - r;
        if (t < 0 || std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
        // height of the removed border strip = beads strictly between t and b
        int between = 0;
        for (int x : beta)
            if (x > t && x < b) ++between;
        auto next = beta;
        next[i] = t;
        const std::int64_t sub = mn_recursive(from_beta(std::move(next)), rest);
        total = checked_add(total, between % 2 ? -sub : sub);
    }

    {
        std::unique_lock lock(c.mutex);
        const auto cap = c.cap.load();
        if (cap > 0 && c.values.size() >= cap) c.values.clear();
        c.values.emplace(std::move(key), total);
    }
    return total;
}

}  // namespace

std::int64_t character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character_value: |lambda| != |mu|");
    return mn_recursive(lambda, mu);
}

void set_character_cache_cap(std::size_t cap) { cache().cap = cap; }

std::size_t character_cache_size() {
    std::shared_lock lock(cache().mutex);
    return cache().values.size();
}

void clear_character_cache() {
    std::unique_lock lock(cache().mutex);
    cache().values.clear();
}

}  // namespace ucert
