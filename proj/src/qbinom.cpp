#include "sqzero/qbinom.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace sqzero {
namespace {

QPoly one_minus_q_pow(std::int64_t k) { return QPoly(1) - q_pow(k); }

// Multiplying in one numerator factor and dividing out one denominator factor
// per step keeps every intermediate equal to [m choose t]_q, so each division
// is exact and the operands stay small.
QPoly qbinomial_uncached(std::int64_t m, std::int64_t n) {
    QPoly acc(1);
    for (std::int64_t t = 1; t <= n; ++t) {
        acc = exact_div(acc * one_minus_q_pow(m - t + 1), one_minus_q_pow(t));
    }
    return acc;
}

class QBinomialCache {
public:
    QPoly get(std::int64_t m, std::int64_t n) {
        const auto key = std::pair{m, n};
        {
            std::shared_lock lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) {
                return it->second;
            }
        }
        QPoly value = qbinomial_uncached(m, n);
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<std::int64_t, std::int64_t>, QPoly> cache_;
};

QBinomialCache& cache() {
    static QBinomialCache instance;
    return instance;
}

} // namespace

QPoly qbinomial(std::int64_t m, std::int64_t n) {
    if (n < 0 || n > m) {
        return {};
    }
    return cache().get(m, n);
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: negative upper index " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

} // namespace sqzero
