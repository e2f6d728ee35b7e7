#pragma once

#include <cstdint>

#include "sqzero/qpoly.hpp"

namespace sqzero {

/// Gaussian binomial [m choose n]_q, built from the product quotient
/// (1-q^m)...(1-q^(m-n+1)) / ((1-q)...(1-q^n)). Zero unless 0 <= n <= m.
/// Results are memoized in a process-wide, thread-safe cache.
QPoly qbinomial(std::int64_t m, std::int64_t n);

/// Ordinary binomial coefficient with binomial(n, k) = 0 for k < 0 or k > n.
/// Throws std::invalid_argument for n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

} // namespace sqzero
