#pragma once

#include <initializer_list>
#include <random>
#include <utility>

#include "sqzero/qpoly.hpp"

namespace sqzero::test {

inline QPoly poly(std::initializer_list<std::pair<Exponent, long long>> terms) {
    QPoly::TermMap map;
    for (const auto& [e, c] : terms) {
        map[e] += c;
    }
    return QPoly::from_terms(std::move(map));
}

inline QPoly random_poly(std::mt19937_64& rng, Exponent lo = -10, Exponent hi = 10, long long max_coeff = 100) {
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<Exponent> exp(lo, hi);
    std::uniform_int_distribution<long long> coeff(-max_coeff, max_coeff);
    QPoly::TermMap map;
    for (int i = len(rng); i > 0; --i) {
        map[exp(rng)] = coeff(rng);
    }
    return QPoly::from_terms(std::move(map));
}

} // namespace sqzero::test
