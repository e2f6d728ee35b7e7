#include "sqzero/counting.hpp"

#include <string>
#include <utility>

#include "sqzero/qbinom.hpp"
#include "sqzero/wlaurent.hpp"

namespace sqzero {
namespace {

void require(bool ok, const char* what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

QPoly sign(std::int64_t k) { return QPoly(k % 2 == 0 ? 1 : -1); }

// (1 - w)(1 + w)^n
WLaurent one_minus_w_times_one_plus_w_pow(std::int64_t n) {
    const WLaurent one_minus_w = WLaurent::monomial(1, 0) + WLaurent::monomial(-1, 1);
    return one_minus_w * WLaurent::one_plus_w_pow(static_cast<unsigned>(n));
}

QPoly polynomial_constant_term(const WLaurent& series, const char* engine) {
    QPoly ct = series.constant_term();
    if (!ct.is_polynomial()) {
        throw NonPolynomialResult(std::string("non-polynomial CT result in ") + engine + ": " +
                                  ct.to_string());
    }
    return ct;
}

} // namespace

TriangularTable::TriangularTable(std::vector<std::vector<QPoly>> rows) : rows_(std::move(rows)) {
    require(!rows_.empty(), "TriangularTable: at least row 0 is required");
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        require(rows_[n].size() == n / 2 + 1, "TriangularTable: row n must hold floor(n/2)+1 entries");
    }
}

const std::vector<QPoly>& TriangularTable::row(std::int64_t n) const {
    require(n >= 0 && n <= n_max(), "TriangularTable: row index out of range");
    return rows_[static_cast<std::size_t>(n)];
}

QPoly TriangularTable::entry(std::int64_t n, std::int64_t r) const {
    if (r < 0 || 2 * r > n) {
        return {};
    }
    return row(n)[static_cast<std::size_t>(r)];
}

TriangularTable recurrence_table(std::int64_t n_max) {
    require(n_max >= 0, "recurrence_table: n_max must be nonnegative");
    std::vector<std::vector<QPoly>> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);
    rows.push_back({QPoly(1)});
    for (std::int64_t n = 0; n < n_max; ++n) {
        const auto& prev = rows.back();
        auto at = [&](std::int64_t r) {
            return 2 * r <= n ? prev[static_cast<std::size_t>(r)] : QPoly{};
        };
        std::vector<QPoly> next;
        next.reserve(static_cast<std::size_t>((n + 1) / 2) + 1);
        next.emplace_back(1);
        for (std::int64_t r = 0; 2 * (r + 1) <= n + 1; ++r) {
            next.push_back(q_pow(r + 1) * at(r + 1) + (q_pow(n - r) - q_pow(r)) * at(r));
        }
        rows.push_back(std::move(next));
    }
    return TriangularTable(std::move(rows));
}

QPoly a_n(const TriangularTable& table, std::int64_t n) {
    QPoly sum;
    for (const auto& entry : table.row(n)) {
        sum += entry;
    }
    return sum;
}

QPoly closed_form(std::int64_t n) {
    require(n >= 1, "closed_form: n must be positive");
    const std::int64_t m = n / 2;
    const bool even = n % 2 == 0;
    // Both binomials vanish once |3j| > n + 1, so j in [-n, n] covers the support.
    QPoly sum;
    for (std::int64_t j = -n; j <= n; ++j) {
        BigInt coeff = binomial(n, m - 3 * j) - binomial(n, m - 3 * j - 1);
        const Exponent exp = even ? m * m - 3 * j * j - j : m * m + m - 3 * j * j - 2 * j;
        sum += QPoly::monomial(std::move(coeff), exp);
    }
    return sum;
}

QPoly anna(std::int64_t n, std::int64_t r) {
    require(r >= 0 && 2 * r <= n, "anna: requires 0 <= 2r <= n");
    // The prefactor (1-w)(1+w)^n w^{-r} has w-support [-r, n+1-r], so the
    // series term w^i can only reach w^0 when i <= r. Truncate there.
    WLaurent series;
    for (std::int64_t i = 0; i <= r; ++i) {
        const Exponent q_exp = -(i + 1) * i / 2 - i * (n - 2 * r);
        series.add_term(i, sign(i) * qbinomial(i + n - 2 * r, i).shifted(q_exp));
    }
    const WLaurent prefactor = one_minus_w_times_one_plus_w_pow(n).shifted(-r);
    return polynomial_constant_term(prefactor * series * q_pow(r * (n - r)), "anna");
}

QPoly sasha_prime_residual(std::int64_t n, std::int64_t r) {
    require(r >= 0 && 2 * (r + 1) <= n + 1, "sasha_prime_residual: requires 0 <= 2(r+1) <= n+1");
    auto term = [](std::int64_t nn, std::int64_t s) { return 2 * s > nn ? QPoly{} : anna(nn, s); };
    return anna(n + 1, r + 1) - q_pow(r + 1) * term(n, r + 1) - (q_pow(n - r) - q_pow(r)) * term(n, r);
}

QPoly sumanna(std::int64_t n) {
    require(n >= 1, "sumanna: n must be positive");
    WLaurent series;
    for (std::int64_t l = 0; l <= n / 2; ++l) {
        series.add_term(-l, lemma2_lhs(n - 2 * l).shifted(l * n - l * l));
    }
    return polynomial_constant_term(one_minus_w_times_one_plus_w_pow(n) * series, "sumanna");
}

QPoly lemma2_lhs(std::int64_t m) {
    require(m >= 0, "lemma2_lhs: m must be nonnegative");
    QPoly sum;
    for (std::int64_t i = 0; i <= m / 2; ++i) {
        sum += sign(i) * qbinomial(m - i, i).shifted(i * (i - 1) / 2);
    }
    return sum;
}

QPoly lemma2_rhs(std::int64_t m) {
    require(m >= 0, "lemma2_rhs: m must be nonnegative");
    if (m % 3 == 2) {
        return {};
    }
    if ((m * (m - 1)) % 6 != 0) {
        throw std::logic_error("lemma2_rhs: non-integral exponent for m = " + std::to_string(m));
    }
    return sign(m / 3) * q_pow(m * (m - 1) / 6);
}

} // namespace sqzero
