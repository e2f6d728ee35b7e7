#include "sqzero/oracle.hpp"

#include <atomic>
#include <string>
#include <thread>
#include <utility>

namespace sqzero {
namespace {

// Dense row-major n x n scratch matrix of raw element values.
class Dense {
public:
    explicit Dense(std::size_t n) : n_(n), cells_(n * n, 0) {}

    std::uint8_t& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
    std::uint8_t operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
    std::size_t dim() const { return n_; }

private:
    std::size_t n_;
    std::vector<std::uint8_t> cells_;
};

bool dense_square_is_zero(const Dense& x, const FiniteField& f) {
    const std::size_t n = x.dim();
    for (std::size_t i = 0; i + 2 < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            FieldElement acc{};
            for (std::size_t k = i + 1; k < j; ++k) {
                acc = f.add(acc, f.mul({x(i, k)}, {x(k, j)}));
            }
            if (acc.value != 0) {
                return false;
            }
        }
    }
    return true;
}

std::size_t dense_rank(Dense x, const FiniteField& f) {
    const std::size_t n = x.dim();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && x(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            continue;
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(x(pivot, c), x(rank, c));
        }
        const FieldElement inv = f.inv({x(rank, col)});
        for (std::size_t r = rank + 1; r < n; ++r) {
            if (x(r, col) == 0) {
                continue;
            }
            const FieldElement factor = f.neg(f.mul({x(r, col)}, inv));
            for (std::size_t c = col; c < n; ++c) {
                x(r, c) = f.add({x(r, c)}, f.mul(factor, {x(rank, c)})).value;
            }
        }
        ++rank;
    }
    return rank;
}

Dense to_dense(const StrictUpperMatrix& m) {
    Dense x(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = i + 1; j < m.dim(); ++j) {
            x(i, j) = m.at(i, j).value;
        }
    }
    return x;
}

// Solutions by rank (index = rank); without ranks everything lands in slot 0.
using Tally = std::vector<std::uint64_t>;

// Enumerates every entry assignment. Entry 0 varies slowest, the last entry
// fastest. The first `prefix_len` entries are fixed per task: task t assigns
// them the base-q digits of t, most significant first. Tasks are handed out
// through an atomic counter; the per-worker tallies are summed afterwards, so
// the result does not depend on the worker count or the scheduling.
template <bool ByRank>
Tally enumerate(std::size_t n, const FiniteField& f, unsigned workers) {
    const unsigned q = f.order();
    const std::size_t entries = StrictUpperMatrix::entry_count(n);
    std::vector<std::pair<std::size_t, std::size_t>> positions;
    positions.reserve(entries);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            positions.emplace_back(i, j);
        }
    }

    std::size_t prefix_len = 0;
    std::uint64_t tasks = 1;
    while (prefix_len < entries && tasks < 8ULL * workers) {
        tasks *= q;
        ++prefix_len;
    }

    std::atomic<std::uint64_t> next_task{0};
    std::vector<Tally> partial(workers, Tally(n + 1, 0));

    // Odometer step over the suffix, last entry fastest; false once it wraps.
    auto advance = [&](Dense& x, std::vector<unsigned>& digits) {
        for (std::size_t e = entries; e-- > prefix_len;) {
            const auto [i, j] = positions[e];
            if (++digits[e] < q) {
                x(i, j) = static_cast<std::uint8_t>(digits[e]);
                return true;
            }
            digits[e] = 0;
            x(i, j) = 0;
        }
        return false;
    };

    auto work = [&](Tally& tally) {
        Dense x(n);
        std::vector<unsigned> digits(entries, 0);
        for (std::uint64_t t = next_task.fetch_add(1); t < tasks; t = next_task.fetch_add(1)) {
            std::uint64_t code = t;
            for (std::size_t e = prefix_len; e-- > 0;) {
                digits[e] = static_cast<unsigned>(code % q);
                code /= q;
            }
            for (std::size_t e = prefix_len; e < entries; ++e) {
                digits[e] = 0;
            }
            for (std::size_t e = 0; e < entries; ++e) {
                x(positions[e].first, positions[e].second) = static_cast<std::uint8_t>(digits[e]);
            }
            do {
                if (dense_square_is_zero(x, f)) {
                    ++tally[ByRank ? dense_rank(x, f) : 0];
                }
            } while (advance(x, digits));
        }
    };

    if (workers == 1) {
        work(partial[0]);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, std::ref(partial[w]));
        }
    }

    Tally total(n + 1, 0);
    for (const auto& tally : partial) {
        for (std::size_t r = 0; r <= n; ++r) {
            total[r] += tally[r];
        }
    }
    return total;
}

void check_budget(std::size_t n, unsigned q, const EnumerationOptions& options) {
    if (options.workers == 0) {
        throw std::invalid_argument("enumeration needs at least one worker");
    }
    const BigInt required = candidate_count(n, q);
    if (required > options.budget) {
        throw BudgetExceeded(required, options.budget);
    }
}

} // namespace

StrictUpperMatrix::StrictUpperMatrix(std::size_t n, std::vector<FieldElement> entries)
    : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != entry_count(n)) {
        throw std::invalid_argument("StrictUpperMatrix: expected " + std::to_string(entry_count(n)) +
                                    " entries, got " + std::to_string(entries_.size()));
    }
}

bool square_is_zero(const StrictUpperMatrix& m, const FiniteField& f) {
    return dense_square_is_zero(to_dense(m), f);
}

std::size_t rank(const StrictUpperMatrix& m, const FiniteField& f) {
    return dense_rank(to_dense(m), f);
}

BudgetExceeded::BudgetExceeded(const BigInt& required, std::uint64_t budget)
    : std::runtime_error("enumeration budget exceeded: " + required.str() + " candidate matrices required, budget is " +
                         std::to_string(budget)),
      required_(required) {}

BigInt candidate_count(std::size_t n, unsigned q) {
    return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(StrictUpperMatrix::entry_count(n)));
}

BigInt count_square_zero(std::size_t n, unsigned q, const EnumerationOptions& options) {
    const FiniteField field(q);
    check_budget(n, q, options);
    return BigInt(enumerate<false>(n, field, options.workers)[0]);
}

std::map<std::size_t, BigInt> count_by_rank(std::size_t n, unsigned q, const EnumerationOptions& options) {
    const FiniteField field(q);
    check_budget(n, q, options);
    const Tally tally = enumerate<true>(n, field, options.workers);
    std::map<std::size_t, BigInt> out;
    for (std::size_t r = 0; r < tally.size(); ++r) {
        if (tally[r] != 0) {
            out.emplace(r, tally[r]);
        }
    }
    return out;
}

} // namespace sqzero
