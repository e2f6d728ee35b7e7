#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqzero/counting.hpp"
#include "sqzero/oracle.hpp"
#include "sqzero/qpoly.hpp"

namespace sqzero::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_mismatch = 1,
    exit_usage = 2,
};

enum class Method { closed, recurrence, anna, sumanna, oracle };
enum class Format { text, json, csv };

std::string to_string(Method method);
std::string to_string(Format format);

/// One computed row. `polynomial` is set for formula methods, `q` and
/// `value` when the result was evaluated (or counted) at a concrete q.
struct OutputRecord {
    std::int64_t n = 0;
    Method method = Method::closed;
    std::optional<BigInt> q;
    std::optional<QPoly> polynomial;
    std::optional<BigRational> value;
};

/// {"n": 3, "method": "closed", "polynomial": {"1": "-1", "2": "2"}, ...}.
/// Term-map keys are exponents and coefficients are decimal strings.
nlohmann::json to_json(const OutputRecord& record);
nlohmann::json polynomial_to_json(const QPoly& poly);
/// Inverse of polynomial_to_json. Throws std::invalid_argument on malformed input.
QPoly polynomial_from_json(const nlohmann::json& terms);

/// C_n / A_n by one of the formula engines (not Method::oracle).
QPoly compute_polynomial(std::int64_t n, Method method);

/// The formula engines compared by `verify`, replaceable for testing.
struct Engines {
    std::function<QPoly(std::int64_t)> closed_form;
    std::function<TriangularTable(std::int64_t)> recurrence_table;
    std::function<QPoly(std::int64_t)> sumanna;
    std::function<QPoly(std::int64_t, std::int64_t)> anna;

    static Engines standard();
};

struct Mismatch {
    std::int64_t n = 0;
    std::optional<std::int64_t> r;
    std::string engine;
    QPoly expected;
    QPoly actual;
};

/// Four-way comparison against the recurrence for 1 <= n <= n_max: the closed
/// form, the summed constant-term form and every anna(n, r).
std::vector<Mismatch> verify(std::int64_t n_max, const Engines& engines = Engines::standard());

struct OracleRequest {
    std::int64_t n = 0;
    unsigned q = 0;
    bool by_rank = false;
    EnumerationOptions enumeration;
    Format format = Format::text;
};

int cmd_compute(std::int64_t n, Method method, std::optional<std::int64_t> q, Format format, std::ostream& out,
                const EnumerationOptions& enumeration = {});
int cmd_verify(std::int64_t n_max, std::ostream& out, const Engines& engines = Engines::standard());
int cmd_oracle(const OracleRequest& request, std::ostream& out);
int cmd_lemma2(std::int64_t m_max, std::ostream& out);
int cmd_table(std::int64_t n_max, Format format, const std::vector<std::int64_t>& q_list, std::ostream& out);

/// Parses argv and dispatches to a subcommand. Never throws; returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sqzero::cli
