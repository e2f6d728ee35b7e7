#include "sqzero/cli.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "sqzero/gf.hpp"

namespace sqzero::cli {
namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

std::string value_string(const QPoly& poly, std::int64_t q) { return sqzero::to_string(poly.eval(q)); }

QPoly sum_of_anna(std::int64_t n) {
    QPoly sum;
    for (std::int64_t r = 0; 2 * r <= n; ++r) {
        sum += anna(n, r);
    }
    return sum;
}

void write_csv_record(const OutputRecord& rec, std::ostream& out) {
    out << rec.n << ',' << to_string(rec.method) << ',' << (rec.polynomial ? rec.polynomial->to_string() : "") << ',';
    if (rec.q) {
        out << *rec.q;
    }
    out << ',';
    if (rec.value) {
        out << sqzero::to_string(*rec.value);
    }
    out << '\n';
}

} // namespace

std::string to_string(Method method) {
    switch (method) {
    case Method::closed:
        return "closed";
    case Method::recurrence:
        return "recurrence";
    case Method::anna:
        return "anna";
    case Method::sumanna:
        return "sumanna";
    case Method::oracle:
        return "oracle";
    }
    return "?";
}

std::string to_string(Format format) {
    switch (format) {
    case Format::text:
        return "text";
    case Format::json:
        return "json";
    case Format::csv:
        return "csv";
    }
    return "?";
}

nlohmann::json polynomial_to_json(const QPoly& poly) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [e, c] : poly.terms()) {
        terms[std::to_string(e)] = c.str();
    }
    return terms;
}

QPoly polynomial_from_json(const nlohmann::json& terms) {
    require(terms.is_object(), "polynomial must be a JSON object");
    QPoly::TermMap map;
    for (const auto& [key, value] : terms.items()) {
        require(value.is_string(), "coefficient for exponent " + key + " must be a decimal string");
        std::size_t used = 0;
        Exponent exp = 0;
        try {
            exp = std::stoll(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used == key.size() && !key.empty(), "bad exponent key '" + key + "'");
        try {
            map[exp] = BigInt(value.get<std::string>());
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("bad coefficient '" + value.get<std::string>() + "'");
        }
    }
    return QPoly::from_terms(std::move(map));
}

nlohmann::json to_json(const OutputRecord& record) {
    nlohmann::json j;
    j["n"] = record.n;
    j["method"] = to_string(record.method);
    if (record.q) {
        j["q"] = static_cast<std::int64_t>(*record.q);
    }
    if (record.polynomial) {
        j["polynomial"] = polynomial_to_json(*record.polynomial);
    }
    if (record.value) {
        j["value"] = sqzero::to_string(*record.value);
    }
    return j;
}

QPoly compute_polynomial(std::int64_t n, Method method) {
    require(n >= 1, "n must be at least 1");
    switch (method) {
    case Method::closed:
        return closed_form(n);
    case Method::recurrence:
        return a_n(recurrence_table(n), n);
    case Method::anna:
        return sum_of_anna(n);
    case Method::sumanna:
        return sumanna(n);
    case Method::oracle:
        break;
    }
    throw std::invalid_argument("the oracle method produces counts, not polynomials");
}

Engines Engines::standard() {
    return Engines{
        .closed_form = [](std::int64_t n) { return sqzero::closed_form(n); },
        .recurrence_table = [](std::int64_t n_max) { return sqzero::recurrence_table(n_max); },
        .sumanna = [](std::int64_t n) { return sqzero::sumanna(n); },
        .anna = [](std::int64_t n, std::int64_t r) { return sqzero::anna(n, r); },
    };
}

std::vector<Mismatch> verify(std::int64_t n_max, const Engines& engines) {
    require(n_max >= 1, "n-max must be at least 1");
    const TriangularTable table = engines.recurrence_table(n_max);
    std::vector<Mismatch> out;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const QPoly reference = a_n(table, n);
        if (QPoly got = engines.closed_form(n); got != reference) {
            out.push_back({n, std::nullopt, "closed", reference, std::move(got)});
        }
        if (QPoly got = engines.sumanna(n); got != reference) {
            out.push_back({n, std::nullopt, "sumanna", reference, std::move(got)});
        }
        for (std::int64_t r = 0; 2 * r <= n; ++r) {
            const QPoly expected = table.entry(n, r);
            if (QPoly got = engines.anna(n, r); got != expected) {
                out.push_back({n, r, "anna", expected, std::move(got)});
            }
        }
    }
    return out;
}

int cmd_compute(std::int64_t n, Method method, std::optional<std::int64_t> q, Format format, std::ostream& out,
                const EnumerationOptions& enumeration) {
    require(n >= 1, "n must be at least 1");
    OutputRecord rec{.n = n, .method = method};
    if (method == Method::oracle) {
        require(q.has_value(), "method oracle requires --q");
        require(*q >= 2 && *q <= FiniteField::max_order, std::to_string(*q) + " is not a supported prime power");
        rec.q = *q;
        rec.value = BigRational(count_square_zero(static_cast<std::size_t>(n), static_cast<unsigned>(*q), enumeration));
    } else {
        rec.polynomial = compute_polynomial(n, method);
        if (q) {
            require(*q >= 1, "q must be a positive integer");
            rec.q = *q;
            rec.value = rec.polynomial->eval(*q);
        }
    }

    switch (format) {
    case Format::text:
        out << (rec.value ? sqzero::to_string(*rec.value) : rec.polynomial->to_string()) << '\n';
        break;
    case Format::json:
        out << to_json(rec).dump() << '\n';
        break;
    case Format::csv:
        out << "n,method,polynomial,q,value\n";
        write_csv_record(rec, out);
        break;
    }
    return exit_ok;
}

int cmd_verify(std::int64_t n_max, std::ostream& out, const Engines& engines) {
    const std::vector<Mismatch> mismatches = verify(n_max, engines);
    for (const auto& m : mismatches) {
        out << "MISMATCH n=" << m.n;
        if (m.r) {
            out << " r=" << *m.r;
        }
        out << " engine=" << m.engine << "\n  expected: " << m.expected.to_string()
            << "\n  actual:   " << m.actual.to_string() << '\n';
    }
    if (mismatches.empty()) {
        out << "PASS: closed, recurrence, sumanna and anna agree for 1 <= n <= " << n_max << '\n';
        return exit_ok;
    }
    out << "FAIL: " << mismatches.size() << " mismatch(es) for n <= " << n_max << '\n';
    return exit_mismatch;
}

int cmd_oracle(const OracleRequest& request, std::ostream& out) {
    require(request.n >= 1, "n must be at least 1");
    const auto n = static_cast<std::size_t>(request.n);
    const FiniteField field(request.q);

    std::map<std::size_t, BigInt> ranks;
    BigInt count = 0;
    if (request.by_rank) {
        ranks = count_by_rank(n, field.order(), request.enumeration);
        for (const auto& [r, c] : ranks) {
            count += c;
        }
    } else {
        count = count_square_zero(n, field.order(), request.enumeration);
    }
    const BigRational formula = closed_form(request.n).eval(request.q);
    const bool match = formula == BigRational(count);

    // Informational only: A_n^r at q next to the rank-r count.
    struct RankRow {
        std::int64_t rank;
        BigInt count;
        BigRational anna_value;
    };
    std::vector<RankRow> rows;
    if (request.by_rank) {
        for (std::int64_t r = 0; 2 * r <= request.n; ++r) {
            auto it = ranks.find(static_cast<std::size_t>(r));
            rows.push_back({r, it == ranks.end() ? BigInt(0) : it->second, anna(request.n, r).eval(request.q)});
        }
    }

    if (request.format == Format::json) {
        nlohmann::json j;
        j["n"] = request.n;
        j["q"] = request.q;
        j["count"] = count.str();
        j["formula"] = sqzero::to_string(formula);
        j["match"] = match;
        if (request.by_rank) {
            j["by_rank"] = nlohmann::json::array();
            for (const auto& row : rows) {
                j["by_rank"].push_back({{"rank", row.rank},
                                        {"count", row.count.str()},
                                        {"anna", sqzero::to_string(row.anna_value)},
                                        {"agrees", BigRational(row.count) == row.anna_value}});
            }
        }
        out << j.dump() << '\n';
    } else {
        out << "n=" << request.n << " q=" << request.q << " count=" << count << " formula=" << sqzero::to_string(formula)
            << ' ' << (match ? "MATCH" : "MISMATCH") << '\n';
        if (request.by_rank) {
            out << "rank  count  A_n^r(q)  (informational)\n";
            for (const auto& row : rows) {
                out << row.rank << "  " << row.count << "  " << sqzero::to_string(row.anna_value) << "  "
                    << (BigRational(row.count) == row.anna_value ? "agrees" : "differs") << '\n';
            }
        }
    }
    return match ? exit_ok : exit_mismatch;
}

int cmd_lemma2(std::int64_t m_max, std::ostream& out) {
    require(m_max >= 0, "m-max must be nonnegative");
    std::int64_t failures = 0;
    for (std::int64_t m = 0; m <= m_max; ++m) {
        const QPoly lhs = lemma2_lhs(m);
        const QPoly rhs = lemma2_rhs(m);
        if (lhs != rhs) {
            ++failures;
            out << "MISMATCH m=" << m << "\n  lhs: " << lhs.to_string() << "\n  rhs: " << rhs.to_string() << '\n';
        }
    }
    if (failures == 0) {
        out << "PASS: inner-sum identity holds for 0 <= m <= " << m_max << '\n';
        return exit_ok;
    }
    out << "FAIL: " << failures << " mismatch(es)\n";
    return exit_mismatch;
}

int cmd_table(std::int64_t n_max, Format format, const std::vector<std::int64_t>& q_list, std::ostream& out) {
    require(n_max >= 1, "n-max must be at least 1");
    for (auto q : q_list) {
        require(q >= 1, "q values must be positive integers");
    }
    std::vector<QPoly> polys;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        polys.push_back(closed_form(n));
    }

    switch (format) {
    case Format::csv:
        out << "n,polynomial";
        for (auto q : q_list) {
            out << ",q=" << q;
        }
        out << '\n';
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const QPoly& poly = polys[static_cast<std::size_t>(n - 1)];
            out << n << ',' << poly.to_string();
            for (auto q : q_list) {
                out << ',' << value_string(poly, q);
            }
            out << '\n';
        }
        break;
    case Format::json: {
        // One record per n, or one per (n, q) pair when values are requested.
        nlohmann::json records = nlohmann::json::array();
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const QPoly& poly = polys[static_cast<std::size_t>(n - 1)];
            if (q_list.empty()) {
                records.push_back(to_json({.n = n, .method = Method::closed, .polynomial = poly}));
            }
            for (auto q : q_list) {
                records.push_back(
                    to_json({.n = n, .method = Method::closed, .q = q, .polynomial = poly, .value = poly.eval(q)}));
            }
        }
        out << records.dump() << '\n';
        break;
    }
    case Format::text:
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const QPoly& poly = polys[static_cast<std::size_t>(n - 1)];
            out << "C_" << n << "(q) = " << poly.to_string();
            for (auto q : q_list) {
                out << "  [q=" << q << ": " << value_string(poly, q) << ']';
            }
            out << '\n';
        }
        break;
    }
    return exit_ok;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counts upper-triangular matrices over GF(q) whose square is zero."};
    app.require_subcommand(1);

    const std::map<std::string, Method> methods = {{"closed", Method::closed},
                                                   {"recurrence", Method::recurrence},
                                                   {"anna", Method::anna},
                                                   {"sumanna", Method::sumanna},
                                                   {"oracle", Method::oracle}};
    const std::map<std::string, Format> formats = {
        {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

    std::int64_t n = 0;
    std::int64_t n_max = 0;
    std::int64_t m_max = 0;
    std::optional<std::int64_t> q;
    std::int64_t oracle_q = 0;
    std::vector<std::int64_t> q_list;
    Method method = Method::closed;
    Format format = Format::text;
    bool by_rank = false;
    unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    std::uint64_t budget = EnumerationOptions::default_budget;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format: text, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };
    auto add_enumeration = [&](CLI::App* sub) {
        sub->add_option("--workers", workers, "Enumeration worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--budget", budget, "Maximum number of candidate matrices to enumerate");
    };

    auto* compute = app.add_subcommand("compute", "Compute C_n(q) with one engine");
    compute->add_option("--n", n, "Matrix dimension")->required();
    compute->add_option("--method", method, "closed, recurrence, anna, sumanna or oracle")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    compute->add_option("--q", q, "Evaluate at (or, for the oracle, count over) this q");
    add_format(compute);
    add_enumeration(compute);

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check all formula engines");
    verify_cmd->add_option("--n-max", n_max, "Largest dimension")->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force count over GF(q) and compare with the formula");
    oracle->add_option("--n", n, "Matrix dimension")->required();
    oracle->add_option("--q", oracle_q, "Field order")->required();
    oracle->add_flag("--by-rank", by_rank, "Also split the count by matrix rank");
    add_format(oracle);
    add_enumeration(oracle);

    auto* lemma2 = app.add_subcommand("lemma2", "Check the inner-sum identity");
    lemma2->add_option("--m-max", m_max, "Largest m")->required();

    auto* table = app.add_subcommand("table", "Tabulate C_1..C_{n-max}");
    table->add_option("--n-max", n_max, "Largest dimension")->required();
    table->add_option("--q-list", q_list, "Comma-separated q values to evaluate at")->delimiter(',');
    add_format(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    const EnumerationOptions enumeration{.workers = workers, .budget = budget};
    try {
        if (compute->parsed()) {
            return cmd_compute(n, method, q, format, out, enumeration);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(n_max, out);
        }
        if (oracle->parsed()) {
            require(format != Format::csv, "oracle supports text and json output only");
            require(oracle_q >= 2 && oracle_q <= FiniteField::max_order,
                    std::to_string(oracle_q) + " is not a supported prime power");
            return cmd_oracle({.n = n,
                               .q = static_cast<unsigned>(oracle_q),
                               .by_rank = by_rank,
                               .enumeration = enumeration,
                               .format = format},
                              out);
        }
        if (lemma2->parsed()) {
            return cmd_lemma2(m_max, out);
        }
        if (table->parsed()) {
            return cmd_table(n_max, format, q_list, out);
        }
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (raise it with --budget)\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_mismatch;
    }
    return exit_usage;
}

} // namespace sqzero::cli
