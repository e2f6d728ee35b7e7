#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "sqzero/cli.hpp"

using namespace sqzero;
using namespace sqzero::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "sqzero");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("compute") {
    auto r = invoke({"compute", "--n", "3", "--method", "closed"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "-q + 2*q^2\n");

    r = invoke({"compute", "--n", "4", "--method", "closed", "--q", "2"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "28\n");

    r = invoke({"compute", "--n", "1", "--method", "recurrence"});
    CHECK(r.out == "1\n");

    for (const char* method : {"closed", "recurrence", "anna", "sumanna"}) {
        r = invoke({"compute", "--n", "6", "--method", method, "--format", "json"});
        CHECK(r.code == exit_ok);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["method"] == method);
        CHECK(polynomial_from_json(j["polynomial"]) == closed_form(6));
    }

    r = invoke({"compute", "--n", "4", "--method", "oracle", "--q", "3", "--format", "json"});
    CHECK(r.code == exit_ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"] == "153");
    CHECK(j["q"] == 3);
    CHECK_FALSE(j.contains("polynomial"));

    r = invoke({"compute", "--n", "3", "--q", "5", "--format", "csv"});
    CHECK(r.out == "n,method,polynomial,q,value\n3,closed,-q + 2*q^2,5,45\n");
}

TEST_CASE("compute usage errors") {
    CHECK(invoke({"compute", "--n", "0"}).code == exit_usage);
    CHECK(invoke({"compute", "--n", "3", "--method", "bogus"}).code == exit_usage);
    CHECK(invoke({"compute", "--n", "3", "--format", "xml"}).code == exit_usage);
    CHECK(invoke({"compute", "--n", "3", "--method", "oracle"}).code == exit_usage);
    CHECK(invoke({"compute", "--n", "3", "--method", "oracle", "--q", "6"}).code == exit_usage);
    CHECK(invoke({"compute", "--n", "3", "--q", "0"}).code == exit_usage);
    CHECK(invoke({}).code == exit_usage);
    CHECK(invoke({"frobnicate"}).code == exit_usage);
    CHECK(invoke({"--help"}).code == exit_ok);
}

TEST_CASE("JSON polynomial round trip") {
    for (std::int64_t n = 1; n <= 12; ++n) {
        const QPoly p = closed_form(n);
        const auto text = to_json(OutputRecord{.n = n, .polynomial = p}).dump();
        const QPoly back = polynomial_from_json(nlohmann::json::parse(text)["polynomial"]);
        CHECK(back == p);
        CHECK(back.to_string() == p.to_string());
    }
    // Coefficients beyond 64 bits survive as strings.
    const QPoly big = QPoly::monomial(BigInt("123456789012345678901234567890"), -3);
    CHECK(polynomial_from_json(polynomial_to_json(big)) == big);
    CHECK(polynomial_to_json(big).dump() == R"({"-3":"123456789012345678901234567890"})");

    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::array()), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json{{"1", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json{{"x", "2"}}), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json{{"1", "two"}}), std::invalid_argument);
}

TEST_CASE("verify") {
    auto r = invoke({"verify", "--n-max", "1"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.starts_with("PASS"));
    CHECK(invoke({"verify", "--n-max", "0"}).code == exit_usage);
    CHECK(verify(12).empty());
}

TEST_CASE("verify locates a corrupted engine") {
    Engines engines = Engines::standard();
    engines.anna = [](std::int64_t n, std::int64_t r) {
        QPoly value = anna(n, r);
        return n == 5 && r == 1 ? value + QPoly::q() : value;
    };
    const auto mismatches = verify(6, engines);
    REQUIRE(mismatches.size() == 1);
    CHECK(mismatches[0].n == 5);
    CHECK(mismatches[0].r == 1);
    CHECK(mismatches[0].engine == "anna");
    CHECK(mismatches[0].actual - mismatches[0].expected == QPoly::q());

    std::ostringstream out;
    CHECK(cmd_verify(6, out, engines) == exit_mismatch);
    CHECK(out.str().find("MISMATCH n=5 r=1 engine=anna") != std::string::npos);
    CHECK(out.str().find("FAIL") != std::string::npos);

    Engines bad_closed = Engines::standard();
    bad_closed.closed_form = [](std::int64_t n) { return n == 4 ? QPoly(0) : closed_form(n); };
    const auto closed_mismatches = verify(5, bad_closed);
    REQUIRE(closed_mismatches.size() == 1);
    CHECK(closed_mismatches[0].n == 4);
    CHECK_FALSE(closed_mismatches[0].r.has_value());
    CHECK(closed_mismatches[0].engine == "closed");
}

TEST_CASE("oracle") {
    auto r = invoke({"oracle", "--n", "3", "--q", "2"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "n=3 q=2 count=6 formula=6 MATCH\n");

    r = invoke({"oracle", "--n", "2", "--q", "3", "--workers", "3"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("count=3 formula=3 MATCH") != std::string::npos);

    r = invoke({"oracle", "--n", "4", "--q", "6"});
    CHECK(r.code == exit_usage);
    CHECK(r.err.find("not a supported prime power") != std::string::npos);

    r = invoke({"oracle", "--n", "8", "--q", "2"});
    CHECK(r.code == exit_usage);
    CHECK(r.err.find("268435456") != std::string::npos);

    r = invoke({"oracle", "--n", "4", "--q", "2", "--by-rank", "--format", "json"});
    CHECK(r.code == exit_ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == "28");
    CHECK(j["match"] == true);
    CHECK(j["by_rank"].size() == 3);
    // A_4^1 = 3q^3 - q^2 - q - 1, which is 17 at q = 2.
    CHECK(j["by_rank"][1]["count"] == "17");
    CHECK(j["by_rank"][1]["anna"] == "17");

    CHECK(invoke({"oracle", "--n", "3", "--q", "2", "--workers", "0"}).code == exit_usage);
    CHECK(invoke({"oracle", "--n", "3", "--q", "2", "--format", "csv"}).code == exit_usage);
}

TEST_CASE("lemma2") {
    CHECK(invoke({"lemma2", "--m-max", "0"}).code == exit_ok);
    auto r = invoke({"lemma2", "--m-max", "60"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.starts_with("PASS"));
    CHECK(invoke({"lemma2", "--m-max", "-1"}).code == exit_usage);
}

TEST_CASE("table") {
    auto r = invoke({"table", "--n-max", "4", "--q-list", "2", "--format", "csv"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "n,polynomial,q=2\n1,1,1\n2,q,2\n3,-q + 2*q^2,6\n4,-q^2 + 2*q^4,28\n");

    r = invoke({"table", "--n-max", "1"});
    CHECK(r.out == "C_1(q) = 1\n");

    r = invoke({"table", "--n-max", "3", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(j[i]["n"] == i + 1);
        CHECK(j[i]["method"] == "closed");
        CHECK(j[i].contains("polynomial"));
        CHECK_FALSE(j[i].contains("value"));
    }

    r = invoke({"table", "--n-max", "2", "--q-list", "2,3", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out).size() == 4);

    CHECK(invoke({"table", "--n-max", "3", "--format", "yaml"}).code == exit_usage);
    CHECK(invoke({"table", "--n-max", "0"}).code == exit_usage);
}
