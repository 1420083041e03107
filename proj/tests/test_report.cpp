#include "periodic_alex/report.hpp"

#include <doctest.h>

#include <sstream>

using namespace palex;

namespace {

std::vector<KnotRecord> table(const std::string& text) {
    std::istringstream in(text);
    return parse_table(in, "t.csv");
}

std::string parse_error(const std::string& text) {
    try {
        table(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("CSV ingest") {
    const auto recs = table("name,coeffs\ntorus_5_2,\"1,-1,1,-1,1\"\nshifted,\"0,2,-4\"\n");
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].name == "torus_5_2");
    CHECK(recs[0].delta == IntPolynomial{1, -1, 1, -1, 1});
    CHECK(recs[1].delta == IntPolynomial{-2, 4});

    CHECK(table("\xEF\xBB\xBFname,coeffs\r\na,\"1,-1,1\"\r\n\r\n").size() == 1);
    CHECK(table("name,coeffs\n").empty());
    CHECK(table("name,coeffs\n\"odd, name\",\"3\"\n")[0].name == "odd, name");

    CHECK(parse_error("name,coeffs\nok,\"1\"\nbad,\"\"\n") == "t.csv:3: empty coefficient list");
    CHECK(parse_error("name,coeffs\na,\"1\"\na,\"2\"\n").find("t.csv:3: duplicate") == 0);
    CHECK(parse_error("name,coeffs\na,\"1,x\"\n").find("t.csv:2:") == 0);
    CHECK(parse_error("name,coeffs\na,\"1\",3\n").find("t.csv:2: expected 2 fields") == 0);
    CHECK(parse_error("name,coeffs\na,\"1\n").find("t.csv:2: unterminated") == 0);
    CHECK(parse_error("name,coeffs\na,\"0,0\"\n").find("t.csv:2:") == 0);
    CHECK(parse_error("knot,poly\n").find("t.csv:1: expected header") == 0);
    CHECK(parse_error("").find("missing header") != std::string::npos);
    CHECK_THROWS_AS(ingest("/nonexistent/table.csv"), ParseError);
}

TEST_CASE("run_checks examples") {
    const std::vector<KnotRecord> recs{{"alt5", alternating_polynomial(5)}, {"fig8", IntPolynomial{1, -3, 1}}};
    const auto reports = run_checks(recs, 5);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].knot == "alt5");
    CHECK(reports[0].theorem1 == Theorem1Verdict::Pass);
    bool lambda2 = false;
    for (const auto& m : reports[0].murasugi) lambda2 = lambda2 || (m.lambda == 2 && m.kbar == IntPolynomial{1});
    CHECK(lambda2);
    CHECK(reports[0].degree_check);
    CHECK(reports[0].degree_check_applicable);
    CHECK(reports[1].theorem1 == Theorem1Verdict::FailDegree);
    CHECK_FALSE(reports[1].degree_check);
    CHECK(run_checks({}, 5).empty());
    CHECK_THROWS_AS(run_checks(recs, 9), MathError);

    // Leading coefficient divisible by p: the degree bound holds vacuously.
    const auto vac = run_checks({{"k", IntPolynomial{5, -9, 5}}}, 5);
    CHECK_FALSE(vac[0].degree_check_applicable);
    CHECK(vac[0].degree_check);

    CheckOptions opts;
    opts.kbar_candidates = {IntPolynomial{1, -1, 1}, IntPolynomial{1, -3, 1}};
    opts.lambda_max = 3;
    const auto with_kbar = run_checks({{"p", IntPolynomial{1, -1, 1} * IntPolynomial{1, 1, 1}}}, 3, opts);
    REQUIRE(with_kbar[0].divisibility_note.has_value());
    CHECK(with_kbar[0].divisibility_note->find("1,-3,1") != std::string::npos);
    for (const auto& m : with_kbar[0].murasugi) {
        CHECK(m.lambda <= 3);
        CHECK(verify_murasugi_witness({with_kbar[0].delta, m.kbar, m.lambda, 3}, m.witness));
    }
}

TEST_CASE("JSON integers") {
    CHECK(integer_to_json(42).is_number_integer());
    const Integer big("123456789012345678901234567890");
    CHECK(integer_to_json(big) == Json("123456789012345678901234567890"));
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_from_json(Json(-7)) == -7);
    CHECK(integer_from_json(Json(std::uint64_t{18446744073709551615ull})) == Integer("18446744073709551615"));
    CHECK_THROWS_AS(integer_from_json(Json("12x")), MathError);
    CHECK_THROWS_AS(integer_from_json(Json(1.5)), MathError);
}

TEST_CASE("documents re-verify and tampering is caught") {
    const std::vector<KnotRecord> recs{{"alt5", alternating_polynomial(5)},
                                       {"fig8", IntPolynomial{1, -3, 1}},
                                       {"other", IntPolynomial{1, 1, 1, 1, 1}}};
    Json check = check_document(run_checks(recs, 5), 5, {});
    CHECK(check.at("schema") == 1);
    CHECK(check.at("command") == "check");
    CHECK(verify_report(check).ok);

    auto bad_verdict = check;
    bad_verdict["reports"][1]["theorem1"]["verdict"] = "PASS";
    CHECK_FALSE(verify_report(bad_verdict).ok);
    auto bad_witness = check;
    bad_witness["reports"][0]["murasugi"][0]["witness"]["sign"] = -1 * bad_witness["reports"][0]["murasugi"][0]["witness"]["sign"].get<int>();
    CHECK_FALSE(verify_report(bad_witness).ok);
    auto bad_degree = check;
    bad_degree["reports"][1]["degree_check"] = true;
    CHECK_FALSE(verify_report(bad_degree).ok);

    const Json t1 = theorem1_document(IntPolynomial{1, -1, 1}, 3);
    CHECK(t1.at("verdict") == "PASS");
    CHECK(verify_report(t1).ok);

    Json scan = scan_units_document(5, 1, scan_units_detailed(5, 1));
    CHECK(scan.at("matches_alternating") == true);
    CHECK(verify_report(scan).ok);
    auto bad_scan = scan;
    bad_scan["polynomials"].push_back("1,1,1,1,1");
    CHECK_FALSE(verify_report(bad_scan).ok);

    const SUnitContext ctx(3, {2}, 1, 2);
    Json solve = solve_sunit_document(ctx, solve_sunit_equation(ctx));
    CHECK(solve.at("within_bound") == true);
    CHECK(verify_report(solve).ok);
    auto bad_solve = solve;
    bad_solve["solutions"][0]["y"] = bad_solve["solutions"][0]["x"];
    CHECK_FALSE(verify_report(bad_solve).ok);
    auto bad_count = solve;
    bad_count["count"] = 0;
    CHECK_FALSE(verify_report(bad_count).ok);

    const SUnitContext ectx(3, {}, 1, 1);
    Json en = enumerate_document(ectx, 1, {}, enumerate_candidates(ectx, 1));
    CHECK(en.at("roots_are_s_units") == true);
    CHECK(verify_report(en).ok);
    auto bad_en = en;
    bad_en["candidates"].push_back("1,1");
    CHECK_FALSE(verify_report(bad_en).ok);

    Json bd = bound_document(3, {});
    CHECK(bd.at("base") == 2);
    CHECK(bd.at("exponent") == 1029);
    CHECK(bd.at("digits") == 310);
    CHECK(verify_report(bd).ok);
    bd["digits"] = 311;
    CHECK_FALSE(verify_report(bd).ok);

    CHECK_FALSE(verify_report(Json{{"schema", 2}, {"command", "bound"}}).ok);
    CHECK_FALSE(verify_report(Json{{"schema", 1}, {"command", "nope"}}).ok);
    CHECK_FALSE(verify_report(Json{{"schema", 1}}).ok);
}

TEST_CASE("check documents are deterministic across worker counts") {
    std::vector<KnotRecord> recs;
    for (long p : {3, 5, 7, 11}) recs.push_back({"alt" + std::to_string(p), alternating_polynomial(p)});
    recs.push_back({"a", IntPolynomial{1, -3, 1}});
    recs.push_back({"b", IntPolynomial{2, -3, 2}});
    recs.push_back({"c", IntPolynomial{1, -1, 0, -1, 1}});
    CheckOptions one;
    const auto base = strip_timing(check_document(run_checks(recs, 5, one), 5, one));
    CHECK_FALSE(base.at("reports")[0].contains("timing_ms"));
    for (unsigned jobs : {2u, 3u, 8u}) {
        CheckOptions o;
        o.jobs = jobs;
        CHECK(strip_timing(check_document(run_checks(recs, 5, o), 5, o)) == base);
    }
}
