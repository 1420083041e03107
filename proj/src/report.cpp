#include "periodic_alex/report.hpp"

#include "periodic_alex/search.hpp"

#include <chrono>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace palex {

// ---------------------------------------------------------------------------
// CSV ingest

namespace {

/// Splits one CSV line into fields, honouring double quotes ("" escapes a quote).
std::vector<std::string> split_csv_line(const std::string& line, const std::string& where) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            if (!field.empty() || was_quoted) throw ParseError(where + ": stray quote");
            quoted = was_quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
            was_quoted = false;
        } else {
            if (was_quoted) throw ParseError(where + ": text after closing quote");
            field += c;
        }
    }
    if (quoted) throw ParseError(where + ": unterminated quote");
    fields.push_back(std::move(field));
    return fields;
}

}  // namespace

std::vector<KnotRecord> parse_table(std::istream& in, const std::string& source) {
    std::vector<KnotRecord> out;
    std::set<std::string> names;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        const std::string where = source + ":" + std::to_string(lineno);
        if (!header_seen) {
            if (line != "name,coeffs") throw ParseError(where + ": expected header 'name,coeffs'");
            header_seen = true;
            continue;
        }
        if (line.empty()) continue;
        const auto fields = split_csv_line(line, where);
        if (fields.size() != 2) throw ParseError(where + ": expected 2 fields, got " + std::to_string(fields.size()));
        if (fields[0].empty()) throw ParseError(where + ": empty knot name");
        if (fields[1].empty()) throw ParseError(where + ": empty coefficient list");
        IntPolynomial delta;
        try {
            delta = normalize(parse_polynomial(fields[1]));
        } catch (const MathError& e) {
            throw ParseError(where + ": " + e.what());
        }
        if (!names.insert(fields[0]).second) throw ParseError(where + ": duplicate knot name '" + fields[0] + "'");
        out.push_back({fields[0], std::move(delta)});
    }
    if (!header_seen) throw ParseError(source + ": missing header 'name,coeffs'");
    return out;
}

std::vector<KnotRecord> ingest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return parse_table(in, path.string());
}

// ---------------------------------------------------------------------------
// Checks

std::uint64_t effective_lambda_max(std::int64_t p, const CheckOptions& options) {
    return options.lambda_max != 0 ? options.lambda_max : static_cast<std::uint64_t>(2 * p);
}

namespace {

std::vector<IntPolynomial> kbar_list(const CheckOptions& options) {
    std::vector<IntPolynomial> list{IntPolynomial{1}};
    for (const auto& k : options.kbar_candidates) {
        IntPolynomial n = normalize(k);
        if (std::find(list.begin(), list.end(), n) == list.end()) list.push_back(std::move(n));
    }
    return list;
}

bool degree_check_applies(const IntPolynomial& delta, std::int64_t p) {
    return !mpz_divisible_ui_p(delta.leading().get_mpz_t(), static_cast<unsigned long>(p));
}

bool degree_check_holds(const IntPolynomial& delta, std::int64_t p) {
    return !degree_check_applies(delta, p) || delta.degree().value() >= static_cast<std::size_t>(p - 1);
}

ObstructionReport check_one(const KnotRecord& rec, std::int64_t p, std::uint64_t lambda_max,
                            const std::vector<IntPolynomial>& kbars) {
    const auto start = std::chrono::steady_clock::now();
    ObstructionReport r;
    r.knot = rec.name;
    r.delta = rec.delta;
    r.p = p;
    r.theorem1 = theorem1_check(rec.delta, p);
    std::string rejected;
    for (const auto& kbar : kbars) {
        if (!divides(kbar, rec.delta)) {
            if (!rejected.empty()) rejected += "; ";
            rejected += render(kbar);
            continue;
        }
        for (const auto& found : murasugi_lambda_search(rec.delta, kbar, p, lambda_max))
            r.murasugi.push_back({kbar, found.lambda, found.witness});
    }
    if (!rejected.empty()) r.divisibility_note = "quotient candidates not dividing delta: " + rejected;
    r.degree_check_applicable = degree_check_applies(rec.delta, p);
    r.degree_check = degree_check_holds(rec.delta, p);
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

std::vector<ObstructionReport> run_checks(const std::vector<KnotRecord>& records, std::int64_t p,
                                          const CheckOptions& options) {
    require_odd_prime(p);
    const auto lambda_max = effective_lambda_max(p, options);
    const auto kbars = kbar_list(options);
    if (records.empty()) return {};
    using Slice = std::vector<ObstructionReport>;
    auto parts = run_partitioned<Slice>(records.size(), options.jobs, [&](std::uint64_t begin, std::uint64_t end) {
        Slice local;
        for (auto i = begin; i < end; ++i) local.push_back(check_one(records[i], p, lambda_max, kbars));
        return local;
    });
    std::vector<ObstructionReport> out;
    for (auto& part : parts)
        for (auto& r : part) out.push_back(std::move(r));
    return out;
}

// ---------------------------------------------------------------------------
// JSON

Json integer_to_json(const Integer& n) {
    if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
    return Json(n.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) {
            Integer r;
            mpz_set_ui(r.get_mpz_t(), j.get<std::uint64_t>());
            return r;
        }
        return Integer(j.get<long>());
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        Integer r;
        if (s.empty() || r.set_str(s, 10) != 0) throw MathError("invalid integer string '" + s + "'");
        return r;
    }
    throw MathError("expected an integer, got " + j.dump());
}

Json witness_to_json(const MurasugiWitness& w) { return Json{{"sign", w.sign}, {"shift", w.shift}}; }

Json to_json(const ObstructionReport& r) {
    Json murasugi = Json::array();
    for (const auto& f : r.murasugi)
        murasugi.push_back({{"kbar", render(f.kbar)}, {"lambda", f.lambda}, {"witness", witness_to_json(f.witness)}});
    return Json{{"knot", r.knot},
                {"delta", render(r.delta)},
                {"p", r.p},
                {"theorem1", {{"verdict", std::string(to_string(r.theorem1))}}},
                {"murasugi", std::move(murasugi)},
                {"degree_check", r.degree_check},
                {"degree_check_applicable", r.degree_check_applicable},
                {"divisibility_note", r.divisibility_note ? Json(*r.divisibility_note) : Json(nullptr)},
                {"timing_ms", r.timing_ms}};
}

Json to_json(const BoundValue& b, bool with_digits) {
    Json j;
    if (b.coefficient != 1) j["coefficient"] = integer_to_json(b.coefficient);
    j["base"] = integer_to_json(b.base);
    j["exponent"] = integer_to_json(b.exponent);
    if (with_digits) j["digits"] = integer_to_json(b.digits());
    return j;
}

Json to_json(const SUnitElement& e) {
    return Json{{"numerator", render(e.numerator())},
                {"denominator", integer_to_json(e.denominator())},
                {"numerator_norm", integer_to_json(e.numerator_norm())},
                {"denominator_norm", integer_to_json(e.denominator_norm())}};
}

namespace {

Json header(const char* command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

Json prime_list_json(const std::vector<std::int64_t>& S) {
    Json arr = Json::array();
    for (auto q : S) arr.push_back(q);
    return arr;
}

Json polynomial_list_json(const std::set<IntPolynomial>& polys) {
    Json arr = Json::array();
    for (const auto& f : polys) arr.push_back(render(f));
    return arr;
}

}  // namespace

Json check_document(const std::vector<ObstructionReport>& reports, std::int64_t p, const CheckOptions& options) {
    Json doc = header("check");
    doc["prime"] = p;
    doc["lambda_max"] = effective_lambda_max(p, options);
    Json kbars = Json::array();
    for (const auto& k : kbar_list(options)) kbars.push_back(render(k));
    doc["kbar_candidates"] = std::move(kbars);
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    doc["reports"] = std::move(arr);
    return doc;
}

Json theorem1_document(const IntPolynomial& poly, std::int64_t p) {
    Json doc = header("theorem1");
    doc["prime"] = p;
    doc["poly"] = render(poly);
    doc["verdict"] = std::string(to_string(theorem1_check(poly, p)));
    return doc;
}

Json scan_units_document(std::int64_t p, std::uint64_t height, const UnitScanResult& scan) {
    Json doc = header("scan-units");
    doc["prime"] = p;
    doc["height"] = height;
    doc["candidates"] = scan.candidates;
    doc["polynomials"] = polynomial_list_json(scan.polynomials);
    Json survivors = Json::array();
    for (const auto& e : scan.survivors) survivors.push_back(render(e));
    doc["survivors"] = std::move(survivors);
    doc["expected"] = render(alternating_polynomial(p));
    doc["matches_alternating"] = scan.polynomials == std::set<IntPolynomial>{alternating_polynomial(p)};
    return doc;
}

Json solve_sunit_document(const SUnitContext& ctx, const std::vector<SUnitSolution>& solutions) {
    Json doc = header("solve-sunit");
    doc["prime"] = ctx.p();
    doc["s"] = prime_list_json(ctx.primes());
    doc["height"] = ctx.height();
    doc["denom_bound"] = ctx.denom_bound();
    Json arr = Json::array();
    for (const auto& s : solutions) arr.push_back({{"x", to_json(s.x)}, {"y", to_json(s.y)}});
    doc["solutions"] = std::move(arr);
    doc["count"] = solutions.size();
    const BoundValue bound = sunit_equation_bound(ctx.p(), ctx.primes());
    Json b = to_json(bound, false);
    b["value"] = integer_to_json(bound.expand());
    doc["evertse_bound"] = std::move(b);
    doc["within_bound"] = bound.at_least(Integer(static_cast<unsigned long>(solutions.size())));
    return doc;
}

Json enumerate_document(const SUnitContext& ctx, std::uint64_t gh_height, const CandidateOptions& options,
                        const CandidateResult& result) {
    Json doc = header("enumerate");
    doc["prime"] = ctx.p();
    doc["s"] = prime_list_json(ctx.primes());
    doc["gh_height"] = gh_height;
    doc["multiplicity"] = options.multiplicity.value_or(static_cast<std::uint64_t>((ctx.p() - 1) / 2));
    doc["monic_only"] = options.monic_only;
    doc["pairs_examined"] = result.pairs_examined;
    doc["nondegenerate_pairs"] = result.nondegenerate_pairs;
    doc["candidates"] = polynomial_list_json(result.candidates);
    doc["count"] = result.candidates.size();
    doc["root_check_failures"] = polynomial_list_json(result.root_check_failures);
    doc["roots_are_s_units"] = result.root_check_failures.empty();
    const BoundValue bound = theorem2_bound(ctx.p(), ctx.primes());
    doc["theorem2_bound"] = to_json(bound);
    doc["within_bound"] = bound.at_least(Integer(static_cast<unsigned long>(result.candidates.size())));
    return doc;
}

Json bound_document(std::int64_t p, const std::vector<std::int64_t>& S) {
    Json doc = header("bound");
    doc["prime"] = p;
    doc["s"] = prime_list_json(S);
    const Json bound = to_json(theorem2_bound(p, S));
    for (const auto& [k, v] : bound.items()) doc[k] = v;
    return doc;
}

// ---------------------------------------------------------------------------
// Re-verification

namespace {

std::vector<std::int64_t> primes_from_json(const Json& j) {
    std::vector<std::int64_t> S;
    for (const auto& q : j) S.push_back(q.get<std::int64_t>());
    return S;
}

void verify_check(const Json& doc, VerifyResult& out) {
    const auto p = doc.at("prime").get<std::int64_t>();
    const auto lambda_max = doc.at("lambda_max").get<std::uint64_t>();
    for (const auto& r : doc.at("reports")) {
        const std::string knot = r.at("knot").get<std::string>();
        const IntPolynomial delta = parse_polynomial(r.at("delta").get<std::string>());
        if (normalize(delta) != delta) out.fail(knot + ": delta is not normalized");
        if (r.at("p").get<std::int64_t>() != p) out.fail(knot + ": prime mismatch");
        const auto verdict = parse_theorem1_verdict(r.at("theorem1").at("verdict").get<std::string>());
        if (verdict != theorem1_check(delta, p)) out.fail(knot + ": theorem1 verdict does not re-check");
        for (const auto& m : r.at("murasugi")) {
            const IntPolynomial kbar = parse_polynomial(m.at("kbar").get<std::string>());
            const auto lambda = m.at("lambda").get<std::uint64_t>();
            const MurasugiWitness w{m.at("witness").at("sign").get<int>(),
                                    m.at("witness").at("shift").get<std::size_t>()};
            if (lambda < 1 || lambda > lambda_max) out.fail(knot + ": lambda outside searched range");
            if (!divides(kbar, delta)) out.fail(knot + ": quotient candidate does not divide delta");
            if (!verify_murasugi_witness(MurasugiInstance{delta, kbar, lambda, p}, w))
                out.fail(knot + ": Murasugi witness fails re-substitution at lambda=" + std::to_string(lambda));
        }
        if (r.at("degree_check").get<bool>() != degree_check_holds(delta, p))
            out.fail(knot + ": degree check does not re-check");
        if (r.at("degree_check_applicable").get<bool>() != degree_check_applies(delta, p))
            out.fail(knot + ": degree check applicability does not re-check");
    }
}

void verify_theorem1(const Json& doc, VerifyResult& out) {
    const auto p = doc.at("prime").get<std::int64_t>();
    const IntPolynomial poly = parse_polynomial(doc.at("poly").get<std::string>());
    if (parse_theorem1_verdict(doc.at("verdict").get<std::string>()) != theorem1_check(poly, p))
        out.fail("theorem1 verdict does not re-check");
}

void verify_scan(const Json& doc, VerifyResult& out) {
    const auto p = doc.at("prime").get<std::int64_t>();
    const auto height = doc.at("height").get<std::uint64_t>();
    const CycInt one = CycInt::from_integer(p, 1);
    std::set<IntPolynomial> from_survivors;
    for (const auto& s : doc.at("survivors")) {
        const CycInt e = parse_cycint(s.get<std::string>());
        if (e.prime() != p) out.fail("survivor over the wrong field");
        if (e.height() > Integer(static_cast<unsigned long>(height))) out.fail("survivor outside the box");
        if (!is_unit(e) || conj(e) * e != one || cmpabs(norm(one - e), 1) != 0 || norm(one + e) == 0)
            out.fail("survivor " + render(e) + " fails a filter");
        from_survivors.insert(normalize(char_poly(e)));
    }
    std::set<IntPolynomial> listed;
    for (const auto& s : doc.at("polynomials")) {
        const IntPolynomial f = parse_polynomial(s.get<std::string>());
        listed.insert(f);
        if (f.degree() != Degree(static_cast<std::size_t>(p - 1)) || f.leading() != 1)
            out.fail(render(f) + " is not monic of degree p-1");
        if (cmpabs(evaluate(f, 0), 1) != 0 || cmpabs(evaluate(f, 1), 1) != 0)
            out.fail(render(f) + " violates the unit constant-term or value-at-1 condition");
    }
    if (listed != from_survivors) out.fail("polynomial set does not match the survivors");
    const bool matches = listed == std::set<IntPolynomial>{alternating_polynomial(p)};
    if (doc.at("matches_alternating").get<bool>() != matches) out.fail("matches_alternating flag does not re-check");
}

SUnitElement element_from_json(const Json& j) {
    SUnitElement e(parse_cycint(j.at("numerator").get<std::string>()), integer_from_json(j.at("denominator")));
    if (e.numerator_norm() != integer_from_json(j.at("numerator_norm")) ||
        e.denominator_norm() != integer_from_json(j.at("denominator_norm")))
        throw MathError("stored norms do not match element " + render(e.numerator()));
    return e;
}

void verify_sunit(const Json& doc, VerifyResult& out) {
    const SUnitContext ctx(doc.at("prime").get<std::int64_t>(), primes_from_json(doc.at("s")),
                           doc.at("height").get<std::uint64_t>(), doc.at("denom_bound").get<std::uint64_t>());
    const SUnitElement one(CycInt::from_integer(ctx.p(), 1));
    std::set<std::pair<SUnitElement, SUnitElement>> pairs;
    for (const auto& s : doc.at("solutions")) {
        try {
            const SUnitElement x = element_from_json(s.at("x"));
            const SUnitElement y = element_from_json(s.at("y"));
            if (x + y != one) out.fail("x + y != 1 for x=" + render(x.numerator()));
            if (!s_unit_test(x, ctx) || !s_unit_test(y, ctx)) out.fail("non S-unit in solution");
            pairs.insert({x, y});
        } catch (const MathError& e) {
            out.fail(e.what());
        }
    }
    for (const auto& [x, y] : pairs)
        if (!pairs.contains({y, x})) out.fail("solution set is not closed under swapping");
    const auto count = doc.at("count").get<std::uint64_t>();
    if (count != doc.at("solutions").size()) out.fail("count does not match the solution list");
    const BoundValue bound = sunit_equation_bound(ctx.p(), ctx.primes());
    if (integer_from_json(doc.at("evertse_bound").at("value")) != bound.expand()) out.fail("Evertse bound mismatch");
    if (doc.at("within_bound").get<bool>() != bound.at_least(Integer(static_cast<unsigned long>(count))))
        out.fail("within_bound flag does not re-check");
}

void verify_enumerate(const Json& doc, VerifyResult& out) {
    const auto p = doc.at("prime").get<std::int64_t>();
    const auto S = primes_from_json(doc.at("s"));
    for (const auto& s : doc.at("candidates")) {
        const IntPolynomial f = parse_polynomial(s.get<std::string>());
        if (normalize(f) != f) out.fail(render(f) + " is not normalized");
        if (f.degree() != Degree(static_cast<std::size_t>(p - 1))) out.fail(render(f) + " has the wrong degree");
        if (cmpabs(evaluate(f, 1), 1) != 0) out.fail(render(f) + ": |f(1)| != 1");
        if (evaluate(f, 0) == 0) out.fail(render(f) + ": f(0) == 0");
        if (!is_s_smooth(abs(f.leading()), S)) out.fail(render(f) + ": leading coefficient not S-smooth");
        if (doc.at("monic_only").get<bool>() && f.leading() != 1) out.fail(render(f) + " is not monic");
    }
    const bool clean = doc.at("root_check_failures").empty();
    if (doc.at("roots_are_s_units").get<bool>() != clean) out.fail("roots_are_s_units flag does not re-check");
    const BoundValue bound = theorem2_bound(p, S);
    const auto& jb = doc.at("theorem2_bound");
    if (integer_from_json(jb.at("base")) != bound.base || integer_from_json(jb.at("exponent")) != bound.exponent)
        out.fail("Theorem 2 bound mismatch");
    const auto count = doc.at("count").get<std::uint64_t>();
    if (count != doc.at("candidates").size()) out.fail("count does not match the candidate list");
    if (doc.at("within_bound").get<bool>() != bound.at_least(Integer(static_cast<unsigned long>(count))))
        out.fail("within_bound flag does not re-check");
}

void verify_bound(const Json& doc, VerifyResult& out) {
    const BoundValue bound = theorem2_bound(doc.at("prime").get<std::int64_t>(), primes_from_json(doc.at("s")));
    if (integer_from_json(doc.at("base")) != bound.base) out.fail("base mismatch");
    if (integer_from_json(doc.at("exponent")) != bound.exponent) out.fail("exponent mismatch");
    if (integer_from_json(doc.at("digits")) != bound.digits()) out.fail("digit count mismatch");
}

}  // namespace

VerifyResult verify_report(const Json& doc) {
    VerifyResult out;
    try {
        if (doc.at("schema").get<int>() != kSchemaVersion) {
            out.fail("unsupported schema version");
            return out;
        }
        const auto command = doc.at("command").get<std::string>();
        if (command == "check") verify_check(doc, out);
        else if (command == "theorem1") verify_theorem1(doc, out);
        else if (command == "scan-units") verify_scan(doc, out);
        else if (command == "solve-sunit") verify_sunit(doc, out);
        else if (command == "enumerate") verify_enumerate(doc, out);
        else if (command == "bound") verify_bound(doc, out);
        else out.fail("unknown command '" + command + "'");
    } catch (const Json::exception& e) {
        out.fail(std::string("malformed report: ") + e.what());
    } catch (const MathError& e) {
        out.fail(std::string("invalid report content: ") + e.what());
    }
    return out;
}

Json strip_timing(Json doc) {
    if (doc.contains("reports"))
        for (auto& r : doc["reports"]) r.erase("timing_ms");
    return doc;
}

}  // namespace palex
