#ifndef PERIODIC_ALEX_REPORT_HPP
#define PERIODIC_ALEX_REPORT_HPP

#include "periodic_alex/obstructions.hpp"
#include "periodic_alex/polycore.hpp"
#include "periodic_alex/sunits.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace palex {

inline constexpr int kSchemaVersion = 1;

/// Malformed table input; the message carries the source and line number.
class ParseError : public MathError {
  public:
    using MathError::MathError;
};

struct KnotRecord {
    std::string name;
    IntPolynomial delta;
};

/// CSV with header `name,coeffs`; coeffs is a quoted ascending list.
/// Polynomials are normalized on load.
std::vector<KnotRecord> parse_table(std::istream& in, const std::string& source = "<input>");
std::vector<KnotRecord> ingest(const std::filesystem::path& path);

struct CheckOptions {
    /// 0 means 2p.
    std::uint64_t lambda_max = 0;
    /// Quotient-knot candidates tried besides 1.
    std::vector<IntPolynomial> kbar_candidates;
    unsigned jobs = 1;
};

struct MurasugiFinding {
    IntPolynomial kbar;
    std::uint64_t lambda;
    MurasugiWitness witness;
};

struct ObstructionReport {
    std::string knot;
    IntPolynomial delta;
    std::int64_t p;
    Theorem1Verdict theorem1;
    std::vector<MurasugiFinding> murasugi;
    /// Lower degree bound deg >= p - 1; only applies when p does not divide
    /// the leading coefficient, otherwise it holds vacuously.
    bool degree_check;
    bool degree_check_applicable;
    std::optional<std::string> divisibility_note;
    double timing_ms;
};

std::uint64_t effective_lambda_max(std::int64_t p, const CheckOptions& options);

/// Reports come back in input order whatever the worker count.
std::vector<ObstructionReport> run_checks(const std::vector<KnotRecord>& records, std::int64_t p,
                                          const CheckOptions& options = {});

// JSON ----------------------------------------------------------------------

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);

Json witness_to_json(const MurasugiWitness& w);
Json to_json(const ObstructionReport& r);
Json to_json(const BoundValue& b, bool with_digits = true);
Json to_json(const SUnitElement& e);

Json check_document(const std::vector<ObstructionReport>& reports, std::int64_t p, const CheckOptions& options);
Json theorem1_document(const IntPolynomial& poly, std::int64_t p);
Json scan_units_document(std::int64_t p, std::uint64_t height, const UnitScanResult& scan);
Json solve_sunit_document(const SUnitContext& ctx, const std::vector<SUnitSolution>& solutions);
Json enumerate_document(const SUnitContext& ctx, std::uint64_t gh_height, const CandidateOptions& options,
                        const CandidateResult& result);
Json bound_document(std::int64_t p, const std::vector<std::int64_t>& S);

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> problems;
    void fail(std::string what) {
        ok = false;
        problems.push_back(std::move(what));
    }
};

/// Re-parses a document produced by one of the *_document functions and
/// re-checks every verdict and witness from its inputs.
VerifyResult verify_report(const Json& doc);

/// Drops volatile fields (timings) so documents can be compared.
Json strip_timing(Json doc);

}  // namespace palex

#endif  // PERIODIC_ALEX_REPORT_HPP
