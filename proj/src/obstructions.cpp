#include "periodic_alex/obstructions.hpp"

#include "periodic_alex/search.hpp"

#include <string>

namespace palex {

void validate(const MurasugiInstance& inst) {
    require_odd_prime(inst.p);
    if (inst.lambda == 0) throw MathError("lambda must be at least 1");
    if (inst.delta_K.is_zero() || normalize(inst.delta_K) != inst.delta_K)
        throw MathError("delta_K must be normalized: " + render(inst.delta_K));
    if (inst.delta_Kbar.is_zero() || normalize(inst.delta_Kbar) != inst.delta_Kbar)
        throw MathError("delta_Kbar must be normalized: " + render(inst.delta_Kbar));
}

std::size_t murasugi_shift_bound(const MurasugiInstance& inst) {
    const auto p = static_cast<std::size_t>(inst.p);
    return inst.delta_K.degree().value() + p * inst.delta_Kbar.degree().value() +
           static_cast<std::size_t>(inst.lambda - 1) * (p - 1);
}

ModPolynomial murasugi_rhs(const MurasugiInstance& inst) {
    const auto p = static_cast<std::uint64_t>(inst.p);
    const ModPolynomial linking_factor = pow(reduce_mod(geometric_sum(inst.lambda), p), p - 1);
    return linking_factor * pow(reduce_mod(inst.delta_Kbar, p), p);
}

std::optional<MurasugiWitness> murasugi_congruence_check(const MurasugiInstance& inst) {
    validate(inst);
    const ModPolynomial lhs = reduce_mod(inst.delta_K, static_cast<std::uint64_t>(inst.p));
    const ModPolynomial rhs = murasugi_rhs(inst);
    const std::size_t bound = murasugi_shift_bound(inst);
    for (int sign : {1, -1}) {
        const ModPolynomial signed_rhs = sign > 0 ? rhs : -rhs;
        if (lhs.is_zero() || signed_rhs.is_zero()) {
            if (lhs == signed_rhs) return MurasugiWitness{sign, 0};
            continue;
        }
        // Only the shift aligning the t-adic valuations can match.
        const auto lv = lhs.t_adic_valuation();
        const auto rv = signed_rhs.t_adic_valuation();
        if (lv < rv) continue;
        const std::size_t j = lv - rv;
        if (j <= bound && lhs == signed_rhs.shifted(j)) return MurasugiWitness{sign, j};
    }
    return std::nullopt;
}

bool verify_murasugi_witness(const MurasugiInstance& inst, const MurasugiWitness& w) {
    if (w.sign != 1 && w.sign != -1) return false;
    validate(inst);
    const ModPolynomial lhs = reduce_mod(inst.delta_K, static_cast<std::uint64_t>(inst.p));
    ModPolynomial rhs = murasugi_rhs(inst).shifted(w.shift);
    if (w.sign < 0) rhs = -rhs;
    return lhs == rhs;
}

std::vector<LambdaWitness> murasugi_lambda_search(const IntPolynomial& delta_K, const IntPolynomial& delta_Kbar,
                                                  std::int64_t p, std::uint64_t lambda_max) {
    std::vector<LambdaWitness> found;
    for (std::uint64_t lambda = 1; lambda <= lambda_max; ++lambda) {
        MurasugiInstance inst{delta_K, delta_Kbar, lambda, p};
        if (auto w = murasugi_congruence_check(inst)) found.push_back({lambda, *w});
    }
    return found;
}

CycInt evaluate_at_zeta(const IntPolynomial& f, std::int64_t p, std::int64_t k) {
    const CycInt z = zeta(p, k);
    CycInt acc(p);
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = acc * z + CycInt::from_integer(p, *it);
    return acc;
}

std::optional<TorresWitness> torres_linear_check(const GHPair& pair) {
    require_odd_prime(pair.p);
    for (std::int64_t b = 0; b < pair.p; ++b)
        if (verify_torres_witness(pair, TorresWitness{b})) return TorresWitness{b};
    return std::nullopt;
}

bool verify_torres_witness(const GHPair& pair, const TorresWitness& w) {
    const auto p = pair.p;
    if (w.b < 0 || w.b >= p) return false;
    const CycInt g_at = evaluate_at_zeta(pair.g, p, 1);
    const CycInt h_at = evaluate_at_zeta(pair.h, p, 1);
    const CycInt g_inv = evaluate_at_zeta(pair.g, p, -1);
    const CycInt h_inv = evaluate_at_zeta(pair.h, p, -1);
    const CycInt factor = -zeta(p, w.b);
    return h_inv == factor * g_at && g_inv == factor * h_at;
}

IntPolynomial candidate_from_gh(const GHPair& pair) {
    require_odd_prime(pair.p);
    const auto p = pair.p;
    const CycInt g_at = evaluate_at_zeta(pair.g, p, 1);
    const Integer g_norm = norm(g_at);
    if (g_norm == 0) throw MathError("degenerate g");
    std::vector<CycInt> lead;
    std::vector<CycInt> constant;
    for (std::int64_t i = 1; i < p; ++i) {
        lead.push_back(evaluate_at_zeta(pair.g, p, i));
        constant.push_back(-evaluate_at_zeta(pair.h, p, i));
    }
    IntPolynomial f = expand_linear_product(lead, constant);
    if (f.leading() != g_norm) throw InternalError("candidate leading coefficient differs from norm of g");
    return f;
}

std::string_view to_string(Theorem1Verdict v) {
    switch (v) {
        case Theorem1Verdict::Pass: return "PASS";
        case Theorem1Verdict::FailMonic: return "FAIL_MONIC";
        case Theorem1Verdict::FailDegree: return "FAIL_DEGREE";
        case Theorem1Verdict::FailValue: return "FAIL_VALUE";
    }
    return "?";
}

Theorem1Verdict parse_theorem1_verdict(std::string_view s) {
    for (auto v : {Theorem1Verdict::Pass, Theorem1Verdict::FailMonic, Theorem1Verdict::FailDegree,
                   Theorem1Verdict::FailValue})
        if (to_string(v) == s) return v;
    throw MathError("unknown verdict '" + std::string(s) + "'");
}

Theorem1Verdict theorem1_check(const IntPolynomial& delta, std::int64_t p) {
    require_odd_prime(p);
    if (delta.is_zero()) return Theorem1Verdict::FailDegree;
    const IntPolynomial n = normalize(delta);
    if (n.degree() != Degree(static_cast<std::size_t>(p - 1))) return Theorem1Verdict::FailDegree;
    if (n.leading() != 1) return Theorem1Verdict::FailMonic;
    if (n != alternating_polynomial(p)) return Theorem1Verdict::FailValue;
    return Theorem1Verdict::Pass;
}

UnitScanResult scan_units_detailed(std::int64_t p, std::uint64_t height, unsigned jobs) {
    require_odd_prime(p);
    if (height == 0) throw MathError("height must be positive");
    const auto dim = static_cast<std::size_t>(p - 1);
    const std::uint64_t total = cube_size(dim, height);
    const CycInt one = CycInt::from_integer(p, 1);

    auto parts = run_partitioned<UnitScanResult>(total, jobs, [&](std::uint64_t begin, std::uint64_t end) {
        UnitScanResult local;
        std::vector<Integer> coords(dim);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            cube_point(idx, height, coords);
            const CycInt e(p, coords);
            ++local.candidates;
            if (!is_unit(e)) continue;
            if (conj(e) * e != one) continue;
            local.unimodular_units.push_back(e);
            if (cmpabs(norm(one - e), 1) != 0) continue;
            if (norm(one + e) == 0) continue;
            local.survivors.push_back(e);
            local.polynomials.insert(normalize(char_poly(e)));
        }
        return local;
    });

    UnitScanResult merged;
    for (auto& part : parts) {
        merged.candidates += part.candidates;
        merged.polynomials.merge(part.polynomials);
        merged.unimodular_units.insert(merged.unimodular_units.end(), part.unimodular_units.begin(),
                                       part.unimodular_units.end());
        merged.survivors.insert(merged.survivors.end(), part.survivors.begin(), part.survivors.end());
    }
    return merged;
}

std::set<IntPolynomial> scan_units(std::int64_t p, std::uint64_t height, unsigned jobs) {
    return scan_units_detailed(p, height, jobs).polynomials;
}

}  // namespace palex
