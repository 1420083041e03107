#ifndef PERIODIC_ALEX_OBSTRUCTIONS_HPP
#define PERIODIC_ALEX_OBSTRUCTIONS_HPP

#include "periodic_alex/cyclotomic.hpp"
#include "periodic_alex/polycore.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

namespace palex {

// ---------------------------------------------------------------------------
// Murasugi's congruence
//
//   delta_K == sign * t^j * (1 + t + ... + t^{lambda-1})^{p-1} * delta_Kbar^p  (mod p)

struct MurasugiInstance {
    IntPolynomial delta_K;
    IntPolynomial delta_Kbar;
    std::uint64_t lambda;
    std::int64_t p;
};

struct MurasugiWitness {
    int sign;
    std::size_t shift;
    friend bool operator==(const MurasugiWitness&, const MurasugiWitness&) = default;
};

/// Throws MathError if the instance is malformed (lambda == 0, p not an odd
/// prime, delta polynomials not normalized).
void validate(const MurasugiInstance& inst);

/// Upper end of the shift search: deg delta_K + p deg delta_Kbar + (lambda-1)(p-1).
std::size_t murasugi_shift_bound(const MurasugiInstance& inst);

/// The right-hand side without the sign and shift, reduced mod p.
ModPolynomial murasugi_rhs(const MurasugiInstance& inst);

/// First (sign, shift) in search order (+1 before -1, increasing shift)
/// satisfying the congruence, or nullopt.
std::optional<MurasugiWitness> murasugi_congruence_check(const MurasugiInstance& inst);

/// Re-substitutes a witness.
bool verify_murasugi_witness(const MurasugiInstance& inst, const MurasugiWitness& w);

struct LambdaWitness {
    std::uint64_t lambda;
    MurasugiWitness witness;
};

/// All lambda in [1, lambda_max] for which the congruence has a witness.
std::vector<LambdaWitness> murasugi_lambda_search(const IntPolynomial& delta_K, const IntPolynomial& delta_Kbar,
                                                  std::int64_t p, std::uint64_t lambda_max);

// ---------------------------------------------------------------------------
// Linear specialization Delta(t, zeta^i) = g(zeta^i) t - h(zeta^i)

struct GHPair {
    IntPolynomial g;
    IntPolynomial h;
    std::int64_t p;
};

/// f(zeta_p^k) in the power basis.
CycInt evaluate_at_zeta(const IntPolynomial& f, std::int64_t p, std::int64_t k = 1);

struct TorresWitness {
    std::int64_t b;
    friend bool operator==(const TorresWitness&, const TorresWitness&) = default;
};

/// Smallest b in [0, p) with
///   h(zeta^{-1}) = -zeta^b g(zeta)  and  g(zeta^{-1}) = -zeta^b h(zeta).
std::optional<TorresWitness> torres_linear_check(const GHPair& pair);

bool verify_torres_witness(const GHPair& pair, const TorresWitness& w);

/// prod_{i=1}^{p-1} (g(zeta^i) t - h(zeta^i)). Throws MathError("degenerate g")
/// when g vanishes at zeta.
IntPolynomial candidate_from_gh(const GHPair& pair);

// ---------------------------------------------------------------------------
// Uniqueness for monic degree p-1

enum class Theorem1Verdict { Pass, FailMonic, FailDegree, FailValue };

std::string_view to_string(Theorem1Verdict v);
Theorem1Verdict parse_theorem1_verdict(std::string_view s);

/// Degree is tested first, then monicity, then equality with the
/// alternating polynomial. Zero and constant inputs give FailDegree.
Theorem1Verdict theorem1_check(const IntPolynomial& delta, std::int64_t p);

/// Exhaustive scan of units in Z[zeta_p] with coordinates in [-height, height].
struct UnitScanResult {
    std::set<IntPolynomial> polynomials;
    /// Every element passing the unit test and conj(e) * e == 1.
    std::vector<CycInt> unimodular_units;
    /// Elements surviving all four filters.
    std::vector<CycInt> survivors;
    std::uint64_t candidates = 0;
};

/// jobs == 0 picks std::thread::hardware_concurrency(). Output does not
/// depend on jobs.
UnitScanResult scan_units_detailed(std::int64_t p, std::uint64_t height, unsigned jobs = 1);

std::set<IntPolynomial> scan_units(std::int64_t p, std::uint64_t height, unsigned jobs = 1);

}  // namespace palex

#endif  // PERIODIC_ALEX_OBSTRUCTIONS_HPP
