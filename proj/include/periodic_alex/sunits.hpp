#ifndef PERIODIC_ALEX_SUNITS_HPP
#define PERIODIC_ALEX_SUNITS_HPP

#include "periodic_alex/cyclotomic.hpp"
#include "periodic_alex/polycore.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace palex {

/// Parses "2,3,7" (or "") into a sorted, deduplicated prime list. Throws on
/// non-primes.
std::vector<std::int64_t> parse_prime_set(std::string_view text);

/// Multiplicative order of q modulo p; requires p prime and p not dividing q.
std::uint64_t multiplicative_order(std::int64_t q, std::int64_t p);

/// Number of primes of Q(zeta_p) above the primes in S, i.e. the sum of
/// (p-1)/ord_p(q). Throws if p is in S.
std::uint64_t count_primes_above(std::int64_t p, const std::vector<std::int64_t>& S);

/// coefficient * base^exponent, kept symbolic. The exponent of the
/// finiteness bound is itself a large integer.
struct BoundValue {
    Integer coefficient = 1;
    Integer base;
    Integer exponent;

    /// Exact expansion. Throws if the result would exceed max_bits.
    Integer expand(std::size_t max_bits = std::size_t{1} << 26) const;
    /// Decimal digit count of the value.
    Integer digits() const;
    /// Decimal digit count by full expansion; only for moderate sizes.
    Integer digits_by_expansion() const;
    /// value >= n, decided without expanding when possible.
    bool at_least(const Integer& n) const;

    friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

/// 3 * 7^{degree + t_plus_inf}
BoundValue evertse_bound(std::uint64_t degree, std::uint64_t t_plus_inf);

/// ((p+1)/2)^{3 * 7^{3(p-1)/2 + #S(Q(zeta_p))}}
BoundValue theorem2_bound(std::int64_t p, const std::vector<std::int64_t>& S);

/// Solutions of X + Y = 1 in S(Q(zeta_p))-units are bounded by
/// evertse_bound(p-1, #S(Q(zeta_p)) + (p-1)/2).
BoundValue sunit_equation_bound(std::int64_t p, const std::vector<std::int64_t>& S);

bool is_s_smooth(const Integer& n, const std::vector<std::int64_t>& S);

/// Search configuration for S-unit work over Q(zeta_p).
class SUnitContext {
  public:
    SUnitContext(std::int64_t p, std::vector<std::int64_t> S, std::uint64_t height, std::uint64_t denom_bound);

    std::int64_t p() const { return p_; }
    const std::vector<std::int64_t>& primes() const { return S_; }
    std::uint64_t height() const { return height_; }
    std::uint64_t denom_bound() const { return denom_bound_; }
    /// S-smooth integers in [1, denom_bound], ascending.
    std::vector<std::uint64_t> denominators() const;

  private:
    std::int64_t p_;
    std::vector<std::int64_t> S_;
    std::uint64_t height_;
    std::uint64_t denom_bound_;
};

/// numerator / denominator with an integral numerator and a positive
/// rational denominator sharing no common factor with the numerator's
/// coordinates.
class SUnitElement {
  public:
    SUnitElement(CycInt numerator, Integer denominator = 1);

    const CycInt& numerator() const { return numerator_; }
    const Integer& denominator() const { return denominator_; }
    std::int64_t prime() const { return numerator_.prime(); }

    /// 1 - x
    SUnitElement one_minus() const;
    SUnitElement galois(std::int64_t k) const;

    /// norm(numerator) and denominator^{p-1}; the field norm is their ratio.
    Integer numerator_norm() const;
    Integer denominator_norm() const;

    friend bool operator==(const SUnitElement&, const SUnitElement&) = default;
    friend std::strong_ordering operator<=>(const SUnitElement& a, const SUnitElement& b);

  private:
    CycInt numerator_;
    Integer denominator_;
};

SUnitElement operator+(const SUnitElement& a, const SUnitElement& b);

/// Norm criterion: nonzero, denominator S-smooth and |norm(numerator)| S-smooth.
bool s_unit_test(const SUnitElement& e, const SUnitContext& ctx);

struct SUnitSolution {
    SUnitElement x;
    SUnitElement y;
    friend bool operator==(const SUnitSolution&, const SUnitSolution&) = default;
    friend auto operator<=>(const SUnitSolution& a, const SUnitSolution& b) { return a.x <=> b.x; }
};

/// True when the element's canonical numerator has height at most H and
/// the denominator is at most D.
bool in_box(const SUnitElement& e, const SUnitContext& ctx);

/// Every x = beta/d with beta in [-H, H]^{p-1} and d an S-smooth integer <= D
/// such that x and 1 - x are S-units, closed under (x, y) -> (y, x).
/// Sorted by x.
std::vector<SUnitSolution> solve_sunit_equation(const SUnitContext& ctx, unsigned jobs = 1);

struct CandidateOptions {
    /// Maximal root multiplicity; nullopt means (p-1)/2.
    std::optional<std::uint64_t> multiplicity;
    bool monic_only = false;
};

struct CandidateResult {
    std::set<IntPolynomial> candidates;
    std::uint64_t pairs_examined = 0;
    std::uint64_t nondegenerate_pairs = 0;
    /// Polynomials (normalized) with some root ratio failing the S-unit test.
    std::set<IntPolynomial> root_check_failures;
};

/// Builds prod (g(zeta^i) t - h(zeta^i)) for all g, h with coefficients in
/// [-gh_height, gh_height] and degree < p-1, keeping those that look like
/// Alexander polynomials with S-smooth leading coefficient.
CandidateResult enumerate_candidates(const SUnitContext& ctx, std::uint64_t gh_height,
                                     const CandidateOptions& options = {}, unsigned jobs = 1);

/// The conjugate root ratios h(zeta^i)/g(zeta^i), i = 1..p-1, as S-unit
/// elements with rational denominator |norm(g(zeta))|.
std::vector<SUnitElement> root_ratios(const IntPolynomial& g, const IntPolynomial& h, std::int64_t p);

}  // namespace palex

#endif  // PERIODIC_ALEX_SUNITS_HPP
