#ifndef PERIODIC_ALEX_POLYCORE_HPP
#define PERIODIC_ALEX_POLYCORE_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace palex {

using Integer = mpz_class;

/// Compares |a| with |b|.
inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
inline int cmpabs(const Integer& a, unsigned long b) { return mpz_cmpabs_ui(a.get_mpz_t(), b); }

/// Raised on malformed inputs and violated preconditions.
class MathError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internally verified postcondition fails. Always a bug.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

bool is_prime(std::int64_t n);
void require_odd_prime(std::int64_t p, const char* what = "p");

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which compares below every finite degree and absorbs addition.
class Degree {
  public:
    static constexpr Degree minus_infinity() { return Degree(); }
    constexpr explicit Degree(std::size_t d) : finite_(true), value_(d) {}

    constexpr bool is_minus_infinity() const { return !finite_; }
    /// Throws for minus infinity.
    std::size_t value() const;

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return Degree();
        return Degree(a.value_ + b.value_);
    }
    friend constexpr bool operator==(Degree a, Degree b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }

  private:
    constexpr Degree() = default;
    bool finite_ = false;
    std::size_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Degree d);

/// Dense univariate polynomial over Z. coeffs()[i] is the coefficient of t^i.
/// Trailing zeros are stripped on construction; the zero polynomial has no
/// coefficients.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const Integer& c);
    /// c * t^k
    static IntPolynomial monomial(const Integer& c, std::size_t k);

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Degree degree() const;
    /// Coefficient of t^i, zero beyond the stored range.
    Integer coeff(std::size_t i) const;
    /// Throws on the zero polynomial.
    const Integer& leading() const;
    /// Multiplicity of the root t = 0. Throws on the zero polynomial.
    std::size_t t_adic_valuation() const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const Integer& c, const IntPolynomial& f);

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;
    /// Total order used for sets and canonical output: by degree, then by
    /// coefficients from t^0 upward.
    friend std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b);

  private:
    void trim();
    std::vector<Integer> coeffs_;
};

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial pow(const IntPolynomial& f, unsigned long e);

/// t^{-k} * (+-f) with k the multiplicity of 0 and the sign making the
/// leading coefficient positive.
IntPolynomial normalize(const IntPolynomial& f);

/// 1 - t + t^2 - ... + t^{p-1}
IntPolynomial alternating_polynomial(std::int64_t p);

/// 1 + t + ... + t^{n-1}, i.e. (t^n - 1)/(t - 1).
IntPolynomial geometric_sum(std::size_t n);

/// p-th cyclotomic polynomial for prime p: 1 + t + ... + t^{p-1}.
IntPolynomial cyclotomic_polynomial(std::int64_t p);

Integer evaluate(const IntPolynomial& f, const Integer& x);

/// Exact divisibility in Z[t]. The zero polynomial divides only itself.
bool divides(const IntPolynomial& divisor, const IntPolynomial& f);

/// Resultant of f and g, computed as the determinant of the Sylvester matrix
/// by fraction-free (Bareiss) elimination.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);

/// "1,-1,1" style ascending coefficient list. The zero polynomial renders as "0".
std::string render(const IntPolynomial& f);
IntPolynomial parse_polynomial(std::string_view text);

std::ostream& operator<<(std::ostream& os, const IntPolynomial& f);

/// Polynomial over Z/pZ with residues in [0, p).
class ModPolynomial {
  public:
    ModPolynomial(std::vector<std::uint64_t> coeffs, std::uint64_t modulus);
    static ModPolynomial zero(std::uint64_t modulus) { return ModPolynomial({}, modulus); }

    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_zero() const { return coeffs_.empty(); }
    Degree degree() const;
    std::size_t t_adic_valuation() const;

    ModPolynomial operator-() const;
    friend ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b);
    friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);
    /// Multiplication by t^k.
    ModPolynomial shifted(std::size_t k) const;

    friend bool operator==(const ModPolynomial& a, const ModPolynomial& b) = default;

  private:
    static void check_same_modulus(const ModPolynomial& a, const ModPolynomial& b);
    void trim();
    std::vector<std::uint64_t> coeffs_;
    std::uint64_t modulus_;
};

ModPolynomial reduce_mod(const IntPolynomial& f, std::uint64_t p);
ModPolynomial pow(const ModPolynomial& f, unsigned long e);

}  // namespace palex

#endif  // PERIODIC_ALEX_POLYCORE_HPP
