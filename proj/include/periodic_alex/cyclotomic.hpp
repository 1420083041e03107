#ifndef PERIODIC_ALEX_CYCLOTOMIC_HPP
#define PERIODIC_ALEX_CYCLOTOMIC_HPP

#include "periodic_alex/polycore.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace palex {

/// Element of Z[zeta_p] in the power basis 1, zeta, ..., zeta^{p-2}.
///
/// The power basis is a Z-basis of the ring of integers, so coordinates are
/// a unique representation and equality is coordinatewise. Products are
/// reduced eagerly with zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
class CycInt {
  public:
    /// The zero element of Z[zeta_p].
    explicit CycInt(std::int64_t p);
    /// Throws unless coords.size() == p - 1.
    CycInt(std::int64_t p, std::vector<Integer> coords);

    static CycInt from_integer(std::int64_t p, const Integer& n);
    /// Reduces any polynomial in zeta (of any degree) to the power basis.
    static CycInt from_polynomial(std::int64_t p, const IntPolynomial& f);

    std::int64_t prime() const { return p_; }
    const std::vector<Integer>& coords() const { return coords_; }
    bool is_zero() const;
    /// True when the element lies in Z.
    bool is_rational() const;
    /// The representing polynomial of degree at most p - 2.
    IntPolynomial to_polynomial() const;
    /// gcd of the coordinates (non-negative).
    Integer content() const;
    /// Largest absolute coordinate.
    Integer height() const;

    CycInt operator-() const;
    CycInt& operator+=(const CycInt& b);
    CycInt& operator-=(const CycInt& b);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend CycInt operator*(const Integer& c, CycInt a);
    /// Exact division of every coordinate by c. Throws if c does not divide.
    CycInt divexact(const Integer& c) const;

    friend bool operator==(const CycInt& a, const CycInt& b) = default;
    /// Lexicographic on (p, coords); used for canonical sorting only.
    friend std::strong_ordering operator<=>(const CycInt& a, const CycInt& b);

  private:
    std::int64_t p_;
    std::vector<Integer> coords_;
};

CycInt zeta(std::int64_t p, std::int64_t k);

CycInt add(const CycInt& a, const CycInt& b);
CycInt sub(const CycInt& a, const CycInt& b);
CycInt mul(const CycInt& a, const CycInt& b);
CycInt pow(const CycInt& a, unsigned long e);

/// The automorphism zeta -> zeta^k. Requires gcd(k, p) = 1.
CycInt galois(const CycInt& a, std::int64_t k);

/// Complex conjugation, zeta -> zeta^{-1}.
CycInt conj(const CycInt& a);

/// Product of all Galois conjugates. In builds without NDEBUG the result is
/// cross-checked against norm_by_resultant.
Integer norm(const CycInt& a);
Integer norm_by_conjugates(const CycInt& a);
/// Res(Phi_p, f) where f is the representing polynomial of a.
Integer norm_by_resultant(const CycInt& a);

bool is_unit(const CycInt& a);

struct UnitWitness {
    CycInt element;
    CycInt inverse;
    int norm_sign;
};

/// Inverse of a unit via the extended Euclidean algorithm over Q. Throws
/// MathError("not a unit") for non-units.
UnitWitness invert_unit(const CycInt& a);

/// prod_{k=1}^{p-1} (t - sigma_k(e)), monic of degree p - 1.
IntPolynomial char_poly(const CycInt& e);

struct RootOfUnity {
    int sign;
    std::int64_t r;
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// (sign, r) with a = sign * zeta^r and 0 <= r < p, if such exist.
std::optional<RootOfUnity> is_root_of_unity(const CycInt& a);

/// e / conj(e) for a unit e. This is always a root of unity of order
/// dividing p (a power zeta^{2r}).
CycInt lemma1_ratio(const CycInt& e);

/// "p=5;[0,1,0,0]"
std::string render(const CycInt& a);
CycInt parse_cycint(std::string_view text);

std::ostream& operator<<(std::ostream& os, const CycInt& a);

/// Expands prod_{k=1}^{p-1} (lead_k * t + constant_k) in Z[zeta][t] and
/// returns it as an integer polynomial. Throws InternalError if a coefficient
/// is not rational.
IntPolynomial expand_linear_product(const std::vector<CycInt>& lead, const std::vector<CycInt>& constant);

}  // namespace palex

#endif  // PERIODIC_ALEX_CYCLOTOMIC_HPP
