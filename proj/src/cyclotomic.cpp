#include "periodic_alex/cyclotomic.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

namespace palex {

namespace {

std::size_t basis_size(std::int64_t p) { return static_cast<std::size_t>(p - 1); }

std::size_t residue(std::int64_t k, std::int64_t p) {
    auto r = k % p;
    if (r < 0) r += p;
    return static_cast<std::size_t>(r);
}

/// Folds a vector of p coefficients of 1, zeta, ..., zeta^{p-1} onto the
/// power basis using zeta^{p-1} = -(1 + ... + zeta^{p-2}).
std::vector<Integer> reduce_top(std::vector<Integer> full) {
    Integer top = std::move(full.back());
    full.pop_back();
    if (top != 0)
        for (auto& c : full) c -= top;
    return full;
}

void check_same_prime(const CycInt& a, const CycInt& b) {
    if (a.prime() != b.prime())
        throw MathError("mismatched cyclotomic fields: p=" + std::to_string(a.prime()) +
                        " vs p=" + std::to_string(b.prime()));
}

}  // namespace

CycInt::CycInt(std::int64_t p) : p_(p) {
    require_odd_prime(p);
    coords_.assign(basis_size(p), Integer(0));
}

CycInt::CycInt(std::int64_t p, std::vector<Integer> coords) : p_(p), coords_(std::move(coords)) {
    require_odd_prime(p);
    if (coords_.size() != basis_size(p))
        throw MathError("CycInt over p=" + std::to_string(p) + " needs " + std::to_string(p - 1) +
                        " coordinates, got " + std::to_string(coords_.size()));
}

CycInt CycInt::from_integer(std::int64_t p, const Integer& n) {
    CycInt r(p);
    r.coords_[0] = n;
    return r;
}

CycInt CycInt::from_polynomial(std::int64_t p, const IntPolynomial& f) {
    require_odd_prime(p);
    std::vector<Integer> full(static_cast<std::size_t>(p));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) full[i % full.size()] += f.coeffs()[i];
    return CycInt(p, reduce_top(std::move(full)));
}

bool CycInt::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

bool CycInt::is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Integer& c) { return c == 0; });
}

IntPolynomial CycInt::to_polynomial() const { return IntPolynomial(coords_); }

Integer CycInt::content() const {
    Integer g = 0;
    for (const auto& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

Integer CycInt::height() const {
    Integer h = 0;
    for (const auto& c : coords_)
        if (cmpabs(c, h) > 0) h = abs(c);
    return h;
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

CycInt& CycInt::operator+=(const CycInt& b) {
    check_same_prime(*this, b);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& b) {
    check_same_prime(*this, b);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= b.coords_[i];
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    check_same_prime(a, b);
    const auto p = static_cast<std::size_t>(a.p_);
    std::vector<Integer> full(p);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (a.coords_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coords_.size(); ++j) {
            if (b.coords_[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= p) k -= p;
            full[k] += a.coords_[i] * b.coords_[j];
        }
    }
    return CycInt(a.p_, reduce_top(std::move(full)));
}

CycInt operator*(const Integer& c, CycInt a) {
    for (auto& x : a.coords_) x *= c;
    return a;
}

CycInt CycInt::divexact(const Integer& c) const {
    if (c == 0) throw MathError("division by zero");
    CycInt r = *this;
    for (auto& x : r.coords_) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw MathError("inexact division in Z[zeta]");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return r;
}

std::strong_ordering operator<=>(const CycInt& a, const CycInt& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        int s = cmp(a.coords_[i], b.coords_[i]);
        if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

CycInt zeta(std::int64_t p, std::int64_t k) {
    require_odd_prime(p);
    std::vector<Integer> full(static_cast<std::size_t>(p));
    full[residue(k, p)] = 1;
    return CycInt(p, reduce_top(std::move(full)));
}

CycInt add(const CycInt& a, const CycInt& b) { return a + b; }
CycInt sub(const CycInt& a, const CycInt& b) { return a - b; }
CycInt mul(const CycInt& a, const CycInt& b) { return a * b; }

CycInt pow(const CycInt& a, unsigned long e) {
    CycInt result = CycInt::from_integer(a.prime(), 1);
    CycInt base = a;
    while (e != 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

CycInt galois(const CycInt& a, std::int64_t k) {
    const auto p = a.prime();
    const auto kk = residue(k, p);
    if (kk == 0) throw MathError("galois: k=" + std::to_string(k) + " is not coprime to p=" + std::to_string(p));
    std::vector<Integer> full(static_cast<std::size_t>(p));
    for (std::size_t i = 0; i < a.coords().size(); ++i)
        full[(i * kk) % full.size()] += a.coords()[i];
    return CycInt(p, reduce_top(std::move(full)));
}

CycInt conj(const CycInt& a) { return galois(a, a.prime() - 1); }

Integer norm_by_conjugates(const CycInt& a) {
    CycInt acc = a;
    for (std::int64_t k = 2; k < a.prime(); ++k) acc = acc * galois(a, k);
    if (!acc.is_rational()) throw InternalError("conjugate product is not rational: " + render(acc));
    return acc.coords()[0];
}

Integer norm_by_resultant(const CycInt& a) {
    return resultant(cyclotomic_polynomial(a.prime()), a.to_polynomial());
}

Integer norm(const CycInt& a) {
    Integer n = norm_by_conjugates(a);
#ifndef NDEBUG
    if (n != norm_by_resultant(a)) throw InternalError("norm routes disagree for " + render(a));
#endif
    return n;
}

bool is_unit(const CycInt& a) {
    if (a.is_zero()) return false;
    return cmpabs(norm(a), 1) == 0;
}

namespace {

// Dense polynomial over Q, ascending, no trailing zeros.
using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

RatPoly sub_scaled_shifted(RatPoly a, const RatPoly& b, const mpq_class& c, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
    return a;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

RatPoly sub(RatPoly a, const RatPoly& b) { return sub_scaled_shifted(std::move(a), b, 1, 0); }

/// Quotient and remainder of a by nonzero b.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    RatPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        mpq_class c = a.back() / b.back();
        q[shift] = c;
        a = sub_scaled_shifted(std::move(a), b, c, shift);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

RatPoly to_rat(const IntPolynomial& f) {
    RatPoly r(f.coeffs().begin(), f.coeffs().end());
    return r;
}

}  // namespace

UnitWitness invert_unit(const CycInt& a) {
    if (!is_unit(a)) throw MathError("not a unit");
    const auto p = a.prime();
    // Extended Euclid on (Phi_p, A), tracking only the cofactor of A.
    RatPoly r0 = to_rat(cyclotomic_polynomial(p));
    RatPoly r1 = to_rat(a.to_polynomial());
    RatPoly s0;
    RatPoly s1{mpq_class(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly s = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) throw InternalError("unit is not coprime to Phi_p: " + render(a));
    const mpq_class g = r0[0];
    std::vector<Integer> coeffs;
    coeffs.reserve(s0.size());
    for (auto& c : s0) {
        mpq_class v = c / g;
        v.canonicalize();
        if (v.get_den() != 1) throw InternalError("inverse of unit has a residual denominator: " + render(a));
        coeffs.push_back(v.get_num());
    }
    CycInt inverse = CycInt::from_polynomial(p, IntPolynomial(std::move(coeffs)));
    if (a * inverse != CycInt::from_integer(p, 1)) throw InternalError("unit inverse check failed: " + render(a));
    return UnitWitness{a, std::move(inverse), sgn(norm(a))};
}

IntPolynomial expand_linear_product(const std::vector<CycInt>& lead, const std::vector<CycInt>& constant) {
    if (lead.empty() || lead.size() != constant.size()) throw MathError("expand_linear_product: size mismatch");
    const auto p = lead.front().prime();
    std::vector<CycInt> acc{CycInt::from_integer(p, 1)};
    for (std::size_t f = 0; f < lead.size(); ++f) {
        std::vector<CycInt> next(acc.size() + 1, CycInt(p));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * constant[f];
            next[i + 1] += acc[i] * lead[f];
        }
        acc = std::move(next);
    }
    std::vector<Integer> coeffs;
    coeffs.reserve(acc.size());
    for (const auto& c : acc) {
        if (!c.is_rational()) throw InternalError("linear product has a non-rational coefficient: " + render(c));
        coeffs.push_back(c.coords()[0]);
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial char_poly(const CycInt& e) {
    const auto p = e.prime();
    std::vector<CycInt> lead(basis_size(p), CycInt::from_integer(p, 1));
    std::vector<CycInt> constant;
    constant.reserve(basis_size(p));
    for (std::int64_t k = 1; k < p; ++k) constant.push_back(-galois(e, k));
    IntPolynomial f = expand_linear_product(lead, constant);
    if (f.degree() != Degree(basis_size(p)) || f.leading() != 1)
        throw InternalError("characteristic polynomial is not monic of degree p-1");
    return f;
}

std::optional<RootOfUnity> is_root_of_unity(const CycInt& a) {
    const auto p = a.prime();
    for (std::int64_t r = 0; r < p; ++r) {
        const CycInt z = zeta(p, r);
        if (a == z) return RootOfUnity{1, r};
        if (a == -z) return RootOfUnity{-1, r};
    }
    return std::nullopt;
}

CycInt lemma1_ratio(const CycInt& e) {
    if (!is_unit(e)) throw MathError("not a unit");
    return e * invert_unit(conj(e)).inverse;
}

std::string render(const CycInt& a) {
    std::string out = "p=" + std::to_string(a.prime()) + ";[";
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        if (i) out += ',';
        out += a.coords()[i].get_str();
    }
    return out + "]";
}

CycInt parse_cycint(std::string_view text) {
    const auto bad = [&] { return MathError("invalid cyclotomic integer '" + std::string(text) + "'"); };
    if (!text.starts_with("p=")) throw bad();
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw bad();
    std::int64_t p = 0;
    const auto prime_text = text.substr(2, semi - 2);
    const auto [ptr, ec] = std::from_chars(prime_text.data(), prime_text.data() + prime_text.size(), p);
    if (ec != std::errc() || ptr != prime_text.data() + prime_text.size()) throw bad();
    auto body = text.substr(semi + 1);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') throw bad();
    body = body.substr(1, body.size() - 2);
    std::vector<Integer> coords = parse_polynomial(body).coeffs();
    // Trailing zero coordinates were trimmed by the polynomial parser.
    const auto expected = static_cast<std::size_t>(std::count(body.begin(), body.end(), ',') + 1);
    if (p < 3 || expected != static_cast<std::size_t>(p - 1)) throw bad();
    coords.resize(expected);
    return CycInt(p, std::move(coords));
}

std::ostream& operator<<(std::ostream& os, const CycInt& a) { return os << render(a); }

}  // namespace palex
