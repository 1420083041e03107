#include "periodic_alex/polycore.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

namespace palex {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

void require_odd_prime(std::int64_t p, const char* what) {
    if (p == 2 || !is_prime(p))
        throw MathError(std::string(what) + " must be an odd prime, got " + std::to_string(p));
}

std::size_t Degree::value() const {
    if (!finite_) throw MathError("degree of the zero polynomial is minus infinity");
    return value_;
}

std::ostream& operator<<(std::ostream& os, Degree d) {
    if (d.is_minus_infinity()) return os << "-inf";
    return os << d.value();
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree IntPolynomial::degree() const {
    if (coeffs_.empty()) return Degree::minus_infinity();
    return Degree(coeffs_.size() - 1);
}

Integer IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw MathError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

std::size_t IntPolynomial::t_adic_valuation() const {
    if (coeffs_.empty()) throw MathError("t-adic valuation of zero is infinite");
    std::size_t k = 0;
    while (coeffs_[k] == 0) ++k;
    return k;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& f) {
    std::vector<Integer> r = f.coeffs_;
    for (auto& x : r) x *= c;
    return IntPolynomial(std::move(r));
}

std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b) {
    if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        int s = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b) { return a - b; }
IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

IntPolynomial pow(const IntPolynomial& f, unsigned long e) {
    IntPolynomial result{1};
    IntPolynomial base = f;
    while (e != 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

IntPolynomial normalize(const IntPolynomial& f) {
    if (f.is_zero()) throw MathError("cannot normalize zero");
    const auto k = f.t_adic_valuation();
    std::vector<Integer> r(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k), f.coeffs().end());
    if (sgn(r.back()) < 0)
        for (auto& c : r) c = -c;
    return IntPolynomial(std::move(r));
}

IntPolynomial alternating_polynomial(std::int64_t p) {
    require_odd_prime(p);
    std::vector<Integer> r(static_cast<std::size_t>(p));
    for (std::size_t n = 0; n < r.size(); ++n) r[n] = (n % 2 == 0) ? 1 : -1;
    return IntPolynomial(std::move(r));
}

IntPolynomial geometric_sum(std::size_t n) { return IntPolynomial(std::vector<Integer>(n, Integer(1))); }

IntPolynomial cyclotomic_polynomial(std::int64_t p) {
    if (!is_prime(p)) throw MathError("cyclotomic_polynomial: p must be prime");
    return geometric_sum(static_cast<std::size_t>(p));
}

Integer evaluate(const IntPolynomial& f, const Integer& x) {
    Integer acc = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool divides(const IntPolynomial& divisor, const IntPolynomial& f) {
    if (divisor.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    const auto& d = divisor.coeffs();
    std::vector<Integer> rem = f.coeffs();
    const std::size_t dn = d.size();
    if (rem.size() < dn) return false;
    // Long division; each quotient coefficient must be an exact integer.
    for (std::size_t top = rem.size(); top >= dn; --top) {
        Integer& lead = rem[top - 1];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), d.back().get_mpz_t())) return false;
        Integer q = lead / d.back();
        const std::size_t shift = top - dn;
        for (std::size_t i = 0; i < dn; ++i) rem[shift + i] -= q * d[i];
    }
    return std::all_of(rem.begin(), rem.end(), [](const Integer& c) { return c == 0; });
}

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    const std::size_t m = f.coeffs().size() - 1;
    const std::size_t n = g.coeffs().size() - 1;
    const std::size_t size = m + n;
    if (size == 0) return 1;
    // Sylvester matrix with descending coefficients.
    std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t i = 0; i <= m; ++i) a[row][row + i] = f.coeffs()[m - i];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t i = 0; i <= n; ++i) a[n + row][row + i] = g.coeffs()[n - i];

    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == size) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Integer det = a[size - 1][size - 1];
    return sign < 0 ? Integer(-det) : det;
}

std::string render(const IntPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += f.coeffs()[i].get_str();
    }
    return out;
}

namespace {

std::string_view trim_spaces(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view token) {
    token = trim_spaces(token);
    std::string_view digits = token;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw MathError("invalid integer '" + std::string(token) + "'");
    if (token.front() == '+') token.remove_prefix(1);
    return Integer(std::string(token));
}

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
    text = trim_spaces(text);
    if (text.empty()) throw MathError("empty coefficient list");
    std::vector<Integer> coeffs;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        coeffs.push_back(parse_integer(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return IntPolynomial(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& f) { return os << '[' << render(f) << ']'; }

// ---------------------------------------------------------------------------
// ModPolynomial

ModPolynomial::ModPolynomial(std::vector<std::uint64_t> coeffs, std::uint64_t modulus)
    : coeffs_(std::move(coeffs)), modulus_(modulus) {
    if (modulus_ < 2) throw MathError("modulus must be at least 2");
    for (auto& c : coeffs_) c %= modulus_;
    trim();
}

void ModPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void ModPolynomial::check_same_modulus(const ModPolynomial& a, const ModPolynomial& b) {
    if (a.modulus_ != b.modulus_) throw MathError("mismatched moduli");
}

Degree ModPolynomial::degree() const {
    if (coeffs_.empty()) return Degree::minus_infinity();
    return Degree(coeffs_.size() - 1);
}

std::size_t ModPolynomial::t_adic_valuation() const {
    if (coeffs_.empty()) throw MathError("t-adic valuation of zero is infinite");
    std::size_t k = 0;
    while (coeffs_[k] == 0) ++k;
    return k;
}

ModPolynomial ModPolynomial::operator-() const {
    std::vector<std::uint64_t> r = coeffs_;
    for (auto& c : r) c = (modulus_ - c) % modulus_;
    return ModPolynomial(std::move(r), modulus_);
}

ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b) {
    ModPolynomial::check_same_modulus(a, b);
    std::vector<std::uint64_t> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] = (r[i] + b.coeffs_[i]) % a.modulus_;
    return ModPolynomial(std::move(r), a.modulus_);
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
    ModPolynomial::check_same_modulus(a, b);
    if (a.is_zero() || b.is_zero()) return ModPolynomial::zero(a.modulus_);
    const auto m = static_cast<unsigned __int128>(a.modulus_);
    std::vector<std::uint64_t> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            auto prod = static_cast<unsigned __int128>(a.coeffs_[i]) * b.coeffs_[j] % m;
            r[i + j] = static_cast<std::uint64_t>((r[i + j] + prod) % m);
        }
    return ModPolynomial(std::move(r), a.modulus_);
}

ModPolynomial ModPolynomial::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<std::uint64_t> r(k, 0);
    r.insert(r.end(), coeffs_.begin(), coeffs_.end());
    return ModPolynomial(std::move(r), modulus_);
}

ModPolynomial reduce_mod(const IntPolynomial& f, std::uint64_t p) {
    if (p > static_cast<std::uint64_t>(INT64_MAX) || !is_prime(static_cast<std::int64_t>(p)))
        throw MathError("reduce_mod: modulus must be prime");
    std::vector<std::uint64_t> r;
    r.reserve(f.coeffs().size());
    Integer modulus;
    mpz_set_ui(modulus.get_mpz_t(), p);
    Integer rem;
    for (const auto& c : f.coeffs()) {
        mpz_fdiv_r(rem.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
        r.push_back(mpz_get_ui(rem.get_mpz_t()));
    }
    return ModPolynomial(std::move(r), p);
}

ModPolynomial pow(const ModPolynomial& f, unsigned long e) {
    ModPolynomial result({1}, f.modulus());
    ModPolynomial base = f;
    while (e != 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

}  // namespace palex
