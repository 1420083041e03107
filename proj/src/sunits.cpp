#include "periodic_alex/sunits.hpp"

#include "periodic_alex/obstructions.hpp"
#include "periodic_alex/search.hpp"

#include <mpfr.h>

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>

namespace palex {

std::vector<std::int64_t> parse_prime_set(std::string_view text) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        auto token = text.substr(start, comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (!token.empty()) {
            std::int64_t q = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), q);
            if (ec != std::errc() || ptr != token.data() + token.size())
                throw MathError("invalid prime '" + std::string(token) + "'");
            if (!is_prime(q)) throw MathError(std::to_string(q) + " is not prime");
            out.push_back(q);
        } else if (comma != text.size() || start != 0) {
            throw MathError("empty entry in prime list '" + std::string(text) + "'");
        }
        start = comma + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t multiplicative_order(std::int64_t q, std::int64_t p) {
    if (!is_prime(p)) throw MathError("multiplicative_order: modulus must be prime");
    std::int64_t base = q % p;
    if (base < 0) base += p;
    if (base == 0) throw MathError("multiplicative_order: q is divisible by p");
    std::uint64_t order = 1;
    std::int64_t x = base;
    while (x != 1) {
        x = static_cast<std::int64_t>((static_cast<__int128>(x) * base) % p);
        ++order;
    }
    return order;
}

namespace {

void require_prime_set(std::int64_t p, const std::vector<std::int64_t>& S) {
    require_odd_prime(p);
    for (auto q : S) {
        if (!is_prime(q)) throw MathError(std::to_string(q) + " in S is not prime");
        if (q == p) throw MathError("S must not contain p=" + std::to_string(p));
    }
}

Integer integer_from_u64(std::uint64_t v) {
    Integer r;
    mpz_set_ui(r.get_mpz_t(), v);
    return r;
}

bool is_power_of_ten(const Integer& n) {
    if (n < 1) return false;
    const std::string s = n.get_str();
    return s[0] == '1' && std::all_of(s.begin() + 1, s.end(), [](char c) { return c == '0'; });
}

}  // namespace

std::uint64_t count_primes_above(std::int64_t p, const std::vector<std::int64_t>& S) {
    require_prime_set(p, S);
    std::vector<std::int64_t> unique = S;
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    std::uint64_t total = 0;
    for (auto q : unique) total += static_cast<std::uint64_t>(p - 1) / multiplicative_order(q, p);
    return total;
}

// ---------------------------------------------------------------------------
// BoundValue

Integer BoundValue::expand(std::size_t max_bits) const {
    if (base == 0 || base == 1 || exponent == 0) return exponent == 0 ? coefficient : coefficient * base;
    const auto base_bits = mpz_sizeinbase(base.get_mpz_t(), 2);
    if (!exponent.fits_ulong_p() || exponent.get_ui() > max_bits / base_bits)
        throw MathError("bound too large to expand exactly");
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
    return coefficient * r;
}

Integer BoundValue::digits_by_expansion() const {
    const std::string s = Integer(abs(expand())).get_str();
    return integer_from_u64(s.size());
}

Integer BoundValue::digits() const {
    if (coefficient <= 0 || base <= 0) throw MathError("digit count needs a positive value");
    if (base == 1 || exponent == 0) return BoundValue{coefficient, 1, 0}.digits_by_expansion();
    const auto base_bits = mpz_sizeinbase(base.get_mpz_t(), 2);
    if (exponent.fits_ulong_p() && exponent.get_ui() <= (std::size_t{1} << 20) / base_bits)
        return digits_by_expansion();
    if (is_power_of_ten(coefficient) && is_power_of_ten(base)) {
        const Integer c_zeros = integer_from_u64(coefficient.get_str().size() - 1);
        const Integer b_zeros = integer_from_u64(base.get_str().size() - 1);
        return c_zeros + b_zeros * exponent + 1;
    }
    // floor(log10(value)) + 1 from a directed-rounding enclosure of
    // log10(c) + E log10(B), refined until both ends share a floor.
    const auto exp_bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (mpfr_prec_t prec = static_cast<mpfr_prec_t>(exp_bits + 64); prec <= 1 << 16; prec *= 2) {
        Integer floors[2];
        const mpfr_rnd_t modes[2] = {MPFR_RNDD, MPFR_RNDU};
        for (int side = 0; side < 2; ++side) {
            mpfr_t lc, lb, e, acc;
            mpfr_inits2(prec, lc, lb, e, acc, static_cast<mpfr_ptr>(nullptr));
            mpfr_set_z(lc, coefficient.get_mpz_t(), modes[side]);
            mpfr_log10(lc, lc, modes[side]);
            mpfr_set_z(lb, base.get_mpz_t(), modes[side]);
            mpfr_log10(lb, lb, modes[side]);
            mpfr_set_z(e, exponent.get_mpz_t(), modes[side]);
            mpfr_mul(acc, lb, e, modes[side]);
            mpfr_add(acc, acc, lc, modes[side]);
            mpfr_floor(acc, acc);
            mpfr_get_z(floors[side].get_mpz_t(), acc, MPFR_RNDN);
            mpfr_clears(lc, lb, e, acc, static_cast<mpfr_ptr>(nullptr));
        }
        if (floors[0] == floors[1]) return floors[0] + 1;
    }
    throw InternalError("could not certify the decimal digit count");
}

bool BoundValue::at_least(const Integer& n) const {
    if (n <= coefficient && base >= 1) return true;
    if (base >= 2 && coefficient >= 1) {
        const Integer bits = integer_from_u64(mpz_sizeinbase(n.get_mpz_t(), 2));
        if (exponent >= bits) return true;
    }
    return expand() >= n;
}

BoundValue evertse_bound(std::uint64_t degree, std::uint64_t t_plus_inf) {
    if (t_plus_inf > std::numeric_limits<std::uint64_t>::max() - degree) throw MathError("exponent overflow");
    return BoundValue{3, 7, integer_from_u64(degree + t_plus_inf)};
}

BoundValue sunit_equation_bound(std::int64_t p, const std::vector<std::int64_t>& S) {
    const auto above = count_primes_above(p, S);
    const auto degree = static_cast<std::uint64_t>(p - 1);
    return evertse_bound(degree, above + degree / 2);
}

BoundValue theorem2_bound(std::int64_t p, const std::vector<std::int64_t>& S) {
    const auto above = count_primes_above(p, S);
    const auto half = static_cast<std::uint64_t>((p - 1) / 2);
    Integer inner;
    mpz_ui_pow_ui(inner.get_mpz_t(), 7, 3 * half + above);
    BoundValue bound{1, integer_from_u64(static_cast<std::uint64_t>((p + 1) / 2)), 3 * inner};
    // [Q(zeta_p):Q] = p - 1 and there are (p-1)/2 archimedean places.
    if (bound.exponent != sunit_equation_bound(p, S).expand())
        throw InternalError("finiteness exponent differs from the S-unit equation bound");
    return bound;
}

bool is_s_smooth(const Integer& n, const std::vector<std::int64_t>& S) {
    if (n < 1) throw MathError("is_s_smooth needs n >= 1");
    Integer rest = n;
    for (auto q : S) {
        const Integer qq = integer_from_u64(static_cast<std::uint64_t>(q));
        while (mpz_divisible_p(rest.get_mpz_t(), qq.get_mpz_t())) mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), qq.get_mpz_t());
    }
    return rest == 1;
}

// ---------------------------------------------------------------------------
// SUnitContext / SUnitElement

SUnitContext::SUnitContext(std::int64_t p, std::vector<std::int64_t> S, std::uint64_t height,
                           std::uint64_t denom_bound)
    : p_(p), S_(std::move(S)), height_(height), denom_bound_(denom_bound) {
    require_prime_set(p_, S_);
    std::sort(S_.begin(), S_.end());
    S_.erase(std::unique(S_.begin(), S_.end()), S_.end());
    if (height_ < 1) throw MathError("height must be at least 1");
    if (denom_bound_ < 1) throw MathError("denominator bound must be at least 1");
}

std::vector<std::uint64_t> SUnitContext::denominators() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= denom_bound_; ++d)
        if (is_s_smooth(integer_from_u64(d), S_)) out.push_back(d);
    return out;
}

SUnitElement::SUnitElement(CycInt numerator, Integer denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (denominator_ == 0) throw MathError("zero denominator");
    if (denominator_ < 0) {
        denominator_ = -denominator_;
        numerator_ = -numerator_;
    }
    Integer g = numerator_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), denominator_.get_mpz_t());
    if (g != 1) {
        numerator_ = numerator_.divexact(g);
        mpz_divexact(denominator_.get_mpz_t(), denominator_.get_mpz_t(), g.get_mpz_t());
    }
}

SUnitElement SUnitElement::one_minus() const {
    return SUnitElement(CycInt::from_integer(prime(), denominator_) - numerator_, denominator_);
}

SUnitElement SUnitElement::galois(std::int64_t k) const {
    return SUnitElement(palex::galois(numerator_, k), denominator_);
}

Integer SUnitElement::numerator_norm() const { return norm(numerator_); }

Integer SUnitElement::denominator_norm() const {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), denominator_.get_mpz_t(), static_cast<unsigned long>(prime() - 1));
    return r;
}

std::strong_ordering operator<=>(const SUnitElement& a, const SUnitElement& b) {
    if (int s = cmp(a.denominator_, b.denominator_); s != 0)
        return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.numerator_ <=> b.numerator_;
}

SUnitElement operator+(const SUnitElement& a, const SUnitElement& b) {
    return SUnitElement(b.denominator() * a.numerator() + a.denominator() * b.numerator(),
                        a.denominator() * b.denominator());
}

bool s_unit_test(const SUnitElement& e, const SUnitContext& ctx) {
    if (e.prime() != ctx.p()) throw MathError("element and context live over different fields");
    if (e.numerator().is_zero()) return false;
    const Integer n = abs(e.numerator_norm());
    if (n == 0) return false;
    return is_s_smooth(e.denominator(), ctx.primes()) && is_s_smooth(n, ctx.primes());
}

bool in_box(const SUnitElement& e, const SUnitContext& ctx) {
    return e.numerator().height() <= integer_from_u64(ctx.height()) &&
           e.denominator() <= integer_from_u64(ctx.denom_bound());
}

std::vector<SUnitSolution> solve_sunit_equation(const SUnitContext& ctx, unsigned jobs) {
    const auto p = ctx.p();
    const auto dim = static_cast<std::size_t>(p - 1);
    const std::uint64_t total = cube_size(dim, ctx.height());
    const auto denominators = ctx.denominators();

    auto parts = run_partitioned<std::set<SUnitSolution>>(total, jobs, [&](std::uint64_t begin, std::uint64_t end) {
        std::set<SUnitSolution> local;
        std::vector<Integer> coords(dim);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            cube_point(idx, ctx.height(), coords);
            const CycInt beta(p, coords);
            if (beta.is_zero()) continue;
            // beta must itself be an S-unit numerator for any denominator.
            if (!is_s_smooth(abs(norm(beta)), ctx.primes())) continue;
            for (auto d : denominators) {
                const SUnitElement x(beta, integer_from_u64(d));
                // Non-canonical (beta, d) reappear in reduced form.
                if (x.denominator() != integer_from_u64(d)) continue;
                const SUnitElement y = x.one_minus();
                if (!s_unit_test(x, ctx) || !s_unit_test(y, ctx)) continue;
                local.insert(SUnitSolution{x, y});
                local.insert(SUnitSolution{y, x});
            }
        }
        return local;
    });

    std::set<SUnitSolution> merged;
    for (auto& part : parts) merged.merge(part);
    return {merged.begin(), merged.end()};
}

// ---------------------------------------------------------------------------
// Candidate enumeration

std::vector<SUnitElement> root_ratios(const IntPolynomial& g, const IntPolynomial& h, std::int64_t p) {
    std::vector<CycInt> g_at, h_at;
    for (std::int64_t i = 1; i < p; ++i) {
        g_at.push_back(evaluate_at_zeta(g, p, i));
        h_at.push_back(evaluate_at_zeta(h, p, i));
    }
    const Integer g_norm = norm(g_at.front());
    if (g_norm == 0) throw MathError("degenerate g");
    std::vector<SUnitElement> out;
    for (std::size_t i = 0; i < g_at.size(); ++i) {
        // h_i / g_i = h_i * prod_{k != i} g_k / N(g)
        CycInt numerator = h_at[i];
        for (std::size_t k = 0; k < g_at.size(); ++k)
            if (k != i) numerator = numerator * g_at[k];
        out.emplace_back(std::move(numerator), g_norm);
    }
    return out;
}

namespace {

std::size_t max_root_multiplicity(const std::vector<CycInt>& g_at, const std::vector<CycInt>& h_at) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < g_at.size(); ++i) {
        std::size_t count = 0;
        for (std::size_t j = 0; j < g_at.size(); ++j)
            if (h_at[i] * g_at[j] == h_at[j] * g_at[i]) ++count;
        best = std::max(best, count);
    }
    return best;
}

}  // namespace

CandidateResult enumerate_candidates(const SUnitContext& ctx, std::uint64_t gh_height, const CandidateOptions& options,
                                     unsigned jobs) {
    const auto p = ctx.p();
    if (gh_height < 1) throw MathError("gh_height must be at least 1");
    const auto half = static_cast<std::size_t>(p - 1);
    const std::uint64_t total = cube_size(2 * half, gh_height);
    const std::uint64_t max_mult = options.multiplicity.value_or(static_cast<std::uint64_t>((p - 1) / 2));

    auto parts = run_partitioned<CandidateResult>(total, jobs, [&](std::uint64_t begin, std::uint64_t end) {
        CandidateResult local;
        std::vector<Integer> coords(2 * half);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            ++local.pairs_examined;
            cube_point(idx, gh_height, coords);
            const IntPolynomial g(std::vector<Integer>(coords.begin(), coords.begin() + static_cast<long>(half)));
            const IntPolynomial h(std::vector<Integer>(coords.begin() + static_cast<long>(half), coords.end()));
            const CycInt g_zeta = evaluate_at_zeta(g, p, 1);
            const CycInt h_zeta = evaluate_at_zeta(h, p, 1);
            const Integer lead = norm(g_zeta);
            if (lead == 0) continue;
            ++local.nondegenerate_pairs;

            // Leading coefficient N(g), constant term N(-h) = N(h), value at 1 N(g - h).
            const Integer constant = norm(h_zeta);
            if (constant == 0) continue;
            if (cmpabs(norm(g_zeta - h_zeta), 1) != 0) continue;
            if (cmpabs(constant, lead) != 0) continue;
            if (!is_s_smooth(abs(lead), ctx.primes())) continue;
            if (options.monic_only && cmpabs(lead, 1) != 0) continue;

            std::vector<CycInt> g_at, h_at;
            for (std::int64_t i = 1; i < p; ++i) {
                g_at.push_back(evaluate_at_zeta(g, p, i));
                h_at.push_back(evaluate_at_zeta(h, p, i));
            }
            if (max_root_multiplicity(g_at, h_at) > max_mult) continue;

            const IntPolynomial delta = candidate_from_gh(GHPair{g, h, p});
            if (evaluate(delta, 0) != constant || cmpabs(evaluate(delta, 1), 1) != 0)
                throw InternalError("candidate disagrees with its norm data: " + render(delta));
            const IntPolynomial normalized = normalize(delta);

            bool ok = true;
            for (const auto& alpha : root_ratios(g, h, p))
                ok = ok && s_unit_test(alpha, ctx) && s_unit_test(alpha.one_minus(), ctx);
            if (!ok) local.root_check_failures.insert(normalized);
            local.candidates.insert(normalized);
        }
        return local;
    });

    CandidateResult merged;
    for (auto& part : parts) {
        merged.pairs_examined += part.pairs_examined;
        merged.nondegenerate_pairs += part.nondegenerate_pairs;
        merged.candidates.merge(part.candidates);
        merged.root_check_failures.merge(part.root_check_failures);
    }
    return merged;
}

}  // namespace palex
