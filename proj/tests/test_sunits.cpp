#include "generators.hpp"
#include "oracles.hpp"

#include "periodic_alex/obstructions.hpp"
#include "periodic_alex/sunits.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

using namespace palex;

namespace {

bool smooth_ll(long long n, const std::vector<std::int64_t>& S) {
    if (n == 0) return false;
    n = std::llabs(n);
    for (auto q : S)
        while (n % q == 0) n /= q;
    return n == 1;
}

/// (beta, d) pairs with x = beta/d and 1 - x both S-units, by complex norms.
std::set<std::pair<std::vector<long>, long>> numeric_solutions(long p, const std::vector<std::int64_t>& S, long h,
                                                               long d_max) {
    std::set<std::pair<std::vector<long>, long>> out;
    const auto dim = static_cast<std::size_t>(p - 1);
    for (long d = 1; d <= d_max; ++d) {
        if (!smooth_ll(d, S)) continue;
        for (std::uint64_t i = 0; i < oracle::cube_count(h, dim); ++i) {
            auto beta = oracle::cube_point(i, h, dim);
            long g = d;
            for (long c : beta) g = std::gcd(g, c);
            if (g != 1) continue;
            auto rest = beta;
            for (auto& c : rest) c = -c;
            rest[0] += d;
            if (smooth_ll(oracle::rounded_norm(beta, p), S) && smooth_ll(oracle::rounded_norm(rest, p), S))
                out.insert({beta, d});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("prime sets and counting primes above S") {
    CHECK(parse_prime_set("") == std::vector<std::int64_t>{});
    CHECK(parse_prime_set("7,2,7,3") == std::vector<std::int64_t>{2, 3, 7});
    CHECK_THROWS_AS(parse_prime_set("4"), MathError);
    CHECK_THROWS_AS(parse_prime_set("2,,3"), MathError);
    CHECK_THROWS_AS(parse_prime_set("x"), MathError);

    CHECK(multiplicative_order(2, 5) == 4);
    CHECK(multiplicative_order(11, 5) == 1);
    CHECK(count_primes_above(5, {2}) == 1);
    CHECK(count_primes_above(5, {11}) == 4);
    CHECK(count_primes_above(5, {}) == 0);
    CHECK(count_primes_above(7, {2}) == 2);
    CHECK(count_primes_above(3, {7}) == 2);
    CHECK_THROWS_AS(count_primes_above(5, {5}), MathError);
    CHECK_THROWS_AS(count_primes_above(6, {5}), MathError);

    const std::vector<std::int64_t> pool{2, 3, 7, 11, 13, 29, 31, 41};
    for (long p : {5, 11}) {
        std::uint64_t total = 0;
        std::vector<std::int64_t> all;
        for (auto q : pool) {
            if (q == p) continue;
            total += count_primes_above(p, {q});
            all.push_back(q);
        }
        CHECK(count_primes_above(p, all) == total);
    }
}

TEST_CASE("bound values") {
    CHECK(evertse_bound(1, 1).expand() == 147);
    CHECK(evertse_bound(2, 1).expand() == 1029);
    CHECK(evertse_bound(4, 2).expand() == 352947);

    const auto t3 = theorem2_bound(3, {});
    CHECK(t3.base == 2);
    CHECK(t3.exponent == 1029);
    CHECK(t3.digits() == 310);
    CHECK(theorem2_bound(5, {}).base == 3);
    CHECK(theorem2_bound(5, {}).exponent == 352947);
    Integer seven_5;
    mpz_ui_pow_ui(seven_5.get_mpz_t(), 7, 5);
    CHECK(theorem2_bound(3, {7}).exponent == 3 * seven_5);
    CHECK(sunit_equation_bound(3, {}).expand() == 1029);
    CHECK_THROWS_AS(theorem2_bound(5, {5}), MathError);
    CHECK_THROWS_AS(theorem2_bound(9, {}), MathError);
}

TEST_CASE("digit counts: certified logarithm against exact expansion") {
    for (auto b : {BoundValue{1, 3, 600000}, BoundValue{3, 7, 700001}, BoundValue{1, 2, 1u << 21},
                   BoundValue{5, 999, 200000}, BoundValue{1, 10, 1}, BoundValue{7, 1, 10}, BoundValue{1, 5, 0}})
        CHECK(b.digits() == b.digits_by_expansion());
    CHECK(BoundValue{1, 10, Integer("100000000000000000000")}.digits() == Integer("100000000000000000001"));
    CHECK(BoundValue{100, 10, Integer("100000000000000000000")}.digits() == Integer("100000000000000000003"));

    // 4^{3 * 7^9}: long double is ample at this size.
    const auto t7 = theorem2_bound(7, {});
    CHECK(t7.base == 4);
    CHECK(t7.exponent == 121060821);
    const auto approx =
        static_cast<long long>(std::floor(121060821.0L * std::log10(4.0L))) + 1;
    CHECK(t7.digits() == Integer(std::to_string(approx)));
    CHECK(t7.at_least(Integer(1) << 100000));
    CHECK_FALSE(BoundValue{1, 2, 10}.at_least(1025));
    CHECK(BoundValue{1, 2, 10}.at_least(1024));
}

TEST_CASE("S-unit tests") {
    CHECK(is_s_smooth(1, {}));
    CHECK(is_s_smooth(12, {2, 3}));
    CHECK_THROWS_AS(is_s_smooth(0, {2}), MathError);
    CHECK_FALSE(is_s_smooth(10, {2}));

    const SUnitContext ctx5(5, {2}, 1, 4);
    CHECK(s_unit_test(SUnitElement(CycInt::from_integer(5, 2)), ctx5));
    CHECK_FALSE(s_unit_test(SUnitElement(CycInt::from_integer(5, 3)), ctx5));
    CHECK(s_unit_test(SUnitElement(CycInt(5, {1, 1, 0, 0}), 2), ctx5));
    CHECK_FALSE(s_unit_test(SUnitElement(CycInt(5, {1, -1, 0, 0})), ctx5));
    CHECK(s_unit_test(SUnitElement(CycInt(5, {1, -1, 0, 0})), SUnitContext(5, {}, 1, 1)) == false);
    CHECK_FALSE(s_unit_test(SUnitElement(CycInt(5)), ctx5));
    CHECK_THROWS_AS(SUnitContext(5, {5}, 1, 1), MathError);
    CHECK_THROWS_AS(SUnitContext(5, {}, 0, 1), MathError);
    CHECK(ctx5.denominators() == std::vector<std::uint64_t>{1, 2, 4});
    CHECK(SUnitContext(7, {2, 3}, 1, 10).denominators() == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9});

    // Canonical form.
    const SUnitElement e(CycInt(5, {2, 4, 0, 0}), -6);
    CHECK(e.numerator() == CycInt(5, {-1, -2, 0, 0}));
    CHECK(e.denominator() == 3);
    CHECK(e.one_minus().one_minus() == e);
    CHECK_THROWS_AS(SUnitElement(CycInt(5, {1, 0, 0, 0}), 0), MathError);
}

TEST_CASE("solve_sunit_equation examples") {
    const SUnitContext ctx(3, {}, 1, 1);
    const auto sols = solve_sunit_equation(ctx);
    REQUIRE(sols.size() == 2);
    std::set<CycInt> xs{sols[0].x.numerator(), sols[1].x.numerator()};
    CHECK(xs == std::set<CycInt>{CycInt(3, {0, -1}), CycInt(3, {1, 1})});
    CHECK(sols.size() <= sunit_equation_bound(3, {}).expand());
}

TEST_CASE("property: solve_sunit_equation against the complex oracle") {
    struct Setup {
        long p;
        std::vector<std::int64_t> S;
        long h, d;
    };
    for (const auto& s : {Setup{3, {}, 2, 1}, Setup{3, {2}, 2, 4}, Setup{3, {2, 3}, 1, 6}, Setup{5, {}, 1, 1},
                          Setup{5, {2}, 1, 2}, Setup{5, {11}, 1, 1}, Setup{7, {}, 1, 1}}) {
        CAPTURE(s.p);
        CAPTURE(s.h);
        if (std::find(s.S.begin(), s.S.end(), s.p) != s.S.end()) {
            CHECK_THROWS_AS(SUnitContext(s.p, s.S, s.h, s.d), MathError);
            continue;
        }
        const SUnitContext ctx(s.p, s.S, static_cast<std::uint64_t>(s.h), static_cast<std::uint64_t>(s.d));
        const auto sols = solve_sunit_equation(ctx, 1);
        const auto expected = numeric_solutions(s.p, s.S, s.h, s.d);

        std::set<std::pair<std::vector<long>, long>> boxed;
        std::set<SUnitSolution> all(sols.begin(), sols.end());
        CHECK(all.size() == sols.size());
        for (const auto& sol : sols) {
            CHECK(sol.x + sol.y == SUnitElement(CycInt::from_integer(s.p, 1)));
            CHECK(s_unit_test(sol.x, ctx));
            CHECK(s_unit_test(sol.y, ctx));
            CHECK((in_box(sol.x, ctx) || in_box(sol.y, ctx)));
            CHECK(all.count(SUnitSolution{sol.y, sol.x}) == 1);
            for (long k = 1; k < s.p; ++k)
                CHECK(all.count(SUnitSolution{sol.x.galois(k), sol.y.galois(k)}) +
                          (in_box(sol.x.galois(k), ctx) || in_box(sol.y.galois(k), ctx) ? 0 : 1) >=
                      1);
            if (in_box(sol.x, ctx) && sol.x.denominator().fits_slong_p())
                boxed.insert({gen::to_longs(sol.x.numerator()), sol.x.denominator().get_si()});
        }
        CHECK(boxed == expected);
        CHECK(sunit_equation_bound(s.p, s.S).at_least(Integer(std::to_string(sols.size()))));
        CHECK(solve_sunit_equation(ctx, 3) == sols);
    }
}

TEST_CASE("enumerate_candidates") {
    const SUnitContext ctx(3, {}, 1, 1);
    const auto monic = enumerate_candidates(ctx, 1, {std::nullopt, true});
    CHECK(monic.candidates == std::set<IntPolynomial>{alternating_polynomial(3)});
    CHECK(monic.root_check_failures.empty());
    CHECK(monic.pairs_examined == 81);

    for (auto [p, S, g] : {std::tuple<long, std::vector<std::int64_t>, std::uint64_t>{3, {}, 2}, {3, {2}, 1},
                           {3, {2, 7}, 2}, {5, {}, 1}, {5, {11}, 1}}) {
        const SUnitContext c(p, S, g, 1);
        const auto all = enumerate_candidates(c, g);
        CHECK(all.root_check_failures.empty());
        for (const auto& f : all.candidates) {
            CHECK(f.degree() == Degree(static_cast<std::size_t>(p - 1)));
            CHECK(cmpabs(evaluate(f, 1), 1) == 0);
            CHECK(cmpabs(evaluate(f, 0), f.leading()) == 0);
            CHECK(is_s_smooth(f.leading(), S));
            CHECK(f == normalize(f));
        }
        CHECK(all.candidates.count(alternating_polynomial(p)) == 1);
        const auto monic_only = enumerate_candidates(c, g, {std::nullopt, true});
        for (const auto& f : monic_only.candidates) CHECK(f.leading() == 1);
        CHECK(enumerate_candidates(c, g, {}, 4).candidates == all.candidates);
    }
}

TEST_CASE("root ratios are the conjugates of h/g") {
    gen::Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        const long p = 5;
        const auto g = gen::polynomial(rng, 4, 2), h = gen::polynomial(rng, 4, 2);
        const auto n = norm(evaluate_at_zeta(g, p));
        if (n == 0) continue;
        const auto ratios = root_ratios(g, h, p);
        REQUIRE(ratios.size() == 4);
        for (long k = 1; k < p; ++k) {
            const auto& r = ratios[static_cast<std::size_t>(k - 1)];
            // r * g(zeta^k) == h(zeta^k)
            const auto lhs = r.numerator() * evaluate_at_zeta(g, p, k);
            CHECK(lhs == r.denominator() * evaluate_at_zeta(h, p, k));
        }
    }
}
