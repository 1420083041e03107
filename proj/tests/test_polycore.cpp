#include "generators.hpp"

#include "periodic_alex/polycore.hpp"

#include <doctest.h>

using namespace palex;

TEST_CASE("normalize strips powers of t and fixes the sign") {
    CHECK(normalize(IntPolynomial{0, 0, 2, -4}) == IntPolynomial{-2, 4});
    CHECK(normalize(IntPolynomial{1, -1, 1}) == IntPolynomial{1, -1, 1});
    CHECK(normalize(IntPolynomial{0, -1, 1, -1, 1, -1}) == IntPolynomial{1, -1, 1, -1, 1});
    CHECK_THROWS_WITH_AS(normalize(IntPolynomial{}), "cannot normalize zero", MathError);
}

TEST_CASE("alternating polynomial") {
    CHECK(alternating_polynomial(3) == IntPolynomial{1, -1, 1});
    CHECK(alternating_polynomial(5) == IntPolynomial{1, -1, 1, -1, 1});
    CHECK(alternating_polynomial(7) == IntPolynomial{1, -1, 1, -1, 1, -1, 1});
    CHECK_THROWS_AS(alternating_polynomial(2), MathError);
    CHECK_THROWS_AS(alternating_polynomial(9), MathError);
    CHECK_THROWS_AS(alternating_polynomial(-3), MathError);
}

TEST_CASE("ring arithmetic examples") {
    CHECK(mul(IntPolynomial{1, 1}, IntPolynomial{1, -1}) == IntPolynomial{1, 0, -1});
    CHECK(pow(IntPolynomial{1, 1}, 4) == IntPolynomial{1, 4, 6, 4, 1});
    const IntPolynomial f{3, 0, -2};
    CHECK(add(f, IntPolynomial{}) == f);
    CHECK(sub(f, f).is_zero());
    CHECK(pow(f, 0) == IntPolynomial{1});
}

TEST_CASE("no overflow in large powers") {
    const auto f = pow(IntPolynomial{1, 1}, 200);
    // C(200, 100) has 59 digits.
    CHECK(f.coeff(100).get_str().size() == 59);
    CHECK(evaluate(f, 1) == Integer("1606938044258990275541962092341162602522202993782792835301376"));
}

TEST_CASE("degree of zero is minus infinity") {
    CHECK(IntPolynomial{}.degree().is_minus_infinity());
    CHECK(IntPolynomial{0, 0}.is_zero());
    CHECK(IntPolynomial{}.degree() < Degree(0));
    CHECK((IntPolynomial{}.degree() + Degree(3)).is_minus_infinity());
    CHECK(IntPolynomial{5}.degree() == Degree(0));
    CHECK_THROWS_AS(IntPolynomial{}.degree().value(), MathError);
    CHECK_THROWS_AS(IntPolynomial{}.leading(), MathError);
}

TEST_CASE("reduce_mod") {
    // Coefficientwise remainder oracle.
    const std::vector<long> src{1, 4, 6, 4, 1};
    std::vector<std::uint64_t> expect;
    for (long c : src) expect.push_back(static_cast<std::uint64_t>(((c % 5) + 5) % 5));
    CHECK(reduce_mod(IntPolynomial{1, 4, 6, 4, 1}, 5) == ModPolynomial(expect, 5));
    CHECK(reduce_mod(IntPolynomial{1, 4, 6, 4, 1}, 5).coeffs() == std::vector<std::uint64_t>{1, 4, 1, 4, 1});
    CHECK(reduce_mod(IntPolynomial{1, -1, 1}, 3).coeffs() == std::vector<std::uint64_t>{1, 2, 1});
    CHECK(reduce_mod(IntPolynomial{3, 6}, 3).is_zero());
    CHECK(reduce_mod(IntPolynomial{3, 6}, 3).degree().is_minus_infinity());
    CHECK_THROWS_AS(reduce_mod(IntPolynomial{1}, 4), MathError);
}

TEST_CASE("evaluate") {
    CHECK(evaluate(alternating_polynomial(5), 1) == 1);
    CHECK(evaluate(alternating_polynomial(5), -1) == 5);
    CHECK(evaluate(IntPolynomial{}, 17) == 0);
}

TEST_CASE("divides") {
    CHECK(divides(IntPolynomial{1, 1}, IntPolynomial{1, 0, -1}));
    CHECK_FALSE(divides(IntPolynomial{2, 1}, IntPolynomial{1, 0, -1}));
    CHECK_FALSE(divides(IntPolynomial{0, 2}, IntPolynomial{1, 2}));
    CHECK(divides(IntPolynomial{3}, IntPolynomial{3, 6}));
    CHECK_FALSE(divides(IntPolynomial{2}, IntPolynomial{3, 6}));
    CHECK(divides(IntPolynomial{1}, alternating_polynomial(7)));
    CHECK(divides(IntPolynomial{}, IntPolynomial{}));
    CHECK_FALSE(divides(IntPolynomial{}, IntPolynomial{1}));
}

TEST_CASE("resultant") {
    // Res(t - a, g) = g(a)
    const IntPolynomial g{3, -2, 0, 1};
    CHECK(resultant(IntPolynomial{-5, 1}, g) == evaluate(g, 5));
    // Res(Phi_5, 1 - t) = Phi_5(1) = 5
    CHECK(resultant(cyclotomic_polynomial(5), IntPolynomial{1, -1}) == 5);
    CHECK(resultant(IntPolynomial{1, 0, 1}, IntPolynomial{1, 0, 1}) == 0);
    CHECK(resultant(IntPolynomial{7}, IntPolynomial{1, 1, 1}) == 49);
}

TEST_CASE("text format") {
    CHECK(render(IntPolynomial{1, -1, 1, -1, 1}) == "1,-1,1,-1,1");
    CHECK(parse_polynomial("1,-1,1,-1,1") == IntPolynomial{1, -1, 1, -1, 1});
    CHECK(parse_polynomial(" 2 , +3 ") == IntPolynomial{2, 3});
    CHECK(render(IntPolynomial{}) == "0");
    CHECK(parse_polynomial("0").is_zero());
    CHECK_THROWS_AS(parse_polynomial(""), MathError);
    CHECK_THROWS_AS(parse_polynomial("1,,2"), MathError);
    CHECK_THROWS_AS(parse_polynomial("1,x"), MathError);

    gen::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        auto f = gen::polynomial(rng, 9, 1000000);
        f = f * pow(IntPolynomial{0, 7919}, static_cast<unsigned long>(gen::uniform(rng, 0, 4)));
        CHECK(parse_polynomial(render(f)) == f);
    }
}

TEST_CASE("property: normalize is idempotent with positive leading and nonzero constant term") {
    gen::Rng rng(1);
    for (int i = 0; i < 500; ++i) {
        auto f = gen::nonzero_polynomial(rng, 8, 20) * IntPolynomial::monomial(1, static_cast<std::size_t>(gen::uniform(rng, 0, 3)));
        const auto n = normalize(f);
        CHECK(normalize(n) == n);
        CHECK(evaluate(n, 0) != 0);
        CHECK(sgn(n.leading()) > 0);
    }
}

TEST_CASE("property: ring laws") {
    gen::Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        const auto f = gen::polynomial(rng, 7, 50);
        const auto g = gen::polynomial(rng, 7, 50);
        const auto h = gen::polynomial(rng, 7, 50);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f + g) - g == f);
        if (!f.is_zero() && !g.is_zero()) CHECK((f * g).degree() == f.degree() + g.degree());
        const Integer x = gen::uniform(rng, -9, 9);
        CHECK(evaluate(f * g, x) == evaluate(f, x) * evaluate(g, x));
        CHECK(evaluate(f + g, x) == evaluate(f, x) + evaluate(g, x));
    }
}

TEST_CASE("property: reduction mod p is a ring homomorphism") {
    gen::Rng rng(3);
    for (std::uint64_t p : {3u, 5u, 7u, 13u}) {
        for (int i = 0; i < 100; ++i) {
            const auto f = gen::polynomial(rng, 7, 1000);
            const auto g = gen::polynomial(rng, 7, 1000);
            CHECK(reduce_mod(f * g, p) == reduce_mod(f, p) * reduce_mod(g, p));
            CHECK(reduce_mod(f + g, p) == reduce_mod(f, p) + reduce_mod(g, p));
            CHECK(reduce_mod(-f, p) == -reduce_mod(f, p));
            const auto reduced = reduce_mod(f, p);
            for (auto c : reduced.coeffs()) CHECK(c < p);
        }
    }
}

TEST_CASE("property: divisibility of products") {
    gen::Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        const auto f = gen::nonzero_polynomial(rng, 5, 9);
        const auto g = gen::nonzero_polynomial(rng, 5, 9);
        CHECK(divides(f, f * g));
        CHECK(divides(g, f * g));
    }
}

TEST_CASE("ModPolynomial shift and valuation") {
    const ModPolynomial f({2, 1}, 5);
    CHECK(f.shifted(3).coeffs() == std::vector<std::uint64_t>{0, 0, 0, 2, 1});
    CHECK(f.shifted(3).t_adic_valuation() == 3);
    CHECK(ModPolynomial({7, 12}, 5).coeffs() == std::vector<std::uint64_t>{2, 2});
    CHECK_THROWS_AS(ModPolynomial({1}, 5) + ModPolynomial({1}, 7), MathError);
    CHECK(pow(reduce_mod(IntPolynomial{1, 1}, 5), 5) == ModPolynomial({1, 0, 0, 0, 0, 1}, 5));
}
