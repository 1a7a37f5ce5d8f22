#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "moishezon/errors.hpp"
#include "moishezon/intersection.hpp"

using namespace moishezon;

namespace {

DivisorClass cls(std::initializer_list<Rational> v) { return make_vector(v); }

Rational random_small(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
    return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

DivisorClass random_class(std::mt19937_64& rng, int rank) {
    DivisorClass z(rank);
    for (int i = 0; i < rank; ++i) z(i) = random_small(rng);
    return z;
}

SpaceModel kollar_space(std::int64_t m) {
    const SpaceModel p3 = projective_space(3);
    return blowup_along_curve(p3, curve_center(p3, 2 * m - 2, Rational(m + 3)));
}

}  // namespace

TEST_CASE("projective space") {
    const SpaceModel p = projective_space(4);
    CHECK(p.top({4}) == Rational(1));
    CHECK(canonical_class(p) == cls({-5}));
    CHECK(intersect_power(p, cls({2})) == Rational(16));
}

TEST_CASE("adjunction") {
    CHECK(adjunction_nu(3, 0, Rational(-12)) == Rational(10));  // twisted cubic
    CHECK(adjunction_nu(3, 1, Rational(-16)) == Rational(16));  // elliptic quartic
    CHECK_THROWS_AS(adjunction_nu(3, -1, Rational(0)), DomainError);
}

TEST_CASE("curve center rejects a nu that contradicts adjunction") {
    const SpaceModel p3 = projective_space(3);
    CHECK(curve_center(p3, 0, Rational(3)).nu == Rational(10));
    CHECK_NOTHROW(curve_center(p3, 0, Rational(3), Rational(10)));
    CHECK_THROWS_AS(curve_center(p3, 0, Rational(3), Rational(9)), DomainError);
    CHECK(curve_center_unchecked(p3, 0, Rational(3), Rational(9)).nu == Rational(9));
}

TEST_CASE("threefold blow-up matches the classical formulas E^3 = -deg N, H.E^2 = -d") {
    const SpaceModel p3 = projective_space(3);
    for (std::int64_t g = 0; g <= 6; ++g) {
        for (std::int64_t d = 1; d <= 8; ++d) {
            const SpaceModel x = blowup_along_curve(p3, curve_center(p3, g, Rational(d)));
            CHECK(x.top({3, 0}) == Rational(1));
            CHECK(x.top({2, 1}) == Rational(0));
            CHECK(x.top({1, 2}) == Rational(-d));
            CHECK(x.top({0, 3}) == -Rational(4 * d + 2 * g - 2));
        }
    }
}

TEST_CASE("blow-up of P^n along a line is a bundle over P^{n-2}") {
    // Projection from the line: H - E is pulled back from P^{n-2}.
    for (int n = 3; n <= 9; ++n) {
        const SpaceModel pn = projective_space(n);
        const SpaceModel x = blowup_along_curve(pn, curve_center(pn, 0, Rational(1)));
        const DivisorClass h = x.generator(0);
        const DivisorClass f = h - x.generator(1);
        std::vector<DivisorClass> classes(static_cast<std::size_t>(n), f);
        CHECK(intersect(x, classes).is_zero());
        classes[0] = h;
        CHECK(intersect(x, classes).is_zero());
        classes[1] = h;
        CHECK(intersect(x, classes) == Rational(1));
    }
}

TEST_CASE("blow-up table invariants for random centers") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + trial % 5;
        const std::int64_t kappa = static_cast<std::int64_t>(rng() % 9) - 4;
        const Rational top(static_cast<long>(1 + rng() % 20));
        const SpaceModel base = rank_one_space(n, top, kappa);
        const std::int64_t g = static_cast<std::int64_t>(rng() % 5);
        const Rational d(static_cast<long>(1 + rng() % 7));
        const auto center = curve_center(base, g, d);
        const SpaceModel x = blowup_along_curve(base, center);
        const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        CHECK(x.top({n, 0}) == top);
        for (int b = 1; b <= n - 2; ++b) CHECK(x.top({n - b, b}).is_zero());
        CHECK(x.top({1, n - 1}) == sign * d);
        CHECK(x.top({0, n}) == sign * center.nu);
        CHECK(canonical_class(x) == cls({Rational(kappa), Rational(n - 2)}));
        CHECK(pair_curve(x, x.generator(1), "ell") == Rational(-1));
        CHECK(pair_curve(x, x.generator(0), "ell") == Rational(0));
    }
}

TEST_CASE("intersect is symmetric and multilinear") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + trial % 3;
        const SpaceModel base = rank_one_space(n, Rational(2), 1);
        const SpaceModel x = blowup_along_curve(base, curve_center(base, 1, Rational(3)));
        std::vector<DivisorClass> classes;
        for (int i = 0; i < n; ++i) classes.push_back(random_class(rng, 2));
        const Rational value = intersect(x, classes);

        std::vector<DivisorClass> shuffled = classes;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(intersect(x, shuffled) == value);

        const Rational a = random_small(rng), b = random_small(rng);
        const DivisorClass extra = random_class(rng, 2);
        std::vector<DivisorClass> mixed = classes, other = classes;
        mixed[0] = a * classes[0] + b * extra;
        other[0] = extra;
        CHECK(intersect(x, mixed) == a * value + b * intersect(x, other));

        std::vector<DivisorClass> power(static_cast<std::size_t>(n), classes[0]);
        CHECK(intersect_power(x, classes[0]) == intersect(x, power));
    }
}

TEST_CASE("intersect needs exactly n classes") {
    const SpaceModel p3 = projective_space(3);
    const std::vector<DivisorClass> two{cls({1}), cls({1})};
    CHECK_THROWS_AS(intersect(p3, two), DomainError);
}

TEST_CASE("P3 curve family: four-term cube expansion") {
    for (std::int64_t m = 1; m <= 10; ++m) {
        const SpaceModel x = kollar_space(m);
        const Rational e3 = -Rational(4 * (m + 3) + 2 * (2 * m - 2) - 2);
        const Rational he2 = -Rational(m + 3);
        const Rational expected = Rational(27) + Rational(9) * he2 - e3;
        CHECK(expected == Rational(6 - m));
        CHECK(intersect_power(x, cls({3, -1})) == expected);
    }
}

TEST_CASE("descend_generator is primitive, orthogonal and positive in pi*H") {
    const SpaceModel p3 = projective_space(3);
    const SpaceModel x = blowup_along_curve(p3, curve_center(p3, 0, Rational(2)));
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const long p = static_cast<long>(rng() % 21) - 10, q = static_cast<long>(rng() % 21) - 10;
        if (p == 0 && q == 0) continue;
        const CurveClass c{"c", cls({Rational(p), Rational(q)})};
        const DivisorClass g = descend_generator(x, c);
        CHECK((g(0) * Rational(p) + g(1) * Rational(q)).is_zero());
        CHECK(g(0).is_integer());
        CHECK(g(1).is_integer());
        const long a = g(0).to_int64(), b = g(1).to_int64();
        CHECK(std::gcd(a, b) == 1);
        CHECK((a > 0 || (a == 0 && b > 0)));
    }
    CHECK_THROWS_AS(descend_generator(x, CurveClass{"zero", cls({0, 0})}), DomainError);
}

TEST_CASE("descend_class") {
    const SpaceModel x = kollar_space(2);
    CHECK(descend_class(x, cls({-6, 2}), cls({3, -1})) == -2);
    CHECK(descend_class(x, cls({0, 0}), cls({3, -1})) == 0);
    CHECK_THROWS_AS(descend_class(x, cls({-6, 1}), cls({3, -1})), NotProportional);
    CHECK_THROWS_AS(descend_class(x, cls({1, Rational::parse("-1/3")}), cls({3, -1})), NotProportional);
}

TEST_CASE("strict transform and normal pairing") {
    const SpaceModel x = kollar_space(4);
    CHECK(strict_transform_hypersurface(x, 2, 1) == cls({2, -1}));
    CHECK_THROWS_AS(strict_transform_hypersurface(projective_space(3), 2, 1), DomainError);
    CHECK(divisor_normal_pairing(Rational(-2), Rational(-4), Rational(3)) == Rational(-1));
}

TEST_CASE("nef, big and Euler leading term") {
    const SpaceModel x = kollar_space(2)
                             .with_curve({"L1", cls({1, 3})})
                             .with_curve({"L2", cls({1, 2})});
    CHECK(is_nef(x, cls({3, -1})));
    CHECK(siu_big_check(x, cls({3, -1})));
    CHECK(euler_leading(x, cls({3, -1})) == Rational::parse("2/3"));
    CHECK_FALSE(is_nef(x, cls({-1, 0})));

    const SpaceModel y = kollar_space(6)
                             .with_curve({"L1", cls({1, 3})})
                             .with_curve({"L2", cls({1, 6})});
    CHECK_FALSE(is_nef(y, cls({3, -1})));
    CHECK_FALSE(siu_big_check(y, cls({3, -1})));

    const SpaceModel p3 = projective_space(3);
    CHECK_THROWS_AS(is_nef(p3, cls({1})), DomainError);
}

TEST_CASE("curves on the quadric follow adjunction on P1 x P1") {
    const SpaceModel q = quadric_surface();
    CHECK(q.top({1, 1}) == Rational(1));
    CHECK(q.top({2, 0}).is_zero());
    for (std::int64_t n = 0; n <= 7; ++n) {
        for (std::int64_t m = 0; m <= 7; ++m) {
            const QuadricCurve c = curve_on_quadric(n, m);
            // 2g - 2 = C.(C + K) with C^2 = 2nm and K.C = -2(n + m).
            CHECK(2 * c.genus - 2 == 2 * n * m - 2 * (n + m));
            CHECK(c.degree == n + m);
            CHECK(c.self_intersection == 2 * n * m);
            CHECK(c.kq_dot == -2 * (n + m));
        }
    }
    CHECK_THROWS_AS(curve_on_quadric(-1, 2), DomainError);
}

TEST_CASE("SpaceModel validation") {
    CHECK_THROWS_AS(SpaceModel("bad", 2, {"H"}, {{{2}, Rational(1)}}, cls({Rational::parse("1/2")})), DomainError);
    CHECK_THROWS_AS(SpaceModel("bad", 2, {"H"}, {}, cls({0})), DomainError);
    CHECK_THROWS_AS(rank_one_space(3, Rational(0), 0), DomainError);
    const SpaceModel x = kollar_space(1);
    CHECK_THROWS_AS(x.with_curve({"ell", cls({0, -1})}), DomainError);
    CHECK_THROWS_AS(x.curve("nope"), DomainError);
}
