#include <doctest.h>

#include <random>

#include "moishezon/errors.hpp"
#include "moishezon/linalg.hpp"

using namespace moishezon;

namespace {

// Laplace expansion along the first row.
Rational cofactor_det(const RationalMatrix& m) {
    const Eigen::Index n = m.rows();
    if (n == 1) return m(0, 0);
    Rational total(0);
    for (Eigen::Index j = 0; j < n; ++j) {
        RationalMatrix minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        const Rational term = m(0, j) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

RationalMatrix random_matrix(std::mt19937_64& rng, int n, bool sparse) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4), coin(0, 2);
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = (sparse && coin(rng) != 0) ? Rational(0) : Rational(mpz_class(num(rng)), mpz_class(den(rng)));
        }
    }
    return m;
}

}  // namespace

TEST_CASE("det_exact agrees with cofactor expansion") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 5;
        const RationalMatrix m = random_matrix(rng, n, trial % 2 == 0);
        CHECK(det_exact(m) == cofactor_det(m));
    }
}

TEST_CASE("det_exact is multiplicative") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 5;
        const RationalMatrix a = random_matrix(rng, n, false), b = random_matrix(rng, n, false);
        const RationalMatrix ab = a * b;
        CHECK(det_exact(ab) == det_exact(a) * det_exact(b));
    }
}

TEST_CASE("pivot search tracks the sign") {
    RationalMatrix m(2, 2);
    m << Rational(0), Rational(1), Rational(1), Rational(0);
    CHECK(det_exact(m) == Rational(-1));

    RationalMatrix z(3, 3);
    z << Rational(0), Rational(0), Rational(2), Rational(0), Rational(3), Rational(0), Rational(5), Rational(0),
        Rational(0);
    CHECK(det_exact(z) == Rational(-30));
}

TEST_CASE("repeated rows give zero") {
    RationalMatrix m(3, 3);
    m << Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6), Rational(1), Rational(2),
        Rational(3);
    CHECK(det_exact(m).is_zero());
}

TEST_CASE("det_exact works on blocks") {
    RationalMatrix m = RationalMatrix::Identity(4, 4) * Rational(3);
    CHECK(det_exact(m.topLeftCorner(2, 2)) == Rational(9));
}

TEST_CASE("non-square raises") {
    CHECK_THROWS_AS(det_exact(RationalMatrix(2, 3)), DomainError);
}
