#include <doctest.h>

#include <cmath>

#include "moishezon/errors.hpp"
#include "moishezon/integrability_oracle.hpp"
#include "moishezon/multiplier.hpp"

using namespace moishezon;

namespace {

struct Case {
    MonomialWeight w;
    ExponentVector beta;
};

Rational q(const char* s) { return Rational::parse(s); }

std::vector<Case> cases() {
    return {
        {{{Rational(1), Rational(1)}, Rational(1)}, {0, 0}},
        {{{Rational(1), Rational(1)}, Rational(3)}, {0, 0}},
        {{{Rational(2), Rational(3)}, Rational(2)}, {2, 0}},
        {{{Rational(2), Rational(3)}, Rational(2)}, {3, 0}},
        {{{Rational(2), Rational(3)}, Rational(2)}, {0, 4}},
        {{{Rational(1), Rational(2), Rational(3)}, Rational(2)}, {0, 0, 0}},
        {{{Rational(1), Rational(2), Rational(3)}, Rational(2)}, {1, 0, 0}},
        {{{Rational(3), Rational(3)}, Rational(1)}, {1, 1}},
        {{{q("1/2")}, Rational(1)}, {0}},
        {{{q("5/2")}, Rational(2)}, {5}},
    };
}

}  // namespace

TEST_CASE("oracle agrees with the exponent on at least 95% of seeds when |e + 1| >= 1/5") {
    int agree = 0, total = 0;
    for (const auto& c : cases()) {
        const auto exponent = integrability_exponent(c.w, c.beta);
        REQUIRE(abs(exponent.e + Rational(1)) >= q("1/5"));
        const auto expected = exponent.converges ? MembershipVerdict::member : MembershipVerdict::nonmember;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto res = mc_membership_oracle(c.w, c.beta, 24000, seed);
            ++total;
            if (res.verdict == expected) ++agree;
        }
    }
    CHECK(agree * 100 >= 95 * total);
}

TEST_CASE("fitted slope tracks -(e + 1)") {
    for (const auto& c : cases()) {
        const auto exponent = integrability_exponent(c.w, c.beta);
        const auto res = mc_membership_oracle(c.w, c.beta, 60000, 3);
        CHECK(res.predicted_slope == doctest::Approx(-(exponent.e + Rational(1)).to_double()));
        CHECK(std::abs(res.slope - res.predicted_slope) < 0.15);
        CHECK(res.log2_masses.size() == 12);
    }
}

TEST_CASE("oracle is deterministic in the seed") {
    const Case c{{{Rational(2), Rational(3)}, Rational(2)}, {2, 1}};
    const auto a = mc_membership_oracle(c.w, c.beta, 12000, 99);
    const auto b = mc_membership_oracle(c.w, c.beta, 12000, 99);
    CHECK(a.slope == b.slope);
    CHECK(a.log2_masses == b.log2_masses);
    const auto other = mc_membership_oracle(c.w, c.beta, 12000, 100);
    CHECK(other.slope != a.slope);
}

TEST_CASE("boundary instance is inconclusive") {
    // e + 1 = 0: shell masses are flat.
    const auto res = mc_membership_oracle({{Rational(1)}, Rational(1)}, {0}, 60000, 5);
    CHECK(res.verdict == MembershipVerdict::inconclusive);
}

TEST_CASE("oracle argument checks") {
    const MonomialWeight w{{Rational(1)}, Rational(1)};
    CHECK_THROWS_AS(mc_membership_oracle(w, {0}, 9999, 1), DomainError);
    CHECK_THROWS_AS(mc_membership_oracle(w, {0, 0}, 10000, 1), DomainError);
    CHECK(std::string(to_string(MembershipVerdict::nonmember)) == "nonmember");
}
