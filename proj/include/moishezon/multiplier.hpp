#pragma once

/*
 * Multiplier ideals of monomial and SNC weights.
 *
 * For phi_k = (k/2) log(|z_1|^{2 a_1} + ... + |z_p|^{2 a_p}) the multiplier
 * ideal at the origin is the monomial ideal spanned by z^beta with
 *
 *     sum_j (beta_j + 1) / a_j  >  k          (strict)
 *
 * The rational prefactor c of a weight c * phi is folded into k.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "moishezon/rational.hpp"

namespace moishezon {

using ExponentVector = std::vector<std::int64_t>;

struct MonomialWeight {
    std::vector<Rational> alphas;
    Rational k;

    /// Throws DomainError unless p >= 1, every alpha > 0 and k >= 0.
    void validate() const;
    int p() const { return static_cast<int>(alphas.size()); }
};

struct MonomialIdeal {
    int p = 0;
    /// Minimal generators, lexicographically descending.
    std::vector<ExponentVector> generators;

    bool contains(const ExponentVector& beta) const;
    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

struct SncDivisor {
    std::vector<Rational> coeffs;
};

/// sum_j (beta_j + 1) / alpha_j.
Rational weighted_exponent_sum(const MonomialWeight& w, const ExponentVector& beta);

/// The strict staircase inequality.
bool in_multiplier_ideal(const MonomialWeight& w, const ExponentVector& beta);

/// Minimal generators, found inside the box prod_j [0, ceil(k alpha_j)].
MonomialIdeal monomial_multiplier_generators(const MonomialWeight& w);

/// max(0, floor(k alpha) - p + 1).
std::int64_t equal_alpha_power(const Rational& alpha, const Rational& k, int p);

std::vector<std::int64_t> snc_floors(const SncDivisor& d);

struct ChartStep {
    int step;                       ///< 1-based blow-up index
    std::int64_t log_coefficient;   ///< m in m log|w_2| + (1/2) log(|w_1|^2 + |w_2|^{2 r})
    std::int64_t remaining_exponent;///< r
};

struct LogResolution {
    std::vector<std::int64_t> multiplicities;  ///< coefficient of D_j in D
    std::vector<ChartStep> chart_trace;
};

/// Blow-up recursion for (1/2) log(|z_1|^2 + |z_2|^{2 alpha}) in the chart
/// z_1 = w_1 w_2, z_2 = w_2.
LogResolution binomial_log_resolution(std::int64_t alpha);

struct IntegrabilityExponent {
    Rational e;       ///< 2 sum (beta_j + 1)/alpha_j - 2k - 1
    bool converges;   ///< e > -1
};

IntegrabilityExponent integrability_exponent(const MonomialWeight& w, const ExponentVector& beta);

/// #{beta : sum (beta_j + 1)/alpha_j <= k}.
std::int64_t colength(const MonomialWeight& w);

}  // namespace moishezon
