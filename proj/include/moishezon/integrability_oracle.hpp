#pragma once

/*
 * Monte Carlo check of local integrability of |z^beta|^2 exp(-2 phi_k),
 * independent of the exact exponent computation.
 *
 * Shell j is the polydisc of weighted radius r_j = 2^{-j} (coordinate radii
 * r_j^{1/alpha_i}) minus the one of radius r_j / 2. The integrand is bounded
 * on every shell, so each shell mass is a plain Monte Carlo average. The
 * integral near the origin converges iff the shell masses decay, i.e. iff
 * the least-squares slope of log2(mass_j) against j is negative.
 *
 * Heuristic: the verdict is "inconclusive" when |slope| < margin.
 */

#include <cstdint>
#include <vector>

#include "moishezon/multiplier.hpp"

namespace moishezon {

enum class MembershipVerdict { member, nonmember, inconclusive };

const char* to_string(MembershipVerdict v);

struct OracleConfig {
    int shells = 12;
    double margin = 0.15;
};

struct OracleResult {
    MembershipVerdict verdict;
    double slope;                    ///< fitted d log2(mass) / dj
    double predicted_slope;          ///< -(e + 1)
    std::vector<double> log2_masses; ///< one per shell
};

/// Deterministic in (w, beta, samples, seed); shells are sampled in parallel
/// from independently seeded streams. Requires samples >= 10^4.
OracleResult mc_membership_oracle(const MonomialWeight& w, const ExponentVector& beta, std::int64_t samples,
                                  std::uint64_t seed, const OracleConfig& config = {});

}  // namespace moishezon
