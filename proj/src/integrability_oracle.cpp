#include "moishezon/integrability_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>

#include "moishezon/errors.hpp"

namespace moishezon {

namespace {

double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// log2 of the Monte Carlo mass of shell j.
double shell_log2_mass(const std::vector<double>& alphas, const std::vector<double>& betas, double k, int shell,
                       std::int64_t samples, std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(shell), 0x5eedu};
    std::mt19937_64 rng(seq);

    const std::size_t p = alphas.size();
    const double log_r = -shell * std::log(2.0);
    std::vector<double> log_outer(p), log_inner(p);
    double log_volume = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
        log_outer[i] = log_r / alphas[i];
        log_inner[i] = (log_r - std::log(2.0)) / alphas[i];
        log_volume += std::log(std::numbers::pi) + 2.0 * log_outer[i];
    }

    // Log-sum-exp accumulation: the integrand spans many orders of magnitude.
    double running_max = -std::numeric_limits<double>::infinity();
    double scaled_sum = 0.0;
    std::vector<double> log_rho(p);
    for (std::int64_t s = 0; s < samples; ++s) {
        bool outside_inner = false;
        for (std::size_t i = 0; i < p; ++i) {
            // Uniform in a disc of radius R: rho = R sqrt(u).
            const double u = std::max(unit_uniform(rng), 0x1.0p-60);
            log_rho[i] = log_outer[i] + 0.5 * std::log(u);
            if (log_rho[i] > log_inner[i]) outside_inner = true;
        }
        if (!outside_inner) continue;

        double weight_sum = 0.0;
        double log_monomial = 0.0;
        for (std::size_t i = 0; i < p; ++i) {
            weight_sum += std::exp(2.0 * alphas[i] * log_rho[i]);
            log_monomial += 2.0 * betas[i] * log_rho[i];
        }
        const double log_f = log_monomial - k * std::log(weight_sum);
        if (log_f > running_max) {
            scaled_sum = scaled_sum * std::exp(running_max - log_f) + 1.0;
            running_max = log_f;
        } else {
            scaled_sum += std::exp(log_f - running_max);
        }
    }
    if (scaled_sum == 0.0) return -std::numeric_limits<double>::infinity();
    const double log_mass = log_volume + running_max + std::log(scaled_sum) - std::log(static_cast<double>(samples));
    return log_mass / std::log(2.0);
}

double least_squares_slope(const std::vector<double>& y) {
    const double n = static_cast<double>(y.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        mean_x += static_cast<double>(j);
        mean_y += y[j];
    }
    mean_x /= n;
    mean_y /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        const double dx = static_cast<double>(j) - mean_x;
        sxy += dx * (y[j] - mean_y);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace

const char* to_string(MembershipVerdict v) {
    switch (v) {
        case MembershipVerdict::member: return "member";
        case MembershipVerdict::nonmember: return "nonmember";
        case MembershipVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

OracleResult mc_membership_oracle(const MonomialWeight& w, const ExponentVector& beta, std::int64_t samples,
                                  std::uint64_t seed, const OracleConfig& config) {
    w.validate();
    if (static_cast<int>(beta.size()) != w.p()) throw DomainError("oracle: exponent vector length differs from weight");
    if (samples < 10000) throw DomainError("oracle: at least 10^4 samples are required");
    if (config.shells < 3) throw DomainError("oracle: need at least 3 shells");

    std::vector<double> alphas, betas;
    for (const auto& a : w.alphas) alphas.push_back(a.to_double());
    for (auto b : beta) {
        if (b < 0) throw DomainError("oracle: exponent vector must be nonnegative");
        betas.push_back(static_cast<double>(b));
    }
    const double k = w.k.to_double();
    const std::int64_t per_shell = std::max<std::int64_t>(1, samples / config.shells);

    std::vector<std::future<double>> jobs;
    jobs.reserve(static_cast<std::size_t>(config.shells));
    for (int j = 0; j < config.shells; ++j) {
        jobs.push_back(std::async(std::launch::async, shell_log2_mass, std::cref(alphas), std::cref(betas), k, j,
                                  per_shell, seed));
    }
    OracleResult result;
    for (auto& job : jobs) result.log2_masses.push_back(job.get());

    Rational sum(0);
    for (std::size_t j = 0; j < beta.size(); ++j) sum += Rational(beta[j] + 1) / w.alphas[j];
    result.predicted_slope = -(2.0 * sum.to_double() - 2.0 * k);

    const bool finite = std::all_of(result.log2_masses.begin(), result.log2_masses.end(),
                                    [](double v) { return std::isfinite(v); });
    result.slope = finite ? least_squares_slope(result.log2_masses) : std::numeric_limits<double>::quiet_NaN();
    if (!finite || std::abs(result.slope) < config.margin) {
        result.verdict = MembershipVerdict::inconclusive;
    } else {
        result.verdict = result.slope < 0 ? MembershipVerdict::member : MembershipVerdict::nonmember;
    }
    return result;
}

}  // namespace moishezon
