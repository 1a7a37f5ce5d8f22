#include "moishezon/multiplier.hpp"

#include <algorithm>
#include <functional>

#include "moishezon/errors.hpp"

namespace moishezon {

void MonomialWeight::validate() const {
    if (alphas.empty()) throw DomainError("monomial weight needs at least one alpha");
    for (const auto& a : alphas) {
        if (a.sign() <= 0) throw DomainError("monomial weight: alpha " + a.to_short_string() + " is not positive");
    }
    if (k.sign() < 0) throw DomainError("monomial weight: k must be nonnegative");
}

bool MonomialIdeal::contains(const ExponentVector& beta) const {
    return std::any_of(generators.begin(), generators.end(), [&](const ExponentVector& g) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (beta[j] < g[j]) return false;
        }
        return true;
    });
}

Rational weighted_exponent_sum(const MonomialWeight& w, const ExponentVector& beta) {
    if (static_cast<int>(beta.size()) != w.p()) throw DomainError("exponent vector length differs from weight");
    Rational s(0);
    for (std::size_t j = 0; j < beta.size(); ++j) {
        if (beta[j] < 0) throw DomainError("exponent vector must be nonnegative");
        s += Rational(beta[j] + 1) / w.alphas[j];
    }
    return s;
}

bool in_multiplier_ideal(const MonomialWeight& w, const ExponentVector& beta) {
    return weighted_exponent_sum(w, beta) > w.k;
}

MonomialIdeal monomial_multiplier_generators(const MonomialWeight& w) {
    w.validate();
    const int p = w.p();
    ExponentVector bound(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) bound[j] = (w.k * w.alphas[j]).ceil().get_si();

    MonomialIdeal ideal{p, {}};
    ExponentVector beta(static_cast<std::size_t>(p), 0);
    std::function<void(int)> walk = [&](int j) {
        if (j == p) {
            if (!in_multiplier_ideal(w, beta)) return;
            for (int i = 0; i < p; ++i) {
                if (beta[i] == 0) continue;
                --beta[i];
                const bool below = in_multiplier_ideal(w, beta);
                ++beta[i];
                if (below) return;
            }
            ideal.generators.push_back(beta);
            return;
        }
        for (std::int64_t v = 0; v <= bound[j]; ++v) {
            beta[j] = v;
            walk(j + 1);
        }
        beta[j] = 0;
    };
    walk(0);
    std::sort(ideal.generators.begin(), ideal.generators.end(), std::greater<>());
    return ideal;
}

std::int64_t equal_alpha_power(const Rational& alpha, const Rational& k, int p) {
    if (alpha.sign() <= 0) throw DomainError("equal_alpha_power: alpha must be positive");
    if (p < 1) throw DomainError("equal_alpha_power: p must be at least 1");
    const mpz_class power = (k * alpha).floor() - p + 1;
    return power < 0 ? 0 : power.get_si();
}

std::vector<std::int64_t> snc_floors(const SncDivisor& d) {
    std::vector<std::int64_t> out;
    out.reserve(d.coeffs.size());
    for (const auto& a : d.coeffs) {
        if (a.sign() < 0) throw DomainError("snc_floors: coefficients must be nonnegative");
        out.push_back(a.floor().get_si());
    }
    return out;
}

LogResolution binomial_log_resolution(std::int64_t alpha) {
    if (alpha < 1) throw DomainError("binomial_log_resolution: alpha must be a positive integer");
    LogResolution res;
    std::int64_t coefficient = 0;
    std::int64_t remaining = alpha;
    int step = 0;
    // m log|w2| + (1/2) log(|w1|^2 + |w2|^{2r})  --(w1 = u1 u2, w2 = u2)-->
    // (m + 1) log|u2| + (1/2) log(|u1|^2 + |u2|^{2(r - 1)})
    while (remaining > 0) {
        ++step;
        ++coefficient;
        --remaining;
        res.multiplicities.push_back(coefficient);
        res.chart_trace.push_back({step, coefficient, remaining});
    }
    return res;
}

IntegrabilityExponent integrability_exponent(const MonomialWeight& w, const ExponentVector& beta) {
    const Rational e = Rational(2) * weighted_exponent_sum(w, beta) - Rational(2) * w.k - Rational(1);
    return {e, e > Rational(-1)};
}

std::int64_t colength(const MonomialWeight& w) {
    w.validate();
    const int p = w.p();
    // Count beta with sum (beta_j + 1)/alpha_j <= k coordinate by coordinate.
    std::function<std::int64_t(int, const Rational&)> count = [&](int j, const Rational& budget) -> std::int64_t {
        if (j == p) return 1;
        std::int64_t total = 0;
        for (std::int64_t b = 0;; ++b) {
            Rational rest = budget - Rational(b + 1) / w.alphas[j];
            // The remaining coordinates each need at least 1/alpha_i.
            Rational floor_rest(0);
            for (int i = j + 1; i < p; ++i) floor_rest += Rational(1) / w.alphas[i];
            if (rest < floor_rest) break;
            total += count(j + 1, rest);
        }
        return total;
    };
    return count(0, w.k);
}

}  // namespace moishezon
