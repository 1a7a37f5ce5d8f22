#pragma once

/*
 * Explicit Moishezon constructions as data, run through the engines.
 *
 * Each builder returns a ConstructionReport whose claims pair a closed-form
 * expected value with the value the engines compute; equality is exact.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "moishezon/linalg.hpp"
#include "moishezon/rational.hpp"

namespace moishezon {

using ClaimValue = std::variant<Rational, std::vector<Rational>, bool>;

std::string format_value(const ClaimValue& v);

struct Claim {
    std::string description;
    ClaimValue expected;
    ClaimValue computed;
    bool pass;
    std::string anchor;
};

struct ConstructionReport {
    std::string name;
    std::map<std::string, std::string> parameters;
    std::vector<Claim> claims;

    void add(std::string description, ClaimValue expected, ClaimValue computed, std::string anchor);
    bool all_pass() const;
    std::size_t failures() const;
};

struct KollarOptions {
    /// Replaces the adjunction nu of the center (fault injection).
    std::optional<Rational> nu_override;
};

/// P3 blown up along a (3, m) curve on a smooth quadric, contracted along L1.
ConstructionReport build_kollar_tower(std::int64_t m, const KollarOptions& options = {});

/// Quadric-quartic 3-fold blown up along a rational curve of degree d with
/// normal bundle O(-1)^2, contracted along the other ruling.
ConstructionReport build_oguiso_tower(std::int64_t d);

/// Hypersurface of degree 2n-1 in P^{n+1} blown up along a line with
/// normal bundle O(-1)^{n-1}, contracted along the P1 direction.
ConstructionReport build_flip_family(int n);

using ObstructionCoefficients = std::map<std::pair<int, int>, Rational>;  ///< (i, p) -> h_{i,p}

struct ObstructionMatrix {
    int n;
    RationalMatrix entries;  ///< 2n x 2n
};

/// Row q, column i holds h_{i,q}; row q, column n + i holds h_{i,q-1}.
/// Missing coefficients are zero; out-of-range keys raise DomainError.
ObstructionMatrix obstruction_matrix(int n, const ObstructionCoefficients& coeffs);

/// h_{i,i} = lambda_i, h_{i,n-1+i} = mu_i, everything else zero.
ObstructionCoefficients structured_coefficients(const std::vector<Rational>& lambda, const std::vector<Rational>& mu);

/// lambda_i = 1, mu_i = i + 1. Consecutive ratios lambda_i/mu_i are distinct,
/// which the determinant needs (equal ratios make it vanish).
ObstructionCoefficients default_structured_coefficients(int n);

/// Every h_{i,p} drawn uniformly from the integers in [-1000, 1000].
ObstructionCoefficients random_coefficients(int n, std::uint64_t seed);

/// Structured determinant nonzero (seed 0 uses the default lambda/mu, other
/// seeds draw lambda/mu from [-1000, 1000] \ {0}) and the normal-bundle
/// degree from the Euler sequence equals -(n - 1).
bool generic_normal_bundle_check(int n, std::uint64_t seed = 0);

/// Degree of N_{P1/Z} from 0 -> N -> O(1)^n -> O(2n - 1) -> 0.
std::int64_t euler_sequence_normal_degree(int n);

ConstructionReport normal_bundle_report(int n);
ConstructionReport quadric_curve_report(int max_degree = 6);
std::vector<ConstructionReport> mori_reports();

struct ReferenceEntry {
    std::string name;
    std::string content;
    std::string anchor;
};

/// Classification constants and documented-only examples; not computed.
std::vector<ReferenceEntry> reference_entries();

struct VerifyOptions {
    /// Keep reports whose name contains this string. An explicitly empty
    /// filter selects nothing.
    std::optional<std::string> filter;
    std::optional<Rational> kollar_nu_override;
};

/// All reports, sorted by name.
std::vector<ConstructionReport> verify_all(const VerifyOptions& options = {});

nlohmann::json ledger_to_json(const std::vector<ConstructionReport>& reports);
/// Columns: construction, claim, expected, computed, status, anchor.
std::string ledger_to_table(const std::vector<ConstructionReport>& reports);

}  // namespace moishezon
