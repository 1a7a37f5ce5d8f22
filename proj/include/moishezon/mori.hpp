#pragma once

/*
 * Numeric validators for extremal contractions of a blow-up pi: X~ -> X
 * along a smooth center Y of codimension r, followed by a Mori
 * contraction f: X~ -> Z.
 *
 * Everything here is a feasibility predicate over integer (or rational)
 * profiles; none of it proves existence of a contraction.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "moishezon/rational.hpp"

namespace moishezon {

struct ContractionData {
    int n = 0;                               ///< dim X
    std::optional<int> r;                    ///< codim of the blow-up center
    std::optional<int> dim_f;                ///< dimension of a nontrivial fiber
    std::optional<int> dim_a;                ///< dim A(R), the exceptional locus
    std::optional<int> length;               ///< l(R)
    std::optional<Rational> discrepancy_a;   ///< K = f*K_Z + a E
    std::optional<int> codim_fe;             ///< codim f(E)

    /// Throws DomainError on violated field invariants.
    void validate() const;
};

nlohmann::json contraction_to_json(const ContractionData& c);
/// Throws SchemaError on malformed profiles.
ContractionData contraction_from_json(const nlohmann::json& j);

/// One line of a bound report.
struct InequalityCheck {
    std::string name;
    std::string statement;
    bool holds;
};

/// 0 < -K.C <= n + 1.
bool cone_length_valid(int n, const Rational& minus_k_dot);

/// dim F + dim A(R) >= n + l(R) - 1. DomainError if a field is unset.
bool wisniewski_holds(const ContractionData& c);
InequalityCheck wisniewski_check(const ContractionData& c);

struct DivisorialBounds {
    int n;
    int r;
    Rational a_lower;        ///< a > a_lower (strict)
    Rational a_upper;        ///< a <= codim f(E) - 1 <= a_upper
    int codim_fe_min;        ///< codim f(E) >= r + 1, forced by a > r - 1 and a <= codim f(E) - 1
    int codim_fe_max;        ///< codim f(E) <= n + 1 - r
    bool feasible;           ///< the interval for a is nonempty
    Rational dim_y_bound;    ///< dim Y > (n - 1) / 2 (strict)
    int min_dim_y;           ///< smallest integer above dim_y_bound
    /// codim Y - 1 <= dim f(E) < dim Y, rederived from the three inequalities
    /// for every admissible codim f(E); true when the profile is infeasible.
    bool fiber_chain_consistent;
    std::vector<InequalityCheck> checks;
};

/// Non-nef divisorial case. DomainError unless 2 <= r <= n - 1.
DivisorialBounds divisorial_bounds(int n, int r);

/// Checks a concrete (a, codim f(E)) against the three divisorial inequalities.
std::vector<InequalityCheck> divisorial_profile_checks(int n, int r, const Rational& a, int codim_fe);

/// ceil((n + 1) / 2), from dim Y >= l(R) + 1 and l(R) >= r.
int small_contraction_min_dim_y(int n, int r = 2);

struct NormalBundleEuler {
    Rational chi;
    bool deformation_escape;  ///< chi > 0
};

/// chi(N_{C/X}) = -K_X.C + (n - 3)(1 - g).
NormalBundleEuler chi_normal_bundle(int n, std::int64_t genus, const Rational& kx_dot_c);

/// x with (n - 1) x = -2 - K_Z.C: degree of O(E) on a section ruling.
Rational ruling_e_degree(int n, const Rational& kz_dot_c);

struct SplitDegree {
    Rational a;
    bool integral;
};

/// a = (-deg K_X|_{P^{n-2}} - n + 1) / 2.
SplitDegree contracted_normal_split_degree(int n, const Rational& k_line_deg);

/// (dim Y, a) == (2, -1).
bool theorem_i_pair_check(int dim_y, std::int64_t split_a);

struct SurfaceCenterSplit {
    std::int64_t a;
    bool k_negative_on_y;      ///< deg K_X|Y = -3 - 2a < 0
    std::int64_t hilb_dim_x;   ///< h0(O(1) + O(a)^2) on a line, when a >= 0
    bool line_deforms_off_y;   ///< a >= 0 and hilb_dim_x > 2
    bool admissible;           ///< K negative on Y and the line does not escape
};

/// Case analysis for a center Y = P2 with N = O(a)^2 in dimension 4.
SurfaceCenterSplit surface_center_split(std::int64_t a);

}  // namespace moishezon
