#pragma once

/*
 * Top-intersection calculus for Picard-rank-1 varieties and their blow-ups
 * along a smooth curve.
 *
 * A SpaceModel stores the top intersection form on a divisor basis of
 * rank 1 (H) or rank 2 (pi*H, E). Divisor classes are Rational vectors in
 * that basis; curve classes are stored by their pairings with the basis.
 *
 * Blow-up conventions. Let X be smooth of dimension n, C a smooth curve of
 * genus g with H.C = d and nu = deg c1(N_{C/X}), and E = P(N*) the
 * exceptional divisor with xi = c1(O_{P(N*)}(1)). We use
 *
 *     O(E)|_E = O_{P(N*)}(-1),  i.e.  c1(O(E))|_E = -xi,
 *     integral of xi^{n-2} over a fiber = 1,
 *     xi^{n-1} = c1(N*) xi^{n-2}     (higher Chern classes of N* vanish on a curve).
 *
 * Every table entry follows:
 *
 *     (pi*H)^n           = H^n
 *     (pi*H)^a E^b       = 0                 for 1 <= b <= n-2
 *     (pi*H) E^{n-1}     = (-1)^n d
 *     E^n                = (-1)^n nu
 *
 * and K = pi*K_X + (n-2) E. The fiber line ell of E -> C pairs (0, -1).
 *
 * All values are immutable after construction; operations are pure.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moishezon/linalg.hpp"
#include "moishezon/rational.hpp"

namespace moishezon {

using DivisorClass = RationalVector;
using Exponents = std::vector<int>;

struct CurveClass {
    std::string name;
    RationalVector pairings;

    friend bool operator==(const CurveClass& a, const CurveClass& b) {
        return a.name == b.name && a.pairings.size() == b.pairings.size() && a.pairings == b.pairings;
    }
};

struct CurveCenterData {
    std::int64_t genus = 0;
    Rational degree;
    Rational nu;
    int codim = 0;
};

class SpaceModel {
public:
    /// Validates that top_form has exactly one entry per degree-n monomial in
    /// the basis and that the canonical class is integral of the right length.
    SpaceModel(std::string name, int dim, std::vector<std::string> basis,
               std::map<Exponents, Rational> top_form, DivisorClass canonical,
               std::vector<CurveClass> curves = {});

    const std::string& name() const { return m_name; }
    int dim() const { return m_dim; }
    int rank() const { return static_cast<int>(m_basis.size()); }
    const std::vector<std::string>& basis() const { return m_basis; }
    const std::map<Exponents, Rational>& top_form() const { return m_top_form; }
    const DivisorClass& canonical() const { return m_canonical; }
    const std::vector<CurveClass>& curves() const { return m_curves; }

    /// Top intersection of the monomial with the given exponents.
    const Rational& top(const Exponents& exponents) const;

    const CurveClass& curve(const std::string& name) const;
    bool has_curve(const std::string& name) const;

    /// Copy of this model with one more registered curve class.
    SpaceModel with_curve(CurveClass curve) const;
    SpaceModel renamed(std::string name) const;

    /// i-th basis divisor as a class.
    DivisorClass generator(int index) const;

    friend bool operator==(const SpaceModel& a, const SpaceModel& b);

private:
    std::string m_name;
    int m_dim;
    std::vector<std::string> m_basis;
    std::map<Exponents, Rational> m_top_form;
    DivisorClass m_canonical;
    std::vector<CurveClass> m_curves;
};

/// All exponent vectors of length rank summing to dim, lexicographically descending.
std::vector<Exponents> degree_monomials(int rank, int dim);

SpaceModel projective_space(int n);
SpaceModel rank_one_space(int n, const Rational& top_degree, std::int64_t kappa, std::string name = {});

/// deg c1(N_{C/X}) = -K_X.C + 2g - 2.
Rational adjunction_nu(int n, std::int64_t genus, const Rational& kx_dot_c);

/// Curve center on a rank-1 base. When nu is supplied it must agree with
/// adjunction (K_X.C = kappa * degree), otherwise DomainError.
CurveCenterData curve_center(const SpaceModel& base, std::int64_t genus, const Rational& degree,
                             const std::optional<Rational>& nu = std::nullopt);

/// Center taken as given: nu is not checked against adjunction.
CurveCenterData curve_center_unchecked(const SpaceModel& base, std::int64_t genus, const Rational& degree,
                                       const Rational& nu);

SpaceModel blowup_along_curve(const SpaceModel& base, const CurveCenterData& center, std::string name = {});

/// Multilinear evaluation of D_1 ... D_n against the top form.
Rational intersect(const SpaceModel& space, std::span<const DivisorClass> classes);
/// z^n.
Rational intersect_power(const SpaceModel& space, const DivisorClass& z);

Rational pair_curve(const SpaceModel& space, const DivisorClass& z, const CurveClass& curve);
Rational pair_curve(const SpaceModel& space, const DivisorClass& z, const std::string& curve_name);

DivisorClass canonical_class(const SpaceModel& space);

/// Primitive integral class orthogonal to a contracted curve, normalized so
/// the first nonzero coordinate is positive (pi*H first).
DivisorClass descend_generator(const SpaceModel& space, const CurveClass& contracted);

/// t with z = t * generator; NotProportional otherwise.
std::int64_t descend_class(const SpaceModel& space, const DivisorClass& z, const DivisorClass& generator);

/// delta * pi*H - mu * E.
DivisorClass strict_transform_hypersurface(const SpaceModel& space, std::int64_t delta, std::int64_t mu);

/// N_{D/X}.L = K_D.L - K_X.L - C.L.
Rational divisor_normal_pairing(const Rational& kd_dot_l, const Rational& kx_dot_l, const Rational& c_dot_l);

/// Nef against the registered curves only; DomainError on an empty registry.
bool is_nef(const SpaceModel& space, const DivisorClass& z);
/// Nef against the registry and z^n > 0.
bool siu_big_check(const SpaceModel& space, const DivisorClass& z);
/// z^n / n!.
Rational euler_leading(const SpaceModel& space, const DivisorClass& z);

struct QuadricCurve {
    std::int64_t genus;
    std::int64_t degree;
    std::int64_t self_intersection;
    std::int64_t kq_dot;
};

/// Smooth curve of type (n, m) on P1 x P1, computed on the quadric's own
/// intersection form.
QuadricCurve curve_on_quadric(std::int64_t n, std::int64_t m);

/// P1 x P1 with basis (h1, h2), h1^2 = h2^2 = 0, h1.h2 = 1, K = (-2, -2).
SpaceModel quadric_surface();

}  // namespace moishezon
