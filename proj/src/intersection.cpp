#include "moishezon/intersection.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "moishezon/errors.hpp"

namespace moishezon {

namespace {

void check_length(const SpaceModel& space, const RationalVector& v, const char* what) {
    if (v.size() != space.rank()) {
        throw DomainError(std::string(what) + " has " + std::to_string(v.size()) +
                          " coordinates, space '" + space.name() + "' has rank " + std::to_string(space.rank()));
    }
}

void collect_monomials(int rank, int remaining, Exponents& current, std::vector<Exponents>& out) {
    const auto slot = current.size();
    if (static_cast<int>(slot) == rank - 1) {
        current.push_back(remaining);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current.push_back(e);
        collect_monomials(rank, remaining - e, current, out);
        current.pop_back();
    }
}

mpz_class lcm_of_denominators(const RationalVector& v) {
    mpz_class l = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        mpz_class d = v(i).denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

}  // namespace

std::vector<Exponents> degree_monomials(int rank, int dim) {
    std::vector<Exponents> out;
    if (rank <= 0) return out;
    Exponents current;
    collect_monomials(rank, dim, current, out);
    return out;
}

SpaceModel::SpaceModel(std::string name, int dim, std::vector<std::string> basis,
                       std::map<Exponents, Rational> top_form, DivisorClass canonical,
                       std::vector<CurveClass> curves)
    : m_name(std::move(name)),
      m_dim(dim),
      m_basis(std::move(basis)),
      m_top_form(std::move(top_form)),
      m_canonical(std::move(canonical)),
      m_curves(std::move(curves)) {
    if (m_dim < 1) throw DomainError("space dimension must be positive");
    if (m_basis.empty() || m_basis.size() > 2) throw DomainError("divisor basis must have rank 1 or 2");

    const auto expected = degree_monomials(rank(), m_dim);
    if (m_top_form.size() != expected.size()) {
        throw DomainError("top form of '" + m_name + "' has " + std::to_string(m_top_form.size()) +
                          " entries, expected " + std::to_string(expected.size()));
    }
    for (const auto& e : expected) {
        if (!m_top_form.contains(e)) throw DomainError("top form of '" + m_name + "' misses a degree-n monomial");
    }
    check_length(*this, m_canonical, "canonical class");
    for (Eigen::Index i = 0; i < m_canonical.size(); ++i) {
        if (!m_canonical(i).is_integer()) throw DomainError("canonical class must have integer coordinates");
    }
    for (const auto& c : m_curves) check_length(*this, c.pairings, ("curve '" + c.name + "'").c_str());
}

const Rational& SpaceModel::top(const Exponents& exponents) const {
    auto it = m_top_form.find(exponents);
    if (it == m_top_form.end()) throw DomainError("monomial is not of top degree in '" + m_name + "'");
    return it->second;
}

bool SpaceModel::has_curve(const std::string& name) const {
    return std::any_of(m_curves.begin(), m_curves.end(), [&](const CurveClass& c) { return c.name == name; });
}

const CurveClass& SpaceModel::curve(const std::string& name) const {
    for (const auto& c : m_curves) {
        if (c.name == name) return c;
    }
    throw DomainError("no curve '" + name + "' registered on '" + m_name + "'");
}

SpaceModel SpaceModel::with_curve(CurveClass curve) const {
    if (has_curve(curve.name)) throw DomainError("curve '" + curve.name + "' already registered");
    auto curves = m_curves;
    curves.push_back(std::move(curve));
    return SpaceModel(m_name, m_dim, m_basis, m_top_form, m_canonical, std::move(curves));
}

SpaceModel SpaceModel::renamed(std::string name) const {
    return SpaceModel(std::move(name), m_dim, m_basis, m_top_form, m_canonical, m_curves);
}

DivisorClass SpaceModel::generator(int index) const {
    if (index < 0 || index >= rank()) throw DomainError("basis index out of range");
    DivisorClass d = DivisorClass::Constant(rank(), Rational(0));
    d(index) = Rational(1);
    return d;
}

bool operator==(const SpaceModel& a, const SpaceModel& b) {
    return a.m_name == b.m_name && a.m_dim == b.m_dim && a.m_basis == b.m_basis &&
           a.m_top_form == b.m_top_form && a.m_canonical == b.m_canonical && a.m_curves == b.m_curves;
}

SpaceModel projective_space(int n) {
    if (n < 1) throw DomainError("projective_space: n must be at least 1");
    return SpaceModel("P" + std::to_string(n), n, {"H"}, {{Exponents{n}, Rational(1)}},
                      make_vector({Rational(-(n + 1))}));
}

SpaceModel rank_one_space(int n, const Rational& top_degree, std::int64_t kappa, std::string name) {
    if (n < 1) throw DomainError("rank_one_space: n must be at least 1");
    if (top_degree.sign() <= 0) throw DomainError("rank_one_space: H^n must be positive");
    if (name.empty()) name = "X" + std::to_string(n) + "[H^n=" + top_degree.to_short_string() + "]";
    return SpaceModel(std::move(name), n, {"H"}, {{Exponents{n}, top_degree}}, make_vector({Rational(kappa)}));
}

Rational adjunction_nu(int /*n*/, std::int64_t genus, const Rational& kx_dot_c) {
    if (genus < 0) throw DomainError("adjunction_nu: genus must be nonnegative");
    return -kx_dot_c + Rational(2 * genus - 2);
}

CurveCenterData curve_center_unchecked(const SpaceModel& base, std::int64_t genus, const Rational& degree,
                                       const Rational& nu) {
    if (genus < 0) throw DomainError("curve center: genus must be nonnegative");
    return CurveCenterData{genus, degree, nu, base.dim() - 1};
}

CurveCenterData curve_center(const SpaceModel& base, std::int64_t genus, const Rational& degree,
                             const std::optional<Rational>& nu) {
    if (base.rank() != 1) throw DomainError("curve center: base must have Picard rank 1");
    const Rational kx_dot_c = base.canonical()(0) * degree;
    const Rational derived = adjunction_nu(base.dim(), genus, kx_dot_c);
    if (nu && *nu != derived) {
        throw DomainError("curve center: supplied nu = " + nu->to_short_string() +
                          " disagrees with adjunction nu = " + derived.to_short_string());
    }
    return curve_center_unchecked(base, genus, degree, derived);
}

SpaceModel blowup_along_curve(const SpaceModel& base, const CurveCenterData& center, std::string name) {
    if (base.rank() != 1) throw DomainError("blowup_along_curve: base must have Picard rank 1");
    const int n = base.dim();
    if (n < 3) throw DomainError("blowup_along_curve: base dimension must be at least 3");
    if (center.codim != n - 1) {
        throw DomainError("blowup_along_curve: center codimension " + std::to_string(center.codim) +
                          " is not dim - 1 = " + std::to_string(n - 1));
    }

    const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    std::map<Exponents, Rational> form;
    for (int b = 0; b <= n; ++b) {
        const int a = n - b;
        Rational value(0);
        if (b == 0) {
            value = base.top({n});
        } else if (b == n - 1) {
            value = sign * center.degree;
        } else if (b == n) {
            value = sign * center.nu;
        }
        form.emplace(Exponents{a, b}, value);
    }

    DivisorClass canonical = make_vector({base.canonical()(0), Rational(n - 2)});
    if (name.empty()) name = "Bl(" + base.name() + ")";
    std::vector<CurveClass> curves{{"ell", make_vector({Rational(0), Rational(-1)})}};
    return SpaceModel(std::move(name), n, {"pi*H", "E"}, std::move(form), std::move(canonical), std::move(curves));
}

Rational intersect(const SpaceModel& space, std::span<const DivisorClass> classes) {
    if (static_cast<int>(classes.size()) != space.dim()) {
        throw DomainError("intersect: " + std::to_string(classes.size()) + " classes given, space '" +
                          space.name() + "' has dimension " + std::to_string(space.dim()));
    }
    const int rho = space.rank();
    // Expand the product of linear forms into a polynomial in the basis,
    // then contract monomial-wise with the top form.
    std::map<Exponents, Rational> product{{Exponents(rho, 0), Rational(1)}};
    for (const auto& d : classes) {
        check_length(space, d, "divisor class");
        std::map<Exponents, Rational> next;
        for (const auto& [mono, coeff] : product) {
            for (int i = 0; i < rho; ++i) {
                if (d(i).is_zero()) continue;
                Exponents e = mono;
                ++e[i];
                next[e] += coeff * d(i);
            }
        }
        product = std::move(next);
    }
    Rational total(0);
    for (const auto& [mono, coeff] : product) total += coeff * space.top(mono);
    return total;
}

Rational intersect_power(const SpaceModel& space, const DivisorClass& z) {
    std::vector<DivisorClass> copies(static_cast<std::size_t>(space.dim()), z);
    return intersect(space, copies);
}

Rational pair_curve(const SpaceModel& space, const DivisorClass& z, const CurveClass& curve) {
    check_length(space, z, "divisor class");
    check_length(space, curve.pairings, "curve class");
    return z.dot(curve.pairings);
}

Rational pair_curve(const SpaceModel& space, const DivisorClass& z, const std::string& curve_name) {
    return pair_curve(space, z, space.curve(curve_name));
}

DivisorClass canonical_class(const SpaceModel& space) { return space.canonical(); }

DivisorClass descend_generator(const SpaceModel& space, const CurveClass& contracted) {
    if (space.rank() != 2) throw DomainError("descend_generator: space must have Picard rank 2");
    check_length(space, contracted.pairings, "contracted curve");
    if (contracted.pairings(0).is_zero() && contracted.pairings(1).is_zero()) {
        throw DomainError("descend_generator: curve '" + contracted.name + "' pairs to zero with everything");
    }
    // (p, q) . (q, -p) = 0; clear denominators, then divide by the content.
    const mpz_class scale = lcm_of_denominators(contracted.pairings);
    mpz_class a = (contracted.pairings(1) * Rational(scale)).numerator();
    mpz_class b = -(contracted.pairings(0) * Rational(scale)).numerator();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    return make_vector({Rational(a), Rational(b)});
}

std::int64_t descend_class(const SpaceModel& space, const DivisorClass& z, const DivisorClass& generator) {
    check_length(space, z, "divisor class");
    check_length(space, generator, "generator");
    Eigen::Index pivot = -1;
    for (Eigen::Index i = 0; i < generator.size(); ++i) {
        if (!generator(i).is_zero()) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) throw DomainError("descend_class: generator is zero");
    const Rational t = z(pivot) / generator(pivot);
    if (!t.is_integer()) {
        throw NotProportional("class is a non-integral multiple " + t.to_short_string() + " of the generator");
    }
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        if (z(i) != t * generator(i)) throw NotProportional("class is not proportional to the generator");
    }
    return t.to_int64();
}

DivisorClass strict_transform_hypersurface(const SpaceModel& space, std::int64_t delta, std::int64_t mu) {
    if (space.rank() != 2) throw DomainError("strict_transform_hypersurface: space must be a blow-up");
    if (delta < 1 || mu < 0) throw DomainError("strict_transform_hypersurface: need delta >= 1 and mu >= 0");
    return make_vector({Rational(delta), Rational(-mu)});
}

Rational divisor_normal_pairing(const Rational& kd_dot_l, const Rational& kx_dot_l, const Rational& c_dot_l) {
    return kd_dot_l - kx_dot_l - c_dot_l;
}

bool is_nef(const SpaceModel& space, const DivisorClass& z) {
    if (space.curves().empty()) throw DomainError("is_nef: no curves registered on '" + space.name() + "'");
    return std::all_of(space.curves().begin(), space.curves().end(),
                       [&](const CurveClass& c) { return pair_curve(space, z, c).sign() >= 0; });
}

bool siu_big_check(const SpaceModel& space, const DivisorClass& z) {
    return is_nef(space, z) && intersect_power(space, z).sign() > 0;
}

Rational euler_leading(const SpaceModel& space, const DivisorClass& z) {
    return intersect_power(space, z) / factorial(space.dim());
}

SpaceModel quadric_surface() {
    return SpaceModel("P1xP1", 2, {"h1", "h2"},
                      {{Exponents{2, 0}, Rational(0)}, {Exponents{1, 1}, Rational(1)}, {Exponents{0, 2}, Rational(0)}},
                      make_vector({Rational(-2), Rational(-2)}),
                      {{"L1", make_vector({Rational(0), Rational(1)})}, {"L2", make_vector({Rational(1), Rational(0)})}});
}

QuadricCurve curve_on_quadric(std::int64_t n, std::int64_t m) {
    if (n < 0 || m < 0) throw DomainError("curve_on_quadric: bidegree must be nonnegative");
    const SpaceModel q = quadric_surface();
    // Type (n, m) means C.L1 = n and C.L2 = m, so C = m h1 + n h2.
    const DivisorClass c = make_vector({Rational(m), Rational(n)});
    const DivisorClass hyperplane = make_vector({Rational(1), Rational(1)});
    const std::vector<DivisorClass> cc{c, c}, ck{c, q.canonical()}, ch{c, hyperplane};
    const Rational self = intersect(q, cc);
    const Rational kq = intersect(q, ck);
    const Rational genus = (self + kq) / Rational(2) + Rational(1);
    return QuadricCurve{genus.to_int64(), intersect(q, ch).to_int64(), self.to_int64(), kq.to_int64()};
}

}  // namespace moishezon
