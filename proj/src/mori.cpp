#include "moishezon/mori.hpp"

#include "moishezon/errors.hpp"
#include "moishezon/serialization.hpp"

namespace moishezon {

using nlohmann::json;

namespace {

int require_set(const std::optional<int>& field, const char* name) {
    if (!field) throw DomainError(std::string("contraction profile: field '") + name + "' is not set");
    return *field;
}

std::string str(const Rational& r) { return r.to_short_string(); }
std::string str(long long v) { return std::to_string(v); }

}  // namespace

void ContractionData::validate() const {
    if (n < 1) throw DomainError("contraction profile: n must be positive");
    if (dim_f && (*dim_f < 0 || *dim_f > n - 1)) throw DomainError("contraction profile: need 0 <= dim_f <= n - 1");
    if (r && (*r < 1 || *r > n - 1)) throw DomainError("contraction profile: need 1 <= r <= n - 1");
    if (length && *length < 1) throw DomainError("contraction profile: length must be at least 1");
    if (dim_a && (*dim_a < 0 || *dim_a > n)) throw DomainError("contraction profile: need 0 <= dim_a <= n");
    if (codim_fe && (*codim_fe < 1 || *codim_fe > n)) throw DomainError("contraction profile: need 1 <= codim_fe <= n");
}

json contraction_to_json(const ContractionData& c) {
    json j{{"n", c.n}};
    if (c.r) j["r"] = *c.r;
    if (c.dim_f) j["dim_f"] = *c.dim_f;
    if (c.dim_a) j["dim_a"] = *c.dim_a;
    if (c.length) j["length"] = *c.length;
    if (c.discrepancy_a) j["discrepancy_a"] = rational_to_json(*c.discrepancy_a);
    if (c.codim_fe) j["codim_fe"] = *c.codim_fe;
    return j;
}

ContractionData contraction_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("contraction profile must be a JSON object");
    auto get_int = [&](const char* field) -> std::optional<int> {
        if (!j.contains(field)) return std::nullopt;
        if (!j.at(field).is_number_integer()) throw SchemaError(std::string(field) + ": expected an integer");
        return j.at(field).get<int>();
    };
    ContractionData c;
    const auto n = get_int("n");
    if (!n) throw SchemaError("missing field \"n\"");
    c.n = *n;
    c.r = get_int("r");
    c.dim_f = get_int("dim_f");
    c.dim_a = get_int("dim_a");
    c.length = get_int("length");
    c.codim_fe = get_int("codim_fe");
    if (j.contains("discrepancy_a")) c.discrepancy_a = rational_from_json(j.at("discrepancy_a"), "discrepancy_a");
    try {
        c.validate();
    } catch (const DomainError& e) {
        throw SchemaError(e.what());
    }
    return c;
}

bool cone_length_valid(int n, const Rational& minus_k_dot) {
    return minus_k_dot.sign() > 0 && minus_k_dot <= Rational(n + 1);
}

InequalityCheck wisniewski_check(const ContractionData& c) {
    c.validate();
    const int f = require_set(c.dim_f, "dim_f");
    const int a = require_set(c.dim_a, "dim_a");
    const int l = require_set(c.length, "length");
    const int lhs = f + a;
    const int rhs = c.n + l - 1;
    return {"wisniewski", "dim F + dim A(R) = " + str(lhs) + " >= dim X + l(R) - 1 = " + str(rhs), lhs >= rhs};
}

bool wisniewski_holds(const ContractionData& c) { return wisniewski_check(c).holds; }

std::vector<InequalityCheck> divisorial_profile_checks(int n, int r, const Rational& a, int codim_fe) {
    return {
        {"discrepancy-lower", "a = " + str(a) + " > r - 1 = " + str(r - 1), a > Rational(r - 1)},
        {"fiber-count", "codim f(E) + r = " + str(codim_fe + r) + " <= n + 1 = " + str(n + 1), codim_fe + r <= n + 1},
        {"discrepancy-upper", "a = " + str(a) + " <= codim f(E) - 1 = " + str(codim_fe - 1),
         a <= Rational(codim_fe - 1)},
    };
}

DivisorialBounds divisorial_bounds(int n, int r) {
    if (r < 2 || r > n - 1) {
        throw DomainError("divisorial_bounds: need 2 <= r <= n - 1, got n = " + str(n) + ", r = " + str(r));
    }
    DivisorialBounds b{};
    b.n = n;
    b.r = r;
    b.a_lower = Rational(r - 1);
    b.codim_fe_max = n + 1 - r;
    b.a_upper = Rational(b.codim_fe_max - 1);
    b.codim_fe_min = r + 1;
    b.feasible = b.a_lower < b.a_upper;
    b.dim_y_bound = Rational(n - 1) / Rational(2);
    b.min_dim_y = static_cast<int>(b.dim_y_bound.floor().get_si()) + 1;

    // codim Y - 1 <= dim f(E) < dim Y for every admissible codim f(E).
    b.fiber_chain_consistent = true;
    for (int c = b.codim_fe_min; c <= b.codim_fe_max; ++c) {
        const int dim_fe = n - c;
        if (!(r - 1 <= dim_fe && dim_fe < n - r)) b.fiber_chain_consistent = false;
    }

    const int dim_y = n - r;
    b.checks = {
        {"discrepancy-interval", "r - 1 = " + str(b.a_lower) + " < a <= n - r = " + str(b.a_upper) + " is nonempty",
         b.feasible},
        {"center-dimension", "dim Y = " + str(dim_y) + " > (n - 1)/2 = " + str(b.dim_y_bound),
         Rational(dim_y) > b.dim_y_bound},
        {"fiber-chain", "codim Y - 1 <= dim f(E) < dim Y for codim f(E) in [" + str(b.codim_fe_min) + ", " +
                            str(b.codim_fe_max) + "]",
         b.fiber_chain_consistent},
    };
    return b;
}

int small_contraction_min_dim_y(int n, int r) {
    if (r < 2) throw DomainError("small_contraction_min_dim_y: r must be at least 2");
    // dim Y >= l(R) + 1 >= r + 1 = n - dim Y + 1, i.e. 2 dim Y >= n + 1.
    return static_cast<int>((Rational(n + 1) / Rational(2)).ceil().get_si());
}

NormalBundleEuler chi_normal_bundle(int n, std::int64_t genus, const Rational& kx_dot_c) {
    if (genus < 0) throw DomainError("chi_normal_bundle: genus must be nonnegative");
    const Rational chi = -kx_dot_c + Rational(n - 3) * Rational(1 - genus);
    return {chi, chi.sign() > 0};
}

Rational ruling_e_degree(int n, const Rational& kz_dot_c) {
    if (n < 3) throw DomainError("ruling_e_degree: n must be at least 3");
    return (Rational(-2) - kz_dot_c) / Rational(n - 1);
}

SplitDegree contracted_normal_split_degree(int n, const Rational& k_line_deg) {
    if (n < 3) throw DomainError("contracted_normal_split_degree: n must be at least 3");
    const Rational a = (-k_line_deg - Rational(n) + Rational(1)) / Rational(2);
    return {a, a.is_integer()};
}

bool theorem_i_pair_check(int dim_y, std::int64_t split_a) { return dim_y == 2 && split_a == -1; }

SurfaceCenterSplit surface_center_split(std::int64_t a) {
    SurfaceCenterSplit s{};
    s.a = a;
    s.k_negative_on_y = -3 - 2 * a < 0;
    // Line C in Y = P2: N_{C/X} = O(1) + O(a)^2.
    s.hilb_dim_x = 2 + (a >= 0 ? 2 * (a + 1) : 0);
    s.line_deforms_off_y = a >= 0 && s.hilb_dim_x > 2;
    s.admissible = s.k_negative_on_y && !s.line_deforms_off_y;
    return s;
}

}  // namespace moishezon
