#include "moishezon/catalog.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "moishezon/errors.hpp"
#include "moishezon/intersection.hpp"
#include "moishezon/mori.hpp"
#include "moishezon/serialization.hpp"

namespace moishezon {

using nlohmann::json;

namespace {

std::vector<Rational> to_std(const RationalVector& v) {
    return std::vector<Rational>(v.data(), v.data() + v.size());
}

std::string padded(std::int64_t v) {
    std::string s = std::to_string(v);
    return s.size() < 2 ? "0" + s : s;
}

json value_to_json(const ClaimValue& v) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return rational_to_json(x);
            } else if constexpr (std::is_same_v<T, bool>) {
                return x;
            } else {
                json arr = json::array();
                for (const auto& r : x) arr.push_back(rational_to_json(r));
                return arr;
            }
        },
        v);
}

std::int64_t draw(std::mt19937_64& rng, bool nonzero) {
    for (;;) {
        const auto v = static_cast<std::int64_t>(rng() % 2001) - 1000;
        if (!nonzero || v != 0) return v;
    }
}

}  // namespace

std::string format_value(const ClaimValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return x.to_short_string();
            } else if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else {
                std::string s = "(";
                for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].to_short_string();
                return s + ")";
            }
        },
        v);
}

void ConstructionReport::add(std::string description, ClaimValue expected, ClaimValue computed, std::string anchor) {
    const bool pass = expected == computed;
    claims.push_back({std::move(description), std::move(expected), std::move(computed), pass, std::move(anchor)});
}

bool ConstructionReport::all_pass() const { return failures() == 0; }

std::size_t ConstructionReport::failures() const {
    return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [](const Claim& c) { return !c.pass; }));
}

ConstructionReport build_kollar_tower(std::int64_t m, const KollarOptions& options) {
    if (m < 1) throw DomainError("build_kollar_tower: m must be at least 1");
    ConstructionReport report{"kollar-tower/m=" + padded(m), {{"m", std::to_string(m)}}, {}};
    const Rational M(m);

    const QuadricCurve curve = curve_on_quadric(3, m);
    report.add("genus of the (3,m) curve on the quadric", Rational(2 * m - 2), Rational(curve.genus),
               "kollar:center-genus");
    report.add("degree of the (3,m) curve", Rational(m + 3), Rational(curve.degree), "kollar:center-degree");

    const SpaceModel p3 = projective_space(3);
    const CurveCenterData center =
        options.nu_override ? curve_center_unchecked(p3, curve.genus, Rational(curve.degree), *options.nu_override)
                            : curve_center(p3, curve.genus, Rational(curve.degree));
    report.add("deg N_{C/P3} by adjunction", Rational(8) * M + Rational(6), center.nu, "kollar:normal-degree");

    SpaceModel x = blowup_along_curve(p3, center, "Bl_C(P3)")
                       .with_curve({"F", make_vector({Rational(0), Rational(-1)})})
                       .with_curve({"L1", make_vector({Rational(1), Rational(3)})})
                       .with_curve({"L2", make_vector({Rational(1), M})});
    const DivisorClass h = x.generator(0);
    const DivisorClass e = x.generator(1);

    report.add("E^3", Rational(-6) - Rational(8) * M, x.top({0, 3}), "kollar:exceptional-cube");
    report.add("pi*H . E^2", -(M + Rational(3)), x.top({1, 2}), "kollar:mixed-term");

    const DivisorClass g = descend_generator(x, x.curve("L1"));
    report.add("generator descended along L1", std::vector<Rational>{3, -1}, to_std(g), "kollar:generator");

    const Rational cube = intersect_power(x, g);
    report.add("generator^3", Rational(6) - M, cube, "kollar:generator-cube");
    const Rational expansion = Rational(27) * x.top({3, 0}) - Rational(27) * x.top({2, 1}) +
                               Rational(9) * x.top({1, 2}) - x.top({0, 3});
    report.add("27 H^3 - 27 H^2 E + 9 H E^2 - E^3", Rational(6) - M, expansion, "kollar:generator-cube");

    const DivisorClass k = canonical_class(x);
    report.add("K of the blow-up", std::vector<Rational>{-4, 1}, to_std(k), "kollar:canonical");
    const DivisorClass q = strict_transform_hypersurface(x, 2, 1);
    report.add("strict transform of the quadric", std::vector<Rational>{2, -1}, to_std(q), "kollar:quadric");
    report.add("K_{X_m} in units of the generator", Rational(-2), Rational(descend_class(x, k - q, g)),
               "kollar:canonical-descent");

    // K_Q.L = -2, K_P3.L = -4, C.L_i = (3, m).
    report.add("N_Q . L1 by adjunction", Rational(-1), divisor_normal_pairing(-2, -4, 3), "kollar:normal-pairing");
    report.add("N_Q . L2 by adjunction", Rational(2) - M, divisor_normal_pairing(-2, -4, M), "kollar:normal-pairing");
    report.add("Q~ . L1 on the blow-up", Rational(-1), pair_curve(x, q, "L1"), "kollar:normal-pairing");
    report.add("Q~ . L2 on the blow-up", Rational(2) - M, pair_curve(x, q, "L2"), "kollar:normal-pairing");

    report.add("generator . L2", Rational(3) - M, pair_curve(x, g, "L2"), "kollar:pairings");
    report.add("generator . F", Rational(1), pair_curve(x, g, "F"), "kollar:pairings");
    report.add("E . ell", Rational(-1), pair_curve(x, e, "ell"), "kollar:pairings");
    report.add("pi*H . ell", Rational(0), pair_curve(x, h, "ell"), "kollar:pairings");

    report.add("generator nef against registry", m <= 3, is_nef(x, g), "kollar:not-nef");
    report.add("generator nef against registry and cube > 0", m <= 3, siu_big_check(x, g), "kollar:siu");
    report.add("leading Euler coefficient", (Rational(6) - M) / Rational(6), euler_leading(x, g),
               "kollar:euler-leading");
    return report;
}

ConstructionReport build_oguiso_tower(std::int64_t d) {
    if (d < 1) throw DomainError("build_oguiso_tower: d must be at least 1");
    ConstructionReport report{"oguiso-tower/d=" + padded(d), {{"d", std::to_string(d)}}, {}};
    const Rational D(d);

    const SpaceModel base = rank_one_space(3, Rational(8), 0, "X(2,4)");
    const CurveCenterData center = curve_center(base, 0, D);
    report.add("deg N_{C/X} for N = O(-1)^2", Rational(-2), center.nu, "oguiso:normal-bundle");

    const SpaceModel x = blowup_along_curve(base, center, "Bl_C(X(2,4))")
                             .with_curve({"ell2", make_vector({D, Rational(-1)})});
    report.add("pi*H . E^2", -D, x.top({1, 2}), "oguiso:table");
    report.add("E^3", Rational(2), x.top({0, 3}), "oguiso:table");

    const DivisorClass g = descend_generator(x, x.curve("ell2"));
    report.add("generator descended along ell2", std::vector<Rational>{1, D}, to_std(g), "oguiso:generator");
    report.add("generator . ell2", Rational(0), pair_curve(x, g, "ell2"), "oguiso:generator");

    const Rational cube = intersect_power(x, g);
    report.add("generator^3", Rational(8) - D * D * D, cube, "oguiso:generator-cube");
    if (d == 2) report.add("cubic form vanishes", true, cube.is_zero(), "oguiso:vanishing-cubic");

    const DivisorClass k = canonical_class(x);
    report.add("K of the blow-up", std::vector<Rational>{0, 1}, to_std(k), "oguiso:canonical");
    report.add("K_{Y_d} in units of the generator", Rational(0), Rational(descend_class(x, k - x.generator(1), g)),
               "oguiso:calabi-yau");
    report.add("leading Euler coefficient", (Rational(8) - D * D * D) / Rational(6), euler_leading(x, g),
               "oguiso:euler-leading");
    return report;
}

std::int64_t euler_sequence_normal_degree(int n) {
    if (n < 2) throw DomainError("euler_sequence_normal_degree: n must be at least 2");
    // n copies of O(1) minus O(2n - 1).
    return static_cast<std::int64_t>(n) * 1 - (2 * static_cast<std::int64_t>(n) - 1);
}

ConstructionReport build_flip_family(int n) {
    if (n < 3) throw DomainError("build_flip_family: n must be at least 3");
    ConstructionReport report{"flip-family/n=" + padded(n), {{"n", std::to_string(n)}}, {}};
    const Rational N(n);

    const SpaceModel z = rank_one_space(n, Rational(2 * n - 1), n - 3, "Z(" + std::to_string(2 * n - 1) + ")");
    const CurveCenterData line = curve_center(z, 0, Rational(1));
    report.add("deg N_{P1/Z} by adjunction", -(N - Rational(1)), line.nu, "flip:normal-degree");
    report.add("deg N_{P1/Z} by the normal-bundle sequence", -(N - Rational(1)),
               Rational(euler_sequence_normal_degree(n)), "flip:normal-degree");

    const SpaceModel x = blowup_along_curve(z, line, "Bl_P1(Z)");
    const Rational kz_dot_c = z.canonical()(0) * line.degree;
    const Rational ruling = ruling_e_degree(n, kz_dot_c);
    report.add("deg O(E) on the section ruling", Rational(-1), ruling, "flip:fujiki-nakano");

    // The section ruling sigma pairs (1, x); adjunction on sigma needs K.sigma = -2 - x.
    const SpaceModel with_ruling = x.with_curve({"sigma", make_vector({Rational(1), ruling})});
    report.add("K . sigma + 2 + deg O(E)|sigma", Rational(0),
               pair_curve(with_ruling, canonical_class(x), "sigma") + Rational(2) + ruling, "flip:fujiki-nakano");

    const Rational k_line = pair_curve(x, canonical_class(x), "ell") - pair_curve(x, x.generator(1), "ell");
    report.add("deg K_X on a line of P^{n-2}", Rational(3) - N, k_line, "flip:canonical-restriction");

    const SplitDegree split = contracted_normal_split_degree(n, k_line);
    report.add("split degree a of N_{P^{n-2}/X}", Rational(-1), split.a, "flip:split-degree");
    report.add("split degree is integral", true, split.integral, "flip:split-degree");

    report.add("K_X not nef", n >= 4, k_line.sign() < 0, "flip:not-nef");
    report.add("K_X trivial on the contracted locus (Calabi-Yau case)", n == 3, k_line.is_zero() && z.canonical()(0).is_zero(),
               "flip:calabi-yau");
    if (n >= 4) {
        const Rational dim_y(n - 2);
        report.add("dim P^{n-2} > (n - 1)/2", true, dim_y > (N - Rational(1)) / Rational(2), "flip:center-dimension");
    }
    if (n == 4) {
        report.add("(dim Y, a) is the admissible dimension-4 pair", true,
                   theorem_i_pair_check(n - 2, split.a.to_int64()), "flip:surface-center");
    }
    return report;
}

ObstructionMatrix obstruction_matrix(int n, const ObstructionCoefficients& coeffs) {
    if (n < 2) throw DomainError("obstruction_matrix: n must be at least 2");
    for (const auto& [key, value] : coeffs) {
        const auto [i, p] = key;
        if (i < 0 || i >= n || p < 0 || p > 2 * n - 2) {
            throw DomainError("obstruction_matrix: coefficient h_{" + std::to_string(i) + "," + std::to_string(p) +
                              "} out of range");
        }
    }
    auto h = [&](int i, int p) -> Rational {
        auto it = coeffs.find({i, p});
        return it == coeffs.end() ? Rational(0) : it->second;
    };
    RationalMatrix m = RationalMatrix::Constant(2 * n, 2 * n, Rational(0));
    for (int q = 0; q < 2 * n; ++q) {
        for (int i = 0; i < n; ++i) {
            if (q <= 2 * n - 2) m(q, i) = h(i, q);
            if (q >= 1) m(q, n + i) = h(i, q - 1);
        }
    }
    return {n, std::move(m)};
}

ObstructionCoefficients structured_coefficients(const std::vector<Rational>& lambda, const std::vector<Rational>& mu) {
    if (lambda.size() != mu.size() || lambda.empty()) {
        throw DomainError("structured_coefficients: lambda and mu must have the same positive length");
    }
    const int n = static_cast<int>(lambda.size());
    ObstructionCoefficients c;
    for (int i = 0; i < n; ++i) {
        c[{i, i}] = lambda[i];
        c[{i, n - 1 + i}] = mu[i];
    }
    return c;
}

ObstructionCoefficients default_structured_coefficients(int n) {
    std::vector<Rational> lambda(static_cast<std::size_t>(n), Rational(1)), mu;
    for (int i = 0; i < n; ++i) mu.emplace_back(i + 1);
    return structured_coefficients(lambda, mu);
}

ObstructionCoefficients random_coefficients(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ObstructionCoefficients c;
    for (int i = 0; i < n; ++i) {
        for (int p = 0; p <= 2 * n - 2; ++p) c[{i, p}] = Rational(draw(rng, false));
    }
    return c;
}

bool generic_normal_bundle_check(int n, std::uint64_t seed) {
    if (n < 3) throw DomainError("generic_normal_bundle_check: n must be at least 3");
    ObstructionCoefficients coeffs;
    if (seed == 0) {
        coeffs = default_structured_coefficients(n);
    } else {
        std::mt19937_64 rng(seed);
        std::vector<Rational> lambda, mu;
        for (int i = 0; i < n; ++i) lambda.emplace_back(draw(rng, true));
        for (int i = 0; i < n; ++i) mu.emplace_back(draw(rng, true));
        coeffs = structured_coefficients(lambda, mu);
    }
    const Rational det = det_exact(obstruction_matrix(n, coeffs).entries);
    return !det.is_zero() && euler_sequence_normal_degree(n) == -(n - 1);
}

ConstructionReport normal_bundle_report(int n) {
    if (n < 3) throw DomainError("normal_bundle_report: n must be at least 3");
    ConstructionReport report{"normal-bundle/n=" + padded(n), {{"n", std::to_string(n)}}, {}};
    const Rational det = det_exact(obstruction_matrix(n, default_structured_coefficients(n)).entries);
    report.add("structured obstruction determinant is nonzero", true, !det.is_zero(), "normal-bundle:determinant");
    report.add("normal-bundle degree from the Euler sequence", Rational(-(n - 1)),
               Rational(euler_sequence_normal_degree(n)), "normal-bundle:degree");
    report.add("generic normal bundle check", true, generic_normal_bundle_check(n), "normal-bundle:splitting");

    int nonzero = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        if (!det_exact(obstruction_matrix(n, random_coefficients(n, seed)).entries).is_zero()) ++nonzero;
    }
    report.add("random seeds 1..5 with nonzero determinant >= 4", true, nonzero >= 4, "normal-bundle:genericity");
    return report;
}

ConstructionReport quadric_curve_report(int max_degree) {
    ConstructionReport report{"quadric-curves", {{"max_degree", std::to_string(max_degree)}}, {}};
    for (int n = 1; n <= max_degree; ++n) {
        for (int m = 1; m <= max_degree; ++m) {
            const QuadricCurve c = curve_on_quadric(n, m);
            const std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
            report.add("genus of " + tag, Rational((n - 1) * (m - 1)), Rational(c.genus), "quadric:genus");
            report.add("degree of " + tag, Rational(n + m), Rational(c.degree), "quadric:degree");
            report.add("self-intersection of " + tag, Rational(2 * n * m), Rational(c.self_intersection),
                       "quadric:self-intersection");
        }
    }
    return report;
}

std::vector<ConstructionReport> mori_reports() {
    std::vector<ConstructionReport> out;

    ConstructionReport bounds{"mori/divisorial-bounds", {}, {}};
    for (int n = 3; n <= 8; ++n) {
        const auto b = divisorial_bounds(n, 2);
        const std::string tag = "n=" + std::to_string(n) + ", r=2";
        bounds.add("min dim Y, " + tag, Rational((n - 1) / 2 + 1), Rational(b.min_dim_y), "mori:center-dimension");
        bounds.add("non-nef divisorial case feasible, " + tag, n >= 4, b.feasible, "mori:divisorial-lemma");
        bounds.add("fiber chain rederived, " + tag, true, b.fiber_chain_consistent, "mori:fiber-chain");
    }
    out.push_back(std::move(bounds));

    ConstructionReport small{"mori/small-contraction", {}, {}};
    small.add("min dim Y for a small contraction, n=4", Rational(3), Rational(small_contraction_min_dim_y(4)),
              "mori:small-contraction");
    small.add("small contraction excluded for a surface center in dimension 4", true,
              2 < small_contraction_min_dim_y(4), "mori:surface-center");
    ContractionData divisorial4{4, 2, 2, 3, 2, std::nullopt, std::nullopt};
    small.add("wisniewski for (n, dim F, dim A, l) = (4, 2, 3, 2)", true, wisniewski_holds(divisorial4),
              "mori:wisniewski");
    small.add("cone length 2 admissible in dimension 3", true, cone_length_valid(3, 2), "mori:cone");
    out.push_back(std::move(small));

    ConstructionReport surface{"mori/surface-center", {}, {}};
    std::vector<Rational> admissible;
    for (std::int64_t a = -4; a <= 4; ++a) {
        if (surface_center_split(a).admissible) admissible.emplace_back(a);
    }
    surface.add("admissible split degrees a of N = O(a)^2 over P2", std::vector<Rational>{-1}, admissible,
                "mori:surface-center");
    surface.add("pair (2, -1)", true, theorem_i_pair_check(2, -1), "mori:surface-center");
    surface.add("pair (2, 0)", false, theorem_i_pair_check(2, 0), "mori:surface-center");
    surface.add("pair (1, -1)", false, theorem_i_pair_check(1, -1), "mori:surface-center");
    const auto escape = chi_normal_bundle(4, 0, 0);
    surface.add("chi(N) for N = O(-1) + O(a) + O(b), a + b = -1", Rational(1), escape.chi, "mori:deformation-count");
    surface.add("the curve deforms", true, escape.deformation_escape, "mori:deformation-count");
    out.push_back(std::move(surface));
    return out;
}

std::vector<ReferenceEntry> reference_entries() {
    return {
        {"fano-index", "a Fano n-fold of index n is the quadric Q_n", "reference:fano-index"},
        {"ample-normal-pairs",
         "(V, E) with rank E = dim V and c1(E) = c1(V), E ample: (P^n, O(2) + O(1)^{n-1}), (P^n, T P^n), "
         "(Q_n, O(1)^n)",
         "reference:ample-normal-pairs"},
        {"surface-center-pair", "(Y, N_{Y/X}) = (P2, O(-1)^2) when K_X is not nef in dimension 4",
         "reference:surface-center"},
        {"nodal-hypersurface",
         "nodal hypersurface sum h_i x_i^2 + ... stored for reference; smoothness is not computed",
         "reference:nodal-example"},
    };
}

std::vector<ConstructionReport> verify_all(const VerifyOptions& options) {
    std::vector<ConstructionReport> reports;
    for (std::int64_t m = 1; m <= 10; ++m) {
        KollarOptions k;
        k.nu_override = options.kollar_nu_override;
        reports.push_back(build_kollar_tower(m, k));
    }
    for (std::int64_t d = 1; d <= 3; ++d) reports.push_back(build_oguiso_tower(d));
    for (int n = 3; n <= 8; ++n) reports.push_back(build_flip_family(n));
    for (int n = 3; n <= 8; ++n) reports.push_back(normal_bundle_report(n));
    reports.push_back(quadric_curve_report());
    for (auto& r : mori_reports()) reports.push_back(std::move(r));

    if (options.filter) {
        const std::string& f = *options.filter;
        std::erase_if(reports, [&](const ConstructionReport& r) {
            return f.empty() || r.name.find(f) == std::string::npos;
        });
    }
    std::sort(reports.begin(), reports.end(),
              [](const ConstructionReport& a, const ConstructionReport& b) { return a.name < b.name; });
    return reports;
}

json ledger_to_json(const std::vector<ConstructionReport>& reports) {
    json out_reports = json::array();
    std::size_t total = 0, failed = 0;
    for (const auto& r : reports) {
        json claims = json::array();
        for (const auto& c : r.claims) {
            claims.push_back({{"description", c.description},
                              {"expected", value_to_json(c.expected)},
                              {"computed", value_to_json(c.computed)},
                              {"status", c.pass ? "pass" : "fail"},
                              {"anchor", c.anchor}});
            ++total;
            if (!c.pass) ++failed;
        }
        out_reports.push_back({{"name", r.name}, {"parameters", r.parameters}, {"claims", claims}});
    }
    json refs = json::array();
    for (const auto& e : reference_entries()) {
        refs.push_back({{"name", e.name}, {"content", e.content}, {"anchor", e.anchor}});
    }
    return {{"reports", out_reports},
            {"references", refs},
            {"summary", {{"claims", total}, {"passed", total - failed}, {"failed", failed}}}};
}

std::string ledger_to_table(const std::vector<ConstructionReport>& reports) {
    std::vector<std::array<std::string, 6>> rows{{"construction", "claim", "expected", "computed", "status", "anchor"}};
    std::size_t failed = 0, total = 0;
    for (const auto& r : reports) {
        for (const auto& c : r.claims) {
            rows.push_back({r.name, c.description, format_value(c.expected), format_value(c.computed),
                            c.pass ? "pass" : "FAIL", c.anchor});
            ++total;
            if (!c.pass) ++failed;
        }
    }
    std::array<std::size_t, 6> width{};
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << row[i];
            if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << '\n';
    }
    os << total << " claims, " << total - failed << " passed, " << failed << " failed\n";
    return os.str();
}

}  // namespace moishezon
