#include "moishezon/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "moishezon/catalog.hpp"
#include "moishezon/errors.hpp"
#include "moishezon/integrability_oracle.hpp"
#include "moishezon/intersection.hpp"
#include "moishezon/mori.hpp"
#include "moishezon/multiplier.hpp"
#include "moishezon/serialization.hpp"

namespace moishezon::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

Rational rational_arg(const std::string& text, const std::string& what) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError(what + ": expected an integer or p/q, got '" + text + "'");
    }
}

std::int64_t integer_arg(const std::string& text, const std::string& what) {
    const Rational r = rational_arg(text, what);
    if (!r.is_integer()) throw UsageError(what + ": expected an integer, got '" + text + "'");
    return r.to_int64();
}

std::vector<Rational> rational_list(const std::string& text, const std::string& what) {
    std::vector<Rational> out;
    for (const auto& part : split(text, ',')) out.push_back(rational_arg(part, what));
    if (out.empty()) throw UsageError(what + ": empty list");
    return out;
}

std::vector<std::int64_t> integer_list(const std::string& text, const std::string& what) {
    std::vector<std::int64_t> out;
    for (const auto& part : split(text, ',')) out.push_back(integer_arg(part, what));
    if (out.empty()) throw UsageError(what + ": empty list");
    return out;
}

std::map<std::string, std::string> key_values(const std::vector<std::string>& items, const std::string& what) {
    std::map<std::string, std::string> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError(what + ": expected KEY=VALUE, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

struct KeyReader {
    std::map<std::string, std::string> values;
    std::string context;

    std::optional<std::string> raw(const std::string& key) {
        auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        std::string v = it->second;
        values.erase(it);
        return v;
    }
    std::int64_t integer(const std::string& key) {
        auto v = raw(key);
        if (!v) throw UsageError(context + ": missing " + key + "=");
        return integer_arg(*v, context + " " + key);
    }
    std::optional<std::int64_t> maybe_integer(const std::string& key) {
        auto v = raw(key);
        if (!v) return std::nullopt;
        return integer_arg(*v, context + " " + key);
    }
    std::optional<Rational> maybe_rational(const std::string& key) {
        auto v = raw(key);
        if (!v) return std::nullopt;
        return rational_arg(*v, context + " " + key);
    }
    Rational rational(const std::string& key) {
        auto v = maybe_rational(key);
        if (!v) throw UsageError(context + ": missing " + key + "=");
        return *v;
    }
    void finish() const {
        if (!values.empty()) throw UsageError(context + ": unknown key '" + values.begin()->first + "'");
    }
};

std::string human(const json& j) {
    std::ostringstream os;
    for (const auto& [key, value] : j.items()) {
        os << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    return os.str();
}

std::string emit(const json& j, bool as_json) { return as_json ? j.dump(2) + "\n" : human(j); }

json checks_json(const std::vector<InequalityCheck>& checks) {
    json out = json::array();
    for (const auto& c : checks) out.push_back({{"name", c.name}, {"statement", c.statement}, {"holds", c.holds}});
    return out;
}

SpaceModel parse_base(const std::string& text) {
    if (text.size() > 1 && text[0] == 'p' && text.find(':') == std::string::npos) {
        return projective_space(static_cast<int>(integer_arg(text.substr(1), "--base")));
    }
    if (text.rfind("rank1:", 0) == 0) {
        const auto parts = split(text.substr(6), ',');
        if (parts.size() != 3) throw UsageError("--base rank1:n,deg,kappa needs three values");
        return rank_one_space(static_cast<int>(integer_arg(parts[0], "--base n")), rational_arg(parts[1], "--base deg"),
                              integer_arg(parts[2], "--base kappa"));
    }
    throw UsageError("--base: expected pN or rank1:n,deg,kappa, got '" + text + "'");
}

json rationals_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(rational_to_json(r));
    return out;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{"Intersection numbers, multiplier ideals and contraction bounds", "moishezon"};
    app.require_subcommand(1);

    bool as_json = false;
    std::function<CommandResult()> action;

    // verify-thesis
    auto* verify = app.add_subcommand("verify-thesis", "Run every construction and print the claim ledger");
    std::optional<std::string> filter;
    std::string inject_nu;
    verify->add_option("--filter", filter, "Keep constructions whose name contains NAME");
    verify->add_option("--inject-nu", inject_nu, "Replace the curve-center nu of the P3 family (fault injection)");
    verify->add_flag("--json", as_json);
    verify->callback([&] {
        action = [&]() -> CommandResult {
            VerifyOptions opts;
            opts.filter = filter;
            if (!inject_nu.empty()) opts.kollar_nu_override = rational_arg(inject_nu, "--inject-nu");
            const auto reports = verify_all(opts);
            const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.all_pass(); });
            return {ok ? 0 : 1, as_json ? ledger_to_json(reports).dump(2) + "\n" : ledger_to_table(reports), ""};
        };
    });

    // blowup
    auto* blowup = app.add_subcommand("blowup", "Blow up a rank-one space along a curve; prints the space as JSON");
    std::string base_arg, curve_arg;
    blowup->add_option("--base", base_arg, "pN or rank1:n,deg,kappa")->required();
    blowup->add_option("--curve", curve_arg, "g=..,d=..[,nu=..]")->required();
    blowup->callback([&] {
        action = [&]() -> CommandResult {
            const SpaceModel base = parse_base(base_arg);
            KeyReader keys{key_values(split(curve_arg, ','), "--curve"), "--curve"};
            const auto g = keys.integer("g");
            const Rational d = keys.rational("d");
            const auto nu = keys.maybe_rational("nu");
            keys.finish();
            const SpaceModel x = blowup_along_curve(base, curve_center(base, g, d, nu));
            return {0, serialize_space(x), ""};
        };
    });

    // intersect
    auto* inter = app.add_subcommand("intersect", "Intersect divisor classes on a serialized space");
    std::string space_file, curve_name;
    std::vector<std::string> class_args;
    inter->add_option("--space", space_file, "Space JSON file")->required();
    inter->add_option("--class", class_args, "Divisor class as comma-separated coordinates")->required();
    inter->add_option("--curve", curve_name, "Pair a single class with a registered curve");
    inter->add_flag("--json", as_json);
    inter->callback([&] {
        action = [&]() -> CommandResult {
            const SpaceModel space = parse_space_file(space_file);
            std::vector<DivisorClass> classes;
            for (const auto& text : class_args) {
                const auto coords = rational_list(text, "--class");
                if (static_cast<int>(coords.size()) != space.rank()) {
                    throw UsageError("--class '" + text + "' needs " + std::to_string(space.rank()) + " coordinates");
                }
                DivisorClass z(space.rank());
                for (int i = 0; i < space.rank(); ++i) z(i) = coords[static_cast<std::size_t>(i)];
                classes.push_back(z);
            }
            Rational value;
            if (!curve_name.empty()) {
                if (classes.size() != 1) throw UsageError("--curve takes exactly one --class");
                value = pair_curve(space, classes[0], curve_name);
            } else if (classes.size() == 1) {
                value = intersect_power(space, classes[0]);
            } else if (static_cast<int>(classes.size()) == space.dim()) {
                value = intersect(space, classes);
            } else {
                throw UsageError("intersect needs one class (power) or exactly " + std::to_string(space.dim()));
            }
            return {0, emit({{"value", value.to_short_string()}}, as_json), ""};
        };
    });

    // multiplier
    auto* mult = app.add_subcommand("multiplier", "Multiplier ideals");
    mult->require_subcommand(1);
    auto* monomial = mult->add_subcommand("monomial", "Staircase generators of a monomial weight");
    std::string alpha_list, k_text;
    monomial->add_option("--alpha", alpha_list, "Comma-separated positive rationals")->required();
    monomial->add_option("--k", k_text, "Nonnegative rational")->required();
    monomial->add_flag("--json", as_json);
    monomial->callback([&] {
        action = [&]() -> CommandResult {
            MonomialWeight w{rational_list(alpha_list, "--alpha"), rational_arg(k_text, "--k")};
            w.validate();
            const MonomialIdeal ideal = monomial_multiplier_generators(w);
            json out{{"alphas", rationals_json(w.alphas)},
                     {"k", rational_to_json(w.k)},
                     {"generators", ideal.generators},
                     {"colength", colength(w)}};
            const bool equal = std::all_of(w.alphas.begin(), w.alphas.end(), [&](const Rational& a) { return a == w.alphas[0]; });
            if (equal) out["equal_alpha_power"] = equal_alpha_power(w.alphas[0], w.k, w.p());
            return {0, emit(out, as_json), ""};
        };
    });
    auto* snc = mult->add_subcommand("snc", "Floors of an SNC divisor's coefficients");
    std::string coeff_list;
    snc->add_option("--coeff", coeff_list, "Comma-separated nonnegative rationals")->required();
    snc->add_flag("--json", as_json);
    snc->callback([&] {
        action = [&]() -> CommandResult {
            const SncDivisor d{rational_list(coeff_list, "--coeff")};
            return {0, emit({{"floors", snc_floors(d)}}, as_json), ""};
        };
    });

    // logres
    auto* logres = app.add_subcommand("logres", "Log resolution of |z1|^2 + |z2|^(2 alpha)");
    std::string logres_alpha;
    logres->add_option("--alpha", logres_alpha, "Positive integer")->required();
    logres->add_flag("--json", as_json);
    logres->callback([&] {
        action = [&]() -> CommandResult {
            const auto res = binomial_log_resolution(integer_arg(logres_alpha, "--alpha"));
            json trace = json::array();
            for (const auto& s : res.chart_trace) {
                trace.push_back({{"step", s.step}, {"log_coefficient", s.log_coefficient},
                                 {"remaining_exponent", s.remaining_exponent}});
            }
            return {0, emit({{"multiplicities", res.multiplicities}, {"chart_trace", trace}}, as_json), ""};
        };
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Monte Carlo integrability check of z^beta");
    std::string o_alpha, o_beta, o_k, o_samples = "100000", o_seed = "0";
    oracle->add_option("--alpha", o_alpha)->required();
    oracle->add_option("--beta", o_beta)->required();
    oracle->add_option("--k", o_k)->required();
    oracle->add_option("--samples", o_samples);
    oracle->add_option("--seed", o_seed);
    oracle->add_flag("--json", as_json);
    oracle->callback([&] {
        action = [&]() -> CommandResult {
            MonomialWeight w{rational_list(o_alpha, "--alpha"), rational_arg(o_k, "--k")};
            w.validate();
            const auto beta = integer_list(o_beta, "--beta");
            if (beta.size() != w.alphas.size()) throw UsageError("--beta and --alpha differ in length");
            const auto seed = integer_arg(o_seed, "--seed");
            if (seed < 0) throw UsageError("--seed must be nonnegative");
            const auto exponent = integrability_exponent(w, beta);
            const auto res = mc_membership_oracle(w, beta, integer_arg(o_samples, "--samples"),
                                                  static_cast<std::uint64_t>(seed));
            json out{{"verdict", to_string(res.verdict)},
                     {"slope", res.slope},
                     {"predicted_slope", res.predicted_slope},
                     {"e", exponent.e.to_short_string()},
                     {"converges", exponent.converges}};
            return {0, emit(out, as_json), ""};
        };
    });

    // mori
    auto* mori = app.add_subcommand("mori", "Contraction inequalities; arguments are KEY=VALUE");
    std::string mori_kind;
    std::vector<std::string> mori_args;
    mori->add_option("kind", mori_kind, "wisniewski | divisorial | small | chi | balance")
        ->required()
        ->check(CLI::IsMember({"wisniewski", "divisorial", "small", "chi", "balance"}));
    mori->add_option("args", mori_args, "KEY=VALUE");
    mori->add_flag("--json", as_json);
    mori->callback([&] {
        action = [&]() -> CommandResult {
            KeyReader keys{key_values(mori_args, "mori " + mori_kind), "mori " + mori_kind};
            json out;
            if (mori_kind == "wisniewski") {
                ContractionData c;
                c.n = static_cast<int>(keys.integer("n"));
                c.dim_f = static_cast<int>(keys.integer("dim_f"));
                c.dim_a = static_cast<int>(keys.integer("dim_a"));
                c.length = static_cast<int>(keys.integer("length"));
                keys.finish();
                const auto check = wisniewski_check(c);
                out = {{"holds", check.holds}, {"statement", check.statement}};
            } else if (mori_kind == "divisorial") {
                const int n = static_cast<int>(keys.integer("n"));
                const int r = static_cast<int>(keys.integer("r"));
                keys.finish();
                const auto b = divisorial_bounds(n, r);
                out = {{"a_lower", b.a_lower.to_short_string()},
                       {"a_upper", b.a_upper.to_short_string()},
                       {"codim_fe_max", b.codim_fe_max},
                       {"feasible", b.feasible},
                       {"min_dim_y", b.min_dim_y}};
                if (as_json) out["checks"] = checks_json(b.checks);
            } else if (mori_kind == "small") {
                const int n = static_cast<int>(keys.integer("n"));
                const int r = static_cast<int>(keys.maybe_integer("r").value_or(2));
                keys.finish();
                out = {{"min_dim_y", small_contraction_min_dim_y(n, r)}};
            } else if (mori_kind == "chi") {
                const int n = static_cast<int>(keys.integer("n"));
                const auto g = keys.integer("g");
                const Rational kx = keys.rational("kx");
                keys.finish();
                const auto chi = chi_normal_bundle(n, g, kx);
                out = {{"chi", chi.chi.to_short_string()}, {"deformation_escape", chi.deformation_escape}};
            } else {
                const int n = static_cast<int>(keys.integer("n"));
                const auto kz = keys.maybe_rational("kz");
                const auto kline = keys.maybe_rational("kline");
                keys.finish();
                if (!kz && !kline) throw UsageError("mori balance: give kz= and/or kline=");
                if (kz) out["ruling_e_degree"] = ruling_e_degree(n, *kz).to_short_string();
                if (kline) {
                    const auto split_deg = contracted_normal_split_degree(n, *kline);
                    out["split_degree"] = split_deg.a.to_short_string();
                    out["integral"] = split_deg.integral;
                }
            }
            return {0, emit(out, as_json), ""};
        };
    });

    // matrix
    auto* matrix = app.add_subcommand("matrix", "Determinant of the 2n x 2n obstruction matrix");
    std::string m_n, m_seed = "0";
    matrix->add_option("--n", m_n)->required();
    matrix->add_option("--seed", m_seed, "0 selects the structured instance");
    matrix->add_flag("--json", as_json);
    matrix->callback([&] {
        action = [&]() -> CommandResult {
            const int n = static_cast<int>(integer_arg(m_n, "--n"));
            const auto seed = integer_arg(m_seed, "--seed");
            if (seed < 0) throw UsageError("--seed must be nonnegative");
            if (n < 2) throw UsageError("--n must be at least 2");
            const auto coeffs = seed == 0 ? default_structured_coefficients(n)
                                          : random_coefficients(n, static_cast<std::uint64_t>(seed));
            const Rational det = det_exact(obstruction_matrix(n, coeffs).entries);
            json out{{"n", n},
                     {"seed", seed},
                     {"instance", seed == 0 ? "structured" : "random"},
                     {"determinant", det.to_short_string()},
                     {"nonzero", !det.is_zero()}};
            return {0, emit(out, as_json), ""};
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str(), err.str()};
    }
    try {
        return action();
    } catch (const UsageError& e) {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    } catch (const SchemaError& e) {
        return {2, "", std::string("schema error: ") + e.what() + "\n"};
    } catch (const Error& e) {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::domain_error& e) {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace moishezon::cli
