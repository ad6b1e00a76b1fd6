#include "commands.hpp"

#include "frey/errors.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace frey::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

Rat parse_rat(const std::string& s)
{
    auto parts = split(s, '/');
    if (parts.empty() || parts.size() > 2) throw std::invalid_argument("bad rational: " + s);
    Int num(parts[0]);
    Int den = parts.size() == 2 ? Int(parts[1]) : Int(1);
    return make_rat(num, den);
}

struct FieldOptions {
    std::string field_kw; // "Q"
    std::string quadratic;
    std::string poly;

    FieldPtr build() const
    {
        int given = (!field_kw.empty()) + (!quadratic.empty()) + (!poly.empty());
        if (given != 1)
            throw std::invalid_argument("specify exactly one of --field Q, --quadratic d, --poly coeffs");
        if (!field_kw.empty()) {
            if (field_kw != "Q" && field_kw != "q")
                throw std::invalid_argument("--field accepts only Q");
            return make_field_rational();
        }
        if (!quadratic.empty()) return make_field_quadratic(Int(quadratic));
        poly::ZPoly f;
        for (const auto& part : split(poly, ',')) f.emplace_back(part);
        return make_field_monogenic(f);
    }
};

void add_field_options(CLI::App* cmd, FieldOptions& opts)
{
    cmd->add_option("--field", opts.field_kw, "the rational field (Q)");
    cmd->add_option("--quadratic", opts.quadratic, "real quadratic field Q(sqrt(d)), squarefree d > 1");
    cmd->add_option("--poly", opts.poly, "monogenic field by monic odd-degree polynomial, ascending coefficients");
}

FieldElement parse_element(const FieldPtr& K, const std::string& s)
{
    std::vector<Rat> coords;
    for (const auto& part : split(s, ',')) coords.push_back(parse_rat(part));
    if (static_cast<int>(coords.size()) > K->degree())
        throw std::invalid_argument("too many coordinates for the field");
    coords.resize(static_cast<size_t>(K->degree()), Rat(0));
    return FieldElement(K, coords);
}

Config load_config(const std::string& explicit_path)
{
    Config cfg;
    std::string path = explicit_path;
    if (path.empty()) {
        if (const char* env = std::getenv("FREY_CONFIG")) path = env;
    }
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    Json j = Json::parse(in);
    if (j.contains("sunit_height")) cfg.sunit_height = j["sunit_height"].get<long>();
    if (j.contains("search_height")) cfg.search_height = j["search_height"].get<long>();
    if (j.contains("disc_ceiling")) cfg.disc_ceiling = Int(j["disc_ceiling"].get<std::string>());
    if (j.contains("prune_modulus")) cfg.prune_modulus = j["prune_modulus"].get<long>();
    if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
    return cfg;
}

struct CurveOptions {
    std::string family = "square";
    std::string a, b, c;
    std::string B = "1";
    std::string C;
    int r = 0;
    int p = 0;

    Family parse_family() const
    {
        if (family == "square") return Family::SquareEq;
        if (family == "twisted") return Family::TwistedEq;
        throw std::invalid_argument("--family must be square or twisted");
    }

    CSpec parse_c() const
    {
        if (r > 0 && !C.empty()) throw std::invalid_argument("give either --C or --r, not both");
        if (r > 0) return CSpec::two_power(r);
        if (!C.empty()) return CSpec::odd(Int(C));
        throw std::invalid_argument("one of --C (odd) or --r (power of two) is required");
    }
};

void add_curve_options(CLI::App* cmd, CurveOptions& opts, bool with_triple)
{
    cmd->add_option("--family", opts.family, "equation family: square (x^2=By^p+Cz^p) or twisted (2x^2=By^p+Cz^p)");
    if (with_triple) {
        cmd->add_option("--a", opts.a, "solution entry a")->required();
        cmd->add_option("--b", opts.b, "solution entry b")->required();
        cmd->add_option("--c", opts.c, "solution entry c")->required();
    }
    cmd->add_option("--B", opts.B, "odd coefficient B (default 1)");
    cmd->add_option("--C", opts.C, "odd coefficient C");
    cmd->add_option("--r", opts.r, "C = 2^r");
    cmd->add_option("--p", opts.p, "prime exponent p")->required();
}

int exit_code_for(const Error& e)
{
    switch (e.code()) {
    case Errc::UnsupportedField:
    case Errc::DedekindInapplicable:
    case Errc::NonPrincipalPrime:
    case Errc::AttestationRequired:
        return 3;
    default:
        return 2;
    }
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args)
{
    CLI::App app{"frey-criteria: exact arithmetic, Frey-curve invariants and local criteria for "
                 "x^2 = B y^p + C z^p and 2 x^2 = B y^p + 2^r z^p over totally real fields"};
    app.require_subcommand(1);
    app.fallthrough();
    bool deterministic = false;
    std::string config_path;
    app.add_flag("--deterministic", deterministic, "suppress the timestamp field");
    app.add_option("--config", config_path, "JSON config file (also via FREY_CONFIG)");

    FieldOptions field_opts;
    CurveOptions curve_opts;
    std::string element_str, q_str, n_str = "1";
    long height = -1, scale_height = 0;
    int jobs = 0;
    std::string theorem_str, prop_str;
    std::string attest_h, attest_h_plus;
    bool attest_principal = false;
    std::string odd_q;

    auto* c_info = app.add_subcommand("field-info", "degree, discriminant, unit and class data");
    add_field_options(c_info, field_opts);

    auto* c_factor = app.add_subcommand("factor-prime", "prime-ideal factorization of a rational prime");
    add_field_options(c_factor, field_opts);
    c_factor->add_option("--q", q_str, "rational prime")->required();

    auto* c_val = app.add_subcommand("valuation", "P-adic valuations of an element at all primes above q");
    add_field_options(c_val, field_opts);
    c_val->add_option("--q", q_str, "rational prime")->required();
    c_val->add_option("--element", element_str, "element coordinates, e.g. 1/2,3")->required();

    auto* c_sunit = app.add_subcommand("sunit-solve", "bounded solutions of lambda + mu = 1 in S-units");
    add_field_options(c_sunit, field_opts);
    c_sunit->add_option("--n", n_str, "S = S_K(n), all primes dividing 2n (default 1)");
    c_sunit->add_option("--height", height, "exponent bound H");

    auto* c_ag = app.add_subcommand("alpha-gamma-solve", "normalized solutions of alpha + 1 = gamma^2");
    add_field_options(c_ag, field_opts);
    c_ag->add_option("--n", n_str, "S = S_K(n) (default 1)");
    c_ag->add_option("--height", height, "exponent bound H");
    c_ag->add_option("--scale-height", scale_height, "also emit unit-square scalings within this bound");

    auto* c_inv = app.add_subcommand("frey-invariants", "c4, discriminant and j-invariant of the Frey curve");
    add_field_options(c_inv, field_opts);
    add_curve_options(c_inv, curve_opts, true);

    auto* c_red = app.add_subcommand("reduction-report", "reduction classification at the primes above q");
    add_field_options(c_red, field_opts);
    add_curve_options(c_red, curve_opts, true);
    c_red->add_option("--q", q_str, "rational prime")->required();

    auto* c_inertia = app.add_subcommand("inertia-flags", "inertia-image divisibility flags at the primes above q");
    add_field_options(c_inertia, field_opts);
    add_curve_options(c_inertia, curve_opts, true);
    c_inertia->add_option("--q", q_str, "rational prime")->required();

    auto* c_exc = app.add_subcommand("exceptional-set", "the finite exceptional set S_r");
    add_field_options(c_exc, field_opts);
    c_exc->add_option("--B", curve_opts.B, "odd coefficient B (default 1)");
    c_exc->add_option("--r", curve_opts.r, "C = 2^r")->required();

    auto* c_check = app.add_subcommand("check-criteria", "decision procedures for the local criteria");
    add_field_options(c_check, field_opts);
    c_check->add_option("--B", curve_opts.B, "odd coefficient B (default 1)");
    c_check->add_option("--C", curve_opts.C, "odd coefficient C");
    c_check->add_option("--r", curve_opts.r, "C = 2^r");
    c_check->add_option("--family", curve_opts.family, "square or twisted (default square)");
    c_check->add_option("--theorem", theorem_str, "thm32 | thm41 | thm51");
    c_check->add_option("--prop", prop_str, "prop33 | prop42 | prop52 | quad-wk | quad-k | odd-wk | odd-k");
    c_check->add_option("--q", odd_q, "auxiliary prime for the odd-degree criteria");
    c_check->add_option("--attest-h", attest_h, "attested class number (odd-degree fields)");
    c_check->add_option("--attest-h-plus", attest_h_plus, "attested narrow class number");
    c_check->add_flag("--attest-principal", attest_principal, "attest principality of the prime above 2");
    c_check->add_option("--height", height, "S-unit exponent bound H");

    auto* c_search = app.add_subcommand("search", "bounded-height search for nontrivial primitive solutions");
    add_field_options(c_search, field_opts);
    add_curve_options(c_search, curve_opts, false);
    c_search->add_option("--height", height, "coordinate box bound H");
    c_search->add_option("--jobs", jobs, "parallel chunks (default from config)");

    // CLI11 wants argc/argv
    std::vector<std::string> argv_store;
    argv_store.push_back("frey");
    for (const auto& a : args) argv_store.push_back(a);
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    CommandResult result;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        result.exit_code = 0;
        result.error = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.error = e.what();
        return result;
    }

    try {
        Config cfg = load_config(config_path);
        if (height < 0) height = app.got_subcommand(c_search) ? cfg.search_height : cfg.sunit_height;
        if (jobs <= 0) jobs = cfg.jobs;

        if (app.got_subcommand(c_info)) {
            FieldPtr K = field_opts.build();
            Json results{{"field", K->describe()},
                         {"degree", K->degree()},
                         {"discriminant", to_string(K->discriminant())},
                         {"order_discriminant", K->order_discriminant()}};
            std::vector<std::string> caveats;
            if (K->kind() == Field::Kind::RealQuadratic) {
                auto ud = unit_data(K, cfg.disc_ceiling);
                results["fundamental_unit"] = to_json(ud.fundamental_unit);
                results["norm_of_unit"] = ud.norm_of_unit;
                results["class_number"] = ud.class_number;
                results["narrow_class_number"] = ud.narrow_class_number;
                results["splitting_of_2"] = to_json(factor_rational_prime(K, 2));
            }
            if (K->kind() == Field::Kind::MonogenicOdd) {
                results["splitting_of_2"] = to_json(factor_rational_prime(K, 2));
                caveats.push_back("unit and class data for monogenic fields must be supplied externally");
            }
            Json inputs{{"field", K->describe()}};
            result.report = make_report("field-info", inputs, results, caveats, deterministic);
            return result;
        }

        if (app.got_subcommand(c_factor)) {
            FieldPtr K = field_opts.build();
            Int q(q_str);
            auto rep = factor_rational_prime(K, q);
            Json inputs{{"field", K->describe()}, {"q", to_string(q)}};
            result.report = make_report("factor-prime", inputs, to_json(rep), {}, deterministic);
            return result;
        }

        if (app.got_subcommand(c_val)) {
            FieldPtr K = field_opts.build();
            Int q(q_str);
            FieldElement x = parse_element(K, element_str);
            auto rep = factor_rational_prime(K, q);
            Json vals = Json::array();
            for (const auto& P : rep.primes_above) {
                long v = valuation(P, x);
                Json entry{{"prime", to_json(P)}};
                if (v == kValuationInfinity)
                    entry["valuation"] = "infinity";
                else
                    entry["valuation"] = v;
                vals.push_back(std::move(entry));
            }
            Json inputs{{"field", K->describe()}, {"q", to_string(q)}, {"element", to_json(x)}};
            result.report =
                make_report("valuation", inputs, Json{{"valuations", vals}}, {}, deterministic);
            return result;
        }

        if (app.got_subcommand(c_sunit) || app.got_subcommand(c_ag)) {
            FieldPtr K = field_opts.build();
            Int n(n_str);
            auto S = s_set(K, n);
            auto basis = sunit_basis(K, S, height);
            std::vector<std::string> caveats;
            Json results;
            Completeness comp;
            if (app.got_subcommand(c_sunit)) {
                auto sols = solve_lambda_mu(basis);
                comp = sols.completeness;
                Json items = Json::array();
                for (const auto& s : sols.items) items.push_back(to_json(s));
                results = Json{{"solutions", items}, {"completeness", completeness_name(comp)}};
            } else {
                auto sols = solve_alpha_gamma(basis, scale_height);
                comp = sols.completeness;
                Json items = Json::array();
                for (const auto& s : sols.items) items.push_back(to_json(s));
                results = Json{{"solutions", items}, {"completeness", completeness_name(comp)}};
            }
            if (comp == Completeness::BoundedSearchOnly) caveats.push_back("BoundedSearchOnly");
            Json inputs{{"field", K->describe()}, {"n", to_string(n)}, {"height", height}};
            result.report = make_report(app.got_subcommand(c_sunit) ? "sunit-solve" : "alpha-gamma-solve",
                                        inputs, results, caveats, deterministic);
            return result;
        }

        if (app.got_subcommand(c_inv) || app.got_subcommand(c_red) || app.got_subcommand(c_inertia)) {
            FieldPtr K = field_opts.build();
            Family family = curve_opts.parse_family();
            CSpec C = curve_opts.parse_c();
            FieldElement a = parse_element(K, curve_opts.a);
            FieldElement b = parse_element(K, curve_opts.b);
            FieldElement c = parse_element(K, curve_opts.c);
            auto E = build_frey(family, a, b, c, Int(curve_opts.B), C, curve_opts.p);
            Json inputs{{"field", K->describe()},
                        {"family", curve_opts.family},
                        {"a", to_json(a)},
                        {"b", to_json(b)},
                        {"c", to_json(c)},
                        {"B", curve_opts.B},
                        {"C", C.display()},
                        {"p", curve_opts.p}};
            if (app.got_subcommand(c_inv)) {
                result.report =
                    make_report("frey-invariants", inputs, to_json(invariants(E)), {}, deterministic);
                return result;
            }
            Int q(q_str);
            inputs["q"] = to_string(q);
            auto repq = factor_rational_prime(K, q);
            Json entries = Json::array();
            for (const auto& P : repq.primes_above) {
                if (app.got_subcommand(c_red))
                    entries.push_back(to_json(reduction_type(E, P)));
                else
                    entries.push_back(Json{{"prime", to_json(P)}, {"flags", to_json(inertia_flags(E, P, E.p))}});
            }
            result.report = make_report(app.got_subcommand(c_red) ? "reduction-report" : "inertia-flags",
                                        inputs, Json{{"primes", entries}}, {}, deterministic);
            return result;
        }

        if (app.got_subcommand(c_exc)) {
            FieldPtr K = field_opts.build();
            auto set = exceptional_set(K, Int(curve_opts.B), curve_opts.r);
            Json inputs{{"field", K->describe()}, {"B", curve_opts.B}, {"r", curve_opts.r}};
            result.report = make_report("exceptional-set", inputs, to_json(set), {}, deterministic);
            return result;
        }

        if (app.got_subcommand(c_check)) {
            FieldPtr K = field_opts.build();
            if (theorem_str.empty() == prop_str.empty())
                throw std::invalid_argument("give exactly one of --theorem or --prop");
            CSpec C = curve_opts.r > 0 || !curve_opts.C.empty() ? curve_opts.parse_c() : CSpec::odd(1);
            CriterionReport rep;
            if (!theorem_str.empty() || prop_str == "prop33" || prop_str == "prop42" || prop_str == "prop52") {
                Theorem thm;
                bool as_prop = theorem_str.empty();
                std::string key = as_prop ? prop_str : theorem_str;
                if (key == "thm32" || key == "prop33")
                    thm = Theorem::Thm32;
                else if (key == "thm41" || key == "prop42")
                    thm = Theorem::Thm41;
                else if (key == "thm51" || key == "prop52")
                    thm = Theorem::Thm51;
                else
                    throw std::invalid_argument("unknown criterion " + key);
                rep = check_theorem_hypothesis(K, Int(curve_opts.B), C, thm, height, as_prop, cfg.disc_ceiling);
            } else if (prop_str == "quad-wk" || prop_str == "quad-k") {
                if (K->kind() != Field::Kind::RealQuadratic)
                    throw Error(Errc::UnsupportedField, "this criterion needs --quadratic");
                rep = check_quadratic_criterion(K->d(), Int(curve_opts.B), C, curve_opts.parse_family(),
                                                prop_str == "quad-wk" ? QuadraticVariant::WK
                                                                      : QuadraticVariant::K,
                                                height);
            } else if (prop_str == "odd-wk" || prop_str == "odd-k") {
                if (odd_q.empty()) throw std::invalid_argument("--q is required for the odd-degree criteria");
                if (attest_h.empty() && prop_str == "odd-wk")
                    throw Error(Errc::AttestationRequired, "--attest-h is required");
                std::optional<Int> hp;
                if (!attest_h_plus.empty()) hp = Int(attest_h_plus);
                if (prop_str == "odd-k" && !hp)
                    throw Error(Errc::AttestationRequired, "--attest-h-plus is required");
                rep = check_odd_degree_criterion(K, Int(odd_q), attest_h.empty() ? Int(1) : Int(attest_h), hp,
                                                 prop_str == "odd-wk" ? OddDegreeVariant::WK
                                                                      : OddDegreeVariant::K,
                                                 attest_principal);
            } else {
                throw std::invalid_argument("unknown --prop " + prop_str);
            }
            Json inputs{{"field", K->describe()},
                        {"B", curve_opts.B},
                        {"C", C.display()},
                        {"criterion", theorem_str.empty() ? prop_str : theorem_str},
                        {"height", height}};
            std::vector<std::string> caveats = rep.caveats;
            for (const auto& att : rep.attestations) caveats.push_back("attested: " + att);
            result.report = make_report("check-criteria", inputs, to_json(rep), caveats, deterministic);
            result.exit_code = rep.verdict == Verdict::Failed ? 1 : 0;
            return result;
        }

        if (app.got_subcommand(c_search)) {
            FieldPtr K = field_opts.build();
            SearchTask task;
            task.field = K;
            task.family = curve_opts.parse_family();
            task.B = Int(curve_opts.B);
            task.C = curve_opts.parse_c();
            task.p = curve_opts.p;
            task.height = height;
            task.parallel_chunks = jobs;
            task.prune_modulus = cfg.prune_modulus;
            auto records = run_search(task);
            Json items = Json::array();
            for (const auto& rec : records) items.push_back(to_json(rec));
            Json inputs{{"field", K->describe()},
                        {"family", curve_opts.family},
                        {"B", curve_opts.B},
                        {"C", task.C.display()},
                        {"p", task.p},
                        {"height", task.height},
                        {"jobs", jobs}};
            result.report = make_report("search", inputs,
                                        Json{{"count", items.size()}, {"solutions", items}}, {},
                                        deterministic);
            return result;
        }

        result.exit_code = 2;
        result.error = "no subcommand";
        return result;
    } catch (const Error& e) {
        result.exit_code = exit_code_for(e);
        result.error = e.what();
        return result;
    } catch (const std::invalid_argument& e) {
        result.exit_code = 2;
        result.error = e.what();
        return result;
    } catch (const std::exception& e) {
        result.exit_code = 2;
        result.error = e.what();
        return result;
    }
}

} // namespace frey::cli
