#include "report.hpp"

#include <chrono>
#include <ctime>

namespace frey::cli {

Json to_json(const Rat& r)
{
    return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Json to_json(const FieldElement& x)
{
    Json coords = Json::array();
    for (const Rat& c : x.coords()) coords.push_back(to_json(c));
    return Json{{"coords", coords}, {"display", x.display()}};
}

Json to_json(const PrimeIdeal& P)
{
    Json j{{"q", to_string(P.q)}, {"e", P.e}, {"f", P.f}};
    Json gen = Json::array();
    for (const Int& c : P.two_elem_g) gen.push_back(to_string(c));
    j["two_elem_g"] = gen;
    j["display"] = P.display();
    if (P.principal_gen)
        j["principal_gen"] = to_json(*P.principal_gen);
    else
        j["principal_gen"] = nullptr;
    return j;
}

Json to_json(const SplittingReport& rep)
{
    const char* pat = "mixed";
    switch (rep.pattern) {
    case SplitPattern::Inert: pat = "inert"; break;
    case SplitPattern::Split: pat = "split"; break;
    case SplitPattern::Ramified: pat = "ramified"; break;
    case SplitPattern::Mixed: pat = "mixed"; break;
    }
    Json primes = Json::array();
    for (const auto& P : rep.primes_above) primes.push_back(to_json(P));
    return Json{{"q", to_string(rep.q)}, {"pattern", pat}, {"primes_above", primes}};
}

Json to_json(const LambdaMuSolution& sol)
{
    return Json{{"lambda", to_json(sol.lambda)}, {"mu", to_json(sol.mu)}};
}

Json to_json(const AlphaGammaSolution& sol)
{
    return Json{{"alpha", to_json(sol.alpha)}, {"beta", to_json(sol.beta)}, {"gamma", to_json(sol.gamma)}};
}

const char* completeness_name(Completeness c)
{
    return c == Completeness::CompleteKnown ? "CompleteKnown" : "BoundedSearchOnly";
}

Json to_json(const HypothesisCertificate& cert)
{
    Json records = Json::array();
    for (const auto& rec : cert.records) {
        Json r{{"solution", to_json(rec.solution)},
               {"valuation", rec.valuation},
               {"bound_ok", rec.bound_ok},
               {"mod3_ok", rec.mod3_ok}};
        r["witness"] = rec.witness ? to_json(*rec.witness) : Json(nullptr);
        records.push_back(std::move(r));
    }
    return Json{{"records", records},
                {"verdict", cert.verdict},
                {"completeness", completeness_name(cert.caveat)}};
}

Json to_json(const CurveInvariants& inv)
{
    return Json{{"c4", to_json(inv.c4)}, {"delta", to_json(inv.delta)}, {"j", to_json(inv.j)}};
}

Json to_json(const ReductionReport& rep)
{
    const char* type = "good";
    switch (rep.type) {
    case ReductionType::Good: type = "good"; break;
    case ReductionType::Multiplicative: type = "multiplicative"; break;
    case ReductionType::AdditivePotentiallyMultiplicative: type = "additive-potentially-multiplicative"; break;
    case ReductionType::AdditivePotentiallyGood: type = "additive-potentially-good"; break;
    }
    return Json{{"prime", to_json(rep.prime)},
                {"v_c4", rep.v_c4},
                {"v_delta", rep.v_delta},
                {"v_j", rep.v_j},
                {"type", type},
                {"conductor_exponent_upper", rep.conductor_exponent_upper},
                {"p_divides_v_delta", rep.p_divides_v_delta},
                {"in_s_prime", rep.in_s_prime}};
}

Json to_json(const InertiaFlags& flags)
{
    const char* basis = "not-applicable";
    if (flags.basis == InertiaBasis::PotMultCriterion) basis = "potentially-multiplicative-criterion";
    if (flags.basis == InertiaBasis::PotGoodCriterion) basis = "potentially-good-criterion";
    return Json{{"p_divides", flags.p_divides}, {"three_divides", flags.three_divides}, {"basis", basis}};
}

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Satisfied: return "Satisfied";
    case Verdict::Failed: return "Failed";
    case Verdict::SatisfiedModuloBoundedSearch: return "SatisfiedModuloBoundedSearch";
    }
    return "?";
}

Json to_json(const CriterionReport& rep)
{
    Json conds = Json::array();
    for (const auto& c : rep.conditions)
        conds.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"witness", c.witness}, {"attested", c.attested}});
    return Json{{"criterion", criterion_name(rep.id)},
                {"conditions", conds},
                {"verdict", verdict_name(rep.verdict)},
                {"es_flag", rep.es_flag},
                {"attestations", rep.attestations},
                {"caveats", rep.caveats}};
}

Json to_json(const ExceptionalSet& set)
{
    Json members = Json::array();
    for (const auto& m : set.members)
        members.push_back(Json{{"a", to_json(m[0])}, {"b", to_json(m[1])}, {"c", to_json(m[2])}});
    return Json{{"B", to_string(set.B)}, {"r", set.r}, {"members", members}};
}

Json to_json(const SolutionRecord& rec)
{
    const char* cls = "other-nontrivial-primitive";
    if (rec.cls == SolutionClass::ExceptionalSr) cls = "exceptional";
    if (rec.cls == SolutionClass::WKMember) cls = "wk-member";
    return Json{{"a", to_json(rec.a)},
                {"b", to_json(rec.b)},
                {"c", to_json(rec.c)},
                {"class", cls},
                {"residual", to_string(rec.residual)}};
}

Json make_report(const std::string& command, Json inputs, Json results,
                 std::vector<std::string> caveats, bool deterministic)
{
    Json rep;
    rep["schema_version"] = "frey-criteria/1";
    rep["command"] = command;
    rep["inputs"] = std::move(inputs);
    rep["results"] = std::move(results);
    rep["caveats"] = caveats;
    if (!deterministic) {
        auto now = std::chrono::system_clock::now();
        std::time_t t = std::chrono::system_clock::to_time_t(now);
        char buf[32];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
        rep["timestamp"] = buf;
    }
    return rep;
}

} // namespace frey::cli
