#pragma once

#include "frey/criteria.hpp"
#include "frey/field.hpp"
#include "frey/frey_curve.hpp"
#include "frey/primes.hpp"
#include "frey/search.hpp"
#include "frey/sunit.hpp"

#include <json.hpp>

#include <string>

namespace frey::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const FieldElement& x);
Json to_json(const PrimeIdeal& P);
Json to_json(const SplittingReport& rep);
Json to_json(const LambdaMuSolution& sol);
Json to_json(const AlphaGammaSolution& sol);
Json to_json(const HypothesisCertificate& cert);
Json to_json(const CurveInvariants& inv);
Json to_json(const ReductionReport& rep);
Json to_json(const InertiaFlags& flags);
Json to_json(const CriterionReport& rep);
Json to_json(const ExceptionalSet& set);
Json to_json(const SolutionRecord& rec);

const char* verdict_name(Verdict v);
const char* completeness_name(Completeness c);

/// Report envelope; schema "frey-criteria/1".
Json make_report(const std::string& command, Json inputs, Json results,
                 std::vector<std::string> caveats, bool deterministic);

} // namespace frey::cli
