#pragma once

#include <stdexcept>
#include <string>

namespace frey {

enum class Errc {
    NotSquarefree,
    NotTotallyReal,
    ReduciblePolynomial,
    DivisionByZero,
    FieldMismatch,
    UnsupportedField,
    DiscriminantTooLarge,
    DedekindInapplicable,
    ZeroModulus,
    NonPrincipalPrime,
    DegenerateLambda,
    DegenerateMu,
    RelationViolated,
    TrivialSolution,
    EvenB,
    HypothesisUnmet,
    EmptyPrimeList,
    NotASolution,
    NotPrimitive,
    TrivialTriple,
    AttestationRequired,
};

inline const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::NotTotallyReal: return "NotTotallyReal";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::DiscriminantTooLarge: return "DiscriminantTooLarge";
    case Errc::DedekindInapplicable: return "DedekindInapplicable";
    case Errc::ZeroModulus: return "ZeroModulus";
    case Errc::NonPrincipalPrime: return "NonPrincipalPrime";
    case Errc::DegenerateLambda: return "DegenerateLambda";
    case Errc::DegenerateMu: return "DegenerateMu";
    case Errc::RelationViolated: return "RelationViolated";
    case Errc::TrivialSolution: return "TrivialSolution";
    case Errc::EvenB: return "EvenB";
    case Errc::HypothesisUnmet: return "HypothesisUnmet";
    case Errc::EmptyPrimeList: return "EmptyPrimeList";
    case Errc::NotASolution: return "NotASolution";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::TrivialTriple: return "TrivialTriple";
    case Errc::AttestationRequired: return "AttestationRequired";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace frey
