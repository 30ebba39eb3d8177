#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainring/frobenius.hpp"
#include "chainring/ideal.hpp"

namespace chainring {

using json = nlohmann::json;

// Malformed or schema-violating input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"variant":"Zpm","p":2,"m":3}
// {"variant":"GaloisRing","p":2,"n":2,"r":2,"modulus":[1,1,1]}
// {"variant":"FqU","p":2,"r":1,"e":3}
// {"variant":"Eisenstein","p":2,"n":2,"r":1,"g":[-2,0,1],"t":1}   (g entries: int or S-vector)
ChainRingSpec ring_spec_from_json(const json& j);
json ring_spec_to_json(const ChainRingSpec& s);

inline constexpr int kMaxInputDegree = 64;

// String ("2*x - 4") or digit matrix (one row of N digits per coefficient, low degree first).
RPoly rpoly_from_json(const ChainRing* R, const json& j);
json rpoly_to_json(const RPoly& f);
std::vector<RPoly> rpolys_from_json(const ChainRing* R, const json& j);

// String ("x^2 + 1") or coefficient-code array, low degree first.
FPoly fpoly_from_json(const Field* F, const json& j);
json fpoly_to_json(const FPoly& f);
InvariantSequence invseq_from_json(const Field* F, const json& j);
json invseq_to_json(const InvariantSequence& a);

json ideal_to_json(const Ideal& I);
json report_to_json(const FrobeniusReport& rep);

}  // namespace chainring
