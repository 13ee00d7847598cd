#ifndef KCROSS_SERIALIZE_HPP
#define KCROSS_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "kcross/constructions.hpp"
#include "kcross/family.hpp"
#include "kcross/regimes.hpp"
#include "kcross/search.hpp"

namespace kcross {

// Family pair document: {"n": .., "k": .., "A": [[..],..], "B": [[..],..]}.
// Canonical form lists members in colex order, each as a strictly increasing
// 1-indexed element array. Single families travel as a pair with empty B.
nlohmann::json pair_to_json(const FamilyPair& p);
FamilyPair pair_from_json(const nlohmann::json& doc);
nlohmann::json family_to_json_array(const Family& f);

std::string pair_to_string(const FamilyPair& p);  // canonical, 2-space indent
FamilyPair pair_from_string(const std::string& text);

nlohmann::json regime_report_to_json(const RegimeReport& r);
nlohmann::json bound_set_to_json(const BoundSet& b);
nlohmann::json theorem14_report_to_json(const Theorem14Report& r);
nlohmann::json crossover_to_json(const CrossoverResult& r);
nlohmann::json verify_report_to_json(const VerifyReport& r);
nlohmann::json outcome_to_json(const SearchOutcome& o);

}  // namespace kcross

#endif  // KCROSS_SERIALIZE_HPP
