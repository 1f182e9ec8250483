#pragma once

#include <nlohmann/json.hpp>

#include "ecc/bounds.hpp"
#include "ecc/container.hpp"
#include "ecc/indep.hpp"
#include "ecc/supersat.hpp"

// JSON shapes: all numerics as exact decimal strings ("num/den" for
// rationals), words as base-q digit strings, word sets as sorted rank lists.

namespace ecc {

using json = nlohmann::json;

json to_json(const CodeParams& p);

// sorted rank list
json word_set_to_json(const std::vector<Word>& words);

json to_json(const CheckResult& r);
json to_json(const CensusResult& r);
json to_json(const BoundResult& r);
json to_json(const AuditReport& r);
json to_json(const SupersatReport& r);
json to_json(const ContainerRecord& r, const AdjGraph& g);

}  // namespace ecc
