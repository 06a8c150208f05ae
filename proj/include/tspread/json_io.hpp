#pragma once

#include <json.hpp>

#include "tspread/betti.hpp"
#include "tspread/classifier.hpp"
#include "tspread/lexsegment.hpp"
#include "tspread/primary_decomp.hpp"

namespace tspread {

using nlohmann::json;

json monomial_to_json(Mask m);                 // sorted index array
Mask monomial_from_json(const json& j, int n);

json spec_to_json(const LexsegmentSpec& s);
LexsegmentSpec spec_from_json(const json& j);

json ideal_to_json(const MonomialIdeal& I);
json decomposition_to_json(const PrimeDecomposition& d);
json betti_to_json(const BettiTable& b);
json invariants_to_json(const InvariantReport& r);
json trace_to_json(const NormalizationTrace& t);
json verdict_to_json(const CmVerdict& v, const LexsegmentSpec& original);

}  // namespace tspread
