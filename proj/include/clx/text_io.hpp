#pragma once

#include <string>

#include "json.hpp"

#include "clx/betti.hpp"
#include "clx/points.hpp"

namespace clx {

using Json = nlohmann::ordered_json;

Json ring_to_json(const CLRing& r);
Json poly_to_json(const HilbertPoly& p);
Json ideal_to_json(const MonomialIdeal& I);
Json chain_to_json(const Chain& c);
Json axiom_to_json(const AxiomResult& a);
Json betti_to_json(const BettiTable& t);
Json bounds_to_json(const BoundsReport& r);

CLRing ring_from_json(const Json& j);
// Accepts a string ("3*z + 5") or {"coeffs": ["5", "3"]} (ascending degree).
HilbertPoly poly_from_json(const Json& j);
// {"ring": "2,inf,inf", "gens": [[1,0,0], [0,2,0]]}; gens may also be strings.
MonomialIdeal ideal_from_json(const Json& j);

// Betti-diagram layout: rows j-i, columns i.
std::string betti_to_csv(const BettiTable& t);

} // namespace clx
