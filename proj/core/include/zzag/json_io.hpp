#pragma once

#include <json.hpp>

#include "zzag/dual_graph.hpp"
#include "zzag/family23.hpp"
#include "zzag/fibration_graph.hpp"
#include "zzag/links.hpp"
#include "zzag/plane.hpp"
#include "zzag/uvp.hpp"
#include "zzag/word.hpp"

namespace zzag {

using Json = nlohmann::json;

// Weights serialize as JSON numbers when they fit 64 bits, as decimal strings
// beyond that; readers accept both.
Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const ZigzagType& t);                // {"weights":[...]}
ZigzagType zigzag_from_json(const Json& j);

Json to_json(const MarkedZigzag& z);              // adds "m" and, when defined, "l"
MarkedZigzag marked_from_json(const Json& j);

Json to_json(const DualGraph& g);                 // {"nodes":[...],"edges":[[a,b],...]}
DualGraph dual_graph_from_json(const Json& j);

Json to_json(const ElementaryLink& l);            // {"kind":"III","side":"right"}
ElementaryLink link_from_json(const Json& j);

Json to_json(const Move& m);                      // {"kind":"rev","in":...,"out":...}
Move move_from_json(const Json& j);

Json to_json(const MoveWord& w);                  // {"base":{...},"moves":[...]}
MoveWord word_from_json(const Json& j);

Json to_json(const FibrationGraph& g);
FibrationGraph fibration_graph_from_json(const Json& j);

Json to_json(const Pair23& p, const Field& k);    // {"family":"II","a":"3","field":"F5"}
std::pair<Pair23, Field> pair23_from_json(const Json& j);

// Polynomials as ascending coefficient lists of field-element strings.
Json to_json(const Poly1& p);
Poly1 poly1_from_json(const Field& k, const Json& j);

// Plane maps as sparse monomial/coefficient lists per component.
Json to_json(const PolyAut& f);
PolyAut poly_aut_from_json(const Field& k, const Json& j);

Json to_json(const SpDescription& sp);

std::string dump_sorted(const Json& j); // stable two-space indentation

} // namespace zzag
