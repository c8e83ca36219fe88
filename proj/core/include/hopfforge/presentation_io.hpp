#pragma once

#include <json.hpp>

#include "hopfforge/hopf.hpp"

namespace hopfforge {

// Presentation file schema:
//   { "field": {"p": 2, "orders": [3]},
//     "generators": [{"name": "x", "weight": 1},
//                    {"name": "g", "weight": 0, "grouplike": true, "order": 6}],
//     "relations": ["g*x - xi*x*g", "x^2"],
//     "coproduct": {"x": "x(#)1 + g(#)x"},
//     "counit": {"x": "0"} }
// Group-like generators receive Delta(g) = g(#)g, counit 1, and the power
// relation automatically; coproduct/counit entries are only needed for the
// remaining generators.
HopfData load_presentation(const nlohmann::json& j);
HopfData load_presentation_file(const std::string& path);
nlohmann::ordered_json save_presentation(const HopfData& data);

}  // namespace hopfforge
