#pragma once

#include <optional>
#include <string>

#include "wshom/weighted_complex.hpp"

namespace wshom {

// Document format, one object per complex:
//
//   {
//     "field": "Q",              // or "Fp:<p>"
//     "auto_close": false,       // optional, default false
//     "names": ["A", "B"],       // optional vertex names, index = id
//     "simplices": [ {"v": [0, 1], "w": 3}, ... ]
//   }
//
// Vertex lists are strictly ascending ids, weights are non-negative
// exponents. With auto_close, faces omitted from the listing are filled
// in with the max weight over their cofaces.

// field_override replaces the document's field (the CLI --field flag).
WeightedComplex load_complex(const std::string& json_text,
                             std::optional<Field> field_override = std::nullopt);
WeightedComplex load_complex_file(const std::string& path,
                                  std::optional<Field> field_override = std::nullopt);

// Canonical document: faces materialized, simplices sorted by dimension
// then colex, auto_close false.
std::string save_complex(const WeightedComplex& x);

} // namespace wshom
