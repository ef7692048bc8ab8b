#pragma once

// JSON exchange formats. All numbers that carry algebraic data are exact
// strings ("num/den"); odd indices are 0-based positions in the ring's odd
// generator list.
//
//   ring     {"even": [names], "odd": [names]}
//   element  {"ring": ring, "terms": [{"coeff": {"re": "a/b", "im": "c/d"},
//                                       "exp": [ints], "odd": [sorted ints]}]}
//   matrix   {"shape": {"rows": [m, n], "cols": [m2, n2]}, "entries": [[element]]}
//   profile  {"m": int, "n": int, "r": int, "s": int}
//   ncoords  {"u": matrix, "eta": matrix, "xi": matrix, "v": matrix}
//   point    {"profile": profile, "span": matrix}
//   presentation {"base": ring, "fiber": ring,
//                 "relations_even": [element], "relations_odd": [element]}
//   rational point {"values": {name: "num/den" | {"re": .., "im": ..}}}

#include <optional>
#include <stdexcept>

#include "json.hpp"
#include "sgq/grassmannian.hpp"
#include "sgq/smoothness.hpp"

namespace sgq::io {

using nlohmann::json;

/// Malformed document: wrong types, missing keys, bad literals.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json to_json(const Gaussian& value);
Gaussian gaussian_from_json(const json& j);

json to_json(const SuperRingSpec& ring);
SuperRingSpec ring_from_json(const json& j);

json to_json(const SuperElement& element);
SuperElement element_from_json(const json& j);

json to_json(const SuperMatrix& matrix);
/// `fallback_ring` is used when the matrix has no entries to carry a ring.
SuperMatrix matrix_from_json(const json& j, const std::optional<SuperRingSpec>& fallback_ring = std::nullopt);

json to_json(const BlockProfile& profile);
BlockProfile profile_from_json(const json& j);

json to_json(const NCoordinates& coords);
NCoordinates ncoords_from_json(const json& j, const BlockProfile& profile);

json to_json(const GrassmannianPoint& point);
GrassmannianPoint point_from_json(const json& j);

json to_json(const Presentation& pres);
Presentation presentation_from_json(const json& j);

json to_json(const RationalPoint& point);
RationalPoint rational_point_from_json(const json& j);

json to_json(const SmoothnessVerdict& verdict);

}  // namespace sgq::io
