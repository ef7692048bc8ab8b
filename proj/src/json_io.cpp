#include "sgq/json_io.hpp"

#include "sgq/errors.hpp"

namespace sgq::io {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing key '") + key + "'");
  return *it;
}

const json& array_member(const json& j, const char* key) {
  const json& value = member(j, key);
  if (!value.is_array()) throw SchemaError(std::string("'") + key + "' must be an array");
  return value;
}

std::size_t count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw SchemaError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) throw SchemaError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

mpq_class rational(const json& j, const char* what) {
  try {
    return rational_from_string(text(j, what));
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

std::vector<std::string> names(const json& j, const char* key) {
  std::vector<std::string> out;
  for (const auto& name : array_member(j, key)) out.push_back(text(name, "variable name"));
  return out;
}

}  // namespace

json to_json(const Gaussian& value) {
  return {{"re", rational_to_string(value.re())}, {"im", rational_to_string(value.im())}};
}

Gaussian gaussian_from_json(const json& j) {
  if (j.is_string()) return Gaussian(rational(j, "coefficient"));
  mpq_class re = rational(member(j, "re"), "re");
  mpq_class im = j.contains("im") ? rational(j.at("im"), "im") : mpq_class(0);
  return Gaussian(re, im);
}

json to_json(const SuperRingSpec& ring) { return {{"even", ring.even_vars()}, {"odd", ring.odd_vars()}}; }

SuperRingSpec ring_from_json(const json& j) {
  try {
    return SuperRingSpec(names(j, "even"), names(j, "odd"));
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("ring: ") + e.what());
  }
}

json to_json(const SuperElement& element) {
  json terms = json::array();
  for (const auto& [m, c] : element.terms()) {
    json odd = json::array();
    for (std::size_t k = 0; k < element.ring().num_odd(); ++k)
      if ((m.odd >> k) & 1u) odd.push_back(k);
    terms.push_back({{"coeff", to_json(c)}, {"exp", m.exponents}, {"odd", std::move(odd)}});
  }
  return {{"ring", to_json(element.ring())}, {"terms", std::move(terms)}};
}

SuperElement element_from_json(const json& j) {
  SuperRingSpec ring = ring_from_json(member(j, "ring"));
  SuperElement out(ring);
  for (const auto& term : array_member(j, "terms")) {
    Monomial m;
    if (term.contains("exp")) {
      for (const auto& e : array_member(term, "exp")) m.exponents.push_back(static_cast<std::uint32_t>(count(e, "exponent")));
    }
    if (m.exponents.empty()) m.exponents.assign(ring.num_even(), 0);
    if (m.exponents.size() != ring.num_even()) throw SchemaError("exponent vector length does not match the ring");
    if (term.contains("odd")) {
      long long previous = -1;
      for (const auto& k : array_member(term, "odd")) {
        std::size_t index = count(k, "odd index");
        if (index >= ring.num_odd()) throw SchemaError("odd index " + std::to_string(index) + " out of range");
        if (static_cast<long long>(index) <= previous) throw SchemaError("odd indices must be strictly increasing");
        previous = static_cast<long long>(index);
        m.odd |= std::uint64_t{1} << index;
      }
    }
    out.add_term(m, gaussian_from_json(member(term, "coeff")));
  }
  return out;
}

json to_json(const SuperMatrix& matrix) {
  const auto& s = matrix.shape();
  json rows = json::array();
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < matrix.cols(); ++k) row.push_back(to_json(matrix(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"shape", {{"rows", {s.even_rows, s.odd_rows}}, {"cols", {s.even_cols, s.odd_cols}}}},
          {"entries", std::move(rows)}};
}

SuperMatrix matrix_from_json(const json& j, const std::optional<SuperRingSpec>& fallback_ring) {
  const json& shape_j = member(j, "shape");
  const json& rows_j = array_member(shape_j, "rows");
  const json& cols_j = array_member(shape_j, "cols");
  if (rows_j.size() != 2 || cols_j.size() != 2) throw SchemaError("shape rows/cols must be [even, odd] pairs");
  SuperShape shape{count(rows_j[0], "rows[0]"), count(rows_j[1], "rows[1]"), count(cols_j[0], "cols[0]"),
                   count(cols_j[1], "cols[1]")};

  std::vector<std::vector<SuperElement>> entries;
  std::optional<SuperRingSpec> ring;
  for (const auto& row_j : array_member(j, "entries")) {
    if (!row_j.is_array()) throw SchemaError("matrix rows must be arrays");
    std::vector<SuperElement> row;
    for (const auto& e : row_j) {
      row.push_back(element_from_json(e));
      if (!ring) ring = row.back().ring();
      if (!(row.back().ring() == *ring)) throw RingMismatch("matrix entries over different rings");
    }
    entries.push_back(std::move(row));
  }
  if (!ring) ring = fallback_ring.value_or(SuperRingSpec());
  return sm_validate(*ring, shape, entries);
}

json to_json(const BlockProfile& profile) {
  return {{"m", profile.m}, {"n", profile.n}, {"r", profile.r}, {"s", profile.s}};
}

BlockProfile profile_from_json(const json& j) {
  try {
    return BlockProfile(count(member(j, "m"), "m"), count(member(j, "n"), "n"), count(member(j, "r"), "r"),
                        count(member(j, "s"), "s"));
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

json to_json(const NCoordinates& coords) {
  return {{"u", to_json(coords.u())}, {"eta", to_json(coords.eta())}, {"xi", to_json(coords.xi())},
          {"v", to_json(coords.v())}};
}

NCoordinates ncoords_from_json(const json& j, const BlockProfile& profile) {
  // Empty blocks carry no ring; borrow it from any non-empty one.
  std::optional<SuperRingSpec> ring;
  for (const char* key : {"u", "eta", "xi", "v"}) {
    SuperMatrix probe = matrix_from_json(member(j, key));
    if (probe.rows() * probe.cols() != 0) {
      ring = probe.ring();
      break;
    }
  }
  return NCoordinates(profile, matrix_from_json(member(j, "u"), ring), matrix_from_json(member(j, "eta"), ring),
                      matrix_from_json(member(j, "xi"), ring), matrix_from_json(member(j, "v"), ring));
}

json to_json(const GrassmannianPoint& point) {
  return {{"profile", to_json(point.profile())}, {"span", to_json(point.span())}};
}

GrassmannianPoint point_from_json(const json& j) {
  return GrassmannianPoint(profile_from_json(member(j, "profile")), matrix_from_json(member(j, "span")));
}

json to_json(const Presentation& pres) {
  json even = json::array(), odd = json::array();
  for (const auto& f : pres.even_relations()) even.push_back(to_json(f));
  for (const auto& phi : pres.odd_relations()) odd.push_back(to_json(phi));
  return {{"base", to_json(pres.base())}, {"fiber", to_json(pres.fiber())}, {"relations_even", std::move(even)},
          {"relations_odd", std::move(odd)}};
}

Presentation presentation_from_json(const json& j) {
  SuperRingSpec base = j.contains("base") ? ring_from_json(j.at("base")) : SuperRingSpec();
  SuperRingSpec fiber = ring_from_json(member(j, "fiber"));
  std::vector<SuperElement> even, odd;
  if (j.contains("relations_even"))
    for (const auto& e : array_member(j, "relations_even")) even.push_back(element_from_json(e));
  if (j.contains("relations_odd"))
    for (const auto& e : array_member(j, "relations_odd")) odd.push_back(element_from_json(e));
  try {
    return Presentation(std::move(base), std::move(fiber), std::move(even), std::move(odd));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("presentation: ") + e.what());
  }
}

json to_json(const RationalPoint& point) {
  json values = json::object();
  for (const auto& [name, value] : point.values) {
    if (sgn(value.im()) == 0) {
      values[name] = rational_to_string(value.re());
    } else {
      values[name] = to_json(value);
    }
  }
  return {{"values", std::move(values)}};
}

RationalPoint rational_point_from_json(const json& j) {
  const json& values = member(j, "values");
  if (!values.is_object()) throw SchemaError("'values' must be an object");
  RationalPoint pt;
  for (auto it = values.begin(); it != values.end(); ++it) pt.values[it.key()] = gaussian_from_json(it.value());
  return pt;
}

json to_json(const SmoothnessVerdict& verdict) {
  json out = {{"smooth", verdict.smooth}, {"even_rank", verdict.even_rank}, {"odd_rank", verdict.odd_rank}};
  if (verdict.relative_dimension) {
    out["relative_dimension"] = {verdict.relative_dimension->first, verdict.relative_dimension->second};
  } else {
    out["relative_dimension"] = nullptr;
  }
  return out;
}

}  // namespace sgq::io
