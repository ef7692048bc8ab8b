#include "sgq/proptest.hpp"

#include <functional>

#include "sgq/errors.hpp"
#include "sgq/grassmannian.hpp"
#include "sgq/json_io.hpp"
#include "sgq/random.hpp"
#include "sgq/smoothness.hpp"

namespace sgq {

namespace {

using nlohmann::json;
using io::to_json;
using Outcome = std::optional<json>;  // counterexample on failure

struct Context {
  SuperRingSpec kernel_ring;  // two even generators and q odd ones
  SuperRingSpec grassmann;    // q odd generators
  BlockProfile bp;
  std::size_t m, n, q;
  gen::Bounds bounds;
};

struct Property {
  const char* suite;
  const char* name;
  std::function<Outcome(gen::Rng&, const Context&)> check;
};

std::uint64_t stream_id(const std::string& key) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Parity random_parity(gen::Rng& rng) { return rng.chance(1, 2) ? Parity::Odd : Parity::Even; }

int sign(Parity a, Parity b) { return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1; }

SuperElement one(const SuperRingSpec& ring) { return SuperElement(ring, Gaussian(1)); }

SuperRingSpec::VarRef random_var(gen::Rng& rng, const SuperRingSpec& ring) {
  const std::size_t total = ring.num_even() + ring.num_odd();
  const std::size_t k = rng.below(total);
  if (k < ring.num_even()) return {Parity::Even, k};
  return {Parity::Odd, k - ring.num_even()};
}

SuperElement homogeneous(gen::Rng& rng, const Context& ctx, Parity p) {
  return gen::element(rng, ctx.kernel_ring, p, ctx.bounds);
}

// Square size up to (m|n), not both zero.
std::pair<std::size_t, std::size_t> random_square(gen::Rng& rng, const Context& ctx) {
  while (true) {
    std::size_t a = rng.below(ctx.m + 1), d = rng.below(ctx.n + 1);
    if (a + d > 0 || ctx.m + ctx.n == 0) return {a, d};
  }
}

SuperMatrix random_gl_rs(gen::Rng& rng, const Context& ctx) {
  return gen::invertible(rng, ctx.grassmann, ctx.bp.r, ctx.bp.s, ctx.bounds);
}

GrassmannianPoint random_point(gen::Rng& rng, const Context& ctx) {
  GrassmannianPoint base = orbit_map(gen::invertible(rng, ctx.grassmann, ctx.bp.m, ctx.bp.n, ctx.bounds), ctx.bp);
  return GrassmannianPoint(ctx.bp, base.span() * random_gl_rs(rng, ctx));
}

// Presentation with `evens` even and `odds` odd fiber variables whose
// relations vanish at a random rational point.
std::pair<Presentation, RationalPoint> random_presentation(gen::Rng& rng, const Context& ctx, std::size_t evens,
                                                           std::size_t odds, std::size_t even_rels,
                                                           std::size_t odd_rels) {
  std::vector<std::string> ev, od;
  for (std::size_t i = 1; i <= evens; ++i) ev.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= odds; ++i) od.push_back("xi" + std::to_string(i));
  SuperRingSpec fiber(ev, od);
  SuperRingSpec ring = Presentation::combined_ring(SuperRingSpec(), fiber);
  gen::Bounds b = ctx.bounds;
  b.complex_percent = 0;
  RationalPoint pt;
  for (const auto& name : ev) pt.values[name] = gen::coefficient(rng, b);
  Presentation probe(SuperRingSpec(), fiber, {}, {});
  std::vector<SuperElement> f, phi;
  for (std::size_t i = 0; i < even_rels; ++i) {
    SuperElement e = gen::element(rng, ring, Parity::Even, b);
    f.push_back(e - evaluate_at(probe, pt, e));
  }
  for (std::size_t j = 0; j < odd_rels; ++j) phi.push_back(gen::element(rng, ring, Parity::Odd, b));
  return {Presentation(SuperRingSpec(), fiber, std::move(f), std::move(phi)), std::move(pt)};
}

json verdict_pair(const SmoothnessVerdict& a, const SmoothnessVerdict& b) {
  return {{"before", to_json(a)}, {"after", to_json(b)}};
}

// ---------------------------------------------------------------------------

std::vector<Property> build_properties() {
  std::vector<Property> props;

  // kernel ------------------------------------------------------------------
  props.push_back({"kernel", "supercommutativity", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    Parity pa = random_parity(rng), pb = random_parity(rng);
    SuperElement a = homogeneous(rng, ctx, pa), b = homogeneous(rng, ctx, pb);
    SuperElement ab = a * b, ba = b * a;
    if (sign(pa, pb) < 0) ba = -ba;
    if (ab == ba) return std::nullopt;
    return json{{"a", to_json(a)}, {"b", to_json(b)}};
  }});
  props.push_back({"kernel", "soul_nilpotency", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    SuperElement s = gen::soul(rng, ctx.kernel_ring, Parity::Even, ctx.bounds) +
                     gen::soul(rng, ctx.kernel_ring, Parity::Odd, ctx.bounds);
    if (s.pow(static_cast<unsigned>(ctx.q + 1)).is_zero()) return std::nullopt;
    return json{{"soul", to_json(s)}};
  }});
  props.push_back({"kernel", "inverse_exactness", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    SuperElement a = SuperElement(ctx.kernel_ring, gen::nonzero_coefficient(rng, ctx.bounds)) +
                     gen::soul(rng, ctx.kernel_ring, Parity::Even, ctx.bounds) +
                     gen::soul(rng, ctx.kernel_ring, Parity::Odd, ctx.bounds);
    SuperElement inv = se_inv(a);
    if (a * inv == one(ctx.kernel_ring) && inv * a == one(ctx.kernel_ring)) return std::nullopt;
    return json{{"a", to_json(a)}, {"inverse", to_json(inv)}};
  }});
  props.push_back({"kernel", "graded_leibniz", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    Parity pa = random_parity(rng), pb = random_parity(rng);
    SuperElement a = homogeneous(rng, ctx, pa), b = homogeneous(rng, ctx, pb);
    auto var = random_var(rng, ctx.kernel_ring);
    SuperElement lhs = partial_derivative(a * b, var);
    SuperElement second = a * partial_derivative(b, var);
    if (sign(var.parity, pa) < 0) second = -second;
    SuperElement rhs = partial_derivative(a, var) * b + second;
    if (lhs == rhs) return std::nullopt;
    const auto& names = var.parity == Parity::Even ? ctx.kernel_ring.even_vars() : ctx.kernel_ring.odd_vars();
    return json{{"a", to_json(a)}, {"b", to_json(b)}, {"variable", names[var.index]}};
  }});
  props.push_back({"kernel", "body_multiplicative", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    SuperElement a = homogeneous(rng, ctx, Parity::Even) + homogeneous(rng, ctx, Parity::Odd);
    SuperElement b = homogeneous(rng, ctx, Parity::Even) + homogeneous(rng, ctx, Parity::Odd);
    if (body(a * b) == body(a) * body(b)) return std::nullopt;
    return json{{"a", to_json(a)}, {"b", to_json(b)}};
  }});
  props.push_back({"kernel", "substitute_morphism", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    const auto& ring = ctx.kernel_ring;
    std::vector<SuperElement> images;
    for (std::size_t i = 0; i < ring.num_even(); ++i) images.push_back(homogeneous(rng, ctx, Parity::Even));
    for (std::size_t k = 0; k < ring.num_odd(); ++k) images.push_back(homogeneous(rng, ctx, Parity::Odd));
    SuperHom h(ring, ring, images);
    SuperElement a = homogeneous(rng, ctx, Parity::Even) + homogeneous(rng, ctx, Parity::Odd);
    SuperElement b = homogeneous(rng, ctx, Parity::Even) + homogeneous(rng, ctx, Parity::Odd);
    bool ok = substitute(h, one(ring)) == one(ring) && substitute(h, a + b) == substitute(h, a) + substitute(h, b) &&
              substitute(h, a * b) == substitute(h, a) * substitute(h, b);
    if (ok) return std::nullopt;
    json imgs = json::array();
    for (const auto& e : images) imgs.push_back(to_json(e));
    return json{{"a", to_json(a)}, {"b", to_json(b)}, {"images", imgs}};
  }});
  props.push_back({"kernel", "odd_second_derivative", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    if (ctx.q == 0) return std::nullopt;
    SuperElement a = homogeneous(rng, ctx, Parity::Even) + homogeneous(rng, ctx, Parity::Odd);
    SuperRingSpec::VarRef var{Parity::Odd, rng.below(ctx.q)};
    if (partial_derivative(partial_derivative(a, var), var).is_zero()) return std::nullopt;
    return json{{"a", to_json(a)}, {"variable", ctx.kernel_ring.odd_vars()[var.index]}};
  }});

  // matrix ------------------------------------------------------------------
  props.push_back({"matrix", "ber_multiplicativity", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    auto [a, d] = random_square(rng, ctx);
    SuperMatrix x = gen::invertible(rng, ctx.grassmann, a, d, ctx.bounds);
    SuperMatrix y = gen::invertible(rng, ctx.grassmann, a, d, ctx.bounds);
    if (berezinian(x * y) == berezinian(x) * berezinian(y)) return std::nullopt;
    return json{{"X", to_json(x)}, {"Y", to_json(y)}};
  }});
  props.push_back({"matrix", "inverse_two_sided", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    auto [a, d] = random_square(rng, ctx);
    SuperMatrix x = gen::invertible(rng, ctx.grassmann, a, d, ctx.bounds);
    SuperMatrix inv = sm_inv(x);
    SuperMatrix id = SuperMatrix::identity(ctx.grassmann, a, d);
    if (x * inv == id && inv * x == id) return std::nullopt;
    return json{{"X", to_json(x)}};
  }});
  props.push_back({"matrix", "identity_laws", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    auto [a, d] = random_square(rng, ctx);
    SuperMatrix x = gen::matrix(rng, ctx.grassmann, SuperShape::square(a, d), ctx.bounds);
    SuperMatrix id = SuperMatrix::identity(ctx.grassmann, a, d);
    if (id * x == x && x * id == x && berezinian(id) == one(ctx.grassmann)) return std::nullopt;
    return json{{"X", to_json(x)}};
  }});
  props.push_back({"matrix", "associativity", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    auto [a, d] = random_square(rng, ctx);
    auto shape = SuperShape::square(a, d);
    SuperMatrix x = gen::matrix(rng, ctx.grassmann, shape, ctx.bounds);
    SuperMatrix y = gen::matrix(rng, ctx.grassmann, shape, ctx.bounds);
    SuperMatrix z = gen::matrix(rng, ctx.grassmann, shape, ctx.bounds);
    if ((x * y) * z == x * (y * z)) return std::nullopt;
    return json{{"X", to_json(x)}, {"Y", to_json(y)}, {"Z", to_json(z)}};
  }});
  props.push_back({"matrix", "parity_closure", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    SuperShape sx{rng.below(ctx.m + 1), rng.below(ctx.n + 1), rng.below(ctx.m + 1), rng.below(ctx.n + 1)};
    SuperShape sy{sx.even_cols, sx.odd_cols, rng.below(ctx.m + 1), rng.below(ctx.n + 1)};
    SuperMatrix x = gen::matrix(rng, ctx.grassmann, sx, ctx.bounds);
    SuperMatrix y = gen::matrix(rng, ctx.grassmann, sy, ctx.bounds);
    SuperMatrix xy = x * y;
    for (std::size_t i = 0; i < xy.rows(); ++i)
      for (std::size_t j = 0; j < xy.cols(); ++j)
        if (!xy(i, j).has_parity(xy.shape().entry_parity(i, j))) return json{{"X", to_json(x)}, {"Y", to_json(y)}};
    return std::nullopt;
  }});
  props.push_back({"matrix", "body_commutes", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    auto [a, d] = random_square(rng, ctx);
    auto shape = SuperShape::square(a, d);
    SuperMatrix x = gen::matrix(rng, ctx.grassmann, shape, ctx.bounds);
    SuperMatrix y = gen::matrix(rng, ctx.grassmann, shape, ctx.bounds);
    if ((x * y).body() == x.body() * y.body()) return std::nullopt;
    return json{{"X", to_json(x)}, {"Y", to_json(y)}};
  }});
  props.push_back({"matrix", "ber_invertible_iff_invertible", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    auto [a, d] = random_square(rng, ctx);
    SuperMatrix x = gen::maybe_singular(rng, ctx.grassmann, a, d, ctx.bounds);
    bool ber_unit = false;
    try {
      ber_unit = is_unit(berezinian(x));
    } catch (const NotInvertible&) {
      ber_unit = false;
    }
    if (ber_unit == sm_invertible(x)) return std::nullopt;
    return json{{"X", to_json(x)}, {"ber_unit", ber_unit}};
  }});

  // factorization -----------------------------------------------------------
  props.push_back({"factorization", "factorization_exact", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    SuperMatrix g = gen::big_cell(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    auto nf = normal_form(g, ctx.bp);
    if (assemble(nf.n) * nf.p == g && standard_parabolic_member(nf.p, ctx.bp)) return std::nullopt;
    return json{{"g", to_json(g)}};
  }});
  props.push_back({"factorization", "right_p_invariance", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    SuperMatrix g = gen::big_cell(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    SuperMatrix p = gen::parabolic(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    if (normal_form(g * p, ctx.bp).n == normal_form(g, ctx.bp).n) return std::nullopt;
    return json{{"g", to_json(g)}, {"p", to_json(p)}};
  }});
  props.push_back({"factorization", "idempotence", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    NCoordinates n = gen::ncoordinates(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    auto nf = normal_form(assemble(n), ctx.bp);
    if (nf.n == n && nf.p == SuperMatrix::identity(ctx.grassmann, ctx.bp.m, ctx.bp.n)) return std::nullopt;
    return json{{"n", to_json(n)}};
  }});
  props.push_back({"factorization", "p_cap_n_trivial", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    const SuperMatrix id = SuperMatrix::identity(ctx.grassmann, ctx.bp.m, ctx.bp.n);
    SuperMatrix p = gen::parabolic(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    NCoordinates n = gen::ncoordinates(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    SuperMatrix nm = assemble(n);
    bool ok = (!n_member(p, ctx.bp) || p == id) && (!standard_parabolic_member(nm, ctx.bp) || nm == id) &&
              n_member(id, ctx.bp) && standard_parabolic_member(id, ctx.bp) && n_member(nm, ctx.bp) &&
              standard_parabolic_member(p, ctx.bp);
    if (ok) return std::nullopt;
    return json{{"p", to_json(p)}, {"n", to_json(n)}};
  }});
  props.push_back({"factorization", "coset_normal_form_agreement", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    SuperMatrix g1 = gen::big_cell(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    SuperMatrix g2 = rng.chance(1, 2) ? g1 * gen::parabolic(rng, ctx.grassmann, ctx.bp, ctx.bounds)
                                      : gen::big_cell(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    bool same_coset = cosets_equal(g1, g2, ctx.bp);
    bool same_coords = normal_form(g1, ctx.bp).n == normal_form(g2, ctx.bp).n;
    if (same_coset == same_coords) return std::nullopt;
    return json{{"g1", to_json(g1)}, {"g2", to_json(g2)}};
  }});

  // chart -------------------------------------------------------------------
  props.push_back({"chart", "chart_down_up", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    NCoordinates n = gen::ncoordinates(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    if (chart_down(chart_up(n)) == n) return std::nullopt;
    return json{{"n", to_json(n)}};
  }});
  props.push_back({"chart", "chart_up_down", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    SuperMatrix g = gen::big_cell(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    GrassmannianPoint pt(ctx.bp, orbit_map(g, ctx.bp).span() * random_gl_rs(rng, ctx));
    if (points_equal(chart_up(chart_down(pt)), pt)) return std::nullopt;
    return json{{"point", to_json(pt)}};
  }});
  props.push_back({"chart", "chart_injective", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    NCoordinates a = gen::ncoordinates(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    NCoordinates b = rng.chance(1, 4) ? a : gen::ncoordinates(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    if (points_equal(chart_up(a), chart_up(b)) == (a == b)) return std::nullopt;
    return json{{"n1", to_json(a)}, {"n2", to_json(b)}};
  }});

  // action ------------------------------------------------------------------
  props.push_back({"action", "identity_acts_trivially", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    GrassmannianPoint pt = random_point(rng, ctx);
    if (act(SuperMatrix::identity(ctx.grassmann, ctx.bp.m, ctx.bp.n), pt).span() == pt.span()) return std::nullopt;
    return json{{"point", to_json(pt)}};
  }});
  props.push_back({"action", "action_compatibility", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    GrassmannianPoint pt = random_point(rng, ctx);
    SuperMatrix g1 = gen::invertible(rng, ctx.grassmann, ctx.bp.m, ctx.bp.n, ctx.bounds);
    SuperMatrix g2 = gen::invertible(rng, ctx.grassmann, ctx.bp.m, ctx.bp.n, ctx.bounds);
    if (act(g1 * g2, pt).span() == act(g1, act(g2, pt)).span()) return std::nullopt;
    return json{{"point", to_json(pt)}, {"g1", to_json(g1)}, {"g2", to_json(g2)}};
  }});
  props.push_back({"action", "stabilizer_identity", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    SuperMatrix g = gen::stabilizer_probe(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    GrassmannianPoint base = standard_point(ctx.bp, ctx.grassmann);
    if (points_equal(act(g, base), base) == standard_parabolic_member(g, ctx.bp)) return std::nullopt;
    return json{{"g", to_json(g)}};
  }});
  props.push_back({"action", "orbit_map_definition", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    SuperMatrix g = gen::invertible(rng, ctx.grassmann, ctx.bp.m, ctx.bp.n, ctx.bounds);
    if (orbit_map(g, ctx.bp).span() == act(g, standard_point(ctx.bp, ctx.grassmann)).span()) return std::nullopt;
    return json{{"g", to_json(g)}};
  }});
  props.push_back({"action", "orbit_coset_equivalence", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    SuperMatrix g1 = gen::big_cell(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    SuperMatrix g2 = rng.chance(1, 2) ? g1 * gen::parabolic(rng, ctx.grassmann, ctx.bp, ctx.bounds)
                                      : gen::big_cell(rng, ctx.grassmann, ctx.bp, ctx.bounds);
    if (cosets_equal(g1, g2, ctx.bp) == points_equal(orbit_map(g1, ctx.bp), orbit_map(g2, ctx.bp))) {
      return std::nullopt;
    }
    return json{{"g1", to_json(g1)}, {"g2", to_json(g2)}};
  }});

  // smoothness --------------------------------------------------------------
  props.push_back({"smoothness", "block_diagonal_at_point", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    auto [pres, pt] = random_presentation(rng, ctx, 1 + rng.below(3), rng.below(4), rng.below(3), rng.below(3));
    SuperMatrix jac = jacobian(pres);
    for (std::size_t i = 0; i < jac.rows(); ++i)
      for (std::size_t k = 0; k < jac.cols(); ++k)
        if (jac.shape().entry_parity(i, k) == Parity::Odd && !evaluate_at(pres, pt, jac(i, k)).is_zero()) {
          return json{{"presentation", to_json(pres)}, {"point", to_json(pt)}};
        }
    return std::nullopt;
  }});
  props.push_back({"smoothness", "row_operation_invariance", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    auto [pres, pt] = random_presentation(rng, ctx, 2 + rng.below(2), rng.below(3), 2, rng.below(2));
    gen::Bounds b = ctx.bounds;
    b.complex_percent = 0;
    Gaussian c = gen::coefficient(rng, b);
    auto f = pres.even_relations();
    f[0] += f[1] * c;
    Presentation moved(pres.base(), pres.fiber(), f, pres.odd_relations());
    auto before = is_smooth_at(pres, pt);
    auto after = is_smooth_at(moved, pt);
    if (before == after) return std::nullopt;
    return json{{"presentation", to_json(pres)}, {"point", to_json(pt)}, {"verdicts", verdict_pair(before, after)}};
  }});
  props.push_back({"smoothness", "free_extension_of_etale", [](gen::Rng& rng, const Context& ctx) -> Outcome {
    // f_i = (x_i - a_i)(1 + e_i - e_i(a)), phi_j = xi_j (1 + e'_j - e'_j(a)) + (x_1 - a_1) omega_j
    const std::size_t p = 1 + rng.below(2), q = rng.below(3);
    auto [probe, pt] = random_presentation(rng, ctx, p, q, 0, 0);
    const auto& ring = probe.ring();
    gen::Bounds b = ctx.bounds;
    b.complex_percent = 0;
    auto shifted = [&](const SuperElement& e) { return e - evaluate_at(probe, pt, e); };
    std::vector<SuperElement> f, phi;
    for (std::size_t i = 0; i < p; ++i) {
      SuperElement x = SuperElement::even_var(ring, i) - SuperElement(ring, pt.values.at(ring.even_vars()[i]));
      f.push_back(x * (one(ring) + shifted(gen::element(rng, ring, Parity::Even, b))));
    }
    SuperElement x1 = SuperElement::even_var(ring, 0) - SuperElement(ring, pt.values.at(ring.even_vars()[0]));
    for (std::size_t j = 0; j < q; ++j) {
      phi.push_back(SuperElement::odd_var(ring, j) * (one(ring) + shifted(gen::element(rng, ring, Parity::Even, b))) +
                    x1 * gen::element(rng, ring, Parity::Odd, b));
    }
    Presentation etale(SuperRingSpec(), probe.fiber(), f, phi);
    const std::size_t k = rng.below(3), l = rng.below(3);
    Presentation extended = adjoin_free(etale, k, l);
    RationalPoint ext_pt = pt;
    for (std::size_t i = p; i < extended.fiber().num_even(); ++i)
      ext_pt.values[extended.fiber().even_vars()[i]] = gen::coefficient(rng, b);
    auto verdict = is_smooth_at(extended, ext_pt);
    if (is_etale_at(etale, pt) && verdict.smooth && verdict.relative_dimension == std::make_pair(k, l)) {
      return std::nullopt;
    }
    return json{{"presentation", to_json(extended)}, {"point", to_json(ext_pt)}, {"verdict", to_json(verdict)}};
  }});
  props.push_back({"smoothness", "gl_smooth_at_identity", [](gen::Rng& rng, const Context&) -> Outcome {
    const std::size_t m = rng.below(3), n = rng.below(3);
    auto verdict = is_smooth_at(gl_presentation(m, n), gl_identity_point(m, n));
    if (verdict.smooth && verdict.relative_dimension == std::make_pair(m * m + n * n, 2 * m * n)) return std::nullopt;
    return json{{"m", m}, {"n", n}, {"verdict", to_json(verdict)}};
  }});

  return props;
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> props = build_properties();
  return props;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"kernel", "matrix", "factorization", "chart",
                                                 "action", "smoothness", "all"};
  return names;
}

std::vector<std::string> property_names(const std::string& suite) {
  std::vector<std::string> out;
  for (const auto& p : all_properties())
    if (suite == "all" || suite == p.suite) out.emplace_back(p.name);
  return out;
}

bool ProptestReport::pass() const {
  for (const auto& r : results)
    if (r.failed != 0) return false;
  return true;
}

nlohmann::json ProptestReport::to_json() const {
  json props = json::array();
  for (const auto& r : results) {
    props.push_back({{"suite", r.suite},
                     {"name", r.name},
                     {"trials", r.trials},
                     {"passed", r.passed},
                     {"failed", r.failed},
                     {"counterexample", r.counterexample ? *r.counterexample : json(nullptr)}});
  }
  return {{"suite", config.suite},
          {"seed", config.seed},
          {"trials", config.trials},
          {"size", {{"m", config.m}, {"n", config.n}, {"r", config.r}, {"s", config.s}, {"q", config.q}}},
          {"properties", std::move(props)},
          {"pass", pass()}};
}

ProptestReport run_proptest(const ProptestConfig& config) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), config.suite) == names.end()) {
    throw UnknownSuite("'" + config.suite + "'");
  }
  if (config.q > SuperRingSpec::kMaxOddVars) throw std::invalid_argument("q must be at most 64");

  SuperRingSpec grassmann = grassmann_ring(config.q);
  SuperRingSpec kernel_ring({"x", "y"}, grassmann.odd_vars());
  Context ctx{kernel_ring, grassmann, BlockProfile(config.m, config.n, config.r, config.s), config.m, config.n,
              config.q, gen::Bounds{}};

  ProptestReport report;
  report.config = config;
  for (const auto& prop : all_properties()) {
    if (config.suite != "all" && config.suite != prop.suite) continue;
    if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), prop.name) == config.only.end()) {
      continue;
    }
    PropertyResult result;
    result.suite = prop.suite;
    result.name = prop.name;
    const std::uint64_t stream = stream_id(std::string(prop.suite) + "/" + prop.name);
    for (std::size_t t = 0; t < config.trials; ++t) {
      gen::Rng rng(config.seed, stream, t);
      Outcome outcome;
      try {
        outcome = prop.check(rng, ctx);
      } catch (const DomainError& e) {
        outcome = json{{"error", {{"name", e.name()}, {"locus", e.locus()}}}};
      }
      ++result.trials;
      if (outcome) {
        ++result.failed;
        if (!result.counterexample) result.counterexample = json{{"trial", t}, {"data", *outcome}};
      } else {
        ++result.passed;
      }
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace sgq
