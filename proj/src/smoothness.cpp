#include "sgq/smoothness.hpp"

#include <set>
#include <stdexcept>

#include "sgq/errors.hpp"
#include "sgq/even_linalg.hpp"

namespace sgq {

namespace {

std::vector<std::string> concat(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string fresh_name(std::set<std::string>& used, const std::string& stem) {
  for (std::size_t k = 1;; ++k) {
    std::string name = stem + std::to_string(k);
    if (used.insert(name).second) return name;
  }
}

}  // namespace

Presentation::Presentation(SuperRingSpec base, SuperRingSpec fiber, std::vector<SuperElement> even_relations,
                           std::vector<SuperElement> odd_relations)
    : base_(std::move(base)),
      fiber_(std::move(fiber)),
      ring_(combined_ring(base_, fiber_)),
      even_relations_(std::move(even_relations)),
      odd_relations_(std::move(odd_relations)) {
  auto check = [&](const std::vector<SuperElement>& rels, Parity parity, const char* kind) {
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (!(rels[i].ring() == ring_)) {
        throw RingMismatch(std::string(kind) + " relation " + std::to_string(i) + " is not over " + ring_.to_string());
      }
      if (!rels[i].has_parity(parity)) {
        throw ParityViolation(std::string(kind) + " relation " + std::to_string(i) + " = " + rels[i].to_string() +
                              " is not " + kind);
      }
    }
  };
  check(even_relations_, Parity::Even, "even");
  check(odd_relations_, Parity::Odd, "odd");
}

SuperRingSpec Presentation::combined_ring(const SuperRingSpec& base, const SuperRingSpec& fiber) {
  return SuperRingSpec(concat(base.even_vars(), fiber.even_vars()), concat(base.odd_vars(), fiber.odd_vars()));
}

SuperMatrix jacobian(const Presentation& pres) {
  const auto& fiber = pres.fiber();
  const std::size_t p = fiber.num_even();
  const std::size_t q = fiber.num_odd();
  const std::size_t r = pres.even_relations().size();
  const std::size_t s = pres.odd_relations().size();
  SuperMatrix jac(pres.ring(), SuperShape{r, s, p, q});
  for (std::size_t i = 0; i < r + s; ++i) {
    const SuperElement& rel = i < r ? pres.even_relations()[i] : pres.odd_relations()[i - r];
    for (std::size_t k = 0; k < p + q; ++k) {
      const std::string& name = k < p ? fiber.even_vars()[k] : fiber.odd_vars()[k - p];
      jac.set(i, k, partial_derivative(rel, pres.ring().lookup(name)));
    }
  }
  return jac;
}

SuperElement evaluate_at(const Presentation& pres, const RationalPoint& pt, const SuperElement& a) {
  const auto& ring = pres.ring();
  for (const auto& [name, value] : pt.values) {
    auto ref = ring.lookup(name);
    if (ref.parity == Parity::Odd) throw ParityViolation("odd variable '" + name + "' cannot take a value");
  }
  std::vector<SuperElement> images;
  images.reserve(ring.num_even() + ring.num_odd());
  const std::size_t base_even = pres.base().num_even();
  for (std::size_t i = 0; i < ring.num_even(); ++i) {
    const std::string& name = ring.even_vars()[i];
    auto it = pt.values.find(name);
    if (it != pt.values.end()) {
      images.emplace_back(ring, it->second);
    } else if (i < base_even) {
      images.push_back(SuperElement::even_var(ring, i));
    } else {
      throw NotAPoint("no value for fiber variable '" + name + "'");
    }
  }
  for (std::size_t k = 0; k < ring.num_odd(); ++k) images.emplace_back(ring);
  return substitute(SuperHom(ring, ring, std::move(images)), a);
}

std::pair<std::size_t, std::size_t> rank_at_point(const Presentation& pres, const RationalPoint& pt) {
  auto vanish = [&](const std::vector<SuperElement>& rels, const char* kind) {
    for (std::size_t i = 0; i < rels.size(); ++i) {
      SuperElement value = evaluate_at(pres, pt, rels[i]);
      if (!value.is_zero()) {
        throw NotAPoint(std::string(kind) + " relation " + std::to_string(i) + " evaluates to " + value.to_string());
      }
    }
  };
  vanish(pres.even_relations(), "even");
  vanish(pres.odd_relations(), "odd");

  const SuperMatrix jac = jacobian(pres);
  const std::size_t r = jac.shape().even_rows, s = jac.shape().odd_rows;
  const std::size_t p = jac.shape().even_cols, q = jac.shape().odd_cols;
  std::vector<SuperElement> even_block, odd_block;
  even_block.reserve(r * p);
  odd_block.reserve(s * q);
  for (std::size_t i = 0; i < r + s; ++i) {
    for (std::size_t k = 0; k < p + q; ++k) {
      SuperElement value = evaluate_at(pres, pt, jac(i, k));
      if (i < r && k < p) {
        even_block.push_back(std::move(value));
      } else if (i >= r && k >= p) {
        odd_block.push_back(std::move(value));
      } else if (!value.is_zero()) {
        throw std::logic_error("odd Jacobian entry survived evaluation at a point");
      }
    }
  }
  return {even::body_rank(pres.ring(), r, p, even_block), even::body_rank(pres.ring(), s, q, odd_block)};
}

SmoothnessVerdict is_smooth_at(const Presentation& pres, const RationalPoint& pt) {
  auto [even_rank, odd_rank] = rank_at_point(pres, pt);
  SmoothnessVerdict verdict;
  verdict.even_rank = even_rank;
  verdict.odd_rank = odd_rank;
  const std::size_t r = pres.even_relations().size();
  const std::size_t s = pres.odd_relations().size();
  verdict.smooth = even_rank == r && odd_rank == s;
  if (verdict.smooth) {
    verdict.relative_dimension = std::make_pair(pres.fiber().num_even() - r, pres.fiber().num_odd() - s);
  }
  return verdict;
}

bool is_etale_at(const Presentation& pres, const RationalPoint& pt) {
  auto verdict = is_smooth_at(pres, pt);
  return verdict.smooth && verdict.relative_dimension == std::make_pair(std::size_t{0}, std::size_t{0});
}

Presentation gl_presentation(std::size_t m, std::size_t n) {
  std::vector<std::string> even, odd;
  auto name = [](const char* stem, std::size_t i, std::size_t j) {
    return std::string(stem) + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) even.push_back(name("a", i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) even.push_back(name("d", i, j));
  even.push_back("t");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) odd.push_back(name("b", i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) odd.push_back(name("c", i, j));
  SuperRingSpec fiber(even, odd);
  SuperRingSpec ring = Presentation::combined_ring(SuperRingSpec(), fiber);

  std::vector<SuperElement> a, d;
  for (std::size_t i = 0; i < m * m; ++i) a.push_back(SuperElement::even_var(ring, i));
  for (std::size_t i = 0; i < n * n; ++i) d.push_back(SuperElement::even_var(ring, m * m + i));
  SuperElement t = SuperElement::variable(ring, "t");
  SuperElement relation = t * even::determinant(ring, m, a) * even::determinant(ring, n, d) - SuperElement(ring, Gaussian(1));
  return Presentation(SuperRingSpec(), fiber, {relation}, {});
}

RationalPoint gl_identity_point(std::size_t m, std::size_t n) {
  RationalPoint pt;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      pt.values["a_" + std::to_string(i + 1) + "_" + std::to_string(j + 1)] = Gaussian(i == j ? 1 : 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      pt.values["d_" + std::to_string(i + 1) + "_" + std::to_string(j + 1)] = Gaussian(i == j ? 1 : 0);
  pt.values["t"] = Gaussian(1);
  return pt;
}

Presentation adjoin_free(const Presentation& pres, std::size_t k, std::size_t l) {
  std::vector<std::string> even = pres.fiber().even_vars();
  std::vector<std::string> odd = pres.fiber().odd_vars();
  std::set<std::string> used(pres.ring().even_vars().begin(), pres.ring().even_vars().end());
  used.insert(pres.ring().odd_vars().begin(), pres.ring().odd_vars().end());
  for (std::size_t i = 0; i < k; ++i) even.push_back(fresh_name(used, "free_x"));
  for (std::size_t i = 0; i < l; ++i) odd.push_back(fresh_name(used, "free_xi"));
  SuperRingSpec fiber(even, odd);
  SuperRingSpec ring = Presentation::combined_ring(pres.base(), fiber);
  SuperHom into = SuperHom::inclusion(pres.ring(), ring);
  std::vector<SuperElement> even_rel, odd_rel;
  for (const auto& f : pres.even_relations()) even_rel.push_back(substitute(into, f));
  for (const auto& phi : pres.odd_relations()) odd_rel.push_back(substitute(into, phi));
  return Presentation(pres.base(), fiber, std::move(even_rel), std::move(odd_rel));
}

}  // namespace sgq
