#include "sgq/random.hpp"

#include <bit>

#include "sgq/even_linalg.hpp"

namespace sgq::gen {

namespace {

std::uint32_t lo(std::uint64_t v) { return static_cast<std::uint32_t>(v); }
std::uint32_t hi(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

Monomial random_monomial(Rng& rng, const SuperRingSpec& ring, Parity parity, bool need_odd, const Bounds& b) {
  Monomial m;
  m.exponents.assign(ring.num_even(), 0);
  for (auto& e : m.exponents)
    if (rng.chance(1, 2)) e = static_cast<std::uint32_t>(rng.below(b.max_exponent + 1));
  const std::size_t q = ring.num_odd();
  if (q == 0) return m;
  for (std::size_t k = 0; k < q; ++k)
    if (rng.chance(1, 3)) m.odd |= std::uint64_t{1} << k;
  if (m.parity() != parity) m.odd ^= std::uint64_t{1} << rng.below(q);
  if (need_odd && m.odd == 0 && q >= 2) {
    std::size_t a = rng.below(q);
    std::size_t c = (a + 1 + rng.below(q - 1)) % q;
    m.odd = (std::uint64_t{1} << a) | (std::uint64_t{1} << c);
  }
  return m;
}

// Row-major k x k numeric matrix; `zero_at` marks entries forced to 0.
template <typename ZeroAt>
std::vector<Gaussian> numeric_invertible(Rng& rng, std::size_t k, const Bounds& b, ZeroAt zero_at) {
  SuperRingSpec empty;
  while (true) {
    std::vector<Gaussian> values(k * k);
    std::vector<SuperElement> as_elements;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (!zero_at(i, j)) values[i * k + j] = coefficient(rng, b);
        as_elements.emplace_back(empty, values[i * k + j]);
      }
    }
    if (!even::determinant(empty, k, as_elements).is_zero()) return values;
  }
}

SuperMatrix with_body(const SuperRingSpec& ring, std::size_t m, std::size_t n, const std::vector<Gaussian>& a,
                      const std::vector<Gaussian>& d) {
  SuperMatrix body(ring, SuperShape::square(m, n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) body.set(i, j, SuperElement(ring, a[i * m + j]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) body.set(m + i, m + j, SuperElement(ring, d[i * n + j]));
  return body;
}

template <typename Allowed>
SuperMatrix unipotent(Rng& rng, const SuperRingSpec& ring, std::size_t m, std::size_t n, const Bounds& b,
                      Allowed allowed) {
  SuperMatrix x = SuperMatrix::identity(ring, m, n);
  const auto shape = x.shape();
  for (std::size_t i = 0; i < m + n; ++i)
    for (std::size_t j = 0; j < m + n; ++j)
      if (allowed(i, j)) x.set(i, j, x(i, j) + soul(rng, ring, shape.entry_parity(i, j), b));
  return x;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream), lo(index), hi(index)};
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t bound) { return engine_() % bound; }

long Rng::between(long lo_, long hi_) {
  return lo_ + static_cast<long>(below(static_cast<std::uint64_t>(hi_ - lo_ + 1)));
}

bool Rng::chance(unsigned numerator, unsigned denominator) { return below(denominator) < numerator; }

Gaussian coefficient(Rng& rng, const Bounds& b) {
  mpq_class re(rng.between(-b.coeff, b.coeff), rng.between(1, b.coeff));
  mpq_class im(0);
  if (rng.chance(b.complex_percent, 100)) im = mpq_class(rng.between(-b.coeff, b.coeff), rng.between(1, b.coeff));
  return Gaussian(re, im);
}

Gaussian nonzero_coefficient(Rng& rng, const Bounds& b) {
  while (true) {
    Gaussian c = coefficient(rng, b);
    if (!c.is_zero()) return c;
  }
}

SuperElement element(Rng& rng, const SuperRingSpec& ring, Parity parity, const Bounds& b) {
  SuperElement out(ring);
  const std::size_t terms = rng.below(b.max_terms + 1);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m = random_monomial(rng, ring, parity, false, b);
    if (m.parity() != parity) continue;
    out.add_term(m, nonzero_coefficient(rng, b));
  }
  return out;
}

SuperElement soul(Rng& rng, const SuperRingSpec& ring, Parity parity, const Bounds& b) {
  SuperElement out(ring);
  const std::size_t terms = rng.below(b.max_terms + 1);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m = random_monomial(rng, ring, parity, true, b);
    if (m.parity() != parity || m.odd == 0) continue;
    out.add_term(m, nonzero_coefficient(rng, b));
  }
  return out;
}

SuperMatrix matrix(Rng& rng, const SuperRingSpec& ring, const SuperShape& shape, const Bounds& b) {
  SuperMatrix x(ring, shape);
  for (std::size_t i = 0; i < shape.rows(); ++i)
    for (std::size_t j = 0; j < shape.cols(); ++j) x.set(i, j, element(rng, ring, shape.entry_parity(i, j), b));
  return x;
}

SuperMatrix invertible(Rng& rng, const SuperRingSpec& ring, std::size_t m, std::size_t n, const Bounds& b) {
  auto free = [](std::size_t, std::size_t) { return false; };
  auto a = numeric_invertible(rng, m, b, free);
  auto d = numeric_invertible(rng, n, b, free);
  auto any = [](std::size_t, std::size_t) { return true; };
  return with_body(ring, m, n, a, d) * unipotent(rng, ring, m, n, b, any);
}

SuperMatrix big_cell(Rng& rng, const SuperRingSpec& ring, const BlockProfile& bp, const Bounds& b) {
  while (true) {
    SuperMatrix g = invertible(rng, ring, bp.m, bp.n, b);
    if (in_big_cell(g, bp)) return g;
  }
}

SuperMatrix parabolic(Rng& rng, const SuperRingSpec& ring, const BlockProfile& bp, const Bounds& b) {
  // Even part: rows of block 2 vanish in the columns of block 1.
  auto a = numeric_invertible(rng, bp.m, b, [&](std::size_t i, std::size_t j) { return i >= bp.r && j < bp.r; });
  // Odd part: rows of block 3 vanish in the columns of block 4.
  const std::size_t n3 = bp.n - bp.s;
  auto d = numeric_invertible(rng, bp.n, b, [&](std::size_t i, std::size_t j) { return i < n3 && j >= n3; });
  auto allowed = [&](std::size_t i, std::size_t j) {
    bool middle_row = i >= bp.offset(2) && i < bp.offset(4);
    bool outer_col = j < bp.offset(2) || j >= bp.offset(4);
    return !(middle_row && outer_col);
  };
  return with_body(ring, bp.m, bp.n, a, d) * unipotent(rng, ring, bp.m, bp.n, b, allowed);
}

SuperMatrix stabilizer_probe(Rng& rng, const SuperRingSpec& ring, const BlockProfile& bp, const Bounds& b) {
  switch (rng.below(3)) {
    case 0: return parabolic(rng, ring, bp, b);
    case 1: {
      SuperMatrix p = parabolic(rng, ring, bp, b);
      std::vector<std::pair<std::size_t, std::size_t>> cells;
      for (int bi : {2, 3})
        for (int bj : {1, 4})
          for (std::size_t i = 0; i < bp.size(bi); ++i)
            for (std::size_t j = 0; j < bp.size(bj); ++j) cells.emplace_back(bp.offset(bi) + i, bp.offset(bj) + j);
      if (cells.empty()) return p;
      auto [i, j] = cells[rng.below(cells.size())];
      const Parity parity = p.shape().entry_parity(i, j);
      const bool possible = ring.num_odd() >= (parity == Parity::Odd ? 1u : 2u);
      SuperElement extra(ring);
      while (possible && extra.is_zero()) extra = soul(rng, ring, parity, b);
      p.set(i, j, p(i, j) + extra);
      return p;
    }
    default: {
      SuperMatrix g = invertible(rng, ring, bp.m, bp.n, b);
      if (!rng.chance(1, 2)) return g;
      SuperMatrix reverse(ring, SuperShape::square(bp.m, bp.n));
      const SuperElement one(ring, Gaussian(1));
      for (std::size_t i = 0; i < bp.m; ++i) reverse.set(i, bp.m - 1 - i, one);
      for (std::size_t i = 0; i < bp.n; ++i) reverse.set(bp.m + i, bp.m + bp.n - 1 - i, one);
      return g * reverse;
    }
  }
}

NCoordinates ncoordinates(Rng& rng, const SuperRingSpec& ring, const BlockProfile& bp, const Bounds& b) {
  return NCoordinates(bp, matrix(rng, ring, NCoordinates::u_shape(bp), b), matrix(rng, ring, NCoordinates::eta_shape(bp), b),
                      matrix(rng, ring, NCoordinates::xi_shape(bp), b), matrix(rng, ring, NCoordinates::v_shape(bp), b));
}

SuperMatrix maybe_singular(Rng& rng, const SuperRingSpec& ring, std::size_t m, std::size_t n, const Bounds& b) {
  auto free = [](std::size_t, std::size_t) { return false; };
  auto a = numeric_invertible(rng, m, b, free);
  auto d = numeric_invertible(rng, n, b, free);
  const auto which = rng.below(3);
  if (which == 1 && m > 0) {
    const std::size_t row = rng.below(m);
    for (std::size_t j = 0; j < m; ++j) a[row * m + j] = Gaussian(0);
  } else if (which == 2 && n > 0) {
    const std::size_t row = rng.below(n);
    for (std::size_t j = 0; j < n; ++j) d[row * n + j] = Gaussian(0);
  }
  auto any = [](std::size_t, std::size_t) { return true; };
  return with_body(ring, m, n, a, d) * unipotent(rng, ring, m, n, b, any);
}

}  // namespace sgq::gen
