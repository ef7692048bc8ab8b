#include "sgq/even_linalg.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

#include "sgq/errors.hpp"

namespace sgq::even {

namespace {

void check_size(std::size_t rows, std::size_t cols, std::span<const SuperElement> entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("entry count does not match dimensions");
}

}  // namespace

SuperElement determinant(const SuperRingSpec& ring, std::size_t n, std::span<const SuperElement> entries) {
  check_size(n, n, entries);
  if (n == 0) return SuperElement(ring, Gaussian(1));
  if (n > 20) throw std::invalid_argument("determinant: matrix too large for subset expansion");

  // minors[mask] = det of the submatrix on rows `mask` and the first
  // popcount(mask) columns, expanded along its last column.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::optional<SuperElement>> minors(full + 1);
  minors[0] = SuperElement(ring, Gaussian(1));
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t col = k - 1;
    SuperElement acc(ring);
    std::size_t position = 0;
    for (std::size_t row = 0; row < n; ++row) {
      if (((mask >> row) & 1u) == 0) continue;
      const SuperElement& entry = entries[row * n + col];
      if (!entry.is_zero()) {
        const SuperElement& minor = *minors[mask & ~(std::size_t{1} << row)];
        if (!minor.is_zero()) {
          SuperElement term = entry * minor;
          if (((position + col) & 1u) != 0) {
            acc -= term;
          } else {
            acc += term;
          }
        }
      }
      ++position;
    }
    minors[mask] = std::move(acc);
  }
  return *minors[full];
}

std::vector<SuperElement> inverse(const SuperRingSpec& ring, std::size_t n, std::span<const SuperElement> entries) {
  check_size(n, n, entries);
  SuperElement det = determinant(ring, n, entries);
  if (!is_unit(det)) {
    throw NotInvertible("determinant body " + det.body().to_string() + " is not a nonzero constant");
  }
  SuperElement det_inv = se_inv(det);
  std::vector<SuperElement> out(n * n, SuperElement(ring));
  if (n == 1) {
    out[0] = det_inv;
    return out;
  }
  std::vector<SuperElement> minor;
  minor.reserve((n - 1) * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      minor.clear();
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) minor.push_back(entries[r * n + c]);
        }
      }
      SuperElement cofactor = determinant(ring, n - 1, minor);
      if (((i + j) & 1u) != 0) cofactor = -cofactor;
      // adj(M)_{ji} = cofactor_{ij}
      out[j * n + i] = cofactor * det_inv;
    }
  }
  return out;
}

std::size_t body_rank(const SuperRingSpec&, std::size_t rows, std::size_t cols,
                      std::span<const SuperElement> entries) {
  check_size(rows, cols, entries);
  std::vector<SuperElement> m;
  m.reserve(entries.size());
  for (const auto& e : entries) m.push_back(e.body());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (!m[r * cols + col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m[pivot * cols + c], m[rank * cols + c]);
    }
    const SuperElement lead = m[rank * cols + col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      SuperElement factor = m[r * cols + col];
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < cols; ++c) {
        m[r * cols + c] = lead * m[r * cols + c] - factor * m[rank * cols + c];
      }
    }
    ++rank;
  }
  return rank;
}

bool body_invertible(const SuperRingSpec& ring, std::size_t n, std::span<const SuperElement> entries) {
  check_size(n, n, entries);
  std::vector<SuperElement> bodies;
  bodies.reserve(entries.size());
  for (const auto& e : entries) bodies.push_back(e.body());
  return is_unit(determinant(ring, n, bodies));
}

}  // namespace sgq::even
