#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sgq {

/// Exact Gaussian rational re + i*im with arbitrary-precision parts.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Gaussian(mpq_class re, mpq_class im = 0);

  /// Parses "num/den" or "num" into the real part.
  static Gaussian parse_rational(std::string_view text);
  static Gaussian from_parts(std::string_view re, std::string_view im);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  /// Throws std::domain_error on zero.
  Gaussian reciprocal() const;

  Gaussian operator-() const { return Gaussian(-re_, -im_); }
  Gaussian& operator+=(const Gaussian& other);
  Gaussian& operator-=(const Gaussian& other);
  Gaussian& operator*=(const Gaussian& other);
  Gaussian& operator/=(const Gaussian& other);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Human-readable form, e.g. "3/2", "-i", "1/2+3i".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Always "num/den", with den >= 1; the exchange format for exact values.
std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(std::string_view text);

}  // namespace sgq
