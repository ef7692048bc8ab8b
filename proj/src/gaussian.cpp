#include "sgq/gaussian.hpp"

#include <stdexcept>

namespace sgq {

Gaussian::Gaussian(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Gaussian Gaussian::parse_rational(std::string_view text) { return Gaussian(rational_from_string(text)); }

Gaussian Gaussian::from_parts(std::string_view re, std::string_view im) {
  return Gaussian(rational_from_string(re), rational_from_string(im));
}

Gaussian Gaussian::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  mpq_class norm = re_ * re_ + im_ * im_;
  return Gaussian(re_ / norm, -im_ / norm);
}

Gaussian& Gaussian::operator+=(const Gaussian& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& other) {
  if (sgn(im_) == 0 && sgn(other.im_) == 0) {
    re_ *= other.re_;
    return *this;
  }
  mpq_class re = re_ * other.re_ - im_ * other.im_;
  mpq_class im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& other) { return *this *= other.reciprocal(); }

std::string Gaussian::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) > 0) return "(" + re_.get_str() + "+" + imag + ")";
  return "(" + re_.get_str() + imag + ")";
}

std::string rational_to_string(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rational_from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    bool ok = (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '/';
    if (!ok) throw std::invalid_argument("bad rational literal '" + s + "'");
  }
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace sgq
