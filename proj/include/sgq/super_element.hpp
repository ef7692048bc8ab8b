#pragma once

// Exact arithmetic in free supercommutative rings
//   Q(i)[x_1..x_p] (x) Lambda[theta_1..theta_q].
//
// Elements are sparse maps from monomials to Gaussian-rational coefficients.
// A monomial is an even exponent vector together with a set of odd
// generators; the odd factors are kept in increasing index order and the
// Koszul sign of reordering is absorbed into the coefficient, so equal
// elements have equal representations.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgq/gaussian.hpp"

namespace sgq {

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}

/// Ordered generator names of a free supercommutative ring. Copies share the
/// underlying data; equality compares the name lists.
class SuperRingSpec {
 public:
  struct VarRef {
    Parity parity;
    std::size_t index;
  };

  static constexpr std::size_t kMaxOddVars = 64;

  SuperRingSpec();
  /// Throws std::invalid_argument on duplicate names or more than 64 odd generators.
  SuperRingSpec(std::vector<std::string> even_vars, std::vector<std::string> odd_vars);

  const std::vector<std::string>& even_vars() const { return data_->even; }
  const std::vector<std::string>& odd_vars() const { return data_->odd; }
  std::size_t num_even() const { return data_->even.size(); }
  std::size_t num_odd() const { return data_->odd.size(); }

  std::optional<VarRef> find(std::string_view name) const;
  /// Throws UnknownVariable.
  VarRef lookup(std::string_view name) const;

  friend bool operator==(const SuperRingSpec& a, const SuperRingSpec& b);

  std::string to_string() const;

 private:
  struct Data {
    std::vector<std::string> even;
    std::vector<std::string> odd;
    std::map<std::string, VarRef, std::less<>> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Convenience: a ring with odd generators named th1..thq and no even ones.
SuperRingSpec grassmann_ring(std::size_t q, std::string_view prefix = "th");

struct Monomial {
  std::vector<std::uint32_t> exponents;
  std::uint64_t odd = 0;  // bit k set iff theta_k is a factor

  std::size_t odd_degree() const;
  Parity parity() const { return static_cast<Parity>(odd_degree() & 1); }
  bool is_constant() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: odd degree, then odd set, then even exponents.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class SuperElement {
 public:
  using Terms = std::map<Monomial, Gaussian, MonomialLess>;

  explicit SuperElement(SuperRingSpec ring);
  SuperElement(SuperRingSpec ring, Gaussian constant);

  static SuperElement variable(const SuperRingSpec& ring, std::string_view name);
  static SuperElement even_var(const SuperRingSpec& ring, std::size_t index);
  static SuperElement odd_var(const SuperRingSpec& ring, std::size_t index);
  /// Drops zero coefficients; validates monomial sizes against the ring.
  static SuperElement from_terms(const SuperRingSpec& ring, const Terms& terms);
  /// Adds coeff * monomial in place, keeping canonical form.
  void add_term(const Monomial& monomial, const Gaussian& coeff);

  const SuperRingSpec& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Gaussian constant_term() const;

  /// nullopt for inhomogeneous elements; zero reports Even.
  std::optional<Parity> parity() const;
  /// Zero is homogeneous of both parities.
  bool has_parity(Parity p) const;

  SuperElement body() const;
  SuperElement soul() const;

  SuperElement operator-() const;
  SuperElement& operator+=(const SuperElement& other);
  SuperElement& operator-=(const SuperElement& other);
  SuperElement& operator*=(const SuperElement& other);
  SuperElement& operator*=(const Gaussian& scalar);

  friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
  friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a -= b; }
  friend SuperElement operator*(const SuperElement& a, const SuperElement& b);
  friend SuperElement operator*(SuperElement a, const Gaussian& s) { return a *= s; }
  friend SuperElement operator*(const Gaussian& s, SuperElement a) { return a *= s; }

  /// Same ring and same terms.
  friend bool operator==(const SuperElement& a, const SuperElement& b);

  SuperElement pow(unsigned exponent) const;

  std::string to_string() const;

 private:
  SuperRingSpec ring_;
  Terms terms_;
};

SuperElement se_mul(const SuperElement& a, const SuperElement& b);
SuperElement body(const SuperElement& a);
/// True when the body is a nonzero constant.
bool is_unit(const SuperElement& a);
/// Neumann-series inverse. Throws NotInvertible when the body is not a nonzero constant.
SuperElement se_inv(const SuperElement& a);

/// A parity-preserving assignment of source generators to target elements,
/// i.e. a T-point of the free superscheme on the source generators.
class SuperHom {
 public:
  /// `images` lists even generators first, then odd ones, in ring order.
  /// Throws ParityViolation, RingMismatch, or std::invalid_argument on a count mismatch.
  SuperHom(SuperRingSpec source, SuperRingSpec target, std::vector<SuperElement> images);

  /// Name-preserving inclusion; every source name must exist in target with the same parity.
  static SuperHom inclusion(const SuperRingSpec& source, const SuperRingSpec& target);

  const SuperRingSpec& source() const { return source_; }
  const SuperRingSpec& target() const { return target_; }
  const std::vector<SuperElement>& images() const { return images_; }
  const SuperElement& image(SuperRingSpec::VarRef var) const;

 private:
  SuperRingSpec source_;
  SuperRingSpec target_;
  std::vector<SuperElement> images_;
};

/// Applies the unique superalgebra morphism extending `h`.
SuperElement substitute(const SuperHom& h, const SuperElement& a);

/// Even variables: ordinary derivative. Odd variables: left derivative.
/// Throws UnknownVariable.
SuperElement partial_derivative(const SuperElement& a, std::string_view var);
SuperElement partial_derivative(const SuperElement& a, SuperRingSpec::VarRef var);

}  // namespace sgq
