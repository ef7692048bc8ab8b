#include "sgq/super_element.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "sgq/errors.hpp"

namespace sgq {

namespace {

// Number of set bits of `mask` strictly above position `bit`.
int bits_above(std::uint64_t mask, unsigned bit) {
  if (bit >= 63) return 0;
  return std::popcount(mask >> (bit + 1));
}

// Sign of theta_S * theta_T after sorting into increasing order: one
// transposition per pair (s in S, t in T) with s > t.
int merge_sign(std::uint64_t s, std::uint64_t t) {
  int swaps = 0;
  for (std::uint64_t rest = t; rest != 0; rest &= rest - 1) {
    swaps += bits_above(s, static_cast<unsigned>(std::countr_zero(rest)));
  }
  return (swaps & 1) ? -1 : 1;
}

void require_same_ring(const SuperRingSpec& a, const SuperRingSpec& b, const char* op) {
  if (!(a == b)) throw RingMismatch(std::string(op) + ": " + a.to_string() + " vs " + b.to_string());
}

}  // namespace

// ---------------------------------------------------------------------------
// SuperRingSpec

SuperRingSpec::SuperRingSpec() : data_(std::make_shared<const Data>()) {}

SuperRingSpec::SuperRingSpec(std::vector<std::string> even_vars, std::vector<std::string> odd_vars) {
  if (odd_vars.size() > kMaxOddVars) {
    throw std::invalid_argument("at most 64 odd generators are supported");
  }
  auto data = std::make_shared<Data>();
  data->even = std::move(even_vars);
  data->odd = std::move(odd_vars);
  auto insert = [&](const std::string& name, Parity parity, std::size_t i) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    if (!data->index.emplace(name, VarRef{parity, i}).second) {
      throw std::invalid_argument("duplicate variable name '" + name + "'");
    }
  };
  for (std::size_t i = 0; i < data->even.size(); ++i) insert(data->even[i], Parity::Even, i);
  for (std::size_t i = 0; i < data->odd.size(); ++i) insert(data->odd[i], Parity::Odd, i);
  data_ = std::move(data);
}

std::optional<SuperRingSpec::VarRef> SuperRingSpec::find(std::string_view name) const {
  auto it = data_->index.find(name);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

SuperRingSpec::VarRef SuperRingSpec::lookup(std::string_view name) const {
  if (auto ref = find(name)) return *ref;
  throw UnknownVariable("'" + std::string(name) + "' not in ring " + to_string());
}

bool operator==(const SuperRingSpec& a, const SuperRingSpec& b) {
  return a.data_ == b.data_ || (a.data_->even == b.data_->even && a.data_->odd == b.data_->odd);
}

std::string SuperRingSpec::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < num_even(); ++i) out << (i ? "," : "") << data_->even[i];
  out << " | ";
  for (std::size_t i = 0; i < num_odd(); ++i) out << (i ? "," : "") << data_->odd[i];
  out << "]";
  return out.str();
}

SuperRingSpec grassmann_ring(std::size_t q, std::string_view prefix) {
  std::vector<std::string> odd;
  for (std::size_t k = 1; k <= q; ++k) odd.push_back(std::string(prefix) + std::to_string(k));
  return SuperRingSpec({}, std::move(odd));
}

// ---------------------------------------------------------------------------
// Monomial

std::size_t Monomial::odd_degree() const { return static_cast<std::size_t>(std::popcount(odd)); }

bool Monomial::is_constant() const {
  if (odd != 0) return false;
  for (auto e : exponents)
    if (e != 0) return false;
  return true;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  auto da = a.odd_degree();
  auto db = b.odd_degree();
  if (da != db) return da < db;
  if (a.odd != b.odd) {
    // Lexicographic on the sorted index lists: the set whose lowest
    // differing generator is smaller comes first.
    std::uint64_t diff = a.odd ^ b.odd;
    std::uint64_t lowest = diff & (~diff + 1);
    return (a.odd & lowest) != 0;
  }
  std::uint64_t ea = 0, eb = 0;
  for (auto e : a.exponents) ea += e;
  for (auto e : b.exponents) eb += e;
  if (ea != eb) return ea < eb;
  return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(), a.exponents.begin(),
                                      a.exponents.end());
}

// ---------------------------------------------------------------------------
// SuperElement

SuperElement::SuperElement(SuperRingSpec ring) : ring_(std::move(ring)) {}

SuperElement::SuperElement(SuperRingSpec ring, Gaussian constant) : ring_(std::move(ring)) {
  Monomial one;
  one.exponents.assign(ring_.num_even(), 0);
  add_term(one, constant);
}

SuperElement SuperElement::variable(const SuperRingSpec& ring, std::string_view name) {
  auto ref = ring.lookup(name);
  return ref.parity == Parity::Even ? even_var(ring, ref.index) : odd_var(ring, ref.index);
}

SuperElement SuperElement::even_var(const SuperRingSpec& ring, std::size_t index) {
  if (index >= ring.num_even()) throw UnknownVariable("even index " + std::to_string(index));
  Monomial m;
  m.exponents.assign(ring.num_even(), 0);
  m.exponents[index] = 1;
  SuperElement out(ring);
  out.add_term(m, Gaussian(1));
  return out;
}

SuperElement SuperElement::odd_var(const SuperRingSpec& ring, std::size_t index) {
  if (index >= ring.num_odd()) throw UnknownVariable("odd index " + std::to_string(index));
  Monomial m;
  m.exponents.assign(ring.num_even(), 0);
  m.odd = std::uint64_t{1} << index;
  SuperElement out(ring);
  out.add_term(m, Gaussian(1));
  return out;
}

SuperElement SuperElement::from_terms(const SuperRingSpec& ring, const Terms& terms) {
  SuperElement out(ring);
  const std::uint64_t allowed =
      ring.num_odd() >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << ring.num_odd()) - 1);
  for (const auto& [m, c] : terms) {
    if (m.exponents.size() != ring.num_even()) {
      throw std::invalid_argument("exponent vector length does not match ring " + ring.to_string());
    }
    if ((m.odd & ~allowed) != 0) {
      throw std::invalid_argument("odd index out of range for ring " + ring.to_string());
    }
    out.add_term(m, c);
  }
  return out;
}

void SuperElement::add_term(const Monomial& monomial, const Gaussian& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool SuperElement::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Gaussian SuperElement::constant_term() const {
  if (!terms_.empty() && terms_.begin()->first.is_constant()) return terms_.begin()->second;
  return Gaussian(0);
}

std::optional<Parity> SuperElement::parity() const {
  if (terms_.empty()) return Parity::Even;
  Parity p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return std::nullopt;
  return p;
}

bool SuperElement::has_parity(Parity p) const {
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return false;
  return true;
}

SuperElement SuperElement::body() const {
  SuperElement out(ring_);
  for (const auto& [m, c] : terms_)
    if (m.odd == 0) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

SuperElement SuperElement::soul() const {
  SuperElement out(ring_);
  for (const auto& [m, c] : terms_)
    if (m.odd != 0) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

SuperElement SuperElement::operator-() const {
  SuperElement out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SuperElement& SuperElement::operator+=(const SuperElement& other) {
  require_same_ring(ring_, other.ring_, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& other) {
  require_same_ring(ring_, other.ring_, "subtract");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SuperElement& SuperElement::operator*=(const SuperElement& other) { return *this = *this * other; }

SuperElement& SuperElement::operator*=(const Gaussian& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

SuperElement operator*(const SuperElement& a, const SuperElement& b) {
  require_same_ring(a.ring_, b.ring_, "multiply");
  SuperElement out(a.ring_);
  Monomial product;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if ((ma.odd & mb.odd) != 0) continue;
      product.odd = ma.odd | mb.odd;
      product.exponents = ma.exponents;
      for (std::size_t i = 0; i < product.exponents.size(); ++i) product.exponents[i] += mb.exponents[i];
      Gaussian coeff = ca * cb;
      if (merge_sign(ma.odd, mb.odd) < 0) coeff = -coeff;
      out.add_term(product, coeff);
    }
  }
  return out;
}

bool operator==(const SuperElement& a, const SuperElement& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

SuperElement SuperElement::pow(unsigned exponent) const {
  SuperElement result(ring_, Gaussian(1));
  SuperElement base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string SuperElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Gaussian coeff = c;
    bool negative = sgn(coeff.im()) == 0 && sgn(coeff.re()) < 0;
    if (negative) coeff = -coeff;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string factors;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += ring_.even_vars()[i];
      if (m.exponents[i] > 1) factors += "^" + std::to_string(m.exponents[i]);
    }
    for (std::size_t k = 0; k < ring_.num_odd(); ++k) {
      if (((m.odd >> k) & 1u) == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += ring_.odd_vars()[k];
    }
    if (factors.empty()) {
      out << coeff.to_string();
    } else if (coeff.is_one()) {
      out << factors;
    } else {
      out << coeff.to_string() << "*" << factors;
    }
  }
  return out.str();
}

SuperElement se_mul(const SuperElement& a, const SuperElement& b) { return a * b; }

SuperElement body(const SuperElement& a) { return a.body(); }

bool is_unit(const SuperElement& a) {
  SuperElement b = a.body();
  return !b.is_zero() && b.is_constant();
}

SuperElement se_inv(const SuperElement& a) {
  SuperElement b = a.body();
  if (b.is_zero() || !b.is_constant()) {
    throw NotInvertible("body " + b.to_string() + " is not a nonzero constant");
  }
  // a = c (1 + s/c) with s nilpotent: a^{-1} = c^{-1} sum_k (-s/c)^k.
  Gaussian c_inv = b.constant_term().reciprocal();
  SuperElement step = a.soul() * (-c_inv);
  SuperElement power(a.ring(), Gaussian(1));
  SuperElement sum = power;
  for (std::size_t k = 0; k < a.ring().num_odd(); ++k) {
    power *= step;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * c_inv;
}

// ---------------------------------------------------------------------------
// SuperHom

SuperHom::SuperHom(SuperRingSpec source, SuperRingSpec target, std::vector<SuperElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.num_even() + source_.num_odd()) {
    throw std::invalid_argument("SuperHom needs one image per source generator");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    bool even = i < source_.num_even();
    const std::string& name = even ? source_.even_vars()[i] : source_.odd_vars()[i - source_.num_even()];
    if (!(images_[i].ring() == target_)) throw RingMismatch("image of '" + name + "'");
    Parity want = even ? Parity::Even : Parity::Odd;
    if (!images_[i].has_parity(want)) {
      throw ParityViolation(std::string(even ? "even" : "odd") + " generator '" + name + "' mapped to " +
                            images_[i].to_string());
    }
  }
}

SuperHom SuperHom::inclusion(const SuperRingSpec& source, const SuperRingSpec& target) {
  std::vector<SuperElement> images;
  auto add = [&](const std::string& name, Parity parity) {
    auto ref = target.lookup(name);
    if (ref.parity != parity) throw ParityViolation("'" + name + "' changes parity under inclusion");
    images.push_back(SuperElement::variable(target, name));
  };
  for (const auto& name : source.even_vars()) add(name, Parity::Even);
  for (const auto& name : source.odd_vars()) add(name, Parity::Odd);
  return SuperHom(source, target, std::move(images));
}

const SuperElement& SuperHom::image(SuperRingSpec::VarRef var) const {
  return var.parity == Parity::Even ? images_.at(var.index) : images_.at(source_.num_even() + var.index);
}

SuperElement substitute(const SuperHom& h, const SuperElement& a) {
  if (!(a.ring() == h.source())) throw RingMismatch("substitute: element not in source ring");
  const std::size_t p = h.source().num_even();
  // Powers of even images are reused across terms.
  std::vector<std::vector<SuperElement>> powers(p);
  auto even_power = [&](std::size_t i, std::uint32_t e) -> const SuperElement& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(h.target(), Gaussian(1));
    while (cache.size() <= e) cache.push_back(cache.back() * h.images()[i]);
    return cache[e];
  };

  SuperElement out(h.target());
  for (const auto& [m, c] : a.terms()) {
    SuperElement term(h.target(), c);
    for (std::size_t i = 0; i < p && !term.is_zero(); ++i) {
      if (m.exponents[i] != 0) term *= even_power(i, m.exponents[i]);
    }
    for (std::uint64_t rest = m.odd; rest != 0 && !term.is_zero(); rest &= rest - 1) {
      term *= h.images()[p + static_cast<std::size_t>(std::countr_zero(rest))];
    }
    out += term;
  }
  return out;
}

SuperElement partial_derivative(const SuperElement& a, std::string_view var) {
  return partial_derivative(a, a.ring().lookup(var));
}

SuperElement partial_derivative(const SuperElement& a, SuperRingSpec::VarRef var) {
  SuperElement out(a.ring());
  if (var.parity == Parity::Even) {
    if (var.index >= a.ring().num_even()) throw UnknownVariable("even index " + std::to_string(var.index));
    for (const auto& [m, c] : a.terms()) {
      std::uint32_t e = m.exponents[var.index];
      if (e == 0) continue;
      Monomial d = m;
      d.exponents[var.index] = e - 1;
      out.add_term(d, c * Gaussian(static_cast<long>(e)));
    }
    return out;
  }
  if (var.index >= a.ring().num_odd()) throw UnknownVariable("odd index " + std::to_string(var.index));
  const std::uint64_t bit = std::uint64_t{1} << var.index;
  const std::uint64_t below = bit - 1;
  for (const auto& [m, c] : a.terms()) {
    if ((m.odd & bit) == 0) continue;
    Monomial d = m;
    d.odd &= ~bit;
    // Moving theta_k to the front passes every odd factor with a smaller index.
    bool negative = (std::popcount(m.odd & below) & 1) != 0;
    out.add_term(d, negative ? -c : c);
  }
  return out;
}

}  // namespace sgq
