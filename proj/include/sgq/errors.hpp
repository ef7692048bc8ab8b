#pragma once

#include <stdexcept>
#include <string>

namespace sgq {

/// Base of every domain error. `name()` is the stable identifier that the
/// CLI reports; `locus()` says where the failure was detected.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, std::string locus)
      : std::runtime_error(name + ": " + locus), name_(std::move(name)), locus_(std::move(locus)) {}

  const std::string& name() const noexcept { return name_; }
  const std::string& locus() const noexcept { return locus_; }

 private:
  std::string name_;
  std::string locus_;
};

#define SGQ_DOMAIN_ERROR(Type)                                                 \
  class Type : public DomainError {                                            \
   public:                                                                     \
    explicit Type(std::string locus) : DomainError(#Type, std::move(locus)) {} \
  }

SGQ_DOMAIN_ERROR(RingMismatch);
SGQ_DOMAIN_ERROR(NotInvertible);
SGQ_DOMAIN_ERROR(ParityViolation);
SGQ_DOMAIN_ERROR(UnknownVariable);
SGQ_DOMAIN_ERROR(ParityPatternViolation);
SGQ_DOMAIN_ERROR(ShapeMismatch);
SGQ_DOMAIN_ERROR(NotInBigCell);
SGQ_DOMAIN_ERROR(RankDeficient);
SGQ_DOMAIN_ERROR(NotAPoint);
SGQ_DOMAIN_ERROR(UnknownSuite);

#undef SGQ_DOMAIN_ERROR

}  // namespace sgq
