#pragma once

#include <stdexcept>
#include <string>

namespace nok {

// Domain errors map to CLI exit code 1, parse errors to exit code 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPseudoEffective : DomainError {
    NotPseudoEffective() : DomainError("class is not pseudo-effective") {}
    explicit NotPseudoEffective(const std::string& what) : DomainError(what) {}
};

struct NotBig : DomainError {
    NotBig() : DomainError("class is not big") {}
};

struct NotAmple : DomainError {
    NotAmple() : DomainError("class is not ample") {}
};

struct NotAbelianModel : DomainError {
    NotAbelianModel() : DomainError("model is not declared abelian") {}
};

struct RadicandMismatch : DomainError {
    RadicandMismatch() : DomainError("mixing two distinct radicands") {}
};

struct NegativeDiscriminant : DomainError {
    NegativeDiscriminant() : DomainError("negative discriminant") {}
};

struct DimensionMismatch : DomainError {
    DimensionMismatch() : DomainError("coordinate length does not match model rank") {}
};

struct UnboundedRay : DomainError {
    UnboundedRay() : DomainError("ray never leaves the big cone; a probe bound is required") {}
};

struct MonotonicityViolation : DomainError {
    MonotonicityViolation() : DomainError("negative-part coefficient decreases along the ray") {}
    explicit MonotonicityViolation(const std::string& what) : DomainError(what) {}
};

struct InadmissibleFlag : DomainError {
    using DomainError::DomainError;
};

struct PointInAugmentedBase : DomainError {
    PointInAugmentedBase() : DomainError("point lies in the augmented base locus") {}
    explicit PointInAugmentedBase(const std::string& what) : DomainError(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg), position(0) {}
    std::size_t position;
};

}  // namespace nok
