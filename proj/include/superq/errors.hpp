#pragma once

#include <stdexcept>
#include <string>

namespace superq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept = 0;
    /// Validation errors are caused by bad inputs; the rest are numerical.
    virtual bool is_validation() const noexcept { return false; }
};

#define SUPERQ_DEFINE_ERROR(Name, Validation)                         \
    class Name : public Error {                                       \
    public:                                                           \
        using Error::Error;                                           \
        const char* kind() const noexcept override { return #Name; }  \
        bool is_validation() const noexcept override { return Validation; } \
    }

/// A parameter lies outside its mathematical domain (kappa <= 0, NaN, ...).
SUPERQ_DEFINE_ERROR(DomainError, true);
/// The subharmonic drive is at or above threshold (b >= 1): no steady state.
SUPERQ_DEFINE_ERROR(StabilityError, true);
/// Bad step size or a diverging integration.
SUPERQ_DEFINE_ERROR(StepError, false);
/// The quadrature box does not contain the integrand.
SUPERQ_DEFINE_ERROR(QuadratureError, false);
/// The Fock-space truncation is too small for the requested state or point.
SUPERQ_DEFINE_ERROR(TruncationError, false);
/// The steady-state linear solve failed.
SUPERQ_DEFINE_ERROR(SolveError, false);

#undef SUPERQ_DEFINE_ERROR

}  // namespace superq
