#pragma once

#include <stdexcept>
#include <string>

namespace hpq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HPQ_DEFINE_ERROR(Name)            \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

HPQ_DEFINE_ERROR(DimensionError);
HPQ_DEFINE_ERROR(DegenerateInputError);
HPQ_DEFINE_ERROR(InvalidPointError);
HPQ_DEFINE_ERROR(OutsideChartError);
HPQ_DEFINE_ERROR(InvalidBoundaryError);
HPQ_DEFINE_ERROR(NumericalBlowupError);
HPQ_DEFINE_ERROR(InsufficientDataError);
HPQ_DEFINE_ERROR(DomainError);
HPQ_DEFINE_ERROR(ZeroLengthError);
HPQ_DEFINE_ERROR(UnclassifiableError);
HPQ_DEFINE_ERROR(EmptyWindowError);
HPQ_DEFINE_ERROR(InvalidParameterError);
HPQ_DEFINE_ERROR(OnLightconeError);
HPQ_DEFINE_ERROR(NumericalError);

#undef HPQ_DEFINE_ERROR

}  // namespace hpq
