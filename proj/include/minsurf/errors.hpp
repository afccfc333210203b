#pragma once

#include <stdexcept>
#include <string>

namespace minsurf {

/// Coarse classification used by the CLI to pick an exit status.
enum class ErrorClass {
  Validation,  // bad input data or parameters
  Numerical,   // tracing, root finding, degenerate contours
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
  ErrorClass error_class() const noexcept { return cls_; }

 private:
  ErrorClass cls_;
};

#define MINSURF_DEFINE_ERROR(Name, Class)                                          \
  class Name : public Error {                                                      \
   public:                                                                         \
    explicit Name(const std::string& what) : Error(ErrorClass::Class, what) {}     \
  };

MINSURF_DEFINE_ERROR(DomainError, Validation)
MINSURF_DEFINE_ERROR(PreconditionError, Validation)
MINSURF_DEFINE_ERROR(InadmissibleWindowError, Validation)
MINSURF_DEFINE_ERROR(InadmissibleParametersError, Validation)
MINSURF_DEFINE_ERROR(UnsupportedDataError, Validation)
MINSURF_DEFINE_ERROR(ParityUndeterminedError, Validation)
MINSURF_DEFINE_ERROR(EmptySlabError, Validation)
MINSURF_DEFINE_ERROR(MultivaluedError, Validation)
MINSURF_DEFINE_ERROR(SchemaError, Validation)
MINSURF_DEFINE_ERROR(IoError, Validation)
MINSURF_DEFINE_ERROR(DegenerateContourError, Numerical)
MINSURF_DEFINE_ERROR(RootFindingError, Numerical)
MINSURF_DEFINE_ERROR(HeightOutOfRangeError, Numerical)
MINSURF_DEFINE_ERROR(NonMonotoneRayError, Numerical)

#undef MINSURF_DEFINE_ERROR

}  // namespace minsurf
