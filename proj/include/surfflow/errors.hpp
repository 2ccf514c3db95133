#pragma once

#include <stdexcept>
#include <string>

namespace surfflow {

// Base class for every error raised by the library. The CLI maps these onto
// exit codes: solver failures -> 2, everything else -> 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SURFFLOW_DEFINE_ERROR(Name, Base)             \
  class Name : public Base {                          \
   public:                                            \
    explicit Name(const std::string& what) : Base(what) {} \
  };

// mesh construction
SURFFLOW_DEFINE_ERROR(NonManifold, Error)
SURFFLOW_DEFINE_ERROR(NonOrientable, Error)
SURFFLOW_DEFINE_ERROR(DegenerateTriangle, Error)
SURFFLOW_DEFINE_ERROR(IndexOutOfRange, Error)
SURFFLOW_DEFINE_ERROR(MeshFormatError, Error)

// geometry / meshgen / analytic
SURFFLOW_DEFINE_ERROR(OriginPoint, Error)
SURFFLOW_DEFINE_ERROR(InvalidSpec, Error)
SURFFLOW_DEFINE_ERROR(OutOfDomain, Error)
SURFFLOW_DEFINE_ERROR(EdgeThroughAxis, Error)
SURFFLOW_DEFINE_ERROR(InvalidBarycentric, Error)

// linear algebra and solver
SURFFLOW_DEFINE_ERROR(DimensionMismatch, Error)
SURFFLOW_DEFINE_ERROR(IncompatibleBC, Error)
SURFFLOW_DEFINE_ERROR(SolverError, Error)
SURFFLOW_DEFINE_ERROR(SingularSystem, SolverError)
SURFFLOW_DEFINE_ERROR(SolverDivergence, SolverError)

#undef SURFFLOW_DEFINE_ERROR

}  // namespace surfflow
