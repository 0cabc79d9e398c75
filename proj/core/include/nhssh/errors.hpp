#pragma once

#include <stdexcept>
#include <string>

namespace nhssh {

// Error taxonomy used across the library.
//
// invalid_parameter_error : rejected input (out-of-range parameter, bad index,
//                           malformed request).  Always a caller bug.
// critical_point_error    : the requested quantity is mathematically ill-defined
//                           at this parameter point because of a spectral
//                           degeneracy or an exceptional point (defective
//                           eigenvector matrix).  The point sits on a critical
//                           manifold; callers doing parameter scans should
//                           record the point as a boundary and move on.
// transition_point_error  : the quantity needs a spectral gap that is closed at
//                           this point (e.g. a Wilson loop with no gapped
//                           reference momentum).  Distinct from
//                           critical_point_error: the spectrum may be perfectly
//                           non-degenerate, yet the occupied/empty split does
//                           not exist.
// eigensolver_error       : the dense eigensolver failed to converge or
//                           produced residuals above tolerance; carries the
//                           offending context in the message.

class invalid_parameter_error : public std::invalid_argument {
 public:
  explicit invalid_parameter_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Common base of the three conditions below, so scan drivers can catch "the
// computation itself said no" without also swallowing caller bugs.
class computation_error : public std::runtime_error {
 public:
  explicit computation_error(const std::string& what)
      : std::runtime_error(what) {}
};

class critical_point_error : public computation_error {
 public:
  explicit critical_point_error(const std::string& what)
      : computation_error(what) {}
};

class transition_point_error : public computation_error {
 public:
  explicit transition_point_error(const std::string& what)
      : computation_error(what) {}
};

class eigensolver_error : public computation_error {
 public:
  explicit eigensolver_error(const std::string& what)
      : computation_error(what) {}
};

}  // namespace nhssh
