#ifndef NEP_ERRORS_HPP
#define NEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nep {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation requested on (or too close to) the kernel/support singularity.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

/// An adaptive quadrature failed to meet its tolerance within the panel budget.
class Divergent : public Error {
 public:
  using Error::Error;
};

/// Series argument too close to the convergence boundary for the term budget.
class SlowConvergence : public Error {
 public:
  using Error::Error;
};

/// The even-dimension term decomposition was requested for odd n.
class OddDimension : public Error {
 public:
  using Error::Error;
};

class IllConditioned : public Error {
 public:
  using Error::Error;
};

class ResidualTooLarge : public Error {
 public:
  using Error::Error;
};

class DegenerateRatio : public Error {
 public:
  using Error::Error;
};

class NegativeSigma : public Error {
 public:
  using Error::Error;
};

class BisectionFailure : public Error {
 public:
  using Error::Error;
};

class NegativeDensity : public Error {
 public:
  using Error::Error;
};

class FeasibilityTimeout : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class PoleInput : public Error {
 public:
  using Error::Error;
};

class BranchAmbiguity : public Error {
 public:
  using Error::Error;
};

class AscentStagnation : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace nep

#endif  // NEP_ERRORS_HPP
