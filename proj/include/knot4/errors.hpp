#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knot4 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure; offset is the byte position in the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Evaluation left the domain of some node (sqrt of a negative, 1/0, ...).
class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::string node = {}, std::size_t offset = 0)
      : Error(node.empty() ? what : what + " in '" + node + "'"),
        node_(std::move(node)),
        offset_(offset) {}
  const std::string& node() const noexcept { return node_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string node_;
  std::size_t offset_;
};

class DegenerateMetric : public Error {
 public:
  using Error::Error;
};

class DegenerateNet : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Curve fails |gamma'| = 1 somewhere; carries the worst residual and where it occurred.
class UnitSpeedViolation : public Error {
 public:
  UnitSpeedViolation(double residual, double u)
      : Error("unit-speed violation: residual " + std::to_string(residual) + " at u=" + std::to_string(u)),
        residual_(residual),
        u_(u) {}
  double residual() const noexcept { return residual_; }
  double u() const noexcept { return u_; }

 private:
  double residual_;
  double u_;
};

class RegularityError : public Error {
 public:
  using Error::Error;
};

class PositivityError : public Error {
 public:
  using Error::Error;
};

// Radicand of the unit-speed completion is non-positive at u.
class SpeedDeficit : public Error {
 public:
  explicit SpeedDeficit(double u)
      : Error("unit-speed completion impossible: radicand <= 0 at u=" + std::to_string(u)), u_(u) {}
  double u() const noexcept { return u_; }

 private:
  double u_;
};

class CorpusError : public Error {
 public:
  using Error::Error;
};

// Malformed surface description (JSON or programmatic).
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace knot4
