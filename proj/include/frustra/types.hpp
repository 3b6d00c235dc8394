#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace frustra {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// One row per site. Used both for atom coordinates and spin directions.
template <typename Scalar>
using Rows3 = Eigen::Matrix<Scalar, Eigen::Dynamic, 3>;

using Coordinates = Rows3<double>;
using Directions = Rows3<double>;

// Base of every error the library raises. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent graph (bad degree, duplicate edge, non-polyhedral).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class RankDeficientError : public Error {
 public:
  using Error::Error;
};

// Bottom eigenspace too large to embed into three spin components.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// Eigenspace rows do not have a common length, so no unit-vector field exists.
class NormProfileError : public Error {
 public:
  NormProfileError(const std::string& what, double max_deviation, double variance)
      : Error(what), max_deviation_(max_deviation), variance_(variance) {}

  double max_deviation() const { return max_deviation_; }
  double variance() const { return variance_; }

 private:
  double max_deviation_;
  double variance_;
};

}  // namespace frustra
