#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace momap {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

enum class ErrorCode {
  NotInAlgebra,
  NotHermitianType,
  NonRationalWeights,
  DivergentRay,
  SingularJacobian,
  ActionOverflow,
  RankMismatch,
  InvalidArgument,
  Schema,
  LinearSolveFailure,
  Inconclusive,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::NotHermitianType: return "NotHermitianType";
    case ErrorCode::NonRationalWeights: return "NonRationalWeights";
    case ErrorCode::DivergentRay: return "DivergentRay";
    case ErrorCode::SingularJacobian: return "SingularJacobian";
    case ErrorCode::ActionOverflow: return "ActionOverflow";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Schema: return "SchemaError";
    case ErrorCode::LinearSolveFailure: return "LinearSolveFailure";
    case ErrorCode::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

/// Every failure raised by the toolkit carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Frobenius-type helpers used all over the place.
inline double fro(const CMatrix& m) { return m.norm(); }

inline CMatrix bracket(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

inline CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

inline CMatrix antihermitian_part(const CMatrix& m) { return 0.5 * (m - m.adjoint()); }

}  // namespace momap
