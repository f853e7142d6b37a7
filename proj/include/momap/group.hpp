#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "momap/core.hpp"

namespace momap {

/// A matrix reductive group G ⊂ GL(ambient_dim) together with its compact
/// form K = G ∩ U(ambient_dim) and the invariant pairing
/// h(a, b) = pairing_scale · Re tr(a b*).
///
/// Products embed block-diagonally; their pairing is the sum of the block
/// pairings (each factor keeps its own scale).
class GroupDescriptor {
 public:
  enum class Kind { GeneralLinear, SpecialLinear, DiagonalTorus, Product };

  static GroupDescriptor general_linear(int n, double scale = 1.0) {
    return GroupDescriptor(Kind::GeneralLinear, n, scale, {});
  }
  static GroupDescriptor special_linear(int n, double scale = 1.0) {
    return GroupDescriptor(Kind::SpecialLinear, n, scale, {});
  }
  static GroupDescriptor torus(int k, double scale = 1.0) {
    return GroupDescriptor(Kind::DiagonalTorus, k, scale, {});
  }
  static GroupDescriptor product(std::vector<GroupDescriptor> factors) {
    if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "empty product group");
    int n = 0;
    for (const auto& f : factors) n += f.ambient_dim();
    return GroupDescriptor(Kind::Product, n, 1.0, std::move(factors));
  }

  Kind kind() const { return kind_; }
  int ambient_dim() const { return n_; }
  double pairing_scale() const { return scale_; }
  const std::vector<GroupDescriptor>& factors() const { return factors_; }

  /// Real dimension of i𝔨 (equivalently complex dimension of 𝔤).
  int dim() const { return static_cast<int>(basis_.size()); }

  std::string name() const {
    switch (kind_) {
      case Kind::GeneralLinear: return "GL(" + std::to_string(n_) + ")";
      case Kind::SpecialLinear: return "SL(" + std::to_string(n_) + ")";
      case Kind::DiagonalTorus: return "T(" + std::to_string(n_) + ")";
      case Kind::Product: {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
          if (i) s += "x";
          s += factors_[i].name();
        }
        return s;
      }
    }
    return "?";
  }

  /// h-orthonormal basis of i𝔨 made of Hermitian matrices. It is also a
  /// complex basis of 𝔤.
  const std::vector<CMatrix>& hermitian_basis() const { return basis_; }

  /// h-orthonormal basis of i𝔷(𝔨), a sub-list of the span of hermitian_basis().
  const std::vector<CMatrix>& center_basis() const { return center_; }

  double pairing(const CMatrix& a, const CMatrix& b) const {
    if (kind_ != Kind::Product) return scale_ * (a.cwiseProduct(b.conjugate())).sum().real();
    double acc = 0.0;
    int off = 0;
    for (const auto& f : factors_) {
      const int m = f.ambient_dim();
      acc += f.pairing(a.block(off, off, m, m), b.block(off, off, m, m));
      off += m;
    }
    return acc;
  }

  double norm(const CMatrix& a) const { return std::sqrt(std::max(0.0, pairing(a, a))); }

  /// Complex coordinates of u ∈ 𝔤 in hermitian_basis(): u = Σ c_a b_a.
  CVector coordinates(const CMatrix& u) const {
    CVector c(dim());
    for (int a = 0; a < dim(); ++a) c(a) = bilinear(u, basis_[a]);
    return c;
  }

  /// Real coordinates of a Hermitian element of i𝔨.
  RVector real_coordinates(const CMatrix& h) const { return coordinates(h).real(); }

  CMatrix from_coordinates(const CVector& c) const {
    CMatrix m = CMatrix::Zero(n_, n_);
    for (int a = 0; a < dim(); ++a) m += c(a) * basis_[a];
    return m;
  }
  CMatrix from_coordinates(const RVector& c) const {
    return from_coordinates(CVector(c.cast<cplx>()));
  }

  /// Membership in 𝔤, tolerance relative to ‖m‖.
  bool contains(const CMatrix& m, double tol) const {
    if (m.rows() != n_ || m.cols() != n_) return false;
    const double scale = tol * (1.0 + m.norm());
    switch (kind_) {
      case Kind::GeneralLinear: return true;
      case Kind::SpecialLinear: return std::abs(m.trace()) <= scale;
      case Kind::DiagonalTorus: {
        CMatrix off = m;
        off.diagonal().setZero();
        return off.norm() <= scale;
      }
      case Kind::Product: {
        CMatrix rest = m;
        int off = 0;
        for (const auto& f : factors_) {
          const int k = f.ambient_dim();
          if (!f.contains(m.block(off, off, k, k), tol)) return false;
          rest.block(off, off, k, k).setZero();
          off += k;
        }
        return rest.norm() <= scale;
      }
    }
    return false;
  }

  /// Block offsets and sizes of the ambient block structure (one block for
  /// non-product groups).
  std::vector<std::pair<int, int>> blocks() const {
    std::vector<std::pair<int, int>> out;
    if (kind_ != Kind::Product) {
      out.emplace_back(0, n_);
      return out;
    }
    int off = 0;
    for (const auto& f : factors_) {
      out.emplace_back(off, f.ambient_dim());
      off += f.ambient_dim();
    }
    return out;
  }

 private:
  GroupDescriptor(Kind kind, int n, double scale, std::vector<GroupDescriptor> factors)
      : kind_(kind), n_(n), scale_(scale), factors_(std::move(factors)) {
    if (n_ <= 0) throw Error(ErrorCode::InvalidArgument, "group dimension must be positive");
    if (!(scale_ > 0.0)) throw Error(ErrorCode::InvalidArgument, "pairing_scale must be positive");
    build_bases();
  }

  // Complex-bilinear extension of the pairing against a Hermitian b.
  cplx bilinear(const CMatrix& u, const CMatrix& b) const {
    if (kind_ != Kind::Product) return scale_ * (u.cwiseProduct(b.transpose())).sum();
    cplx acc = 0.0;
    int off = 0;
    for (const auto& f : factors_) {
      const int m = f.ambient_dim();
      acc += f.bilinear(u.block(off, off, m, m), b.block(off, off, m, m));
      off += m;
    }
    return acc;
  }

  void build_bases() {
    const double inv = 1.0 / std::sqrt(scale_);
    const double r2 = 1.0 / std::sqrt(2.0);
    auto unit = [&](int i, int j) {
      CMatrix e = CMatrix::Zero(n_, n_);
      e(i, j) = 1.0;
      return e;
    };
    switch (kind_) {
      case Kind::DiagonalTorus:
        for (int i = 0; i < n_; ++i) {
          basis_.push_back(inv * unit(i, i));
          center_.push_back(basis_.back());
        }
        break;
      case Kind::GeneralLinear:
      case Kind::SpecialLinear: {
        if (kind_ == Kind::GeneralLinear) {
          for (int i = 0; i < n_; ++i) basis_.push_back(inv * unit(i, i));
          center_.push_back(CMatrix::Identity(n_, n_) * (inv / std::sqrt(double(n_))));
        } else {
          // Helmert basis of traceless diagonals.
          for (int k = 1; k < n_; ++k) {
            CMatrix d = CMatrix::Zero(n_, n_);
            for (int i = 0; i < k; ++i) d(i, i) = 1.0;
            d(k, k) = -double(k);
            basis_.push_back(d * (inv / std::sqrt(double(k) * (k + 1))));
          }
        }
        for (int i = 0; i < n_; ++i)
          for (int j = i + 1; j < n_; ++j) {
            basis_.push_back((unit(i, j) + unit(j, i)) * (inv * r2));
            basis_.push_back((unit(i, j) - unit(j, i)) * cplx(0.0, inv * r2));
          }
        break;
      }
      case Kind::Product: {
        int off = 0;
        for (const auto& f : factors_) {
          const int m = f.ambient_dim();
          auto embed = [&](const CMatrix& b) {
            CMatrix e = CMatrix::Zero(n_, n_);
            e.block(off, off, m, m) = b;
            return e;
          };
          for (const auto& b : f.hermitian_basis()) basis_.push_back(embed(b));
          for (const auto& z : f.center_basis()) center_.push_back(embed(z));
          off += m;
        }
        break;
      }
    }
  }

  Kind kind_;
  int n_;
  double scale_;
  std::vector<GroupDescriptor> factors_;
  std::vector<CMatrix> basis_;
  std::vector<CMatrix> center_;
};

}  // namespace momap
