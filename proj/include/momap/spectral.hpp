#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

#include "momap/core.hpp"
#include "momap/group.hpp"

namespace momap {

inline double default_cluster_tol(double spectral_radius) {
  return 1e-8 * (1.0 + spectral_radius);
}

/// An element of H(G) stored through its Hermitian representative, with
/// the clustered spectral decomposition ξ = Σ λ_i P_i cached.
class HermitianTypeVector {
 public:
  /// cluster_tol < 0 selects the default 1e-8·(1 + spectral radius).
  explicit HermitianTypeVector(const CMatrix& m, double cluster_tol = -1.0)
      : matrix_(hermitian_part(m)) {
    const int n = static_cast<int>(matrix_.rows());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(matrix_);
    // Eigen returns ascending order; flip to descending.
    eigenvalues_ = es.eigenvalues().reverse();
    vectors_ = es.eigenvectors().rowwise().reverse();
    radius_ = n ? eigenvalues_.cwiseAbs().maxCoeff() : 0.0;
    tol_ = cluster_tol >= 0.0 ? cluster_tol : default_cluster_tol(radius_);

    cluster_of_.assign(n, 0);
    int start = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && eigenvalues_(i - 1) - eigenvalues_(i) > tol_) {
        push_cluster(start, i);
        start = i;
      }
      cluster_of_[i] = static_cast<int>(values_.size());
    }
    if (n) push_cluster(start, n);
  }

  const CMatrix& matrix() const { return matrix_; }
  int size() const { return static_cast<int>(matrix_.rows()); }
  /// Raw eigenvalues, descending, with multiplicity.
  const RVector& eigenvalues() const { return eigenvalues_; }
  /// Orthonormal eigenvectors, column i belongs to eigenvalues()(i).
  const CMatrix& eigenvectors() const { return vectors_; }
  /// Cluster means, strictly descending.
  const std::vector<double>& cluster_values() const { return values_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  const std::vector<CMatrix>& eigenprojections() const { return proj_; }
  int cluster_of(int column) const { return cluster_of_[column]; }
  double cluster_tol() const { return tol_; }
  double spectral_radius() const { return radius_; }
  int cluster_count() const { return static_cast<int>(values_.size()); }

 private:
  void push_cluster(int begin, int end) {
    const int m = end - begin;
    values_.push_back(eigenvalues_.segment(begin, m).mean());
    mult_.push_back(m);
    const CMatrix v = vectors_.middleCols(begin, m);
    proj_.push_back(v * v.adjoint());
  }

  CMatrix matrix_;
  RVector eigenvalues_;
  CMatrix vectors_;
  double radius_ = 0.0;
  double tol_ = 0.0;
  std::vector<double> values_;
  std::vector<int> mult_;
  std::vector<CMatrix> proj_;
  std::vector<int> cluster_of_;
};

/// Spectral data of ad(ξ) = [ξ, ·] acting on matrices: eigenvalues are the
/// clustered differences λ_i − λ_j, projections P_λ(A) = Σ P_i A P_j.
class AdSpectralData {
 public:
  explicit AdSpectralData(HermitianTypeVector base) : base_(std::move(base)) {
    const int c = base_.cluster_count();
    const auto& v = base_.cluster_values();
    const double tol = 2.0 * base_.cluster_tol();
    struct Diff {
      double value;
      int i, j;
    };
    std::vector<Diff> diffs;
    diffs.reserve(c * c);
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) diffs.push_back({i == j ? 0.0 : v[i] - v[j], i, j});
    std::sort(diffs.begin(), diffs.end(), [](const Diff& a, const Diff& b) {
      return a.value > b.value;
    });
    index_.assign(c * c, 0);
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
      double mean = 0.0;
      bool has_zero = false;
      for (std::size_t k = start; k < end; ++k) {
        mean += diffs[k].value;
        has_zero = has_zero || diffs[k].i == diffs[k].j;
      }
      mean /= double(end - start);
      if (has_zero) {
        mean = 0.0;
        zero_index_ = static_cast<int>(values_.size());
      }
      for (std::size_t k = start; k < end; ++k)
        index_[diffs[k].i * c + diffs[k].j] = static_cast<int>(values_.size());
      values_.push_back(mean);
    };
    for (std::size_t k = 1; k <= diffs.size(); ++k) {
      if (k == diffs.size() || diffs[k - 1].value - diffs[k].value > tol) {
        flush(k);
        start = k;
      }
    }
  }

  const HermitianTypeVector& base() const { return base_; }
  /// Distinct ad-eigenvalues, descending; values()[zero_index()] == 0.
  const std::vector<double>& values() const { return values_; }
  int zero_index() const { return zero_index_; }
  /// Index into values() of λ_{cluster i} − λ_{cluster j}.
  int index(int ci, int cj) const { return index_[ci * base_.cluster_count() + cj]; }

  /// f([ξ,·])(A) = Σ_λ f(λ) P_λ(A).
  template <class F>
  CMatrix apply_function(F&& f, const CMatrix& a) const {
    const CMatrix& u = base_.eigenvectors();
    CMatrix b = u.adjoint() * a * u;
    const int n = base_.size();
    std::vector<double> fv(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) fv[k] = f(values_[k]);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) b(p, q) *= fv[index(base_.cluster_of(p), base_.cluster_of(q))];
    return u * b * u.adjoint();
  }

  /// P_λ(A) for λ = values()[k].
  CMatrix project(int k, const CMatrix& a) const {
    return apply_function([&](double lam) { return lam == values_[k] ? 1.0 : 0.0; }, a);
  }

 private:
  HermitianTypeVector base_;
  std::vector<double> values_;
  std::vector<int> index_;
  int zero_index_ = 0;
};

/// True iff m ∈ 𝔤 is Hermitian within tol·‖m‖. Throws NotInAlgebra when
/// m is not an element of the Lie algebra of g.
inline bool hermitian_type_check(const CMatrix& m, const GroupDescriptor& g, double tol) {
  if (!g.contains(m, tol)) throw Error(ErrorCode::NotInAlgebra, "matrix is not in the Lie algebra of " + g.name());
  return (m - m.adjoint()).norm() <= tol * m.norm();
}

struct ParabolicData {
  AdSpectralData ad;
  std::vector<CMatrix> unipotent;   // 𝔲(ξ): negative ad-eigenvalues
  std::vector<CMatrix> centralizer; // 𝔷(ξ): kernel
  std::vector<CMatrix> parabolic;   // 𝔤(ξ): nonpositive ad-eigenvalues
};

/// Orthonormal bases (complex trace pairing) of 𝔲(ξ), 𝔷(ξ), 𝔤(ξ) ⊂ 𝔤.
inline ParabolicData parabolic_data(const HermitianTypeVector& xi, const GroupDescriptor& g) {
  ParabolicData out{AdSpectralData(xi), {}, {}, {}};
  const auto& basis = g.hermitian_basis();
  const int d = g.dim();
  CMatrix op(d, d);
  for (int b = 0; b < d; ++b) op.col(b) = g.coordinates(bracket(xi.matrix(), basis[b]));
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(op));
  const double tol = 2.0 * xi.cluster_tol();
  for (int k = 0; k < d; ++k) {
    const double lam = es.eigenvalues()(k);
    const CMatrix e = g.from_coordinates(CVector(es.eigenvectors().col(k)));
    if (lam < -tol) {
      out.unipotent.push_back(e);
      out.parabolic.push_back(e);
    } else if (lam <= tol) {
      out.centralizer.push_back(e);
      out.parabolic.push_back(e);
    }
  }
  return out;
}

/// Norm of the component of delta outside 𝔲(base) = ⊕_{λ<0} Eig([base,·], λ),
/// for a diagonalizable base with real spectrum.
inline double outside_unipotent(const CMatrix& base, const CMatrix& delta, double tol) {
  Eigen::ComplexEigenSolver<CMatrix> es(base);
  const CVector d = es.eigenvalues();
  const CMatrix w = es.eigenvectors();
  const CMatrix winv = w.inverse();
  CMatrix b = winv * delta * w;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      if ((d(i) - d(j)).real() < -tol) b(i, j) = 0.0;
  return (w * b * winv).norm();
}

/// ζ ~ ξ iff ζ − ξ ∈ 𝔲(ξ). ζ must be diagonalizable with real spectrum.
inline bool equivalence_check(const HermitianTypeVector& xi, const CMatrix& zeta, double tol) {
  Eigen::ComplexEigenSolver<CMatrix> es(zeta);
  const double scale = 1.0 + zeta.norm();
  if (es.eigenvalues().imag().cwiseAbs().maxCoeff() > tol * scale)
    throw Error(ErrorCode::NotHermitianType, "matrix has non-real spectrum");
  const AdSpectralData ad(xi);
  const CMatrix delta = zeta - xi.matrix();
  const double ad_tol = 2.0 * xi.cluster_tol();
  const CMatrix outside = ad.apply_function([&](double lam) { return lam < -ad_tol ? 0.0 : 1.0; }, delta);
  return outside.norm() <= tol * scale;
}

/// Sorted (descending) eigenvalues with clustered values replaced by the
/// cluster mean; a complete invariant of ad_K-conjugacy classes.
inline RVector weyl_representative(const HermitianTypeVector& xi) {
  RVector out(xi.size());
  int k = 0;
  for (int c = 0; c < xi.cluster_count(); ++c)
    for (int m = 0; m < xi.multiplicities()[c]; ++m) out(k++) = xi.cluster_values()[c];
  return out;
}

/// Characteristic polynomial coefficients (1, c_1, ..., c_n) of det(x − m),
/// via Faddeev–LeVerrier.
inline CVector conjugacy_invariants(const CMatrix& m) {
  const int n = static_cast<int>(m.rows());
  CVector c(n + 1);
  c(0) = 1.0;
  CMatrix mk = CMatrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    const CMatrix am = m * mk;
    c(k) = -am.trace() / double(k);
    mk = am + c(k) * CMatrix::Identity(n, n);
  }
  return c;
}

/// f(h) = Σ f(λ_i) P_i for Hermitian h.
template <class F>
CMatrix matrix_function(F&& f, const CMatrix& h) {
  const HermitianTypeVector hv(h);
  const int n = hv.size();
  CMatrix out = CMatrix::Zero(n, n);
  for (int c = 0; c < hv.cluster_count(); ++c) out += f(hv.cluster_values()[c]) * hv.eigenprojections()[c];
  return out;
}

/// f([ξ,·])(A).
template <class F>
CMatrix ad_ops(const HermitianTypeVector& xi, F&& f, const CMatrix& a) {
  return AdSpectralData(xi).apply_function(std::forward<F>(f), a);
}

struct DexpFactor {
  CMatrix sigma;    // (d_s exp)(ṡ) e^{−s}
  CMatrix sigma_h;  // Hermitian part
  CMatrix sigma_a;  // anti-Hermitian part
  CMatrix lambda;   // component of ṡ in ker[s,·]
  CMatrix k;        // anti-Hermitian, ṡ = λ + [k, s], k ⊥ z_𝔨(s)
};

/// Decomposes ṡ = λ + [k, s] on the ad(s)-eigenspaces (k_ρ = −ṡ_ρ/ρ) and
/// assembles σ = λ + k − Ad_{e^s}(k) = λ + Σ (1 − e^ρ) k_ρ.
inline DexpFactor dexp_factor(const AdSpectralData& ad, const CMatrix& sdot) {
  const auto& base = ad.base();
  const CMatrix& u = base.eigenvectors();
  const CMatrix b = u.adjoint() * sdot * u;
  const int n = base.size();
  CMatrix lam = CMatrix::Zero(n, n), kk = CMatrix::Zero(n, n), sg = CMatrix::Zero(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const int idx = ad.index(base.cluster_of(p), base.cluster_of(q));
      if (idx == ad.zero_index()) {
        lam(p, q) = b(p, q);
        sg(p, q) = b(p, q);
      } else if (b(p, q) != cplx(0.0)) {
        const double rho = ad.values()[idx];
        kk(p, q) = -b(p, q) / rho;
        sg(p, q) = -std::expm1(rho) * kk(p, q);
      }
    }
  DexpFactor out;
  out.lambda = u * lam * u.adjoint();
  out.k = u * kk * u.adjoint();
  out.sigma = u * sg * u.adjoint();
  out.sigma_h = hermitian_part(out.sigma);
  out.sigma_a = antihermitian_part(out.sigma);
  return out;
}

inline DexpFactor dexp_factor(const CMatrix& s, const CMatrix& sdot) {
  return dexp_factor(AdSpectralData(HermitianTypeVector(s)), sdot);
}

}  // namespace momap
