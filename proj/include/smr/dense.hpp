#ifndef SMR_DENSE_HPP
#define SMR_DENSE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <string>

#include "smr/errors.hpp"

namespace smr {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Dense symmetric matrix. Input is symmetrized on construction ((A+A^T)/2)
// rather than rejected: downstream polynomial arithmetic accumulates
// asymmetric rounding and we do not want that to surface as hard errors.
class dense_symmetric {
 public:
  dense_symmetric() = default;

  explicit dense_symmetric(Matrix m) {
    require(m.rows() == m.cols(), errc::dimension_mismatch,
            "dense_symmetric requires a square matrix");
    require(m.rows() >= 1, errc::dimension_mismatch, "dense_symmetric requires n >= 1");
    require(m.allFinite(), errc::validation_failed, "dense_symmetric entries must be finite");
    mat_ = 0.5 * (m + m.transpose());
  }

  int n() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }
  double operator()(int i, int j) const { return mat_(i, j); }

  static dense_symmetric identity(int n) { return dense_symmetric(Matrix::Identity(n, n)); }
  static dense_symmetric zero(int n) { return dense_symmetric(Matrix::Zero(n, n)); }

 private:
  Matrix mat_;
};

struct spectral_decomposition {
  Vector eigenvalues;   // ascending
  Matrix eigenvectors;  // orthonormal columns, aligned with eigenvalues
};

inline spectral_decomposition eigh(const dense_symmetric& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat());
  require(es.info() == Eigen::Success, errc::non_convergence,
          "symmetric eigensolver failed to converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

// Eigenvalues at or below 1e-10 * max|eigenvalue| are treated as exact zeros
// everywhere kernels matter; this matches the double-precision eigensolver
// noise floor for the desk-scale matrices this library targets.
inline constexpr double kKernelRelTol = 1e-10;

inline double kernel_threshold(const Vector& eigenvalues) {
  double amax = 0.0;
  for (int i = 0; i < eigenvalues.size(); ++i) amax = std::max(amax, std::abs(eigenvalues(i)));
  return kKernelRelTol * amax;
}

enum class kernel_policy { reject, map_zero_to_zero };

// Q f(Lambda) Q^T. With map_zero_to_zero, eigenvalues below the kernel
// threshold map to 0 regardless of f (this is how the pseudo-inverse and
// pseudo square root are formed).
inline dense_symmetric matrix_function(const dense_symmetric& a,
                                       const std::function<double(double)>& f,
                                       kernel_policy policy) {
  spectral_decomposition sd = eigh(a);
  const double thresh = kernel_threshold(sd.eigenvalues);
  Vector fl(sd.eigenvalues.size());
  for (int i = 0; i < sd.eigenvalues.size(); ++i) {
    double lam = sd.eigenvalues(i);
    if (lam <= thresh) {
      if (policy == kernel_policy::reject)
        fail(errc::singular_input,
             "matrix_function: eigenvalue " + std::to_string(lam) + " at or below kernel threshold");
      fl(i) = 0.0;
    } else {
      fl(i) = f(lam);
    }
  }
  Matrix out = sd.eigenvectors * fl.asDiagonal() * sd.eigenvectors.transpose();
  return dense_symmetric(out);
}

struct extreme_eigs_result {
  double lambda_min_nonzero;
  double lambda_max;
  int kernel_dim;
};

inline extreme_eigs_result extreme_eigs(const dense_symmetric& a) {
  spectral_decomposition sd = eigh(a);
  const double thresh = kernel_threshold(sd.eigenvalues);
  const int n = static_cast<int>(sd.eigenvalues.size());
  int kernel_dim = 0;
  double lmin = 0.0;
  bool found = false;
  for (int i = 0; i < n; ++i) {
    double lam = sd.eigenvalues(i);
    if (lam <= thresh) {
      ++kernel_dim;
      continue;
    }
    if (!found) {
      lmin = lam;
      found = true;
    }
  }
  require(found, errc::zero_matrix, "extreme_eigs: all eigenvalues below kernel threshold");
  return {lmin, sd.eigenvalues(n - 1), kernel_dim};
}

struct loewner_certificate {
  double lower_slack = 0.0;  // min generalized eigenvalue minus lo
  double upper_slack = 0.0;  // hi minus max generalized eigenvalue
  bool holds = false;
  double tol = 0.0;
  int checked_dim = 0;  // dim of range(B) the pencil was restricted to
};

// Certifies lo*B <= X <= hi*B in the Loewner order, restricted to range(B).
// Generalized eigenvalues are computed on the whitened pencil: with
// B = Q Lambda Q^T and V = Q_r Lambda_r^{-1/2} over the non-kernel columns,
// the eigenvalues of V^T X V are exactly the pencil eigenvalues on range(B).
inline loewner_certificate loewner_sandwich(const dense_symmetric& x, const dense_symmetric& b,
                                            double lo, double hi, double tol) {
  require(x.n() == b.n(), errc::dimension_mismatch, "loewner_sandwich: dimension mismatch");
  require(lo <= hi, errc::param_out_of_range, "loewner_sandwich: lo must be <= hi");
  spectral_decomposition sd = eigh(b);
  const int n = b.n();
  const double thresh = kernel_threshold(sd.eigenvalues);
  require(sd.eigenvalues(0) >= -std::max(thresh, 0.0) - kKernelRelTol, errc::indefinite,
          "loewner_sandwich: B must be PSD");

  int r = 0;
  for (int i = 0; i < n; ++i)
    if (sd.eigenvalues(i) > thresh) ++r;
  require(r > 0, errc::zero_matrix, "loewner_sandwich: B is (numerically) zero");

  // Kernel containment: X must vanish on ker(B).
  const double xscale = std::max(1.0, x.mat().cwiseAbs().maxCoeff());
  for (int i = 0; i < n - r; ++i) {
    Vector q = sd.eigenvectors.col(i);
    double resid = (x.mat() * q).norm();
    require(resid <= 1e-8 * xscale, errc::kernel_mismatch,
            "loewner_sandwich: X does not vanish on ker(B)");
  }

  Matrix v(n, r);
  for (int i = 0, k = 0; i < n; ++i) {
    if (sd.eigenvalues(i) > thresh) {
      v.col(k++) = sd.eigenvectors.col(i) / std::sqrt(sd.eigenvalues(i));
    }
  }
  Matrix w = v.transpose() * x.mat() * v;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (w + w.transpose()));
  require(es.info() == Eigen::Success, errc::non_convergence,
          "loewner_sandwich: pencil eigensolve failed");

  loewner_certificate cert;
  cert.lower_slack = es.eigenvalues()(0) - lo;
  cert.upper_slack = hi - es.eigenvalues()(r - 1);
  cert.tol = tol;
  cert.checked_dim = r;
  cert.holds = cert.lower_slack >= -tol && cert.upper_slack >= -tol;
  return cert;
}

}  // namespace smr

#endif  // SMR_DENSE_HPP
