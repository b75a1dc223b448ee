#pragma once

#include <string>
#include <vector>

#include "emgpr/linalg.hpp"

namespace emgpr {

enum class ReducerKind { pca, lda };

std::string to_string(ReducerKind kind);

/// Fitted linear projection. `components` holds one direction per row
/// (orthonormal rows for PCA). When `standardized` is set the transform
/// divides centered inputs by `scale` before projecting.
struct Projector {
  ReducerKind kind = ReducerKind::pca;
  int k = 0;
  std::vector<double> mean;
  std::vector<double> scale;
  bool standardized = false;
  Matrix components;                    // k x d
  std::vector<double> explained_ratio;  // PCA only, size k
};

/// Sample covariance (divide by n-1) of a data matrix with observations
/// in rows.
Matrix covariance_matrix(const Matrix& x);

struct EigenResult {
  std::vector<double> values;  // descending
  Matrix vectors;              // orthonormal eigenvectors in columns
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Eigenvalues come
/// back sorted descending; each eigenvector's largest-magnitude entry is
/// made positive so results are deterministic.
EigenResult symmetric_eig(const Matrix& m);

Projector pca_fit(const Matrix& x, int k, bool standardize = false);

/// Rows of the result are components * ((x_i - mean) / scale). Shared by
/// PCA and LDA projectors.
Matrix transform(const Projector& p, const Matrix& x);
std::vector<double> transform_row(const Projector& p, std::span<const double> x);

/// Cumulative explained-variance ratios for k = 1..d.
std::vector<double> explained_variance_curve(const Matrix& x, bool standardize = false);

struct ScatterPair {
  Matrix s_between;
  Matrix s_within;
};

ScatterPair scatter_matrices(const Matrix& x, const std::vector<int>& y);

/// Fisher discriminant directions: top-k eigenvectors of
/// (S_W + eps I)^-1 S_B via Cholesky symmetrization, eps = 1e-6 tr(S_W)/d.
/// k must not exceed (number of classes - 1).
Projector lda_fit(const Matrix& x, const std::vector<int>& y, int k,
                  bool standardize = false);

}  // namespace emgpr
