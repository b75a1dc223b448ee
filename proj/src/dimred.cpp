#include "emgpr/dimred.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "emgpr/errors.hpp"

namespace emgpr {

std::string to_string(ReducerKind kind) {
  return kind == ReducerKind::pca ? "pca" : "lda";
}

Matrix covariance_matrix(const Matrix& x) {
  if (x.rows() < 2) throw std::invalid_argument("covariance: need at least 2 rows");
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  const std::vector<double> mu = column_means(x);

  Matrix cov(d, d);
  Matrix centered(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) centered(i, j) = x(i, j) - mu[j];
  }
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) acc += centered(i, a) * centered(i, b);
      const double v = acc / static_cast<double>(n - 1);
      cov(a, b) = v;
      cov(b, a) = v;
    }
  }
  return cov;
}

namespace {

double offdiag_norm(const Matrix& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j) acc += m(i, j) * m(i, j);
    }
  }
  return std::sqrt(acc);
}

}  // namespace

EigenResult symmetric_eig(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig: matrix not square");
  const std::size_t d = m.rows();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-9 * (1.0 + std::abs(m(i, j)))) {
        throw std::invalid_argument("eig: matrix not symmetric");
      }
    }
  }

  Matrix a = m;
  Matrix v = Matrix::identity(d);
  const double scale = frobenius_norm(m);
  const double stop = 1e-12 * (scale > 0.0 ? scale : 1.0);

  // Cyclic Jacobi: sweep the strict upper triangle, rotating away each
  // off-diagonal entry until their combined norm is negligible.
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_norm(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= stop / static_cast<double>(d * d)) continue;

        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = a(p, p);
        const double aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
          if (i == p || i == q) continue;
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = aip - s * (aiq + tau * aip);
          a(p, i) = a(i, p);
          a(i, q) = aiq + s * (aip - tau * aiq);
          a(q, i) = a(i, q);
        }
        for (std::size_t i = 0; i < d; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = vip - s * (viq + tau * vip);
          v(i, q) = viq + s * (vip - tau * viq);
        }
      }
    }
  }
  if (sweep == kMaxSweeps && offdiag_norm(a) > stop) {
    throw NumericError("eig: Jacobi failed to converge in 100 sweeps");
  }

  // Sort eigenpairs by descending eigenvalue; fix each vector's sign so its
  // largest-magnitude entry is positive.
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  EigenResult result;
  result.values.resize(d);
  result.vectors = Matrix(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t src = order[k];
    result.values[k] = a(src, src);
    std::size_t arg = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      if (std::abs(v(i, src)) > best) {
        best = std::abs(v(i, src));
        arg = i;
      }
    }
    const double sign = v(arg, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < d; ++i) result.vectors(i, k) = sign * v(i, src);
  }
  return result;
}

namespace {

// Shared by PCA and LDA: optional z-scoring before the eigen step.
void apply_standardization(const Matrix& x, Projector& proj, Matrix& work) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  proj.mean = column_means(x);
  proj.scale.assign(d, 1.0);
  if (proj.standardized) {
    for (std::size_t j = 0; j < d; ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double dv = x(i, j) - proj.mean[j];
        acc += dv * dv;
      }
      const double sd = std::sqrt(acc / static_cast<double>(n > 1 ? n - 1 : 1));
      proj.scale[j] = sd > 1e-12 ? sd : 1.0;
    }
  }
  work = Matrix(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      work(i, j) = (x(i, j) - proj.mean[j]) / proj.scale[j];
    }
  }
}

}  // namespace

Projector pca_fit(const Matrix& x, int k, bool standardize) {
  const std::size_t d = x.cols();
  if (k < 1 || static_cast<std::size_t>(k) > d) {
    throw std::invalid_argument("pca: k out of range 1..d");
  }
  if (x.rows() < 2) throw std::invalid_argument("pca: need at least 2 rows");

  Projector proj;
  proj.kind = ReducerKind::pca;
  proj.k = k;
  proj.standardized = standardize;

  Matrix centered;
  apply_standardization(x, proj, centered);

  Matrix cov(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      double acc = 0.0;
      for (std::size_t i = 0; i < x.rows(); ++i) acc += centered(i, a) * centered(i, b);
      const double v = acc / static_cast<double>(x.rows() - 1);
      cov(a, b) = v;
      cov(b, a) = v;
    }
  }

  const EigenResult eig = symmetric_eig(cov);
  double total = 0.0;
  for (double lambda : eig.values) total += std::max(lambda, 0.0);
  if (total <= 0.0) throw std::invalid_argument("pca: zero-variance data");

  const auto ks = static_cast<std::size_t>(k);
  proj.components = Matrix(ks, d);
  proj.explained_ratio.resize(ks);
  for (std::size_t r = 0; r < ks; ++r) {
    for (std::size_t j = 0; j < d; ++j) proj.components(r, j) = eig.vectors(j, r);
    proj.explained_ratio[r] = std::max(eig.values[r], 0.0) / total;
  }
  return proj;
}

Matrix transform(const Projector& proj, const Matrix& x) {
  if (x.cols() != proj.mean.size()) {
    throw std::invalid_argument("transform: dimension mismatch");
  }
  const auto k = static_cast<std::size_t>(proj.k);
  Matrix out(x.rows(), k);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t r = 0; r < k; ++r) {
      double acc = 0.0;
      for (std::size_t j = 0; j < x.cols(); ++j) {
        acc += proj.components(r, j) * (x(i, j) - proj.mean[j]) / proj.scale[j];
      }
      out(i, r) = acc;
    }
  }
  return out;
}

std::vector<double> transform_row(const Projector& proj, std::span<const double> x) {
  if (x.size() != proj.mean.size()) {
    throw std::invalid_argument("transform: dimension mismatch");
  }
  std::vector<double> out(static_cast<std::size_t>(proj.k), 0.0);
  for (std::size_t r = 0; r < out.size(); ++r) {
    double acc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      acc += proj.components(r, j) * (x[j] - proj.mean[j]) / proj.scale[j];
    }
    out[r] = acc;
  }
  return out;
}

std::vector<double> explained_variance_curve(const Matrix& x, bool standardize) {
  const Projector full = pca_fit(x, static_cast<int>(x.cols()), standardize);
  std::vector<double> cumulative(full.explained_ratio.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < cumulative.size(); ++i) {
    acc += full.explained_ratio[i];
    cumulative[i] = acc;
  }
  return cumulative;
}

ScatterPair scatter_matrices(const Matrix& x, const std::vector<int>& y) {
  if (x.rows() != y.size()) throw std::invalid_argument("scatter: label count mismatch");
  if (x.rows() < 2) throw std::invalid_argument("scatter: need at least 2 rows");
  const std::size_t d = x.cols();

  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < y.size(); ++i) groups[y[i]].push_back(i);
  if (groups.size() < 2) throw std::invalid_argument("scatter: need at least 2 classes");

  const std::vector<double> global_mean = column_means(x);

  ScatterPair sp;
  sp.s_between = Matrix(d, d);
  sp.s_within = Matrix(d, d);
  for (const auto& [cls, members] : groups) {
    std::vector<double> mu(d, 0.0);
    for (std::size_t i : members) {
      for (std::size_t j = 0; j < d; ++j) mu[j] += x(i, j);
    }
    for (std::size_t j = 0; j < d; ++j) mu[j] /= static_cast<double>(members.size());

    for (std::size_t a = 0; a < d; ++a) {
      const double da = mu[a] - global_mean[a];
      for (std::size_t b = 0; b < d; ++b) {
        sp.s_between(a, b) +=
            static_cast<double>(members.size()) * da * (mu[b] - global_mean[b]);
      }
    }
    for (std::size_t i : members) {
      for (std::size_t a = 0; a < d; ++a) {
        const double da = x(i, a) - mu[a];
        for (std::size_t b = 0; b < d; ++b) {
          sp.s_within(a, b) += da * (x(i, b) - mu[b]);
        }
      }
    }
  }
  return sp;
}

Projector lda_fit(const Matrix& x, const std::vector<int>& y, int k,
                  bool standardize) {
  const std::size_t d = x.cols();

  std::map<int, int> classes;
  for (int label : y) classes[label] = 1;
  const std::size_t max_k = std::min(classes.size() - 1, d);
  if (k < 1) throw std::invalid_argument("lda: k must be >= 1");
  if (static_cast<std::size_t>(k) > max_k) {
    // Fisher criterion has rank <= C-1.
    throw std::invalid_argument("lda: k exceeds class count - 1 (" +
                                std::to_string(max_k) + ")");
  }

  Projector proj;
  proj.kind = ReducerKind::lda;
  proj.standardized = standardize;
  proj.k = k;

  Matrix work;
  apply_standardization(x, proj, work);

  const ScatterPair sp = scatter_matrices(work, y);
  if (frobenius_norm(sp.s_between) <= 1e-12 * (1.0 + frobenius_norm(sp.s_within))) {
    throw std::invalid_argument("lda: all class means equal (S_B = 0)");
  }

  // Regularize S_W, then reduce the generalized problem to a symmetric one
  // through its Cholesky factor: w = L^{-T} u with u an eigenvector of
  // L^{-1} S_B L^{-T}.
  double trace = 0.0;
  for (std::size_t i = 0; i < d; ++i) trace += sp.s_within(i, i);
  const double eps = 1e-6 * trace / static_cast<double>(d);

  Matrix sw = sp.s_within;
  for (std::size_t i = 0; i < d; ++i) sw(i, i) += eps;

  const Matrix l = cholesky(sw);

  // m = L^{-1} S_B L^{-T}, built column by column.
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<double> col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = sp.s_between(i, j);
    col = solve_lower(l, col);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  // Right-multiply by L^{-T}: solve L m_row^T = row for each row.
  Matrix mt = transpose(m);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<double> col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = mt(i, j);
    col = solve_lower(l, col);
    for (std::size_t i = 0; i < d; ++i) mt(i, j) = col[i];
  }
  m = transpose(mt);
  // Force exact symmetry before the Jacobi step.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const double avg = 0.5 * (m(i, j) + m(j, i));
      m(i, j) = avg;
      m(j, i) = avg;
    }
  }

  const EigenResult eig = symmetric_eig(m);

  double total = 0.0;
  for (double lambda : eig.values) total += std::max(lambda, 0.0);

  const auto ks = static_cast<std::size_t>(k);
  proj.components = Matrix(ks, d);
  proj.explained_ratio.resize(ks);
  for (std::size_t r = 0; r < ks; ++r) {
    std::vector<double> u(d);
    for (std::size_t i = 0; i < d; ++i) u[i] = eig.vectors(i, r);
    std::vector<double> w = solve_lower_transpose(l, u);
    // Normalize and orient like the eigensolver's convention.
    double norm = 0.0;
    for (double v : w) norm += v * v;
    norm = std::sqrt(norm);
    if (norm <= 0.0) throw NumericError("lda: degenerate discriminant direction");
    std::size_t arg = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      if (std::abs(w[i]) > best) {
        best = std::abs(w[i]);
        arg = i;
      }
    }
    const double sign = w[arg] < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < d; ++i) proj.components(r, i) = sign * w[i] / norm;
    proj.explained_ratio[r] =
        total > 0.0 ? std::max(eig.values[r], 0.0) / total : 0.0;
  }
  return proj;
}

}  // namespace emgpr
