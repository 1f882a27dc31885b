#include "sdcd/linalg.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "sdcd/rng.hpp"

namespace sdcd {

std::string_view to_string(MatrixFamily family) {
  switch (family) {
    case MatrixFamily::gaussian: return "gaussian";
    case MatrixFamily::bernoulli: return "bernoulli";
    case MatrixFamily::subsampled_hadamard: return "subsampled_hadamard";
    case MatrixFamily::custom: return "custom";
  }
  return "custom";
}

MatrixFamily matrix_family_from_string(std::string_view name) {
  if (name == "gaussian") return MatrixFamily::gaussian;
  if (name == "bernoulli") return MatrixFamily::bernoulli;
  if (name == "subsampled_hadamard" || name == "hadamard") return MatrixFamily::subsampled_hadamard;
  if (name == "custom") return MatrixFamily::custom;
  throw std::invalid_argument("unknown matrix family: " + std::string(name));
}

namespace {

void require_dims(Index m, Index n) {
  if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
}

}  // namespace

ProblemInstance ProblemInstance::from_solution(Matrix A, Vector solution, MatrixFamily family,
                                               std::uint64_t seed) {
  if (solution.size() != A.cols()) throw std::invalid_argument("solution length != cols(A)");
  Vector b = A * solution;
  ProblemInstance p;
  p.A = std::move(A);
  p.b = std::move(b);
  p.solution = std::move(solution);
  p.family = family;
  p.seed = seed;
  p.b_norm = p.b.norm();
  return p;
}

ProblemInstance ProblemInstance::from_data(Matrix A, Vector b, std::optional<Vector> solution,
                                           MatrixFamily family, std::uint64_t seed) {
  if (b.size() != A.rows()) throw std::invalid_argument("b length != rows(A)");
  if (solution) {
    if (solution->size() != A.cols()) throw std::invalid_argument("solution length != cols(A)");
    const double resid = (A * (*solution) - b).norm();
    if (resid > 1e-10 * (1.0 + b.norm())) {
      throw std::invalid_argument("inconsistent instance: ||A*solution - b|| = " +
                                  std::to_string(resid));
    }
  }
  ProblemInstance p;
  p.A = std::move(A);
  p.b = std::move(b);
  p.solution = std::move(solution);
  p.family = family;
  p.seed = seed;
  p.b_norm = p.b.norm();
  return p;
}

Matrix gen_gaussian(Index m, Index n, std::uint64_t seed) {
  require_dims(m, n);
  RngStream rng(seed);
  Matrix A(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = rng.normal();
  return A;
}

Matrix gen_bernoulli(Index m, Index n, std::uint64_t seed) {
  require_dims(m, n);
  RngStream rng(seed);
  Matrix A(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = rng.uniform01() < 0.5 ? 1.0 : -1.0;
  return A;
}

Matrix gen_subsampled_hadamard(Index m, Index n, std::uint64_t seed) {
  require_dims(m, n);
  if (!std::has_single_bit(static_cast<std::uint64_t>(n))) {
    throw std::invalid_argument("subsampled Hadamard requires n a power of two, got n=" +
                                std::to_string(n));
  }
  if (m > n) throw std::invalid_argument("subsampled Hadamard requires m <= n");
  RngStream rng(seed);
  const auto rows = rng.sample_without_replacement(n, m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Matrix A(m, n);
  for (Index i = 0; i < m; ++i) {
    const auto r = static_cast<std::uint64_t>(rows[static_cast<std::size_t>(i)]);
    for (Index j = 0; j < n; ++j) {
      // Sylvester construction: H(r, j) = (-1)^popcount(r & j).
      const bool neg = std::popcount(r & static_cast<std::uint64_t>(j)) & 1U;
      A(i, j) = neg ? -scale : scale;
    }
  }
  return A;
}

Vector gen_sparse_signal(Index n, Index s, std::uint64_t seed) {
  if (n < 1 || s < 1) throw std::invalid_argument("signal dimensions must be >= 1");
  if (s > n) throw std::invalid_argument("sparsity s exceeds length n");
  RngStream rng(seed);
  const auto support = rng.sample_without_replacement(n, s);
  Vector x = Vector::Zero(n);
  for (const Index i : support) x[i] = rng.normal();
  return x;
}

Vector matvec(const Matrix& A, const Vector& x) {
  if (x.size() != A.cols()) throw std::invalid_argument("matvec: dimension mismatch");
  return A * x;
}

Vector rmatvec(const Matrix& A, const Vector& y) {
  if (y.size() != A.rows()) throw std::invalid_argument("rmatvec: dimension mismatch");
  return A.transpose() * y;
}

Matrix row_block(const Matrix& A, std::span<const Index> idx) {
  Matrix B(static_cast<Index>(idx.size()), A.cols());
  Index k = 0;
  for (const Index i : idx) {
    if (i < 0 || i >= A.rows()) throw std::invalid_argument("row_block: index out of range");
    B.row(k++) = A.row(i);
  }
  return B;
}

SpectralNorms spectral_norms(const Matrix& A) {
  if (A.norm() == 0.0) throw std::invalid_argument("spectral_norms: zero matrix");
  Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
  const Eigen::VectorXd& sv = svd.singularValues();
  SpectralNorms out;
  out.sigma_max = sv[0];
  const double cutoff = 1e-10 * out.sigma_max;
  out.sigma_min_nonzero = sv[0];
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > cutoff) out.sigma_min_nonzero = sv[i];
  }
  return out;
}

Index next_power_of_two(Index n) {
  Index p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace sdcd
