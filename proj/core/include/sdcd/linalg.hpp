#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include <Eigen/Core>

namespace sdcd {

// Row-major so that row extraction (the per-iteration access pattern of every
// row-action method here) is contiguous.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class MatrixFamily { gaussian, bernoulli, subsampled_hadamard, custom };

std::string_view to_string(MatrixFamily family);
MatrixFamily matrix_family_from_string(std::string_view name);

/// A consistent linear system Ax = b, optionally with the planted solution
/// used to build b. Immutable after construction; safe to share across trials.
struct ProblemInstance {
  Matrix A;
  Vector b;
  std::optional<Vector> solution;
  MatrixFamily family = MatrixFamily::custom;
  std::uint64_t seed = 0;
  double b_norm = 0.0;

  Index rows() const { return A.rows(); }
  Index cols() const { return A.cols(); }

  /// Builds b = A * solution (consistency by construction).
  static ProblemInstance from_solution(Matrix A, Vector solution,
                                       MatrixFamily family = MatrixFamily::custom,
                                       std::uint64_t seed = 0);

  /// Wraps existing data; rejects inconsistent (A, b, solution) triples.
  static ProblemInstance from_data(Matrix A, Vector b, std::optional<Vector> solution,
                                   MatrixFamily family = MatrixFamily::custom,
                                   std::uint64_t seed = 0);
};

/// Entries i.i.d. N(0,1); deterministic per seed.
Matrix gen_gaussian(Index m, Index n, std::uint64_t seed);

/// Entries i.i.d. uniform on {+1, -1}.
Matrix gen_bernoulli(Index m, Index n, std::uint64_t seed);

/// m rows, sampled uniformly without replacement, of the n x n Sylvester
/// Hadamard matrix scaled by 1/sqrt(n). Requires n a power of two and
/// 1 <= m <= n; the rows of the result are orthonormal.
Matrix gen_subsampled_hadamard(Index m, Index n, std::uint64_t seed);

/// Vector with exactly s nonzeros at uniformly random positions, values
/// i.i.d. N(0,1).
Vector gen_sparse_signal(Index n, Index s, std::uint64_t seed);

Vector matvec(const Matrix& A, const Vector& x);
Vector rmatvec(const Matrix& A, const Vector& y);
Matrix row_block(const Matrix& A, std::span<const Index> idx);

struct SpectralNorms {
  double sigma_max = 0.0;
  double sigma_min_nonzero = 0.0;  // smallest singular value above 1e-10 * sigma_max
};

/// Full SVD (desk scale). Rejects the zero matrix.
SpectralNorms spectral_norms(const Matrix& A);

/// Smallest power of two >= n.
Index next_power_of_two(Index n);

}  // namespace sdcd
