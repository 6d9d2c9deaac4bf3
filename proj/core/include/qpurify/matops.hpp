#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace qpurify {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense complex Hermitian operator with explicit tensor-factor bookkeeping.
///
/// Sites are 1-based; site 1 is the leftmost tensor factor and, for Choi
/// operators, the output system is always the last site. Construction
/// symmetrizes (X + X^dag)/2 when the hermiticity defect is below 1e-12
/// (relative to the largest entry) and throws otherwise.
class HermitianOperator {
public:
  static constexpr double kHermTol = 1e-12;

  HermitianOperator(std::vector<int> dims, Matrix entries);

  static HermitianOperator identity(std::vector<int> dims);
  static HermitianOperator zero(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  const Matrix& entries() const { return m_; }
  int side() const { return static_cast<int>(m_.rows()); }
  int num_sites() const { return static_cast<int>(dims_.size()); }
  double trace() const { return m_.trace().real(); }

private:
  std::vector<int> dims_;
  Matrix m_;
};

/// Permutation of tensor slots, stored in one-line form (1-based images).
struct SitePermutation {
  int n = 0;
  std::vector<int> image;  // site k maps to image[k-1]

  static SitePermutation identity(int n);
  /// Cycle notation: from_cycle(3, {1,2,3}) sends 1->2, 2->3, 3->1.
  static SitePermutation from_cycle(int n, const std::vector<int>& cycle);
  /// (this o other)(k) = this(other(k))
  SitePermutation compose(const SitePermutation& other) const;
  bool is_valid() const;
};

/// Sparse Hermitian matrix in triplet form (both triangles stored).
/// Used for SDP constraint functionals where the dense form would be wasteful.
struct SparseEntry {
  int i, j;
  Complex v;
};

struct SparseHermitian {
  int side = 0;
  std::vector<SparseEntry> entries;

  Matrix dense() const;
  /// <F, X> = Re tr[F^dag X]
  double eval(const Matrix& x) const;
};

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b);

/// Partial trace keeping the listed sites (1-based, in ascending order).
Matrix partial_trace(const Matrix& x, const std::vector<int>& dims,
                     const std::vector<int>& keep);
HermitianOperator partial_trace(const HermitianOperator& x, const std::vector<int>& keep);

/// Transpose applied to the listed tensor factors only.
Matrix partial_transpose(const Matrix& x, const std::vector<int>& dims,
                         const std::vector<int>& sites);
HermitianOperator partial_transpose(const HermitianOperator& x, const std::vector<int>& sites);

/// Unitary permutation operator on n sites of equal dimension d:
/// P(c)|i_1..i_n> = |i_{c^-1(1)} .. i_{c^-1(n)}>, so P(c1)P(c2) = P(c1 o c2).
Matrix permutation_matrix(const SitePermutation& p, int d);

/// Projector onto the symmetric subspace of n sites of dimension d.
HermitianOperator symmetric_projector(int n, int d);

double min_eigenvalue(const HermitianOperator& x);
double min_eigenvalue(const Matrix& x);

/// Exact binomial; arguments stay desk-scale so double is exact.
double binomial(int n, int k);

/// Dimension of the symmetric subspace, D(n,d) = binomial(n+d-1, n).
double symmetric_dimension(int n, int d);

}  // namespace qpurify
