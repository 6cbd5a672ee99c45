#ifndef SGE_COMPLEX_MATRIX_HPP
#define SGE_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace sge {

/// Dense complex matrix, row-major, sized for two-atom density operators
/// (dim <= 81). Values are plain doubles; no allocation tricks.
class ComplexMatrix {
 public:
  using value_type = std::complex<double>;

  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  value_type& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  std::complex<double> trace() const;

  /// max |M(i,j) - conj(M(j,i))| over all entries.
  double hermiticity_defect() const;
  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

  double frobenius_norm() const;
  /// Frobenius norm of the strictly off-diagonal part.
  double offdiagonal_norm() const;
  double max_abs() const;

  ComplexMatrix adjoint() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(value_type s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(value_type s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<value_type> a_;
};

/// Kronecker product; result dim = a.dim() * b.dim().
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial transposition over the first (atom A) factor of a 9x9 two-atom
/// matrix indexed by |i_A j_B>, composite index 3*i + j (0-based).
/// Output((i,j),(k,l)) = input((k,j),(i,l)). Involution; preserves trace
/// and Hermiticity exactly. Throws std::invalid_argument unless dim == 9.
ComplexMatrix partial_transpose_A(const ComplexMatrix& rho);

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi rotations,
/// off-diagonal Frobenius threshold 1e-12, at most 100 sweeps.
/// Throws std::invalid_argument if the input fails the Hermiticity check
/// (defect > hermitian_tol; the message carries the max asymmetry) and
/// std::runtime_error on non-convergence (message carries the off-norm
/// reached).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double hermitian_tol = 1e-10);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are eigenvectors, same order
};

/// Eigenvalues and eigenvectors; same algorithm and error contract as
/// hermitian_eigenvalues.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m,
                                  double hermitian_tol = 1e-10);

}  // namespace sge

#endif
