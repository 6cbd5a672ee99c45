#include "sge/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sge {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

std::complex<double> ComplexMatrix::trace() const {
  std::complex<double> t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::offdiagonal_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (i != j) s += std::norm((*this)(i, j));
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(value_type s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::complex<double> aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const std::complex<double> aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_transpose_A(const ComplexMatrix& rho) {
  if (rho.dim() != 9)
    throw std::invalid_argument("partial_transpose_A: expected dim 9, got " +
                                std::to_string(rho.dim()));
  ComplexMatrix out(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          out(3 * i + j, 3 * k + l) = rho(3 * k + j, 3 * i + l);
  return out;
}

namespace {

constexpr double kOffNormThreshold = 1e-12;
constexpr int kMaxSweeps = 100;

void check_hermitian(const ComplexMatrix& m, double tol) {
  const double defect = m.hermiticity_defect();
  if (defect > tol) {
    std::ostringstream os;
    os << "hermitian eigensolver: input not Hermitian, max asymmetry " << defect
       << " exceeds tolerance " << tol;
    throw std::invalid_argument(os.str());
  }
}

// One cyclic Jacobi pass over all (p,q) pivots of the Hermitian matrix a.
// For each pivot a unitary plane rotation annihilates a(p,q); v accumulates
// the rotations when eigenvectors are wanted.
void jacobi_sweep(ComplexMatrix& a, ComplexMatrix* v) {
  const std::size_t n = a.dim();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const std::complex<double> apq = a(p, q);
      const double absapq = std::abs(apq);
      if (absapq == 0.0) continue;
      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      // tan(2 theta) = 2|a_pq| / (a_pp - a_qq)
      const double kappa = (app - aqq) / (2.0 * absapq);
      double t;
      if (std::isinf(kappa)) {
        t = 0.0;
      } else if (kappa >= 0.0) {
        t = 1.0 / (kappa + std::sqrt(kappa * kappa + 1.0));
      } else {
        t = -1.0 / (-kappa + std::sqrt(kappa * kappa + 1.0));
      }
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      const std::complex<double> phase = apq / absapq;

      // columns: col_p <- c*col_p + s*conj(phase)*col_q,
      //          col_q <- -s*phase*col_p + c*col_q
      for (std::size_t r = 0; r < n; ++r) {
        const std::complex<double> arp = a(r, p), arq = a(r, q);
        a(r, p) = c * arp + s * std::conj(phase) * arq;
        a(r, q) = -s * phase * arp + c * arq;
      }
      // rows (conjugate rotation)
      for (std::size_t col = 0; col < n; ++col) {
        const std::complex<double> apc = a(p, col), aqc = a(q, col);
        a(p, col) = c * apc + s * phase * aqc;
        a(q, col) = -s * std::conj(phase) * apc + c * aqc;
      }
      // keep the diagonal exactly real and the pivot exactly zero
      a(p, p) = a(p, p).real();
      a(q, q) = a(q, q).real();
      a(p, q) = 0.0;
      a(q, p) = 0.0;

      if (v) {
        for (std::size_t r = 0; r < n; ++r) {
          const std::complex<double> vrp = (*v)(r, p), vrq = (*v)(r, q);
          (*v)(r, p) = c * vrp + s * std::conj(phase) * vrq;
          (*v)(r, q) = -s * phase * vrp + c * vrq;
        }
      }
    }
  }
}

EigenSystem jacobi_eigensystem(const ComplexMatrix& m, double hermitian_tol,
                               bool want_vectors) {
  check_hermitian(m, hermitian_tol);
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  // symmetrize away the sub-tolerance asymmetry so the iteration sees an
  // exactly Hermitian matrix
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::complex<double> avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }

  ComplexMatrix v;
  if (want_vectors) v = ComplexMatrix::identity(n);

  int sweep = 0;
  double off = a.offdiagonal_norm();
  while (off > kOffNormThreshold) {
    if (sweep++ >= kMaxSweeps) {
      std::ostringstream os;
      os << "hermitian eigensolver: no convergence in " << kMaxSweeps
         << " sweeps, off-diagonal norm reached " << off;
      throw std::runtime_error(os.str());
    }
    jacobi_sweep(a, want_vectors ? &v : nullptr);
    off = a.offdiagonal_norm();
  }

  EigenSystem out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i).real();

  // ascending sort, permuting eigenvector columns alongside
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return out.values[x] < out.values[y]; });
  std::vector<double> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = out.values[order[i]];
  out.values = std::move(sorted);
  if (want_vectors) {
    out.vectors = ComplexMatrix(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol) {
  return jacobi_eigensystem(m, hermitian_tol, false).values;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double hermitian_tol) {
  return jacobi_eigensystem(m, hermitian_tol, true);
}

}  // namespace sge
