#include "qlogic/numeric.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qlogic/error.hpp"

namespace qlogic {
namespace {

// Gram-Schmidt drop threshold for residual norms.
constexpr double kSpanDropThreshold = 1e-9;

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(std::span<const Complex> values, const char* what) {
  for (const auto& z : values) {
    if (!finite(z)) fail(ErrorKind::InvalidArgument, std::string(what) + " contains a non-finite entry");
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << op << ": shapes " << a.rows() << "x" << a.cols() << " and " << b.rows() << "x" << b.cols()
       << " differ";
    fail(ErrorKind::DimensionMismatch, os.str());
  }
}

std::string dim_message(const char* op, std::size_t lhs, std::size_t rhs) {
  std::ostringstream os;
  os << op << ": dimension " << lhs << " does not match " << rhs;
  return os.str();
}

}  // namespace

void Tolerance::validate() const {
  const std::pair<const char*, double> fields[] = {
      {"proj", proj}, {"herm", herm}, {"norm", norm}, {"rank", rank}, {"eq", eq}};
  for (const auto& [name, value] : fields) {
    if (!(value > 0.0 && value < 1e-3)) {
      fail(ErrorKind::InvalidArgument, std::string("tolerance ") + name + " must lie in (0, 1e-3)");
    }
  }
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) fail(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) fail(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    fail(ErrorKind::DimensionMismatch, dim_message("matrix entries", entries_.size(), rows * cols));
  }
  require_finite(entries_, "matrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (!std::isfinite(diag[i])) fail(ErrorKind::InvalidArgument, "diagonal contains a non-finite entry");
    m(i, i) = diag[i];
  }
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
  ComplexMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, dim_message("matrix-vector product", v.size(), cols_));
  ComplexVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix sum");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix difference");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::DimensionMismatch, dim_message("matrix product", a.cols(), b.rows()));
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vectors and states

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, dim_message("inner product", a.size(), b.size()));
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double vector_norm(std::span<const Complex> v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

StateVector::StateVector(ComplexVector amplitudes, const Tolerance& tol) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) fail(ErrorKind::InvalidArgument, "state must have positive dimension");
  require_finite(amplitudes_, "state");
  const double n = vector_norm(amplitudes_);
  if (std::abs(n - 1.0) > tol.norm) {
    std::ostringstream os;
    os.precision(12);
    os << "state norm " << n << " differs from 1";
    fail(ErrorKind::NotNormalized, os.str());
  }
}

StateVector StateVector::normalized(ComplexVector amplitudes) {
  if (amplitudes.empty()) fail(ErrorKind::InvalidArgument, "state must have positive dimension");
  require_finite(amplitudes, "state");
  const double n = vector_norm(amplitudes);
  if (n == 0.0) fail(ErrorKind::NotNormalized, "cannot normalize the zero vector");
  for (auto& z : amplitudes) z /= n;
  return StateVector(std::move(amplitudes), Trusted{});
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) fail(ErrorKind::IndexOutOfRange, "basis index out of range");
  ComplexVector v(dim);
  v[index] = 1.0;
  return StateVector(std::move(v), Trusted{});
}

// ---------------------------------------------------------------------------
// Operators

HermitianOperator::HermitianOperator(ComplexMatrix matrix, const Tolerance& tol) : matrix_(std::move(matrix)) {
  if (!matrix_.square()) fail(ErrorKind::NotHermitian, "observable must be square");
  if (frobenius_norm(matrix_ - matrix_.adjoint()) > tol.herm) {
    fail(ErrorKind::NotHermitian, "matrix is not self-adjoint within tolerance");
  }
}

Projector::Projector(ComplexMatrix matrix, const Tolerance& tol) : matrix_(std::move(matrix)) {
  if (!matrix_.square()) fail(ErrorKind::NotProjector, "projector must be square");
  if (frobenius_norm(matrix_ - matrix_.adjoint()) > tol.proj) {
    fail(ErrorKind::NotProjector, "projector is not self-adjoint within tolerance");
  }
  if (frobenius_norm(matrix_ * matrix_ - matrix_) > tol.proj) {
    fail(ErrorKind::NotProjector, "projector is not idempotent within tolerance");
  }
  // With P idempotent and self-adjoint every eigenvalue sits next to 0 or 1,
  // so the count of eigenvalues above 1/2 is the rounded trace.
  const double tr = matrix_.trace().real();
  const double rounded = std::round(tr);
  if (std::abs(tr - rounded) > tol.rank) fail(ErrorKind::NotProjector, "projector trace is not integral");
  rank_ = static_cast<std::size_t>(std::max(0.0, rounded));
}

Projector Projector::zero(std::size_t dim) { return Projector(ComplexMatrix(dim, dim), std::size_t{0}); }

Projector Projector::identity(std::size_t dim) { return Projector(ComplexMatrix::identity(dim), dim); }

Projector Projector::complement() const {
  return Projector(ComplexMatrix::identity(dim()) - matrix_, dim() - rank_);
}

// ---------------------------------------------------------------------------

EigenSystem hermitian_eigen(const ComplexMatrix& a) {
  if (!a.square()) fail(ErrorKind::NotHermitian, "eigendecomposition needs a square matrix");
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) fail(ErrorKind::NotHermitian, "eigensolver did not converge");

  EigenSystem out;
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  out.vectors.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto col = solver.eigenvectors().col(k);
    out.vectors.emplace_back(col.data(), col.data() + n);
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (const auto& z : a.entries()) acc += std::norm(z);
  return std::sqrt(acc);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows()) {
    fail(ErrorKind::DimensionMismatch, dim_message("commutator", a.rows(), b.rows()));
  }
  return a * b - b * a;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexVector tensor_product(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  return StateVector::normalized(tensor_product(a.amplitudes(), b.amplitudes()));
}

Projector projector_from_orthonormal(std::size_t dim, std::span<const ComplexVector> basis, const Tolerance& tol) {
  if (basis.empty()) return Projector::zero(dim);
  ComplexMatrix p(dim, dim);
  for (const auto& q : basis) {
    if (q.size() != dim) fail(ErrorKind::DimensionMismatch, dim_message("basis vector", q.size(), dim));
    p += ComplexMatrix::outer(q, q);
  }
  return Projector(std::move(p), tol);
}

Projector projector_from_span(std::size_t dim, std::span<const ComplexVector> vectors, const Tolerance& tol) {
  if (dim == 0) fail(ErrorKind::InvalidArgument, "span dimension must be positive");
  std::vector<ComplexVector> residual;
  residual.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != dim) fail(ErrorKind::DimensionMismatch, dim_message("span vector", v.size(), dim));
    require_finite(v, "span vector");
    residual.push_back(v);
  }

  std::vector<ComplexVector> basis;
  std::vector<bool> used(residual.size(), false);
  while (basis.size() < dim) {
    // Pivot: the remaining residual of largest norm, earliest index on ties.
    std::size_t pivot = residual.size();
    double best = -1.0;
    for (std::size_t k = 0; k < residual.size(); ++k) {
      if (used[k]) continue;
      const double n = vector_norm(residual[k]);
      if (n > best) {
        best = n;
        pivot = k;
      }
    }
    if (pivot == residual.size() || best < kSpanDropThreshold) break;
    used[pivot] = true;

    ComplexVector q = residual[pivot];
    for (auto& z : q) z /= best;
    for (std::size_t k = 0; k < residual.size(); ++k) {
      if (used[k]) continue;
      const Complex c = inner(q, residual[k]);
      for (std::size_t i = 0; i < dim; ++i) residual[k][i] -= c * q[i];
    }
    basis.push_back(std::move(q));
  }
  return projector_from_orthonormal(dim, basis, tol);
}

std::vector<SpectralComponent> spectral_decompose(const HermitianOperator& a, const Tolerance& tol) {
  const ComplexMatrix& m = a.matrix();
  if (frobenius_norm(m - m.adjoint()) > tol.herm) fail(ErrorKind::NotHermitian, "operator is not self-adjoint");

  const EigenSystem eig = hermitian_eigen(m);
  const double gap = 1e-8 * (1.0 + frobenius_norm(m));

  std::vector<SpectralComponent> out;
  std::size_t start = 0;
  const std::size_t n = eig.values.size();
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && eig.values[end] - eig.values[end - 1] < gap) ++end;
    const double mean =
        std::accumulate(eig.values.begin() + static_cast<std::ptrdiff_t>(start),
                        eig.values.begin() + static_cast<std::ptrdiff_t>(end), 0.0) /
        static_cast<double>(end - start);
    std::span<const ComplexVector> cluster(eig.vectors.data() + start, end - start);
    out.push_back({mean, projector_from_orthonormal(m.rows(), cluster, tol)});
    start = end;
  }
  return out;
}

double expectation(const Projector& p, const StateVector& psi, const Tolerance& tol) {
  if (p.dim() != psi.dim()) fail(ErrorKind::DimensionMismatch, dim_message("expectation", p.dim(), psi.dim()));
  double e = inner(psi.amplitudes(), p.matrix().apply(psi.amplitudes())).real();
  if (std::abs(e) <= tol.eq) e = 0.0;
  if (std::abs(e - 1.0) <= tol.eq) e = 1.0;
  return std::clamp(e, 0.0, 1.0);
}

StateVector measure_update(const Projector& p, const StateVector& psi, const Tolerance& tol) {
  const double prob = expectation(p, psi, tol);
  if (prob <= tol.eq) {
    std::ostringstream os;
    os.precision(12);
    os << "branch probability " << prob << " is zero within tolerance";
    fail(ErrorKind::ZeroProbabilityBranch, os.str());
  }
  return StateVector::normalized(p.matrix().apply(psi.amplitudes()));
}

}  // namespace qlogic
