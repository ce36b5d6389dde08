#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qlogic {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Shared numerical tolerance policy. Every predicate in the library that
/// compares floating-point quantities reads one of these fields.
struct Tolerance {
  double proj = 1e-9;  // projector idempotence / self-adjointness
  double herm = 1e-9;  // Hermiticity of observables
  double norm = 1e-10; // unit norm of states
  double rank = 1e-8;  // eigenvalue threshold for numerical rank
  double eq = 1e-9;    // equality of scalars and subspaces

  /// Throws InvalidArgument unless every field lies in (0, 1e-3).
  void validate() const;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> diag);
  static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  ComplexVector apply(std::span<const Complex> v) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Unit-norm pure state.
class StateVector {
 public:
  /// Validates the norm against tol.norm; does not rescale.
  StateVector(ComplexVector amplitudes, const Tolerance& tol = {});

  /// Rescales a non-zero vector to unit norm.
  static StateVector normalized(ComplexVector amplitudes);
  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  struct Trusted {};
  StateVector(ComplexVector amplitudes, Trusted) : amplitudes_(std::move(amplitudes)) {}
  ComplexVector amplitudes_;
};

class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix matrix, const Tolerance& tol = {});

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

/// Orthogonal projector. Construction checks idempotence and
/// self-adjointness against tol.proj and derives the rank from the trace.
class Projector {
 public:
  explicit Projector(ComplexMatrix matrix, const Tolerance& tol = {});

  static Projector zero(std::size_t dim);
  static Projector identity(std::size_t dim);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  std::size_t rank() const noexcept { return rank_; }

  /// I - P.
  Projector complement() const;

 private:
  Projector(ComplexMatrix matrix, std::size_t rank) : matrix_(std::move(matrix)), rank_(rank) {}
  ComplexMatrix matrix_;
  std::size_t rank_ = 0;
};

struct SpectralComponent {
  double eigenvalue;
  Projector projector;
};

/// Eigenvalues (ascending) and matching orthonormal eigenvector columns of a
/// Hermitian matrix. Backed by Eigen's self-adjoint solver.
struct EigenSystem {
  std::vector<double> values;
  std::vector<ComplexVector> vectors;
};
EigenSystem hermitian_eigen(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor_product(std::span<const Complex> a, std::span<const Complex> b);
StateVector tensor_product(const StateVector& a, const StateVector& b);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double vector_norm(std::span<const Complex> v);

/// Orthogonal projector onto span(vectors) in C^dim. Uses modified
/// Gram-Schmidt with column pivoting; residuals below 1e-9 are dropped.
Projector projector_from_span(std::size_t dim, std::span<const ComplexVector> vectors,
                              const Tolerance& tol = {});

/// Projector onto span of orthonormal columns; no re-orthogonalization.
Projector projector_from_orthonormal(std::size_t dim, std::span<const ComplexVector> basis,
                                     const Tolerance& tol = {});

std::vector<SpectralComponent> spectral_decompose(const HermitianOperator& a,
                                                  const Tolerance& tol = {});

/// <psi|P|psi>, snapped to 0 or 1 when within tol.eq of either end.
double expectation(const Projector& p, const StateVector& psi, const Tolerance& tol = {});

/// Projective collapse P|psi> / ||P|psi>||.
StateVector measure_update(const Projector& p, const StateVector& psi, const Tolerance& tol = {});

}  // namespace qlogic
