#pragma once

#include <cstddef>
#include <span>

#include "qlogic/numeric.hpp"

namespace qlogic {

/// A closed subspace of C^n, carried by its orthogonal projector.
class Subspace {
 public:
  explicit Subspace(Projector projector) : projector_(std::move(projector)) {}

  static Subspace bottom(std::size_t dim) { return Subspace(Projector::zero(dim)); }
  static Subspace top(std::size_t dim) { return Subspace(Projector::identity(dim)); }
  static Subspace span(std::size_t dim, std::span<const ComplexVector> vectors, const Tolerance& tol = {}) {
    return Subspace(projector_from_span(dim, vectors, tol));
  }

  const Projector& projector() const noexcept { return projector_; }
  const ComplexMatrix& matrix() const noexcept { return projector_.matrix(); }
  std::size_t dim() const noexcept { return projector_.dim(); }
  std::size_t rank() const noexcept { return projector_.rank(); }
  bool is_bottom() const noexcept { return rank() == 0; }
  bool is_top() const noexcept { return rank() == dim(); }

 private:
  Projector projector_;
};

/// Fixes the ambient dimension and tolerance for a family of subspaces.
struct LatticeContext {
  LatticeContext(std::size_t dim_ambient, Tolerance tol = {});

  std::size_t dim_ambient;
  Tolerance tol;
  Subspace bottom;
  Subspace top;
};

/// Projector onto the range (or kernel) of a positive semidefinite matrix.
/// Eigenvalues at or below tol.rank count as zero, those at or above
/// sqrt(tol.rank) as non-zero; anything in between raises RankAmbiguous.
Projector psd_range_projector(const ComplexMatrix& psd, const Tolerance& tol = {});
Projector psd_kernel_projector(const ComplexMatrix& psd, const Tolerance& tol = {});

Subspace meet(const Subspace& a, const Subspace& b, const Tolerance& tol = {});
Subspace join(const Subspace& a, const Subspace& b, const Tolerance& tol = {});
Subspace orthocomplement(const Subspace& a);

bool leq(const Subspace& a, const Subspace& b, const Tolerance& tol = {});
bool compatible(const Subspace& a, const Subspace& b, const Tolerance& tol = {});

/// Frobenius distance between the two projectors.
double distance(const Subspace& a, const Subspace& b);
bool approx_equal(const Subspace& a, const Subspace& b, const Tolerance& tol = {});

/// Checks b == a v (b ^ a') for a <= b. Throws PreconditionViolation otherwise.
bool check_orthomodular(const Subspace& a, const Subspace& b, const Tolerance& tol = {});

/// Frobenius residual of the orthomodular identity, for reporting.
double orthomodular_residual(const Subspace& a, const Subspace& b, const Tolerance& tol = {});

/// || a ^ (b v c) - (a ^ b) v (a ^ c) ||_F.
double distributivity_defect(const Subspace& a, const Subspace& b, const Subspace& c, const Tolerance& tol = {});

}  // namespace qlogic
