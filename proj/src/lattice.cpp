#include "qlogic/lattice.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "qlogic/error.hpp"

namespace qlogic {
namespace {

void require_same_dim(const Subspace& a, const Subspace& b, const char* op) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << op << ": ambient dimensions " << a.dim() << " and " << b.dim() << " differ";
    fail(ErrorKind::DimensionMismatch, os.str());
  }
}

enum class Side { Range, Kernel };

Projector psd_projector(const ComplexMatrix& psd, Side side, const Tolerance& tol) {
  const EigenSystem eig = hermitian_eigen(psd);
  const double upper = std::sqrt(tol.rank);
  std::vector<ComplexVector> chosen;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const double lambda = eig.values[k];
    if (lambda > tol.rank && lambda < upper) {
      std::ostringstream os;
      os.precision(12);
      os << "eigenvalue " << lambda << " lies inside the rank ambiguity band (" << tol.rank << ", " << upper << ")";
      fail(ErrorKind::RankAmbiguous, os.str());
    }
    const bool nonzero = lambda >= upper;
    if (nonzero == (side == Side::Range)) chosen.push_back(eig.vectors[k]);
  }
  return projector_from_orthonormal(psd.rows(), chosen, tol);
}

}  // namespace

LatticeContext::LatticeContext(std::size_t dim, Tolerance t)
    : dim_ambient(dim), tol(t), bottom(Subspace::bottom(dim)), top(Subspace::top(dim)) {
  tol.validate();
}

Projector psd_range_projector(const ComplexMatrix& psd, const Tolerance& tol) {
  return psd_projector(psd, Side::Range, tol);
}

Projector psd_kernel_projector(const ComplexMatrix& psd, const Tolerance& tol) {
  return psd_projector(psd, Side::Kernel, tol);
}

Subspace meet(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_same_dim(a, b, "meet");
  if (a.is_bottom() || b.is_top()) return a;
  if (b.is_bottom() || a.is_top()) return b;
  // ran(A) ∩ ran(B) = ker((I - A) + (I - B)).
  const ComplexMatrix sum = a.projector().complement().matrix() + b.projector().complement().matrix();
  return Subspace(psd_kernel_projector(sum, tol));
}

Subspace join(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_same_dim(a, b, "join");
  if (a.is_bottom() || b.is_top()) return b;
  if (b.is_bottom() || a.is_top()) return a;
  return Subspace(psd_range_projector(a.matrix() + b.matrix(), tol));
}

Subspace orthocomplement(const Subspace& a) { return Subspace(a.projector().complement()); }

bool leq(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_same_dim(a, b, "leq");
  return frobenius_norm(b.matrix() * a.matrix() - a.matrix()) <= tol.eq;
}

bool compatible(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_same_dim(a, b, "compatible");
  return frobenius_norm(commutator(a.matrix(), b.matrix())) <= tol.eq;
}

double distance(const Subspace& a, const Subspace& b) {
  require_same_dim(a, b, "distance");
  return frobenius_norm(a.matrix() - b.matrix());
}

bool approx_equal(const Subspace& a, const Subspace& b, const Tolerance& tol) { return distance(a, b) <= tol.eq; }

double orthomodular_residual(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (!leq(a, b, tol)) fail(ErrorKind::PreconditionViolation, "orthomodular check requires a <= b");
  return distance(b, join(a, meet(b, orthocomplement(a), tol), tol));
}

bool check_orthomodular(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  return orthomodular_residual(a, b, tol) <= tol.proj;
}

double distributivity_defect(const Subspace& a, const Subspace& b, const Subspace& c, const Tolerance& tol) {
  const Subspace lhs = meet(a, join(b, c, tol), tol);
  const Subspace rhs = join(meet(a, b, tol), meet(a, c, tol), tol);
  return distance(lhs, rhs);
}

}  // namespace qlogic
