#pragma once

// Shared generators and independent oracles for the test suites.

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "qlogic/lattice.hpp"
#include "qlogic/numeric.hpp"

namespace qlogic::testing {

using Rng = std::mt19937_64;

inline ComplexVector random_vector(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector v(dim);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

inline StateVector random_state(Rng& rng, std::size_t dim) { return StateVector::normalized(random_vector(rng, dim)); }

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix x(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) x(i, j) = {g(rng), g(rng)};
  ComplexMatrix h = x + x.adjoint();
  h *= 0.5;
  return h;
}

/// Hermitian matrix with a prescribed (possibly repeated) spectrum in a
/// random orthonormal basis.
inline ComplexMatrix random_hermitian_with_spectrum(Rng& rng, const std::vector<double>& spectrum) {
  const std::size_t dim = spectrum.size();
  std::vector<ComplexVector> vs;
  for (std::size_t k = 0; k < dim; ++k) vs.push_back(random_vector(rng, dim));
  // Classical Gram-Schmidt twice for an orthonormal basis.
  for (std::size_t k = 0; k < dim; ++k) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < k; ++j) {
        const Complex c = inner(vs[j], vs[k]);
        for (std::size_t i = 0; i < dim; ++i) vs[k][i] -= c * vs[j][i];
      }
    const double n = vector_norm(vs[k]);
    for (auto& z : vs[k]) z /= n;
  }
  ComplexMatrix out(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) out += spectrum[k] * ComplexMatrix::outer(vs[k], vs[k]);
  return 0.5 * (out + out.adjoint());
}

inline Subspace random_subspace(Rng& rng, std::size_t dim, std::size_t rank) {
  std::vector<ComplexVector> vs;
  for (std::size_t k = 0; k < rank; ++k) vs.push_back(random_vector(rng, dim));
  return Subspace::span(dim, vs);
}

/// Random subspace of random rank in [0, dim].
inline Subspace random_subspace(Rng& rng, std::size_t dim) {
  std::uniform_int_distribution<std::size_t> r(0, dim);
  return random_subspace(rng, dim, r(rng));
}

/// a <= b by construction: a is spanned by random combinations of b's spanning set.
inline std::pair<Subspace, Subspace> random_nested_pair(Rng& rng, std::size_t dim) {
  std::uniform_int_distribution<std::size_t> rb(1, dim);
  const std::size_t rank_b = rb(rng);
  std::uniform_int_distribution<std::size_t> ra(0, rank_b);
  const std::size_t rank_a = ra(rng);
  std::vector<ComplexVector> basis_b;
  for (std::size_t k = 0; k < rank_b; ++k) basis_b.push_back(random_vector(rng, dim));
  std::vector<ComplexVector> basis_a;
  std::normal_distribution<double> g(0.0, 1.0);
  for (std::size_t k = 0; k < rank_a; ++k) {
    ComplexVector v(dim);
    for (const auto& w : basis_b) {
      const Complex c{g(rng), g(rng)};
      for (std::size_t i = 0; i < dim; ++i) v[i] += c * w[i];
    }
    basis_a.push_back(std::move(v));
  }
  return {Subspace::span(dim, basis_a), Subspace::span(dim, basis_b)};
}

/// Pair of mutually orthogonal subspaces with random ranks.
inline std::pair<Subspace, Subspace> random_orthogonal_pair(Rng& rng, std::size_t dim) {
  const Subspace a = random_subspace(rng, dim, std::uniform_int_distribution<std::size_t>(0, dim)(rng));
  const Subspace rest = orthocomplement(a);
  // Project random vectors into the complement of a.
  const std::size_t rank_b = std::uniform_int_distribution<std::size_t>(0, rest.rank())(rng);
  std::vector<ComplexVector> vs;
  for (std::size_t k = 0; k < rank_b; ++k) vs.push_back(rest.matrix().apply(random_vector(rng, dim)));
  return {a, Subspace::span(dim, vs)};
}

/// Meet oracle: von Neumann's alternating projections, (P_a P_b)^n -> P_{a^b}.
/// Converges geometrically with rate cos^2 of the smallest non-zero principal
/// angle; squaring the product speeds it up.
inline ComplexMatrix alternating_projection_meet(const ComplexMatrix& pa, const ComplexMatrix& pb, int squarings = 20) {
  ComplexMatrix t = pa * pb * pa;
  for (int k = 0; k < squarings; ++k) t = t * t;
  return t;
}

}  // namespace qlogic::testing
