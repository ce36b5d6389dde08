#include <gtest/gtest.h>

#include <cmath>

#include "qlogic/error.hpp"
#include "qlogic/lattice.hpp"
#include "support.hpp"

namespace qlogic {
namespace {

using testing::Rng;

const double kH = 1.0 / std::sqrt(2.0);

Subspace Span(std::size_t dim, std::vector<ComplexVector> vs) { return Subspace::span(dim, vs); }
ComplexVector E(std::size_t dim, std::size_t k) {
  ComplexVector v(dim);
  v[k] = 1.0;
  return v;
}

TEST(Meet, Examples) {
  const Subspace p = Span(2, {{kH, kH}});
  EXPECT_LE(distance(meet(p, p), p), 1e-12);

  const Subspace x = Span(2, {E(2, 0)});
  const Subspace y = Span(2, {E(2, 1)});
  EXPECT_TRUE(meet(x, y).is_bottom());

  const Subspace e12 = Span(3, {E(3, 0), E(3, 1)});
  const Subspace e23 = Span(3, {E(3, 1), E(3, 2)});
  EXPECT_LE(distance(meet(e12, e23), Span(3, {E(3, 1)})), 1e-12);
}

TEST(Join, Examples) {
  const Subspace p = Span(2, {{kH, kH}});
  EXPECT_LE(distance(join(p, Subspace::bottom(2)), p), 1e-12);

  const Subspace x = Span(2, {E(2, 0)});
  const Subspace y = Span(2, {E(2, 1)});
  EXPECT_TRUE(join(x, y).is_top());

  const Subspace e1 = Span(3, {E(3, 0)});
  const Subspace d = Span(3, {{kH, kH, 0.0}});
  const Subspace j = join(e1, d);
  EXPECT_EQ(j.rank(), 2u);
  EXPECT_LE(distance(j, Span(3, {E(3, 0), E(3, 1)})), 1e-12);
}

TEST(Lattice, DimensionMismatch) {
  const Subspace a = Subspace::top(2);
  const Subspace b = Subspace::top(3);
  for (auto op : {+[](const Subspace& x, const Subspace& y) { meet(x, y); },
                  +[](const Subspace& x, const Subspace& y) { join(x, y); },
                  +[](const Subspace& x, const Subspace& y) { leq(x, y); },
                  +[](const Subspace& x, const Subspace& y) { compatible(x, y); }}) {
    try {
      op(a, b);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
  }
}

TEST(Orthocomplement, Examples) {
  EXPECT_TRUE(orthocomplement(Subspace::top(4)).is_bottom());
  Rng rng(1);
  const Subspace a = testing::random_subspace(rng, 5, 2);
  EXPECT_LE(distance(orthocomplement(orthocomplement(a)), a), 1e-9);
  EXPECT_EQ(orthocomplement(a).rank(), 3u);
  EXPECT_LE(distance(orthocomplement(Span(2, {E(2, 0)})), Span(2, {E(2, 1)})), 0.0);
}

TEST(Leq, Examples) {
  Rng rng(2);
  const Subspace any = testing::random_subspace(rng, 4, 2);
  EXPECT_TRUE(leq(Subspace::bottom(4), any));
  EXPECT_TRUE(leq(any, Subspace::top(4)));
  EXPECT_FALSE(leq(Span(2, {E(2, 0)}), Span(2, {E(2, 1)})));
}

TEST(Compatible, Examples) {
  const std::vector<double> d1{1, 0, 1}, d2{0, 0, 1};
  EXPECT_TRUE(compatible(Subspace(Projector(ComplexMatrix::diagonal(d1))), Subspace(Projector(ComplexMatrix::diagonal(d2)))));
  const Subspace x = Span(2, {E(2, 0)});
  const Subspace d = Span(2, {{kH, kH}});
  EXPECT_FALSE(compatible(x, d));
  // ||[diag(1,0), 1/2 [[1,1],[1,1]]]||_F = sqrt(2)/2.
  EXPECT_NEAR(frobenius_norm(commutator(x.matrix(), d.matrix())), std::sqrt(2.0) / 2.0, 1e-12);
  Rng rng(4);
  const Subspace a = testing::random_subspace(rng, 4, 2);
  EXPECT_TRUE(compatible(a, orthocomplement(a)));
}

TEST(Orthomodular, Examples) {
  Rng rng(6);
  const Subspace b = testing::random_subspace(rng, 4, 3);
  EXPECT_TRUE(check_orthomodular(Subspace::bottom(4), b));
  EXPECT_TRUE(check_orthomodular(b, b));
  try {
    check_orthomodular(Span(2, {E(2, 0)}), Span(2, {E(2, 1)}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolation);
  }
}

TEST(Orthomodular, HoldsOnNestedPairs) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [a, b] = testing::random_nested_pair(rng, 4);
    ASSERT_TRUE(leq(a, b));
    EXPECT_TRUE(check_orthomodular(a, b));
  }
}

TEST(Lattice, MeetAgreesWithAlternatingProjections) {
  // Independent route: von Neumann's alternating projection limit.
  Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + trial % 5;
    const auto [small, big] = testing::random_nested_pair(rng, dim);
    const Subspace other = join(small, testing::random_subspace(rng, dim, 1));
    const Subspace m = meet(big, other);
    const ComplexMatrix oracle = testing::alternating_projection_meet(big.matrix(), other.matrix());
    EXPECT_LE(frobenius_norm(m.matrix() - oracle), 1e-7) << "dim " << dim;
  }
}

TEST(Lattice, JoinAgreesWithSpanOfColumns) {
  // Independent route: Gram-Schmidt over the columns of both projectors.
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + trial % 5;
    const Subspace a = testing::random_subspace(rng, dim);
    const Subspace b = testing::random_subspace(rng, dim);
    std::vector<ComplexVector> cols;
    for (const auto* s : {&a, &b})
      for (std::size_t c = 0; c < dim; ++c) {
        ComplexVector v(dim);
        for (std::size_t r = 0; r < dim; ++r) v[r] = s->matrix()(r, c);
        cols.push_back(std::move(v));
      }
    EXPECT_LE(distance(join(a, b), Subspace::span(dim, cols)), 1e-8);
  }
}

TEST(Lattice, AbsorptionLaws) {
  Rng rng(14);
  Tolerance tol;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 2 + trial % 5;
    const Subspace a = testing::random_subspace(rng, dim);
    const Subspace b = testing::random_subspace(rng, dim);
    EXPECT_LE(distance(join(a, meet(a, b)), a), tol.proj);
    EXPECT_LE(distance(meet(a, join(a, b)), a), tol.proj);
  }
}

TEST(Lattice, DeMorgan) {
  Rng rng(16);
  Tolerance tol;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 2 + trial % 5;
    const Subspace a = testing::random_subspace(rng, dim);
    const Subspace b = testing::random_subspace(rng, dim);
    EXPECT_LE(distance(orthocomplement(join(a, b)), meet(orthocomplement(a), orthocomplement(b))), tol.proj);
  }
}

TEST(Lattice, CommutativeAndAssociative) {
  Rng rng(18);
  Tolerance tol;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + trial % 5;
    const Subspace a = testing::random_subspace(rng, dim);
    const Subspace b = testing::random_subspace(rng, dim);
    const Subspace c = testing::random_subspace(rng, dim);
    EXPECT_LE(distance(meet(a, b), meet(b, a)), tol.proj);
    EXPECT_LE(distance(join(a, b), join(b, a)), tol.proj);
    EXPECT_LE(distance(meet(a, meet(b, c)), meet(meet(a, b), c)), tol.proj);
    EXPECT_LE(distance(join(a, join(b, c)), join(join(a, b), c)), tol.proj);
  }
}

TEST(Lattice, DistributivityFailsForThreeRays) {
  const Subspace a = Span(2, {E(2, 0)});
  const Subspace b = Span(2, {E(2, 1)});
  const Subspace c = Span(2, {{kH, kH}});
  // a ^ (b v c) = a ^ 1 = a, while (a ^ b) v (a ^ c) = 0.
  const double defect = distributivity_defect(a, b, c);
  EXPECT_NEAR(defect, 1.0, 1e-12);
  EXPECT_GT(defect, 10 * Tolerance{}.proj);
}

TEST(Lattice, RankAmbiguityIsReported) {
  // Two rays 1e-3 rad apart: (I - A) + (I - B) has eigenvalue 1 - cos(1e-3) = 5e-7,
  // inside the ambiguity band (1e-8, 1e-4).
  const double t = 1e-3;
  const Subspace a = Span(2, {E(2, 0)});
  const Subspace b = Span(2, {{std::cos(t), std::sin(t)}});
  try {
    meet(a, b);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankAmbiguous);
  }
}

}  // namespace
}  // namespace qlogic
