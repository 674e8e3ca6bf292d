#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "troppic/intlin.hpp"

namespace troppic {
namespace {

using oracle::vec;

void expect_smith_invariants(const IntMatrix& a, const SmithDecomposition& s) {
  EXPECT_EQ(s.U * a * s.V, s.D);
  const Integer du = determinant(s.U);
  const Integer dv = determinant(s.V);
  EXPECT_TRUE(du == 1 || du == -1);
  EXPECT_TRUE(dv == 1 || dv == -1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) EXPECT_EQ(s.D(i, j), 0);
  const IntVector d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_GE(d[i], 0);
    if (i + 1 < d.size()) {
      if (d[i] == 0)
        EXPECT_EQ(d[i + 1], 0);
      else
        EXPECT_EQ(d[i + 1] % d[i], 0);
    }
  }
}

TEST(SmithNormalForm, Identity) {
  const auto s = smith_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(s.D, IntMatrix::identity(2));
}

TEST(SmithNormalForm, ZeroMatrix) {
  const auto s = smith_normal_form(IntMatrix::zero(2, 3));
  EXPECT_EQ(s.D, IntMatrix::zero(2, 3));
  expect_smith_invariants(IntMatrix::zero(2, 3), s);
}

TEST(SmithNormalForm, EmptyMatrices) {
  for (auto [r, c] : {std::pair{0, 0}, {0, 3}, {3, 0}}) {
    const IntMatrix a(r, c);
    const auto s = smith_normal_form(a);
    expect_smith_invariants(a, s);
    EXPECT_EQ(s.rank(), 0u);
  }
}

TEST(SmithNormalForm, TwoByTwo) {
  const IntMatrix a{{2, 4}, {6, 8}};
  const auto s = smith_normal_form(a);
  EXPECT_EQ(s.D, (IntMatrix{{2, 0}, {0, 4}}));
  // d1 = gcd of entries, d1 * d2 = |det|.
  const IntVector dd = oracle::determinantal_divisors(a);
  EXPECT_EQ(s.diagonal()[0], dd[1]);
  EXPECT_EQ(s.diagonal()[0] * s.diagonal()[1], dd[2]);
  expect_smith_invariants(a, s);
}

TEST(SmithNormalForm, RandomMatricesAgreeWithMinors) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const IntMatrix a = oracle::random_matrix(rng, r, c, -5, 5);
    const auto s = smith_normal_form(a);
    expect_smith_invariants(a, s);
    // d_1 ... d_k = D_k (k-th determinantal divisor).
    const IntVector dd = oracle::determinantal_divisors(a);
    Integer prod = 1;
    const IntVector d = s.diagonal();
    for (std::size_t k = 0; k < d.size(); ++k) {
      prod *= d[k];
      EXPECT_EQ(prod, dd[k + 1]) << a.to_string();
    }
  }
}

TEST(SmithNormalForm, LargeEntriesStayExact) {
  IntMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = Integer("123456789012345678901234567890");
  a(1, 1) = Integer("987654321098765432109876543210");
  a(0, 1) = Integer("55555555555555555555555555555");
  const auto s = smith_normal_form(a);
  expect_smith_invariants(a, s);
  EXPECT_EQ(s.diagonal()[0] * s.diagonal()[1], abs(determinant(a)));
}

TEST(SmithNormalForm, DenseMatricesDoNotBlowUp) {
  std::mt19937 rng(11);
  for (std::size_t n : {8, 16, 24}) {
    const IntMatrix a = oracle::random_matrix(rng, n, n, -5, 5);
    const auto s = smith_normal_form(a);
    expect_smith_invariants(a, s);
    Integer product = 1;
    for (const auto& d : s.diagonal()) product *= d;
    EXPECT_EQ(product, abs(determinant(a)));
  }
}

TEST(KernelBasis, CoordinateProjection) {
  EXPECT_EQ(kernel_basis(IntMatrix{{1, 0}}), IntMatrix::from_columns(2, {vec({0, 1})}));
}

TEST(KernelBasis, DiagonalFunctional) {
  const IntMatrix k = kernel_basis(IntMatrix{{1, 1}});
  ASSERT_EQ(k.cols(), 1u);
  const IntVector v = k.column(0);
  EXPECT_TRUE(v == vec({1, -1}) || v == vec({-1, 1}));
  // Brute force: every kernel vector in the box is a multiple of v.
  for (const auto& w : oracle::kernel_by_enumeration(IntMatrix{{1, 1}}, 3))
    EXPECT_EQ(w[0] * v[1] - w[1] * v[0], 0);
}

TEST(KernelBasis, IdentityHasTrivialKernel) {
  EXPECT_EQ(kernel_basis(IntMatrix::identity(3)).cols(), 0u);
}

TEST(KernelBasis, RandomSaturatedAndComplete) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    const IntMatrix a = oracle::random_matrix(rng, r, c, -5, 5);
    const IntMatrix k = kernel_basis(a);
    EXPECT_TRUE((a * k).is_zero());
    EXPECT_EQ(k.cols() + oracle::rank_by_minors(a), c);
    if (k.cols() == 0) continue;
    // Saturated: all invariant factors of K are 1.
    const IntVector dd = oracle::determinantal_divisors(k);
    EXPECT_EQ(dd[k.cols()], 1) << a.to_string();
  }
}

TEST(KernelBasis, NoPrimeMultipleEscapesTheSpan) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, 1 + rng() % 2, 3, -3, 3);
    const IntMatrix k = kernel_basis(a);
    for (const auto& v : oracle::kernel_by_enumeration(a, 4)) {
      for (long long p : {2, 3, 5, 7}) {
        bool divisible = true;
        IntVector w = v;
        for (auto& x : w) {
          if (x % p != 0) divisible = false;
          x /= p;
        }
        if (!divisible) continue;
        // v = p w with w integral: w must itself be in the span of K.
        EXPECT_TRUE(solve_integer(k, w).has_value());
      }
      EXPECT_TRUE(solve_integer(k, v).has_value());
    }
  }
}

TEST(SolveInteger, Identity) {
  EXPECT_EQ(solve_integer(IntMatrix::identity(2), vec({3, -1})), vec({3, -1}));
}

TEST(SolveInteger, ParityObstruction) {
  EXPECT_FALSE(solve_integer(IntMatrix{{2}}, vec({1})).has_value());
}

TEST(SolveInteger, BezoutCombination) {
  const IntMatrix a{{2, 3}};
  const auto x = solve_integer(a, vec({1}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, vec({1}));
}

TEST(SolveInteger, DimensionMismatch) {
  EXPECT_THROW(solve_integer(IntMatrix::identity(2), vec({1})), InputError);
}

TEST(SolveInteger, RandomSystemsAgreeWithConstruction) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const IntMatrix a = oracle::random_matrix(rng, r, c, -4, 4);
    const IntMatrix x0 = oracle::random_matrix(rng, c, 1, -3, 3);
    const IntVector b = (a * x0).column(0);
    const auto x = solve_integer(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a * *x, b);
  }
}

TEST(Homology, ZeroMapsAroundZ) {
  EXPECT_EQ(homology(IntMatrix(1, 0), IntMatrix(0, 1)), FinGenAbGroup(1));
}

TEST(Homology, DiagonalIsExact) {
  const IntMatrix d0{{1}, {1}};
  const IntMatrix d1{{1, -1}};
  EXPECT_TRUE(homology(d0, d1).is_trivial());
  EXPECT_TRUE(oracle::homology_by_enumeration(d0, d1, 3).is_trivial());
}

TEST(Homology, TorsionZ2) {
  const IntMatrix d0{{2}, {0}};
  const IntMatrix d1{{0, 1}};
  EXPECT_EQ(homology(d0, d1), FinGenAbGroup(0, {Integer(2)}));
  EXPECT_EQ(homology(d0, d1).to_string(), "Z/2");
}

TEST(Homology, NotAComplex) {
  EXPECT_THROW(homology(IntMatrix{{1}, {0}}, IntMatrix{{1, 0}}), NotAComplex);
}

TEST(Homology, DimensionMismatch) {
  EXPECT_THROW(homology(IntMatrix{{1}, {0}}, IntMatrix{{1, 0, 0}}), InputError);
}

TEST(Homology, AgreesWithEnumerationOracle) {
  std::mt19937 rng(15);
  int tested = 0;
  while (tested < 60) {
    const std::size_t c0 = rng() % 4, c1 = 1 + rng() % 3, c2 = rng() % 4;
    const IntMatrix d1 = oracle::random_matrix(rng, c2, c1, -3, 3);
    // d0 built from kernel vectors found by enumeration, so d1 d0 = 0.
    const auto ker = oracle::kernel_by_enumeration(d1, 2);
    std::vector<IntVector> cols;
    std::uniform_int_distribution<std::size_t> pick(0, ker.size() - 1);
    for (std::size_t j = 0; j < c0; ++j) cols.push_back(ker[pick(rng)]);
    const IntMatrix d0 = c0 ? IntMatrix::from_columns(c1, cols) : IntMatrix(c1, 0);
    EXPECT_EQ(homology(d0, d1), oracle::homology_by_enumeration(d0, d1, 3))
        << "d0 =\n" << d0.to_string() << "d1 =\n" << d1.to_string();
    ++tested;
  }
}

TEST(Homology, InvariantUnderChangeOfBasis) {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t c0 = 1 + rng() % 3, c1 = 1 + rng() % 4, c2 = 1 + rng() % 3;
    const IntMatrix a = oracle::random_matrix(rng, c1, c0, -2, 2);
    // d1 kills the column span of a.
    const IntMatrix left = kernel_basis(a.transpose()).transpose();
    IntMatrix d1(c2, c1);
    const IntMatrix mix = oracle::random_matrix(rng, c2, left.rows(), -2, 2);
    if (left.rows() > 0) d1 = mix * left;
    const FinGenAbGroup h = homology(a, d1);
    const IntMatrix p = oracle::random_unimodular(rng, c0);
    const IntMatrix q = oracle::random_unimodular(rng, c1);
    const IntMatrix r = oracle::random_unimodular(rng, c2);
    // q^{-1} via Smith: q is unimodular so solve columnwise.
    std::vector<IntVector> inv_cols;
    for (std::size_t j = 0; j < c1; ++j) {
      IntVector e(c1);
      e[j] = 1;
      inv_cols.push_back(*solve_integer(q, e));
    }
    const IntMatrix q_inv = IntMatrix::from_columns(c1, inv_cols);
    EXPECT_EQ(homology(q * a * p, r * d1 * q_inv), h);
  }
}

TEST(HomologyPresentation, CoordinatesOfGenerators) {
  const IntMatrix d0{{2}, {0}, {0}};
  const IntMatrix d1{{0, 0, 1}};
  const auto hp = homology_presentation(d0, d1);
  EXPECT_EQ(hp.group, FinGenAbGroup(1, {Integer(2)}));
  for (std::size_t j = 0; j < 2; ++j) {
    IntVector unit(2);
    unit[j] = 1;
    EXPECT_EQ(hp.coordinates(hp.generator_cycle(j)), unit);
  }
  EXPECT_TRUE(hp.is_boundary(vec({4, 0, 0})));
  EXPECT_FALSE(hp.is_boundary(vec({1, 0, 0})));
  EXPECT_THROW(hp.coordinates(vec({0, 0, 1})), DomainError);
}

TEST(Cokernel, DiagonalSemantics) {
  IntMatrix a(3, 3);
  a(0, 0) = 1;
  a(1, 1) = 2;
  EXPECT_EQ(cokernel(a), FinGenAbGroup(1, {Integer(2)}));
  EXPECT_EQ(cokernel(a).to_string(), "Z ⊕ Z/2");
}

TEST(Cokernel, IdentityAndZero) {
  EXPECT_TRUE(cokernel(IntMatrix::identity(4)).is_trivial());
  EXPECT_EQ(cokernel(IntMatrix::zero(3, 2)), FinGenAbGroup(3));
}

TEST(Cokernel, RandomAgreesWithMinors) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, -5, 5);
    EXPECT_EQ(cokernel(a), oracle::cokernel_by_minors(a));
  }
}

TEST(FinGenAbGroup, CanonicalForm) {
  EXPECT_EQ(FinGenAbGroup(0, {Integer(1), Integer(2), Integer(0)}), FinGenAbGroup(1, {Integer(2)}));
  EXPECT_EQ(FinGenAbGroup().to_string(), "0");
  EXPECT_EQ(FinGenAbGroup(1).to_string(), "Z");
  EXPECT_EQ(FinGenAbGroup(2).to_string(), "Z^2");
  EXPECT_EQ(FinGenAbGroup(0, {Integer(2), Integer(4)}).to_string(), "Z/2 ⊕ Z/4");
  EXPECT_NE(FinGenAbGroup(1), FinGenAbGroup(1, {Integer(2)}));
}

TEST(Determinant, MatchesLaplace) {
  std::mt19937 rng(18);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng() % 5;
    const IntMatrix a = oracle::random_matrix(rng, n, n, -5, 5);
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(a.row(i));
    EXPECT_EQ(determinant(a), oracle::laplace_det(rows));
  }
}

TEST(HermiteRows, CanonicalForSameLattice) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, 3, 4, -3, 3);
    const IntMatrix u = oracle::random_unimodular(rng, 3);
    EXPECT_EQ(hermite_rows(u * a), hermite_rows(a));
  }
}

}  // namespace
}  // namespace troppic
