#include <gtest/gtest.h>

#include <functional>

#include "support/gen.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/coalgebra.hpp"
#include "zinbiel/fuzz.hpp"
#include "zinbiel/identity.hpp"
#include "zinbiel/models.hpp"

using namespace zinbiel;

// Seeded generator properties. Each loop is a fixed set of random cases, so
// a failure reproduces from the seed and trial number in the message.

namespace {

constexpr int kTrials = 120;

std::size_t differing_entries(const Tensor3& a, const Tensor3& b) {
  std::size_t n = 0;
  for (const auto& [k, v] : a.entries())
    if (b.at(k) != v) ++n;
  for (const auto& [k, v] : b.entries())
    if (a.at(k).is_zero()) ++n;
  return n;
}

}  // namespace

TEST(Property, OppositeIsAnInvolutionSwappingOrientation) {
  gen::Gen g(101);
  for (int t = 0; t < kTrials; ++t) {
    const auto a = g.algebra();
    EXPECT_EQ(opposite(opposite(a)), a) << t;
    EXPECT_EQ(is_left_zinbiel(a), is_right_zinbiel(opposite(a))) << t;
    EXPECT_EQ(is_right_zinbiel(a), is_left_zinbiel(opposite(a))) << t;
  }
}

TEST(Property, SymmetrizeAndCommutatorShapes) {
  gen::Gen g(102);
  for (int t = 0; t < kTrials; ++t) {
    const auto a = g.algebra();
    EXPECT_TRUE(is_commutative(symmetrize(a))) << t;
    const auto c = commutator(a);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) EXPECT_EQ(c.product(i, j), -c.product(j, i));
    EXPECT_EQ(symmetrize(opposite(a)), symmetrize(a));
  }
}

TEST(Property, MultiplyIsBilinear) {
  gen::Gen g(103);
  for (int t = 0; t < kTrials; ++t) {
    const auto a = g.algebra();
    const auto x = g.vector(a.dim()), y = g.vector(a.dim()), z = g.vector(a.dim());
    const Scalar s = g.scalar(0.0);
    EXPECT_EQ(multiply(a, x + s * y, z), multiply(a, x, z) + s * multiply(a, y, z));
    EXPECT_EQ(multiply(a, z, x + s * y), multiply(a, z, x) + s * multiply(a, z, y));
  }
}

TEST(Property, DirectSumPreservesLawsBlockwise) {
  gen::Gen g(104);
  for (int t = 0; t < kTrials; ++t) {
    const auto a = g.coin() ? trunc_integration(g.below(4), Orientation::Right) : g.algebra(3);
    const auto b = g.coin() ? trunc_integration(g.below(4), Orientation::Right) : g.algebra(3);
    EXPECT_EQ(is_right_zinbiel(direct_sum(a, b)), is_right_zinbiel(a) && is_right_zinbiel(b)) << t;
  }
}

TEST(Property, IdentityTextRoundTrips) {
  gen::Gen g(105);
  for (int t = 0; t < kTrials; ++t) {
    const auto id = g.identity(g.below(4) + 1);
    const std::string text = to_string(id);
    EXPECT_EQ(parse_identity(text), id) << text;
    EXPECT_EQ(to_string(parse_identity(text)), text);
  }
}

TEST(Property, IdentityOnOppositeIsMirroredIdentity) {
  // evaluating an identity on opposite(A) equals evaluating its mirror image on A
  gen::Gen g(106);
  std::function<ProductTree(const ProductTree&)> mirror = [&](const ProductTree& t) {
    return t.is_leaf() ? t : ProductTree::node(mirror(t.right()), mirror(t.left()));
  };
  for (int t = 0; t < kTrials; ++t) {
    const auto id = g.identity(3);
    std::vector<IdentityTerm> terms;
    for (const auto& term : id.terms()) terms.push_back({term.coefficient, mirror(term.tree), term.side});
    const Identity mirrored(id.variables(), terms);
    const auto a = g.algebra(3);
    const auto lhs = evaluate(opposite(a), id);
    const auto rhs = evaluate(a, mirrored);
    ASSERT_EQ(lhs.size(), rhs.size()) << t;
    for (std::size_t i = 0; i < lhs.size(); ++i) EXPECT_EQ(lhs[i].value, rhs[i].value);
  }
}

TEST(Property, EvaluationIsLinearInStructureConstantsScaling) {
  // a degree-2 law scales by s^2 when the product is scaled by s
  gen::Gen g(107);
  for (int t = 0; t < kTrials; ++t) {
    const auto a = g.algebra(3);
    const Scalar s = g.scalar(0.0);
    Tensor3 scaled(a.dim(), a.dim(), a.dim());
    for (const auto& [k, v] : a.constants().entries()) scaled.set(k, s * v);
    const AlgebraTable b(a.dim(), scaled);
    const auto ra = evaluate(a, catalog_identity("right_zinbiel"));
    const auto rb = evaluate(b, catalog_identity("right_zinbiel"));
    ASSERT_EQ(ra.size(), rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) EXPECT_EQ(rb[i].value, (s * s) * ra[i].value);
  }
}

TEST(Property, PerturberChangesExactlyOneEntry) {
  Perturber p(108);
  gen::Gen g(108);
  for (int t = 0; t < kTrials; ++t) {
    const auto a = g.algebra();
    const auto b = p(a);
    EXPECT_EQ(differing_entries(a.constants(), b.constants()), 1u) << t;
    const auto c = g.coalgebra();
    EXPECT_EQ(differing_entries(c.coproduct(), p(c).coproduct()), 1u) << t;
  }
  EXPECT_EQ(p(AlgebraTable::zero(0)), AlgebraTable::zero(0));
}

TEST(Property, FuzzFamiliesAreReproducible) {
  EXPECT_EQ(algebra_fuzz(1, 50), algebra_fuzz(1, 50));
  EXPECT_NE(algebra_fuzz(1, 50), algebra_fuzz(2, 50));
  EXPECT_EQ(bimodule_fuzz(3, 20), bimodule_fuzz(3, 20));
  EXPECT_EQ(matched_pair_fuzz(3, 20), matched_pair_fuzz(3, 20));
  EXPECT_EQ(candidate_fuzz(3), candidate_fuzz(3));
  EXPECT_EQ(candidate_fuzz(3).size(), 20u);
}

TEST(Property, DualizeCommutesWithOpposite) {
  gen::Gen g(109);
  for (int t = 0; t < kTrials; ++t) {
    const auto a = g.algebra();
    EXPECT_EQ(dualize(opposite(a)), opposite_coproduct(dualize(a))) << t;
  }
}

TEST(Property, WitnessesAreBoundedAndCounted) {
  gen::Gen g(110);
  for (int t = 0; t < kTrials; ++t) {
    const auto a = g.algebra(4);
    const auto all = evaluate(a, catalog_identity("right_zinbiel"));
    const auto v = check_identity(a, catalog_identity("right_zinbiel"), "r");
    EXPECT_EQ(v.violations, all.size());
    EXPECT_EQ(v.holds, all.empty());
    EXPECT_EQ(v.witnesses.size(), std::min(all.size(), kMaxWitnesses));
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
      EXPECT_EQ(v.witnesses[i].tuple, all[i].assignment);
    }
  }
}
