#include <gtest/gtest.h>

#include <set>

#include "support/gen.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/identity.hpp"
#include "zinbiel/models.hpp"
#include "zinbiel/tensor_map.hpp"

using namespace zinbiel;

TEST(IdentityParser, DeclarationOrderAndCanonicalText) {
  const Identity id = parse_identity("(x (y z)) = ((x y) z) + ((y x) z)");
  EXPECT_EQ(id.variables(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(id.terms().size(), 3u);
  EXPECT_EQ(to_string(id), "forall x y z: (x (y z)) = ((x y) z) + ((y x) z)");
  EXPECT_EQ(parse_identity(to_string(id)), id);
}

TEST(IdentityParser, CoefficientsSignsAndZeroSides) {
  const Identity id = parse_identity("forall a b: -1/2*(a b) + 3*(b a)");
  EXPECT_EQ(id.terms()[0].coefficient, Scalar(-1, 2));
  EXPECT_EQ(id.terms()[1].coefficient, Scalar(3));
  EXPECT_EQ(parse_identity(to_string(id)), id);
  const Identity z = parse_identity("0 = (x y) - (y x)");
  EXPECT_EQ(parse_identity(to_string(z)), z);
}

TEST(IdentityParser, ErrorsCarryPositions) {
  struct Case {
    const char* src;
    std::size_t pos;
  };
  for (const Case c : {Case{"(x y", 4}, Case{"(x y) = (x x)", 8}, Case{"(x y) ? z", 6},
                       Case{"forall x x: (x x)", 9}}) {
    try {
      parse_identity(c.src);
      ADD_FAILURE() << "accepted " << c.src;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), c.pos) << c.src << ": " << e.what();
    }
  }
  EXPECT_THROW(parse_identity("forall x y: (x x)"), InputError);
  EXPECT_THROW(parse_identity(""), InputError);
}

TEST(IdentityEvaluation, MatchesHardCodedLawsOnRandomTables) {
  gen::Gen g(11);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = g.algebra(4);
    const auto right = evaluate(a, catalog_identity("right_zinbiel"));
    const auto left = evaluate(a, catalog_identity("left_zinbiel"));
    const auto hr = find_right_zinbiel_violation(a);
    const auto hl = find_left_zinbiel_violation(a);
    ASSERT_EQ(right.empty(), !hr.has_value());
    ASSERT_EQ(left.empty(), !hl.has_value());
    if (hr) {
      EXPECT_EQ(right.front().assignment, (std::vector<std::size_t>{hr->x, hr->y, hr->z}));
      EXPECT_EQ(right.front().value, hr->residual);
    }
    EXPECT_EQ(evaluate(a, catalog_identity("commutative")).empty(), is_commutative(a));
    EXPECT_EQ(evaluate(a, catalog_identity("associative")).empty(), is_associative(a));
  }
}

TEST(IdentityEvaluation, ResidualsAreLhsMinusRhsInLexOrder) {
  gen::Gen g(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = g.algebra(3);
    const auto r = evaluate(a, catalog_identity("right_zinbiel"));
    for (std::size_t i = 0; i < r.size(); ++i) {
      EXPECT_EQ(r[i].value, r[i].lhs - r[i].rhs);
      EXPECT_FALSE(r[i].value.is_zero());
      if (i > 0) {
        EXPECT_LT(r[i - 1].assignment, r[i].assignment);
      }
    }
  }
}

TEST(IdentityEvaluation, LinearExtensionAgreesWithBasis) {
  gen::Gen g(13);
  const Identity& law = catalog_identity("right_zinbiel");
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = g.algebra(3);
    std::vector<Vector> xs{g.vector(a.dim()), g.vector(a.dim()), g.vector(a.dim())};
    Vector expected(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t k = 0; k < a.dim(); ++k) {
          const Scalar w = xs[0].at(i) * xs[1].at(j) * xs[2].at(k);
          if (w.is_zero()) continue;
          const std::vector<Vector> basis{Vector::basis(a.dim(), i), Vector::basis(a.dim(), j),
                                          Vector::basis(a.dim(), k)};
          expected += w * evaluate_at(a, law, basis);
        }
    EXPECT_EQ(evaluate_at(a, law, xs), expected);
  }
}

TEST(IdentityEvaluation, ExpandBracketEqualsCommutatorTable) {
  gen::Gen g(14);
  const Identity& jac = catalog_identity("jacobi");
  const Identity expanded = expand_bracket(jac);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = g.algebra(3);
    const auto direct = evaluate(commutator(a), jac);
    const auto via = evaluate(a, expanded);
    ASSERT_EQ(direct.size(), via.size());
    for (std::size_t i = 0; i < direct.size(); ++i) EXPECT_EQ(direct[i].value, via[i].value);
  }
}

TEST(IdentityEvaluation, WorkerCountDoesNotChangeOutput) {
  const auto a = trunc_integration(5, Orientation::Right);
  const auto base = check_identity(a, catalog_identity("lie_admissible"), "j", 1);
  for (unsigned w : {2u, 3u, 8u, 64u}) {
    EXPECT_EQ(check_identity(a, catalog_identity("lie_admissible"), "j", w), base) << w;
  }
}

TEST(MapEquations, ArityAndComposition) {
  const MapEquation eq = parse_map_equation("mu . (id x mu) = mu . (mu x id) . (id x tau)");
  EXPECT_EQ(eq.inputs(), 3u);
  EXPECT_EQ(eq.outputs(), 1u);
  EXPECT_THROW(parse_map_equation("mu . mu"), ParseError);
  EXPECT_THROW(parse_map_equation("mu = id"), ParseError);
  EXPECT_THROW(parse_map_equation("mu . (id x nu)"), ParseError);
  const MapEquation co = parse_map_equation("(id x delta) . delta = (delta x id) . delta");
  EXPECT_EQ(co.inputs(), 1u);
  EXPECT_EQ(co.outputs(), 3u);
  EXPECT_THROW(expand_to_identity(co), InputError);
}

TEST(MapEquations, TensorFormsExpandToElementForms) {
  // eq10 and eq11 both say x*(y*z) = y*(x*z); eq13 and eq14 say (x*y)*z = (x*z)*y
  gen::Gen g(15);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = g.algebra(3);
    const bool left_rel = evaluate(a, catalog_identity("left_relation")).empty();
    const bool right_rel = evaluate(a, catalog_identity("right_relation")).empty();
    EXPECT_EQ(evaluate(a, catalog_identity("eq10")).empty(), left_rel);
    EXPECT_EQ(evaluate(a, catalog_identity("eq11")).empty(), left_rel);
    EXPECT_EQ(evaluate(a, catalog_identity("eq13")).empty(), right_rel);
    EXPECT_EQ(evaluate(a, catalog_identity("eq14")).empty(), right_rel);
  }
  const Identity e = expand_to_identity(parse_map_equation("mut . (mu x id)"));
  EXPECT_EQ(to_string(e), "forall x y z: (z (x y)) = 0");
}

TEST(Catalog, EntriesParseBackAndAreUnique) {
  std::set<std::string> names;
  for (const auto& entry : catalog_entries()) {
    EXPECT_TRUE(names.insert(entry.name).second) << entry.name;
    EXPECT_FALSE(entry.description.empty());
    EXPECT_EQ(catalog_identity(entry.name), entry.identity);
  }
  for (const char* n : {"left_zinbiel", "right_zinbiel", "eq10", "eq18", "lie_admissible",
                        "center_symmetric", "jacobi", "commutative", "associative"}) {
    EXPECT_TRUE(names.contains(n)) << n;
  }
  EXPECT_THROW(catalog_identity("nope"), InputError);
}
