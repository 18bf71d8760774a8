#include <gtest/gtest.h>

#include "oracle/poly.hpp"
#include "zinbiel/audit.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/fuzz.hpp"
#include "zinbiel/models.hpp"

using namespace zinbiel;

namespace {

Vector to_vector(const oracle::Poly& p, std::size_t n) {
  Vector v(n + 1);
  for (const auto& [k, c] : p) v.set(k, Scalar(c));
  return v;
}

const Witness* find_witness(const Verdict& v, const std::vector<std::size_t>& tuple) {
  for (const auto& w : v.witnesses)
    if (w.tuple == tuple) return &w;
  return nullptr;
}

}  // namespace

TEST(ClaimAudit, LieAdmissibleRefutationMatchesPolynomials) {
  using namespace oracle;
  auto br = [](const Poly& a, const Poly& b) { return add(right_product(a, b), right_product(b, a), -1); };
  const Poly x = monomial(0), y = monomial(1), z = monomial(2);
  Poly jac = add(add(br(x, br(y, z)), br(y, br(z, x))), br(z, br(x, y)));
  jac = truncate(jac, 5);
  ASSERT_EQ(jac, (Poly{{5, mpq_class(-1, 30)}}));

  const auto report = audit_claims(trunc_integration(5, Orientation::Right), Orientation::Right);
  const Verdict* v = report.find_claim("lie_admissible");
  ASSERT_NE(v, nullptr);
  EXPECT_FALSE(v->holds);
  EXPECT_EQ(v->witnesses.front().tuple, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(v->witnesses.front().residual, to_vector(jac, 5));
  EXPECT_EQ(format_vector(v->witnesses.front().residual), "-(1/30)e5");
}

TEST(ClaimAudit, CenterSymmetryRefutationMatchesPolynomials) {
  using namespace oracle;
  auto assoc = [](const Poly& a, const Poly& b, const Poly& c) {
    return truncate(add(left_product(left_product(a, b), c), left_product(a, left_product(b, c)), -1), 3);
  };
  const Poly e0 = monomial(0), e1 = monomial(1), e2 = monomial(2);
  const Poly lhs = assoc(e1, e0, e2), rhs = assoc(e2, e0, e1);
  ASSERT_EQ(lhs, (Poly{{3, mpq_class(1, 3)}}));
  ASSERT_EQ(rhs, (Poly{{3, mpq_class(2, 3)}}));

  const auto report = audit_claims(trunc_integration(3, Orientation::Left), Orientation::Left);
  const Verdict* v = report.find_claim("center_symmetric");
  ASSERT_NE(v, nullptr);
  EXPECT_FALSE(v->holds);
  const Witness* w = find_witness(*v, {1, 0, 2});
  ASSERT_NE(w, nullptr) << "witness not retained";
  EXPECT_EQ(w->lhs, to_vector(lhs, 3));
  EXPECT_EQ(w->rhs, to_vector(rhs, 3));
  // lexicographically earlier violations exist, so this is not the first
  EXPECT_NE(v->witnesses.front().tuple, (std::vector<std::size_t>{1, 0, 2}));
}

TEST(ClaimAudit, RightRelationRefutationMatchesPolynomials) {
  using namespace oracle;
  const Poly e0 = monomial(0), e1 = monomial(1);
  const Poly lhs = truncate(right_product(right_product(e0, e0), e1), 5);
  const Poly rhs = truncate(right_product(right_product(e0, e1), e0), 5);
  ASSERT_EQ(lhs, (Poly{{3, mpq_class(1, 2)}}));
  ASSERT_EQ(rhs, (Poly{{3, mpq_class(1, 3)}}));

  const auto report = audit_claims(trunc_integration(5, Orientation::Right), Orientation::Right);
  for (const char* name : {"right_relation", "eq13", "eq14"}) {
    const Verdict* v = report.find_claim(name);
    ASSERT_NE(v, nullptr) << name;
    EXPECT_FALSE(v->holds) << name;
    const Witness& w = v->witnesses.front();
    EXPECT_EQ(w.tuple, (std::vector<std::size_t>{0, 0, 1})) << name;
    EXPECT_EQ(w.lhs, to_vector(lhs, 5)) << name;
    EXPECT_EQ(w.rhs, to_vector(rhs, 5)) << name;
  }
}

TEST(ClaimAudit, ConfirmationsOnRightTables) {
  std::vector<AlgebraTable> tables;
  for (std::size_t n = 0; n <= 8; ++n) tables.push_back(trunc_integration(n, Orientation::Right));
  tables.push_back(free_halfshuffle(2, 3));
  tables.push_back(free_halfshuffle(1, 5));
  for (const auto& a : tables) {
    ASSERT_TRUE(is_right_zinbiel(a));
    const auto report = audit_claims(a, Orientation::Right);
    for (const char* name : {"left_relation", "eq10", "eq11", "eq15", "eq16", "eq17", "eq18",
                             "aguiar_commutative", "aguiar_associative"}) {
      EXPECT_TRUE(report.find_claim(name)->holds) << name << " dim " << a.dim();
    }
  }
}

TEST(ClaimAudit, ConfirmationsOnLeftTables) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto a = opposite(trunc_integration(n, Orientation::Right));
    ASSERT_TRUE(is_left_zinbiel(a));
    const auto report = audit_claims(a, Orientation::Left);
    EXPECT_TRUE(report.premises_hold());
    for (const char* name : {"right_relation", "eq13", "eq14", "eq15_mirrored", "eq16_mirrored",
                             "eq17_mirrored", "eq18_mirrored", "aguiar_commutative",
                             "aguiar_associative", "opposite_orientation"}) {
      EXPECT_TRUE(report.find_claim(name)->holds) << name << " n=" << n;
    }
  }
}

TEST(ClaimAudit, RestrictedClaimsAndUnknownNames) {
  const auto a = trunc_integration(3, Orientation::Right);
  const auto r = audit_claims(a, Orientation::Right, "t", 1, std::vector<std::string>{"eq15"});
  ASSERT_EQ(r.claims.size(), 1u);
  EXPECT_EQ(r.claims[0].name, "eq15");
  EXPECT_THROW(audit_claims(a, Orientation::Right, "t", 1, std::vector<std::string>{"eq99"}),
               InputError);
}

TEST(ClaimAudit, RenderingIsStableAcrossWorkers) {
  const auto a = trunc_integration(5, Orientation::Right);
  const auto one = audit_claims(a, Orientation::Right, "t", 1);
  for (unsigned w : {2u, 8u}) {
    const auto many = audit_claims(a, Orientation::Right, "t", w);
    EXPECT_EQ(one, many);
    EXPECT_EQ(render_text(one), render_text(many));
    EXPECT_EQ(render_json(one), render_json(many));
  }
}

TEST(ClaimAudit, JsonReportIsWellFormed) {
  const auto r = audit_claims(trunc_integration(2, Orientation::Right), Orientation::Right);
  const std::string j = render_json(r);
  EXPECT_EQ(j.front(), '{');
  EXPECT_NE(j.find("\"premises\""), std::string::npos);
  EXPECT_NE(j.find("\"lie_admissible\""), std::string::npos);
}
