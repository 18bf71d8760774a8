#include "zinbiel/bialgebra.hpp"

#include "zinbiel/catalog.hpp"
#include "zinbiel/coalgebra.hpp"
#include "zinbiel/identity.hpp"

namespace zinbiel {

BilinearFormTable::BilinearFormTable(Matrix g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) throw DimensionError("bilinear form matrix must be square");
}

Scalar BilinearFormTable::operator()(const Vector& x, const Vector& y) const {
  if (x.dim() != dim() || y.dim() != dim()) throw DimensionError("bilinear form: dimension mismatch");
  Scalar out(0);
  const Vector gy = g_.apply(y);
  for (const auto& [i, c] : x.entries()) out += c * gy.at(i);
  return out;
}

FormCheck check_form(const AlgebraTable& a, const BilinearFormTable& form) {
  if (a.dim() != form.dim()) throw DimensionError("form and algebra dimensions differ");
  const std::size_t n = a.dim();
  const Matrix& g = form.gram();
  const Matrix gt = g.transpose();
  FormCheck out;

  std::vector<Witness> sym;
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(n), col(n);
    for (std::size_t j = 0; j < n; ++j) {
      row.set(j, g.at(i, j));
      col.set(j, gt.at(i, j));
    }
    if (row != col) {
      Vector residual = row - col;
      sym.push_back(Witness{{i}, std::move(row), std::move(col), std::move(residual)});
    }
  }

  std::vector<Witness> inv;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Vector lhs(n), rhs(n);
      for (std::size_t z = 0; z < n; ++z) {
        lhs.set(z, form(a.product(x, y), Vector::basis(n, z)));
        rhs.set(z, form(Vector::basis(n, x), a.product(y, z)));
      }
      if (lhs != rhs) {
        Vector residual = lhs - rhs;
        inv.push_back(Witness{{x, y}, std::move(lhs), std::move(rhs), std::move(residual)});
      }
    }
  }

  out.rank = rank(g);
  out.verdicts.push_back(make_verdict("form_symmetric", "B(x,y) = B(y,x)", std::move(sym)));
  out.verdicts.push_back(make_verdict("form_invariant", "B(x.y,z) = B(x,y.z)", std::move(inv)));
  Verdict nondeg;
  nondeg.name = "form_nondegenerate";
  nondeg.statement = "rank of the Gram matrix equals the dimension (rank " +
                     std::to_string(out.rank) + " of " + std::to_string(n) + ")";
  nondeg.holds = out.rank == n;
  nondeg.violations = n - out.rank;
  out.verdicts.push_back(std::move(nondeg));
  out.symmetric = out.verdicts[0].holds;
  out.invariant = out.verdicts[1].holds;
  out.nondegenerate = out.verdicts[2].holds;
  return out;
}

BilinearFormTable standard_pairing(std::size_t n) {
  Matrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g.set(i, n + i, Scalar(1));
    g.set(n + i, i, Scalar(1));
  }
  return BilinearFormTable(std::move(g));
}

void BialgebraCandidate::validate() const {
  if (A.dim() != Astar.dim()) throw DimensionError("A and A* must have the same dimension");
}

MatchedPairData dual_reps(const BialgebraCandidate& bc) {
  bc.validate();
  const std::size_t n = bc.A.dim();
  MatchedPairData mp{bc.A, bc.Astar, {}, {}, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    mp.lA.push_back(bc.A.right_multiplication(i).transpose());
    mp.rA.push_back(bc.A.left_multiplication(i).transpose());
    mp.lB.push_back(bc.Astar.right_multiplication(i).transpose());
    mp.rB.push_back(bc.Astar.left_multiplication(i).transpose());
  }
  return mp;
}

AuditReport check_manin_triple(const BialgebraCandidate& bc, unsigned workers) {
  bc.validate();
  const std::size_t n = bc.A.dim();
  const AlgebraTable d = double_algebra(dual_reps(bc));
  const BilinearFormTable form = standard_pairing(n);
  FormCheck fc = check_form(d, form);

  AuditReport report;
  report.subject = "A + A* (dim " + std::to_string(2 * n) + ")";
  report.kind = "manin_triple";
  report.premises.push_back(fc.verdicts[0]);
  report.premises.push_back(fc.verdicts[2]);

  // Products inside a block must stay inside it.
  std::vector<Witness> closure;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    for (std::size_t j = 0; j < 2 * n; ++j) {
      const bool upper = i >= n;
      if ((j >= n) != upper) continue;
      const Vector& prod = d.product(i, j);
      Vector inside(2 * n);
      for (const auto& [k, c] : prod.entries()) {
        if ((k >= n) == upper) inside.set(k, c);
      }
      if (inside != prod) {
        Vector residual = prod - inside;
        closure.push_back(Witness{{i, j}, prod, std::move(inside), std::move(residual)});
      }
    }
  }
  report.claims.push_back(make_verdict("manin_a_subalgebras",
                                       "A and A* are closed under the product of A + A*",
                                       std::move(closure)));

  std::vector<Witness> iso;
  const Matrix& g = form.gram();
  for (std::size_t i = 0; i < 2 * n; ++i) {
    Vector row(2 * n);
    for (std::size_t j = 0; j < 2 * n; ++j) {
      if ((i >= n) == (j >= n)) row.set(j, g.at(i, j));
    }
    if (!row.is_zero()) {
      iso.push_back(Witness{{i}, row, Vector(2 * n), row});
    }
  }
  report.claims.push_back(
      make_verdict("manin_b_isotropic", "B(A, A) = 0 = B(A*, A*)", std::move(iso)));

  Verdict zin = check_identity(d, catalog_identity("right_zinbiel"), "manin_c_right_zinbiel",
                               workers);
  zin.statement = "A + A* satisfies " + zin.statement;
  report.claims.push_back(std::move(zin));
  Verdict inv = fc.verdicts[1];
  inv.name = "manin_d_invariant";
  report.claims.push_back(std::move(inv));

  for (const auto& v : report.claims) {
    if (!v.holds) report.findings.push_back(v.name + " fails: counterexample " + first_witness(v));
  }
  return report;
}

namespace {

Verdict summarize(std::string name, std::string description, const std::vector<Verdict>& parts) {
  Verdict v;
  v.name = std::move(name);
  v.holds = true;
  std::string failing;
  for (const auto& p : parts) {
    if (p.holds) continue;
    v.violations += p.violations;
    if (v.holds) {
      v.witnesses = p.witnesses;
      v.slots = p.slots;
    }
    v.holds = false;
    failing += (failing.empty() ? "" : ", ") + p.name;
  }
  v.statement = std::move(description);
  if (!failing.empty()) v.statement += "; failing: " + failing;
  return v;
}

std::vector<Verdict> all_verdicts(const AuditReport& r) {
  std::vector<Verdict> out = r.premises;
  out.insert(out.end(), r.claims.begin(), r.claims.end());
  return out;
}

std::vector<Matrix> minus_ad_transpose(const AlgebraTable& a) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    out.push_back(Scalar(-1) * (a.left_multiplication(i) - a.right_multiplication(i)).transpose());
  }
  return out;
}

}  // namespace

AuditReport equivalence_audit(const BialgebraCandidate& bc, unsigned workers) {
  bc.validate();
  AuditReport report;
  report.subject = "(A, A*) (dim " + std::to_string(bc.A.dim()) + ")";
  report.kind = "bialgebra_equivalence";

  report.claims.push_back(summarize("condition_1_manin_triple",
                                    "A + A* with the standard pairing is a Manin triple",
                                    all_verdicts(check_manin_triple(bc, workers))));

  const AuditReport lie = check_lie_matched_pair(
      ActionPair{commutator(bc.A), commutator(bc.Astar), minus_ad_transpose(bc.A),
                 minus_ad_transpose(bc.Astar)},
      "sub-adjacent Lie algebras with -ad^T");
  report.claims.push_back(summarize("condition_2_lie_matched_pair",
                                    "sub-adjacent Lie algebras with -ad^T form a matched pair",
                                    all_verdicts(lie)));

  report.claims.push_back(summarize("condition_3_zinbiel_matched_pair",
                                    "A, A* with the transposed multiplications form a matched pair",
                                    matched_pair_verdicts(dual_reps(bc))));

  const CoalgebraTable delta = dualize(bc.Astar);
  std::vector<Verdict> cond4{check_co_right(delta, workers)};
  for (auto& v : matched_pair_verdicts(dual_reps(BialgebraCandidate{bc.A, dualize_co(delta)}))) {
    cond4.push_back(std::move(v));
  }
  report.claims.push_back(summarize("condition_4_bialgebra",
                                    "coproduct dual to A* is a right coalgebra compatible with A",
                                    cond4));

  const auto b = equivalence_booleans(report);
  if (!(b[0] == b[1] && b[1] == b[2] && b[2] == b[3])) {
    std::string line = "conditions disagree:";
    for (std::size_t i = 0; i < 4; ++i) {
      line += " (" + std::to_string(i + 1) + ")=" + (b[i] ? "true" : "false");
    }
    report.findings.push_back(line);
    for (const auto& c : report.claims) {
      if (!c.holds) report.findings.push_back(c.name + " fails at " + first_witness(c));
    }
  }
  return report;
}

std::array<bool, 4> equivalence_booleans(const AuditReport& report) {
  std::array<bool, 4> out{};
  const char* names[] = {"condition_1_manin_triple", "condition_2_lie_matched_pair",
                         "condition_3_zinbiel_matched_pair", "condition_4_bialgebra"};
  for (std::size_t i = 0; i < 4; ++i) {
    const Verdict* v = report.find_claim(names[i]);
    if (!v) throw InputError(std::string("report lacks ") + names[i]);
    out[i] = v->holds;
  }
  return out;
}

}  // namespace zinbiel
