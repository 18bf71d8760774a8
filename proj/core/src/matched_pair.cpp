#include "zinbiel/matched_pair.hpp"

#include <algorithm>

#include "zinbiel/catalog.hpp"
#include "zinbiel/identity.hpp"

namespace zinbiel {

namespace {

void check_maps(const std::vector<Matrix>& maps, std::size_t count, std::size_t m,
                const std::string& name) {
  if (maps.size() != count) {
    throw DimensionError(name + ": expected " + std::to_string(count) + " matrices, got " +
                         std::to_string(maps.size()));
  }
  for (const auto& mat : maps) {
    if (mat.rows() != m || mat.cols() != m) {
      throw DimensionError(name + ": matrices must be " + std::to_string(m) + "x" +
                           std::to_string(m));
    }
  }
}

Matrix ext(const std::vector<Matrix>& maps, const Vector& v, std::size_t dim) {
  return linear_extension(maps, v, dim, dim);
}

void compare(std::vector<Witness>& out, std::vector<std::size_t> tuple, Vector lhs, Vector rhs) {
  if (lhs == rhs) return;
  Vector residual = lhs - rhs;
  out.push_back(Witness{std::move(tuple), std::move(lhs), std::move(rhs), std::move(residual)});
}

std::vector<Witness> identity_witnesses(const AlgebraTable& a, const std::string& law) {
  std::vector<Witness> out;
  for (auto& r : evaluate(a, catalog_identity(law))) {
    out.push_back(Witness{std::move(r.assignment), std::move(r.lhs), std::move(r.rhs),
                          std::move(r.value)});
  }
  return out;
}

Verdict law_verdict(const AlgebraTable& a, const std::string& law, const std::string& name,
                    const std::string& slot) {
  return make_verdict(name, to_string(catalog_identity(law)), identity_witnesses(a, law),
                      std::string(3, slot[0]));
}

Verdict relabel(Verdict v, const std::string& prefix, const std::string& slots) {
  v.name = prefix + v.name;
  v.slots = slots;
  return v;
}

}  // namespace

void MatchedPairData::validate() const {
  const std::size_t n = A.dim();
  const std::size_t p = B.dim();
  check_maps(lA, n, p, "lA");
  check_maps(rA, n, p, "rA");
  check_maps(lB, p, n, "lB");
  check_maps(rB, p, n, "rB");
}

MatchedPairData trivial_matched_pair(const AlgebraTable& a, const AlgebraTable& b) {
  const std::vector<Matrix> on_b(a.dim(), Matrix(b.dim(), b.dim()));
  const std::vector<Matrix> on_a(b.dim(), Matrix(a.dim(), a.dim()));
  return MatchedPairData{a, b, on_b, on_b, on_a, on_a};
}

Bimodule bimodule_on_B(const MatchedPairData& mp) {
  return Bimodule(mp.A, mp.B.dim(), mp.lA, mp.rA);
}

Bimodule bimodule_on_A(const MatchedPairData& mp) {
  return Bimodule(mp.B, mp.A.dim(), mp.lB, mp.rB);
}

MatchedPairData split_algebra(const AlgebraTable& d, const std::vector<std::size_t>& a_indices) {
  const std::size_t total = d.dim();
  std::vector<int> side(total, -1);
  std::vector<std::size_t> local(total, 0);
  std::vector<std::size_t> b_indices;
  for (std::size_t i = 0; i < a_indices.size(); ++i) {
    const std::size_t g = a_indices[i];
    if (g >= total || side[g] != -1) throw InputError("split: invalid or repeated index");
    side[g] = 0;
    local[g] = i;
  }
  for (std::size_t g = 0; g < total; ++g) {
    if (side[g] == -1) {
      side[g] = 1;
      local[g] = b_indices.size();
      b_indices.push_back(g);
    }
  }
  const std::size_t n = a_indices.size();
  const std::size_t p = b_indices.size();

  auto block_table = [&](const std::vector<std::size_t>& idx, int which) {
    Tensor3 t(idx.size(), idx.size(), idx.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      labels.push_back(d.basis_labels()[idx[i]]);
      for (std::size_t j = 0; j < idx.size(); ++j) {
        for (const auto& [k, c] : d.product(idx[i], idx[j]).entries()) {
          if (side[k] != which) {
            throw InputError("split: basis subset is not closed under the product");
          }
          t.set({i, j, local[k]}, c);
        }
      }
    }
    return AlgebraTable(idx.size(), std::move(t), std::move(labels));
  };

  MatchedPairData mp{block_table(a_indices, 0), block_table(b_indices, 1),
                     std::vector<Matrix>(n, Matrix(p, p)), std::vector<Matrix>(n, Matrix(p, p)),
                     std::vector<Matrix>(p, Matrix(n, n)), std::vector<Matrix>(p, Matrix(n, n))};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t b = 0; b < p; ++b) {
      // x * b = rB(b)x + lA(x)b ; b * x = lB(b)x + rA(x)b
      for (const auto& [k, c] : d.product(a_indices[x], b_indices[b]).entries()) {
        if (side[k] == 0) {
          mp.rB[b].set(local[k], x, c);
        } else {
          mp.lA[x].set(local[k], b, c);
        }
      }
      for (const auto& [k, c] : d.product(b_indices[b], a_indices[x]).entries()) {
        if (side[k] == 0) {
          mp.lB[b].set(local[k], x, c);
        } else {
          mp.rA[x].set(local[k], b, c);
        }
      }
    }
  }
  return mp;
}

MatchedPairData from_bimodule(const Bimodule& b) {
  const std::size_t n = b.base().dim();
  const std::size_t m = b.v_dim();
  std::vector<std::string> labels;
  for (std::size_t q = 0; q < m; ++q) labels.push_back("v" + std::to_string(q));
  return MatchedPairData{b.base(),
                         AlgebraTable(m, Tensor3(m, m, m), std::move(labels)),
                         b.l(),
                         b.r(),
                         std::vector<Matrix>(m, Matrix(n, n)),
                         std::vector<Matrix>(m, Matrix(n, n))};
}

std::vector<Verdict> matched_pair_verdicts(const MatchedPairData& mp) {
  mp.validate();
  const AlgebraTable& A = mp.A;
  const AlgebraTable& B = mp.B;
  const std::size_t n = A.dim();
  const std::size_t p = B.dim();

  std::vector<Verdict> out;
  out.push_back(law_verdict(A, "right_zinbiel", "A_right_zinbiel", "e"));
  out.push_back(law_verdict(B, "right_zinbiel", "B_right_zinbiel", "f"));
  for (auto& v : bimodule_axiom_verdicts(bimodule_on_B(mp))) {
    out.push_back(relabel(std::move(v), "A_on_B.", "eef"));
  }
  for (auto& v : bimodule_axiom_verdicts(bimodule_on_A(mp))) {
    out.push_back(relabel(std::move(v), "B_on_A.", "ffe"));
  }

  std::vector<Witness> w26, w27, w28a, w28b, w29a, w29b;
  for (std::size_t x = 0; x < n; ++x) {
    const Vector ex = Vector::basis(n, x);
    for (std::size_t y = 0; y < n; ++y) {
      const Vector ey = Vector::basis(n, y);
      const Vector xy = A.product(x, y);
      const Vector sym = xy + A.product(y, x);
      for (std::size_t a = 0; a < p; ++a) {
        const Vector fa = Vector::basis(p, a);
        // rB(a)(xy + yx) = x.(rB(a)y) + rB(lA(y)a)x
        compare(w26, {x, y, a}, mp.rB[a].apply(sym),
                multiply(A, ex, mp.rB[a].apply(ey)) + ext(mp.rB, mp.lA[y].apply(fa), n).apply(ex));
        const Vector lhs28 = mp.lB[a].apply(xy);
        // ((lB+rB)(a)x).y + lB((lA+rA)(x)a)y
        compare(w28a, {x, y, a}, lhs28,
                multiply(A, (mp.lB[a] + mp.rB[a]).apply(ex), ey) +
                    ext(mp.lB, (mp.lA[x] + mp.rA[x]).apply(fa), n).apply(ey));
        // x.(lB(a)y) + rB(rA(y)a)x
        compare(w28b, {x, y, a}, lhs28,
                multiply(A, ex, mp.lB[a].apply(ey)) + ext(mp.rB, mp.rA[y].apply(fa), n).apply(ex));
      }
    }
    for (std::size_t a = 0; a < p; ++a) {
      const Vector fa = Vector::basis(p, a);
      for (std::size_t b = 0; b < p; ++b) {
        const Vector fb = Vector::basis(p, b);
        const Vector ab = B.product(a, b);
        // rA(x)(a o b + b o a) = a o (rA(x)b) + rA(lB(b)x)a
        compare(w27, {x, a, b}, mp.rA[x].apply(ab + B.product(b, a)),
                multiply(B, fa, mp.rA[x].apply(fb)) + ext(mp.rA, mp.lB[b].apply(ex), p).apply(fa));
        const Vector lhs29 = mp.lA[x].apply(ab);
        // lA((lB+rB)(a)x)b + ((lA+rA)(x)a) o b
        compare(w29a, {x, a, b}, lhs29,
                ext(mp.lA, (mp.lB[a] + mp.rB[a]).apply(ex), p).apply(fb) +
                    multiply(B, (mp.lA[x] + mp.rA[x]).apply(fa), fb));
        // a o (lA(x)b) + rA(rB(b)x)a
        compare(w29b, {x, a, b}, lhs29,
                multiply(B, fa, mp.lA[x].apply(fb)) + ext(mp.rA, mp.rB[b].apply(ex), p).apply(fa));
      }
    }
  }
  out.push_back(make_verdict("eq26", "rB(a)(x.y + y.x) - x.(rB(a)y) - rB(lA(y)a)x = 0",
                             std::move(w26), "eef"));
  out.push_back(make_verdict("eq27", "rA(x)(a o b + b o a) - a o (rA(x)b) - rA(lB(b)x)a = 0",
                             std::move(w27), "eff"));
  out.push_back(make_verdict("eq28a", "lB(a)(x.y) = ((lB+rB)(a)x).y + lB((lA+rA)(x)a)y",
                             std::move(w28a), "eef"));
  out.push_back(make_verdict("eq28b", "lB(a)(x.y) = x.(lB(a)y) + rB(rA(y)a)x", std::move(w28b),
                             "eef"));
  out.push_back(make_verdict("eq29a", "lA(x)(a o b) = lA((lB+rB)(a)x)b + ((lA+rA)(x)a) o b",
                             std::move(w29a), "eff"));
  out.push_back(make_verdict("eq29b", "lA(x)(a o b) = a o (lA(x)b) + rA(rB(b)x)a",
                             std::move(w29b), "eff"));
  return out;
}

std::vector<ConditionViolation> check_matched_pair(const MatchedPairData& mp) {
  // One entry per retained witness; empty exactly when every verdict holds.
  std::vector<ConditionViolation> out;
  for (const auto& v : matched_pair_verdicts(mp)) {
    for (const auto& w : v.witnesses) out.push_back(ConditionViolation{v.name, w});
  }
  return out;
}

AlgebraTable double_algebra(const MatchedPairData& mp) {
  mp.validate();
  const std::size_t n = mp.A.dim();
  const std::size_t p = mp.B.dim();
  const std::size_t d = n + p;
  Tensor3 t(d, d, d);
  for (const auto& [key, c] : mp.A.constants().entries()) t.set(key, c);
  for (const auto& [key, c] : mp.B.constants().entries()) {
    t.set({n + key[0], n + key[1], n + key[2]}, c);
  }
  for (std::size_t x = 0; x < n; ++x) {
    // e_x * f_b = lA(x) f_b + rB(b) e_x ; f_a * e_x = lB(a) e_x + rA(x) f_a
    for (const auto& [key, c] : mp.lA[x].entries()) t.add_to({x, n + key.second, n + key.first}, c);
    for (const auto& [key, c] : mp.rA[x].entries()) t.add_to({n + key.second, x, n + key.first}, c);
  }
  for (std::size_t b = 0; b < p; ++b) {
    for (const auto& [key, c] : mp.rB[b].entries()) t.add_to({key.second, n + b, key.first}, c);
    for (const auto& [key, c] : mp.lB[b].entries()) t.add_to({n + b, key.second, key.first}, c);
  }
  std::vector<std::string> labels = mp.A.basis_labels();
  for (const auto& l : mp.B.basis_labels()) labels.push_back(l + "'");
  return AlgebraTable(d, std::move(t), std::move(labels));
}

namespace {

void check_action_shapes(const ActionPair& p) {
  check_maps(p.on_H, p.G.dim(), p.H.dim(), "action on H");
  check_maps(p.on_G, p.H.dim(), p.G.dim(), "action on G");
}

// m(x.y) = m(x)m(y), or m([x,y]) = [m(x),m(y)] when `lie`.
Verdict representation_verdict(const AlgebraTable& base, const std::vector<Matrix>& maps,
                               std::size_t dim, bool lie, const std::string& name,
                               const std::string& slots) {
  std::vector<Witness> found;
  for (std::size_t x = 0; x < base.dim(); ++x) {
    for (std::size_t y = 0; y < base.dim(); ++y) {
      Matrix rhs = maps[x] * maps[y];
      if (lie) rhs -= maps[y] * maps[x];
      collect_matrix_witnesses({x, y}, ext(maps, base.product(x, y), dim), rhs, found);
    }
  }
  return make_verdict(name, lie ? "m([x,y]) = m(x)m(y) - m(y)m(x)" : "m(x.y) = m(x)m(y)",
                      std::move(found), slots);
}

AuditReport action_pair_report(const ActionPair& p, const std::string& subject, bool lie) {
  check_action_shapes(p);
  const std::size_t n = p.G.dim();
  const std::size_t q = p.H.dim();
  AuditReport report;
  report.subject = subject;
  report.kind = lie ? "lie_matched_pair" : "commassoc_matched_pair";
  if (lie) {
    report.premises.push_back(law_verdict(p.G, "jacobi", "G_jacobi", "e"));
    report.premises.push_back(law_verdict(p.H, "jacobi", "H_jacobi", "f"));
  } else {
    report.premises.push_back(law_verdict(p.G, "commutative", "G_commutative", "e"));
    report.premises.back().slots = "ee";
    report.premises.push_back(law_verdict(p.G, "associative", "G_associative", "e"));
    report.premises.push_back(law_verdict(p.H, "commutative", "H_commutative", "f"));
    report.premises.back().slots = "ff";
    report.premises.push_back(law_verdict(p.H, "associative", "H_associative", "f"));
  }
  report.claims.push_back(
      representation_verdict(p.G, p.on_H, q, lie, "on_H_representation", "eef"));
  report.claims.push_back(
      representation_verdict(p.H, p.on_G, n, lie, "on_G_representation", "ffe"));

  std::vector<Witness> first, second;
  for (std::size_t x = 0; x < n; ++x) {
    const Vector ex = Vector::basis(n, x);
    for (std::size_t a = 0; a < q; ++a) {
      const Vector fa = Vector::basis(q, a);
      for (std::size_t b = 0; b < q; ++b) {
        const Vector fb = Vector::basis(q, b);
        const Matrix& m = p.on_H[x];
        Vector rhs;
        if (lie) {
          rhs = multiply(p.H, m.apply(fa), fb) + multiply(p.H, fa, m.apply(fb)) -
                ext(p.on_H, p.on_G[a].apply(ex), q).apply(fb) +
                ext(p.on_H, p.on_G[b].apply(ex), q).apply(fa);
        } else {
          rhs = multiply(p.H, m.apply(fa), fb) + ext(p.on_H, p.on_G[a].apply(ex), q).apply(fb);
        }
        compare(first, {x, a, b}, m.apply(p.H.product(a, b)), std::move(rhs));
      }
    }
    for (std::size_t y = 0; y < n; ++y) {
      const Vector ey = Vector::basis(n, y);
      for (std::size_t a = 0; a < q; ++a) {
        const Vector fa = Vector::basis(q, a);
        const Matrix& m = p.on_G[a];
        Vector rhs;
        if (lie) {
          rhs = multiply(p.G, m.apply(ex), ey) + multiply(p.G, ex, m.apply(ey)) -
                ext(p.on_G, p.on_H[x].apply(fa), n).apply(ey) +
                ext(p.on_G, p.on_H[y].apply(fa), n).apply(ex);
        } else {
          rhs = multiply(p.G, m.apply(ex), ey) + ext(p.on_G, p.on_H[x].apply(fa), n).apply(ey);
        }
        compare(second, {x, y, a}, m.apply(p.G.product(x, y)), std::move(rhs));
      }
    }
  }
  if (lie) {
    report.claims.push_back(make_verdict(
        "eq25a", "m(x)[a,b] - [m(x)a,b] - [a,m(x)b] + m(n(a)x)b - m(n(b)x)a = 0", std::move(first),
        "eff"));
    report.claims.push_back(make_verdict(
        "eq25b", "n(a)[x,y] - [n(a)x,y] - [x,n(a)y] + n(m(x)a)y - n(m(y)a)x = 0",
        std::move(second), "eef"));
  } else {
    report.claims.push_back(make_verdict("eq24a", "m(x)(a o b) = (m(x)a) o b + m(n(a)x)b",
                                         std::move(first), "eff"));
    report.claims.push_back(make_verdict("eq24b", "n(a)(x.y) = (n(a)x).y + n(m(x)a)y",
                                         std::move(second), "eef"));
  }
  for (const auto& c : report.claims) {
    if (!c.holds) {
      report.findings.push_back(c.name + " fails: counterexample " +
                                first_witness(c));
    }
  }
  for (const auto& pr : report.premises) {
    if (!pr.holds) {
      report.findings.push_back(pr.name + " fails: counterexample " +
                                first_witness(pr));
    }
  }
  return report;
}

std::vector<Matrix> combine(const std::vector<Matrix>& a, const std::vector<Matrix>& b, int sign) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(sign > 0 ? a[i] + b[i] : a[i] - b[i]);
  return out;
}

}  // namespace

AuditReport check_commassoc_matched_pair(const ActionPair& p, const std::string& subject) {
  return action_pair_report(p, subject, false);
}

AuditReport check_lie_matched_pair(const ActionPair& p, const std::string& subject) {
  return action_pair_report(p, subject, true);
}

AuditReport induced_commassoc_pair(const MatchedPairData& mp) {
  mp.validate();
  return check_commassoc_matched_pair(
      ActionPair{symmetrize(mp.A), symmetrize(mp.B), combine(mp.lA, mp.rA, 1),
                 combine(mp.lB, mp.rB, 1)},
      "symmetrized pair with lA+rA, lB+rB");
}

AuditReport induced_lie_pair(const MatchedPairData& mp) {
  mp.validate();
  return check_lie_matched_pair(
      ActionPair{commutator(mp.A), commutator(mp.B), combine(mp.lA, mp.rA, -1),
                 combine(mp.lB, mp.rB, -1)},
      "commutator pair with lA-rA, lB-rB");
}

bool all_hold(const AuditReport& report) {
  auto ok = [](const Verdict& v) { return v.holds; };
  return std::all_of(report.premises.begin(), report.premises.end(), ok) &&
         std::all_of(report.claims.begin(), report.claims.end(), ok);
}

AuditReport audit_matched_pair(const MatchedPairData& mp, const std::string& subject,
                               unsigned workers) {
  AuditReport report;
  report.subject = subject + " (dim A " + std::to_string(mp.A.dim()) + ", dim B " +
                   std::to_string(mp.B.dim()) + ")";
  report.kind = "matched_pair";
  for (auto& v : matched_pair_verdicts(mp)) {
    const bool prerequisite = v.name.find("right_zinbiel") != std::string::npos ||
                              v.name.rfind("A_on_B.", 0) == 0 || v.name.rfind("B_on_A.", 0) == 0;
    (prerequisite ? report.premises : report.claims).push_back(std::move(v));
  }
  const bool conditions = all_hold(report);

  Verdict dbl = check_identity(double_algebra(mp), catalog_identity("right_zinbiel"),
                               "double_right_zinbiel", workers);
  dbl.statement = "double A+B satisfies " + dbl.statement;
  if (dbl.holds != conditions) {
    report.findings.push_back("matched-pair conditions and the double criterion disagree");
  }
  report.claims.push_back(std::move(dbl));

  auto fold = [&](const AuditReport& sub, const std::string& prefix) {
    for (const auto& v : sub.premises) report.claims.push_back(relabel(v, prefix, v.slots));
    for (const auto& v : sub.claims) report.claims.push_back(relabel(v, prefix, v.slots));
    if (conditions && !all_hold(sub)) {
      report.findings.push_back(prefix + " pair fails although the matched-pair conditions hold");
    }
  };
  fold(induced_commassoc_pair(mp), "commassoc.");
  fold(induced_lie_pair(mp), "lie.");
  return report;
}

}  // namespace zinbiel
