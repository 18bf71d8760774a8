#include "zinbiel/bimodule.hpp"

#include "zinbiel/catalog.hpp"
#include "zinbiel/identity.hpp"

namespace zinbiel {

namespace {

void check_family(const std::vector<Matrix>& maps, std::size_t count, std::size_t m,
                  const char* name) {
  if (maps.size() != count) {
    throw DimensionError(std::string(name) + ": expected " + std::to_string(count) +
                         " matrices, got " + std::to_string(maps.size()));
  }
  for (const auto& mat : maps) {
    if (mat.rows() != m || mat.cols() != m) {
      throw DimensionError(std::string(name) + ": matrices must be " + std::to_string(m) + "x" +
                           std::to_string(m));
    }
  }
}

}  // namespace

Bimodule::Bimodule(AlgebraTable base, std::size_t v_dim, std::vector<Matrix> l,
                   std::vector<Matrix> r)
    : base_(std::move(base)), v_dim_(v_dim), l_(std::move(l)), r_(std::move(r)) {
  check_family(l_, base_.dim(), v_dim_, "l");
  check_family(r_, base_.dim(), v_dim_, "r");
}

Matrix linear_extension(const std::vector<Matrix>& maps, const Vector& x, std::size_t rows,
                        std::size_t cols) {
  if (x.dim() != maps.size()) throw DimensionError("linear extension: dimension mismatch");
  Matrix out(rows, cols);
  for (const auto& [i, c] : x.entries()) out += c * maps[i];
  return out;
}

Matrix Bimodule::l_at(const Vector& x) const { return linear_extension(l_, x, v_dim_, v_dim_); }
Matrix Bimodule::r_at(const Vector& x) const { return linear_extension(r_, x, v_dim_, v_dim_); }

Bimodule regular_bimodule(const AlgebraTable& a) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    l.push_back(a.left_multiplication(i));
    r.push_back(a.right_multiplication(i));
  }
  return Bimodule(a, a.dim(), std::move(l), std::move(r));
}

Bimodule zero_bimodule(const AlgebraTable& a, std::size_t v_dim) {
  std::vector<Matrix> zero(a.dim(), Matrix(v_dim, v_dim));
  return Bimodule(a, v_dim, zero, zero);
}

namespace {

template <typename Fn>
void for_pairs(std::size_t n, Fn fn) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) fn(x, y);
  }
}

struct AxiomSides {
  Matrix lhs;
  Matrix rhs;
};

// The three axiom equalities at (x, y), in a fixed order.
std::vector<std::pair<const char*, AxiomSides>> axioms_at(const Bimodule& b, std::size_t x,
                                                          std::size_t y) {
  const auto& a = b.base();
  const Vector xy = a.product(x, y);
  const Vector yx = a.product(y, x);
  const auto& l = b.l();
  const auto& r = b.r();
  const Matrix r_xy = b.r_at(xy);
  return {
      {"bimodule_l", {l[x] * l[y], b.l_at(xy) + b.l_at(yx)}},
      {"bimodule_lr", {l[x] * r[y], r_xy}},
      {"bimodule_r", {r_xy, r[y] * r[x] + r[y] * l[x]}},
  };
}

const char* axiom_statement(const std::string& name) {
  if (name == "bimodule_l") return "l_x l_y = l_{x.y} + l_{y.x}";
  if (name == "bimodule_lr") return "l_x r_y = r_{x.y}";
  return "r_{x.y} = r_y r_x + r_y l_x";
}

}  // namespace

std::vector<AxiomViolation> check_bimodule(const Bimodule& b) {
  std::vector<AxiomViolation> out;
  for_pairs(b.base().dim(), [&](std::size_t x, std::size_t y) {
    for (auto& [name, sides] : axioms_at(b, x, y)) {
      if (sides.lhs != sides.rhs) {
        out.push_back(AxiomViolation{name, x, y, std::move(sides.lhs), std::move(sides.rhs)});
      }
    }
  });
  return out;
}

void collect_matrix_witnesses(const std::vector<std::size_t>& prefix, const Matrix& lhs,
                              const Matrix& rhs, std::vector<Witness>& out) {
  if (lhs == rhs) return;
  const Matrix diff = lhs - rhs;
  std::vector<bool> dirty(lhs.cols(), false);
  for (const auto& [key, value] : diff.entries()) dirty[key.second] = true;
  for (std::size_t v = 0; v < lhs.cols(); ++v) {
    if (!dirty[v]) continue;
    Witness w;
    w.tuple = prefix;
    w.tuple.push_back(v);
    w.lhs = lhs.column(v);
    w.rhs = rhs.column(v);
    w.residual = diff.column(v);
    out.push_back(std::move(w));
  }
}

std::vector<Verdict> bimodule_axiom_verdicts(const Bimodule& b) {
  std::vector<std::vector<Witness>> found(3);
  for_pairs(b.base().dim(), [&](std::size_t x, std::size_t y) {
    auto sides = axioms_at(b, x, y);
    for (std::size_t k = 0; k < sides.size(); ++k) {
      collect_matrix_witnesses({x, y}, sides[k].second.lhs, sides[k].second.rhs, found[k]);
    }
  });
  std::vector<Verdict> out;
  const char* names[] = {"bimodule_l", "bimodule_lr", "bimodule_r"};
  for (std::size_t k = 0; k < 3; ++k) {
    out.push_back(make_verdict(names[k], axiom_statement(names[k]), std::move(found[k]), "eev"));
  }
  return out;
}

AuditReport check_derived_relations(const Bimodule& b, const std::string& subject) {
  AuditReport report;
  report.subject = subject;
  report.kind = "bimodule";
  report.premises = bimodule_axiom_verdicts(b);

  std::vector<Witness> l_then_r, r_then_l, r_commute;
  const auto& l = b.l();
  const auto& r = b.r();
  for_pairs(b.base().dim(), [&](std::size_t x, std::size_t y) {
    const Matrix l_xy = b.l_at(b.base().product(x, y));
    collect_matrix_witnesses({x, y}, l_xy, r[y] * l[x], l_then_r);
    collect_matrix_witnesses({x, y}, l_xy, l[x] * r[y], r_then_l);
    collect_matrix_witnesses({x, y}, r[x] * r[y], r[y] * r[x], r_commute);
  });
  report.claims.push_back(make_verdict("eq22_l_then_r", "l_{x.y} v = r_y(l_x v)",
                                       std::move(l_then_r), "eev"));
  report.claims.push_back(make_verdict("eq22_r_then_l", "l_{x.y} v = l_x(r_y v)",
                                       std::move(r_then_l), "eev"));
  report.claims.push_back(
      make_verdict("eq23", "r_x(r_y v) = r_y(r_x v)", std::move(r_commute), "eev"));
  return report;
}

SubadjacentResult induced_subadjacent_map(const Bimodule& b) {
  SubadjacentResult out;
  const std::size_t n = b.base().dim();
  for (std::size_t i = 0; i < n; ++i) out.family.push_back(b.l()[i] - b.r()[i]);
  std::vector<Witness> found;
  for_pairs(n, [&](std::size_t x, std::size_t y) {
    const Vector bracket = b.base().product(x, y) - b.base().product(y, x);
    const Matrix lhs = linear_extension(out.family, bracket, b.v_dim(), b.v_dim());
    const Matrix rhs = out.family[x] * out.family[y] - out.family[y] * out.family[x];
    collect_matrix_witnesses({x, y}, lhs, rhs, found);
  });
  out.representation =
      make_verdict("subadjacent_representation",
                   "(l-r)_{[x,y]} = (l-r)_x (l-r)_y - (l-r)_y (l-r)_x", std::move(found), "eev");
  return out;
}

AlgebraTable semidirect_sum(const Bimodule& b) {
  const std::size_t n = b.base().dim();
  const std::size_t m = b.v_dim();
  const std::size_t d = n + m;
  Tensor3 t(d, d, d);
  for (const auto& [key, v] : b.base().constants().entries()) t.set(key, v);
  for (std::size_t i = 0; i < n; ++i) {
    // e_i * v_q = l_i v_q ; v_q * e_i = r_i v_q
    for (const auto& [key, v] : b.l()[i].entries()) t.set({i, n + key.second, n + key.first}, v);
    for (const auto& [key, v] : b.r()[i].entries()) t.set({n + key.second, i, n + key.first}, v);
  }
  std::vector<std::string> labels = b.base().basis_labels();
  for (std::size_t q = 0; q < m; ++q) labels.push_back("v" + std::to_string(q));
  return AlgebraTable(d, std::move(t), std::move(labels));
}

AuditReport audit_bimodule(const Bimodule& b, const std::string& subject, unsigned workers) {
  AuditReport report = check_derived_relations(b, subject);
  report.subject = subject + " (dim A " + std::to_string(b.base().dim()) + ", dim V " +
                   std::to_string(b.v_dim()) + ")";
  report.premises.insert(report.premises.begin(),
                         check_identity(b.base(), catalog_identity("right_zinbiel"),
                                        "base_right_zinbiel", workers));
  report.claims.push_back(induced_subadjacent_map(b).representation);

  Verdict semidirect = check_identity(semidirect_sum(b), catalog_identity("right_zinbiel"),
                                      "semidirect_right_zinbiel", workers);
  semidirect.statement = "semidirect sum A+V satisfies " + semidirect.statement;
  report.claims.push_back(std::move(semidirect));

  const bool axioms_hold = check_bimodule(b).empty();
  const bool semidirect_holds = report.claims.back().holds;
  const bool base_holds = report.premises.front().holds;
  if ((axioms_hold && base_holds) != semidirect_holds) {
    report.findings.push_back(
        "bimodule axioms and the semidirect-sum criterion disagree on this instance");
  }
  if (report.premises_hold()) {
    for (const auto& c : report.claims) {
      if (!c.holds) {
        report.findings.push_back(c.name + " fails on a bimodule: counterexample " +
                                  first_witness(c));
      }
    }
  }
  return report;
}

}  // namespace zinbiel
