// Acceptance suite. Prints one PASS/FAIL line per criterion; with a
// criterion number as argument runs only that one. Exit status is 0 only
// when every criterion that ran passed.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracle/dense.hpp"
#include "oracle/poly.hpp"
#include "support/gen.hpp"
#include "zinbiel/audit.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/fuzz.hpp"
#include "zinbiel/io.hpp"
#include "zinbiel/models.hpp"

using namespace zinbiel;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const fs::path kGolden = ZINBIEL_GOLDEN_DIR;

bool holds(const AlgebraTable& a, const std::string& law) {
  return evaluate(a, catalog_identity(law)).empty();
}

AlgebraTable T(std::size_t n) { return trunc_integration(n, Orientation::Right); }
AlgebraTable L(std::size_t n) { return trunc_integration(n, Orientation::Left); }

std::vector<AlgebraTable> model_instances() {
  std::vector<AlgebraTable> out;
  for (std::size_t n = 0; n <= 8; ++n) {
    out.push_back(T(n));
    out.push_back(L(n));
  }
  for (std::size_t m = 1; m <= 5; ++m) out.push_back(free_halfshuffle(1, m));
  for (std::size_t m = 1; m <= 3; ++m) out.push_back(free_halfshuffle(2, m));
  out.push_back(free_halfshuffle(3, 2));
  for (const auto& t : trivial_models()) out.push_back(t);
  return out;
}

oracle::Cube dense(const AlgebraTable& a) {
  oracle::Cube c = oracle::cube(a.dim());
  for (const auto& [k, v] : a.constants().entries()) c[k[0]][k[1]][k[2]] = v.raw();
  return c;
}

oracle::Cube dense(const CoalgebraTable& co) {
  oracle::Cube d = oracle::cube(co.dim());
  for (const auto& [k, v] : co.coproduct().entries()) d[k[0]][k[1]][k[2]] = v.raw();
  return d;
}

Vector to_vector(const oracle::Poly& p, std::size_t n) {
  Vector v(n + 1);
  for (const auto& [k, c] : p) v.set(k, Scalar(c));
  return v;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

class InDir {
 public:
  explicit InDir(const fs::path& dir) : saved_(fs::current_path()) { fs::current_path(dir); }
  ~InDir() { fs::current_path(saved_); }

 private:
  fs::path saved_;
};

std::vector<std::string> split_quoted(const std::string& line) {
  std::vector<std::string> parts;
  std::string cur;
  bool quoted = false, have = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      have = true;
    } else if (c == ' ' && !quoted) {
      if (have) parts.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += c;
      have = true;
    }
  }
  if (have) parts.push_back(cur);
  return parts;
}

// 1
Outcome model_validity() {
  Outcome o;
  std::size_t evaluations = 0;
  std::vector<std::string> failures;
  for (std::size_t n = 0; n <= 8; ++n) {
    for (Orientation orient : {Orientation::Right, Orientation::Left}) {
      const AlgebraTable a = trunc_integration(n, orient);
      const std::string law = orient == Orientation::Right ? "right_zinbiel" : "left_zinbiel";
      const Verdict v = check_identity(a, catalog_identity(law), law);
      evaluations += a.dim() * a.dim() * a.dim();
      const bool hard = orient == Orientation::Right ? is_right_zinbiel(a) : is_left_zinbiel(a);
      if (hard != v.holds) failures.push_back("engine and direct check disagree at n=" + std::to_string(n));
      if (!v.holds) {
        failures.push_back(to_string(orient) + " n=" + std::to_string(n) + " " + law + " fails at " +
                           first_witness(v) + " residual " +
                           format_vector(v.witnesses.front().residual));
      }
    }
  }
  o.pass = failures.empty();
  o.detail = std::to_string(evaluations) + " basis triples evaluated";
  if (!failures.empty()) {
    o.detail += "; " + std::to_string(failures.size()) + " failing instances, first: " + failures.front();
    if (failures.size() > 1) o.detail += "; last: " + failures.back();
  }
  return o;
}

// 2
Outcome orientation_duality() {
  std::vector<AlgebraTable> family = model_instances();
  for (auto& a : algebra_fuzz(kDefaultFuzzSeed, kDefaultFuzzCount)) family.push_back(std::move(a));
  std::size_t mismatches = 0, left_passing = 0;
  for (const auto& a : family) {
    const bool left = holds(a, "left_zinbiel");
    left_passing += left;
    if (left != holds(opposite(a), "right_zinbiel")) ++mismatches;
  }
  return {mismatches == 0, std::to_string(family.size()) + " instances, " +
                               std::to_string(left_passing) + " left-passing, " +
                               std::to_string(mismatches) + " mismatches"};
}

// 3
Outcome symmetrized_models() {
  std::size_t checked = 0, failures = 0;
  for (const auto& a : model_instances()) {
    if (a.dim() > 9) continue;
    if (!holds(a, "right_zinbiel") && !holds(a, "left_zinbiel")) continue;
    ++checked;
    const AlgebraTable s = symmetrize(a);
    if (!holds(s, "commutative") || !holds(s, "associative")) ++failures;
  }
  return {failures == 0 && checked > 0,
          std::to_string(checked) + " passing models symmetrized, " + std::to_string(failures) +
              " failures"};
}

// 4
Outcome refutations() {
  using namespace oracle;
  std::vector<std::string> problems;

  // symbolic recomputation
  auto br = [](const Poly& a, const Poly& b) { return add(right_product(a, b), right_product(b, a), -1); };
  const Poly e0 = monomial(0), e1 = monomial(1), e2 = monomial(2);
  const Poly jac = truncate(add(add(br(e0, br(e1, e2)), br(e1, br(e2, e0))), br(e2, br(e0, e1))), 5);
  auto assoc = [](const Poly& a, const Poly& b, const Poly& c) {
    return truncate(add(left_product(left_product(a, b), c), left_product(a, left_product(b, c)), -1), 3);
  };
  const Poly cs_l = assoc(e1, e0, e2), cs_r = assoc(e2, e0, e1);
  const Poly rr_l = truncate(right_product(right_product(e0, e0), e1), 5);
  const Poly rr_r = truncate(right_product(right_product(e0, e1), e0), 5);
  if (jac != Poly{{5, mpq_class(-1, 30)}}) problems.push_back("oracle Jacobiator differs");
  if (cs_l != Poly{{3, mpq_class(1, 3)}} || cs_r != Poly{{3, mpq_class(2, 3)}})
    problems.push_back("oracle center-symmetry values differ");
  if (rr_l != Poly{{3, mpq_class(1, 2)}} || rr_r != Poly{{3, mpq_class(1, 3)}})
    problems.push_back("oracle right-relation values differ");

  // engine agrees with the oracle
  const auto r5 = audit_claims(T(5), Orientation::Right);
  const auto l3 = audit_claims(L(3), Orientation::Left);
  auto find = [](const Verdict* v, std::vector<std::size_t> t) -> const Witness* {
    if (!v) return nullptr;
    for (const auto& w : v->witnesses)
      if (w.tuple == t) return &w;
    return nullptr;
  };
  const Witness* wj = find(r5.find_claim("lie_admissible"), {0, 1, 2});
  if (!wj || wj->residual != to_vector(jac, 5)) problems.push_back("engine Jacobiator differs");
  const Witness* wc = find(l3.find_claim("center_symmetric"), {1, 0, 2});
  if (!wc || wc->lhs != to_vector(cs_l, 3) || wc->rhs != to_vector(cs_r, 3))
    problems.push_back("engine center-symmetry witness differs");
  const Verdict* rr = r5.find_claim("right_relation");
  if (!rr || rr->holds || rr->witnesses.front().tuple != std::vector<std::size_t>{0, 0, 1} ||
      rr->witnesses.front().lhs != to_vector(rr_l, 5) || rr->witnesses.front().rhs != to_vector(rr_r, 5))
    problems.push_back("engine right-relation witness differs");

  // golden reports are current and carry the witnesses verbatim
  const std::string right = read_file((kGolden / "audit_trunc_int_right_5.txt").string());
  const std::string left = read_file((kGolden / "audit_trunc_int_left_3.txt").string());
  if (cli({"audit", "--model", "trunc-int:right:5"}).out != right)
    problems.push_back("golden right audit is stale");
  if (cli({"audit", "--model", "trunc-int:left:3"}).out != left)
    problems.push_back("golden left audit is stale");
  const std::vector<std::pair<const std::string*, std::string>> lines{
      {&right, "witness (e0,e1,e2): lhs -(1/30)e5 vs rhs 0, residual -(1/30)e5"},
      {&left, "(e1,e0,e2): lhs (1/3)e3 vs rhs (2/3)e3"},
      {&right, "witness (e0,e0,e1): lhs (1/2)e3 vs rhs (1/3)e3"},
  };
  for (const auto& [text, line] : lines) {
    if (text->find(line) == std::string::npos) problems.push_back("golden lacks '" + line + "'");
  }
  return {problems.empty(), problems.empty() ? "3 witnesses recomputed symbolically and found in golden reports"
                                             : problems.front()};
}

// 5
Outcome confirmations() {
  using namespace oracle;
  // Orientation selection: evaluate eq15-18 symbolically on the right
  // integration product of degree <= 5, and on its mirror image.
  const std::size_t n = 5;
  auto star = [&](bool mirrored) {
    return [mirrored](const Poly& a, const Poly& b) {
      return mirrored ? right_product(b, a) : right_product(a, b);
    };
  };
  auto eq15_18_hold = [&](bool mirrored) {
    auto m = star(mirrored);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t k = 0; k <= n; ++k) {
          const Poly x = monomial(i), y = monomial(j), z = monomial(k);
          const Poly rhs = add(m(m(x, z), y), m(m(z, x), y));
          if (truncate(add(m(x, m(z, y)), rhs, -1), n) != Poly{}) return false;
          if (truncate(add(m(z, m(x, y)), rhs, -1), n) != Poly{}) return false;
          if (truncate(add(m(z, m(y, x)), add(m(m(y, z), x), m(m(z, y), x)), -1), n) != Poly{}) return false;
          if (truncate(add(m(x, m(y, z)), m(y, m(x, z)), -1), n) != Poly{}) return false;
        }
    return true;
  };
  const bool plain = eq15_18_hold(false), mirrored = eq15_18_hold(true);
  if (plain == mirrored) return {false, "oracle cannot select an orientation for eq15-18"};
  const std::string suffix = plain ? "" : "_mirrored";

  std::vector<AlgebraTable> right_tables;
  for (const auto& a : model_instances())
    if (is_right_zinbiel(a)) right_tables.push_back(a);
  for (const auto& a : algebra_fuzz(kDefaultFuzzSeed, kDefaultFuzzCount))
    if (is_right_zinbiel(a)) right_tables.push_back(a);
  for (const auto& b : bimodule_seeds()) {
    const auto s = semidirect_sum(b);
    if (is_right_zinbiel(s)) right_tables.push_back(s);
  }
  for (const auto& mp : matched_pair_seeds()) {
    const auto d = double_algebra(mp);
    if (is_right_zinbiel(d)) right_tables.push_back(d);
  }

  std::size_t fails = 0, left_tables = 0;
  std::string first;
  for (const auto& a : right_tables) {
    const auto r = audit_claims(a, Orientation::Right, "t", 1,
                                std::vector<std::string>{"left_relation", "eq15" + suffix, "eq16" + suffix,
                                                         "eq17" + suffix, "eq18" + suffix});
    for (const auto& v : r.claims) {
      if (!v.holds) {
        ++fails;
        if (first.empty()) first = v.name + " on a right table of dim " + std::to_string(a.dim());
      }
    }
    const AlgebraTable op = opposite(a);
    ++left_tables;
    if (!is_left_zinbiel(op) || !holds(op, "right_relation")) {
      ++fails;
      if (first.empty()) first = "right_relation on a left table of dim " + std::to_string(a.dim());
    }
  }
  for (const auto& a : model_instances()) {
    if (is_left_zinbiel(a) && !holds(a, "right_relation")) ++fails;
  }
  return {fails == 0, std::to_string(right_tables.size()) + " right tables, " +
                          std::to_string(left_tables) + "+ left tables, oracle selects " +
                          (plain ? "unmirrored" : "mirrored") + " eq15-18; " + std::to_string(fails) +
                          " failures" + (first.empty() ? "" : " (first: " + first + ")")};
}

// 6
Outcome semidirect_iff() {
  std::vector<Bimodule> family = bimodule_seeds();
  for (auto& b : bimodule_fuzz(kDefaultFuzzSeed, kDefaultFuzzCount)) family.push_back(std::move(b));
  std::size_t discrepancies = 0, outside = 0, outside_bad = 0, axioms_hold = 0, literal = 0;
  for (const auto& b : family) {
    const bool axioms = check_bimodule(b).empty();
    const bool semidirect = is_right_zinbiel(semidirect_sum(b));
    if (!is_right_zinbiel(b.base())) {
      // A is a subalgebra of A+V, so the sum cannot satisfy the law either
      ++outside;
      if (semidirect) ++outside_bad;
      if (axioms) ++literal;
      continue;
    }
    axioms_hold += axioms;
    if (axioms != semidirect) ++discrepancies;
  }
  return {discrepancies == 0 && outside_bad == 0,
          std::to_string(family.size()) + " bimodules (" + std::to_string(outside) +
              " over a base failing the right law, excluded from the iff), " +
              std::to_string(axioms_hold) + " satisfy the axioms, " + std::to_string(discrepancies) +
              " discrepancies; without the base hypothesis " + std::to_string(literal) +
              " more instances would disagree"};
}

// 7
Outcome matched_pair_iff() {
  std::vector<MatchedPairData> family = matched_pair_seeds();
  for (auto& mp : matched_pair_fuzz(kDefaultFuzzSeed, kDefaultFuzzCount)) family.push_back(std::move(mp));
  std::size_t discrepancies = 0, passing = 0, too_big = 0;
  for (const auto& mp : family) {
    if (mp.A.dim() + mp.B.dim() > 8) ++too_big;
    const bool conditions = check_matched_pair(mp).empty();
    passing += conditions;
    if (conditions != is_right_zinbiel(double_algebra(mp))) ++discrepancies;
  }
  return {discrepancies == 0 && too_big == 0,
          std::to_string(family.size()) + " pairs, " + std::to_string(passing) + " matched, " +
              std::to_string(discrepancies) + " discrepancies"};
}

// 8
Outcome duality() {
  std::size_t failures = 0, instances = 0;
  // The oracle fixes the bridge: which algebra law is the transpose of which coalgebra law.
  {
    const auto c = dense(T(3));
    const auto d = dense(dualize(T(3)));
    const auto right_t = oracle::output_first(oracle::right_law_residual(c));
    const auto left_t = oracle::output_first(oracle::left_law_residual(c));
    if (oracle::co_right_residual(d) != right_t || oracle::co_left_residual(d) != left_t) ++failures;
  }
  std::vector<AlgebraTable> algebras = model_instances();
  for (auto& a : algebra_fuzz(kDefaultFuzzSeed, kDefaultFuzzCount)) algebras.push_back(std::move(a));
  for (const auto& a : algebras) {
    ++instances;
    const CoalgebraTable co = dualize(a);
    if (!(dualize_co(co) == a) || to_json(dualize_co(co)) != to_json(AlgebraTable(a.dim(), a.constants())))
      ++failures;
    const auto d = dense(co);
    const bool oracle_right = oracle::all_zero(oracle::output_first(oracle::right_law_residual(dense(a))));
    const bool oracle_left = oracle::all_zero(oracle::output_first(oracle::left_law_residual(dense(a))));
    if (check_co_right(co).holds != oracle_right || check_co_left(co).holds != oracle_left) ++failures;
    if (oracle::all_zero(oracle::co_right_residual(d)) != oracle_right) ++failures;
  }
  std::vector<CoalgebraTable> coalgebras = coalgebra_seeds();
  for (auto& c : coalgebra_fuzz(kDefaultFuzzSeed, kDefaultFuzzCount)) coalgebras.push_back(std::move(c));
  for (const auto& c : coalgebras) {
    ++instances;
    const CoalgebraTable op = opposite_coproduct(c);
    if (check_co_right(op).holds != check_co_left(c).holds ||
        check_co_left(op).holds != check_co_right(c).holds)
      ++failures;
  }
  return {failures == 0,
          std::to_string(algebras.size()) + " algebras dualized, " + std::to_string(coalgebras.size()) +
              " coalgebras mirrored, " + std::to_string(failures) + " failures"};
}

// 9
Outcome bialgebra_layer() {
  std::size_t failures = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto form = standard_pairing(n);
    const auto check = check_form(AlgebraTable::zero(2 * n), form);
    if (!check.symmetric || !check.nondegenerate) ++failures;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!form.gram().at(i, j).is_zero() || !form.gram().at(n + i, n + j).is_zero()) ++failures;
  }
  std::size_t agree = 0, flagged = 0, complete = 0;
  const auto candidates = candidate_fuzz(kDefaultFuzzSeed, 20);
  std::string quads;
  for (const auto& bc : candidates) {
    const auto manin = check_manin_triple(bc);
    const Verdict* c = manin.find_claim("manin_c_right_zinbiel");
    if (c && c->holds == check_matched_pair(dual_reps(bc)).empty()) ++agree;
    const auto r = equivalence_audit(bc);
    const auto b = equivalence_booleans(r);
    if (r.claims.size() == 4) ++complete;
    const bool disagree = !(b[0] == b[1] && b[1] == b[2] && b[2] == b[3]);
    bool has_finding = false;
    for (const auto& f : r.findings) has_finding = has_finding || f.find("disagree") != std::string::npos;
    if (disagree != has_finding) ++failures;
    flagged += disagree;
    quads += std::string(" ") + "01"[b[0]] + "01"[b[1]] + "01"[b[2]] + "01"[b[3]];
  }
  const bool pass = failures == 0 && agree == candidates.size() && complete == candidates.size() &&
                    candidates.size() == 20;
  return {pass, "pairings n<=8 ok=" + std::string(failures == 0 ? "yes" : "no") + ", condition (c) agrees on " +
                    std::to_string(agree) + "/" + std::to_string(candidates.size()) + ", " +
                    std::to_string(flagged) + " disagreements flagged; quadruples:" + quads};
}

// 10
Outcome engineering() {
  std::vector<std::string> problems;
  std::vector<AnyObject> objects;
  gen::Gen g(kDefaultFuzzSeed);
  for (auto& a : algebra_fuzz(1, 60)) objects.emplace_back(std::move(a));
  for (auto& c : coalgebra_fuzz(2, 60)) objects.emplace_back(std::move(c));
  for (auto& b : bimodule_fuzz(3, 60)) objects.emplace_back(std::move(b));
  for (auto& mp : matched_pair_fuzz(4, 60)) objects.emplace_back(std::move(mp));
  for (auto& bc : candidate_fuzz(5, 60)) objects.emplace_back(std::move(bc));
  while (objects.size() < 500) {
    switch (objects.size() % 5) {
      case 0: objects.emplace_back(g.algebra()); break;
      case 1: objects.emplace_back(g.coalgebra()); break;
      case 2: objects.emplace_back(g.bimodule()); break;
      case 3: objects.emplace_back(g.matched_pair()); break;
      default: objects.emplace_back(g.candidate()); break;
    }
  }
  std::size_t round_trip_failures = 0;
  for (const auto& o : objects) {
    const std::string text = to_json(o);
    const AnyObject back = load_any(text);
    if (!(back == o) || to_json(back) != text) ++round_trip_failures;
  }
  if (round_trip_failures) problems.push_back(std::to_string(round_trip_failures) + " round-trip failures");

  InDir dir(kGolden);
  const std::vector<std::vector<std::string>> commands{
      {"audit", "--model", "trunc-int:right:6"},
      {"audit", "--format", "json", "--model", "trunc-int:left:5"},
      {"audit", "corpus/dual_T3.json"},
      {"audit", "corpus/regular_T3.json"},
      {"audit", "corpus/mp_unit.json"},
      {"check", "--model", "free:2:3", "right_zinbiel", "left_zinbiel", "lie_admissible"},
  };
  std::size_t nondeterministic = 0;
  for (const auto& base : commands) {
    std::string first;
    for (const char* n : {"1", "2", "8"}) {
      auto args = base;
      args.insert(args.begin() + 1, {"--parallel", n});
      const std::string out = cli(args).out;
      if (first.empty()) first = out;
      if (out != first || out.empty()) ++nondeterministic;
    }
  }
  if (nondeterministic) problems.push_back(std::to_string(nondeterministic) + " nondeterministic outputs");

  std::ifstream cases(kGolden / "corpus" / "cases.txt");
  std::size_t corpus = 0, wrong = 0;
  {
    InDir corpus_dir(kGolden / "corpus");
    std::string line;
    while (std::getline(cases, line)) {
      if (line.empty() || line[0] == '#') continue;
      auto parts = split_quoted(line);
      const int expected = std::stoi(parts[0]);
      parts.erase(parts.begin());
      ++corpus;
      if (cli(parts).code != expected) {
        ++wrong;
        if (problems.empty()) problems.push_back("exit code mismatch on: " + line);
      }
    }
  }
  if (corpus == 0) problems.push_back("empty exit-code corpus");
  return {problems.empty(), std::to_string(objects.size()) + " objects round-tripped, " +
                                std::to_string(commands.size()) + " commands x 3 worker counts, " +
                                std::to_string(corpus) + " corpus cases, " + std::to_string(wrong) +
                                " exit-code mismatches" +
                                (problems.empty() ? "" : "; " + problems.front())};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"model validity", model_validity},
      {"orientation duality", orientation_duality},
      {"symmetrized models are commutative and associative", symmetrized_models},
      {"refutations reproduced", refutations},
      {"confirmations", confirmations},
      {"semidirect sum iff bimodule", semidirect_iff},
      {"matched pair iff double", matched_pair_iff},
      {"duality", duality},
      {"bialgebra layer", bialgebra_layer},
      {"engineering contracts", engineering},
  };
  std::size_t only = 0;
  if (argc > 1) {
    only = std::strtoul(argv[1], nullptr, 10);
    if (only < 1 || only > criteria.size()) {
      std::cerr << "usage: zinbiel_acceptance [1-" << criteria.size() << "]\n";
      return 2;
    }
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << (i + 1) << " (" << criteria[i].first << "): "
              << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
