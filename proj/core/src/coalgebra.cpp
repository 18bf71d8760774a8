#include "zinbiel/coalgebra.hpp"

#include <optional>

#include "zinbiel/parallel.hpp"

namespace zinbiel {

CoalgebraTable::CoalgebraTable(std::size_t dim, Tensor3 coproduct)
    : dim_(dim), d_(std::move(coproduct)), terms_(dim) {
  const auto& dims = d_.dims();
  if (dims[0] != dim || dims[1] != dim || dims[2] != dim) {
    throw DimensionError("coproduct tensor must be " + std::to_string(dim) + "x" +
                         std::to_string(dim) + "x" + std::to_string(dim));
  }
  for (const auto& [key, c] : d_.entries()) terms_[key[0]].push_back(Term{key[1], key[2], c});
}

CoalgebraTable CoalgebraTable::zero(std::size_t dim) {
  return CoalgebraTable(dim, Tensor3(dim, dim, dim));
}

CoalgebraTable dualize(const AlgebraTable& a) {
  const std::size_t n = a.dim();
  Tensor3 d(n, n, n);
  for (const auto& [key, c] : a.constants().entries()) d.set({key[2], key[0], key[1]}, c);
  return CoalgebraTable(n, std::move(d));
}

AlgebraTable dualize_co(const CoalgebraTable& c) {
  const std::size_t n = c.dim();
  Tensor3 t(n, n, n);
  for (const auto& [key, v] : c.coproduct().entries()) t.set({key[1], key[2], key[0]}, v);
  return AlgebraTable(n, std::move(t));
}

namespace {

CoalgebraTable combine_with_swap(const CoalgebraTable& c, int swapped_sign, bool keep_original) {
  const std::size_t n = c.dim();
  Tensor3 d(n, n, n);
  for (const auto& [key, v] : c.coproduct().entries()) {
    if (keep_original) d.add_to(key, v);
    d.add_to({key[0], key[2], key[1]}, swapped_sign > 0 ? v : -v);
  }
  return CoalgebraTable(n, std::move(d));
}

}  // namespace

CoalgebraTable opposite_coproduct(const CoalgebraTable& c) { return combine_with_swap(c, 1, false); }
CoalgebraTable sym_coproduct(const CoalgebraTable& c) { return combine_with_swap(c, 1, true); }
CoalgebraTable antisym_coproduct(const CoalgebraTable& c) { return combine_with_swap(c, -1, true); }

MapEvaluator::MapEvaluator(const AlgebraTable* product, const CoalgebraTable* coproduct)
    : product_(product), coproduct_(coproduct) {
  if (product_ && coproduct_ && product_->dim() != coproduct_->dim()) {
    throw DimensionError("product and coproduct act on spaces of different dimension");
  }
  dim_ = product_ ? product_->dim() : (coproduct_ ? coproduct_->dim() : 0);
}

LegTensor MapEvaluator::apply_factor(const MapFactor& f, const std::vector<std::size_t>& legs) const {
  using K = MapFactor::Kind;
  LegTensor out;
  switch (f.kind) {
    case K::Id:
      out[legs] = Scalar(1);
      break;
    case K::Tau:
      out[{legs[1], legs[0]}] = Scalar(1);
      break;
    case K::Mu:
      if (!product_) throw InputError("equation uses a product but none is given");
      for (const auto& [k, c] : product_->product(legs[0], legs[1]).entries()) out[{k}] = c;
      break;
    case K::Delta:
      if (!coproduct_) throw InputError("equation uses a coproduct but none is given");
      for (const auto& t : coproduct_->coproduct_of(legs[0])) out[{t.i, t.j}] = t.coefficient;
      break;
    case K::Composite:
      out = apply(*f.composite, LegTensor{{legs, Scalar(1)}});
      break;
  }
  return out;
}

LegTensor MapEvaluator::apply(const MapChain& chain, const LegTensor& input) const {
  LegTensor current = input;
  for (auto stage = chain.stages.rbegin(); stage != chain.stages.rend(); ++stage) {
    LegTensor next;
    for (const auto& [legs, coefficient] : current) {
      // Tensor product of the factor images, built up left to right.
      LegTensor acc{{{}, coefficient}};
      std::size_t at = 0;
      for (const auto& f : *stage) {
        std::vector<std::size_t> slice(legs.begin() + static_cast<std::ptrdiff_t>(at),
                                       legs.begin() + static_cast<std::ptrdiff_t>(at + f.inputs()));
        at += f.inputs();
        const LegTensor image = apply_factor(f, slice);
        LegTensor grown;
        for (const auto& [prefix, c1] : acc) {
          for (const auto& [tail, c2] : image) {
            auto key = prefix;
            key.insert(key.end(), tail.begin(), tail.end());
            grown[std::move(key)] = c1 * c2;
          }
        }
        acc = std::move(grown);
      }
      for (const auto& [key, c] : acc) {
        Scalar& slot = next[key];
        slot += c;
        if (slot.is_zero()) next.erase(key);
      }
    }
    current = std::move(next);
  }
  return current;
}

LegTensor MapEvaluator::apply(const std::vector<MapTerm>& terms, const LegTensor& input) const {
  LegTensor out;
  for (const auto& t : terms) {
    for (const auto& [key, c] : apply(t.chain, input)) {
      Scalar& slot = out[key];
      slot += t.coefficient * c;
      if (slot.is_zero()) out.erase(key);
    }
  }
  return out;
}

Verdict check_map_equation(const MapEvaluator& ev, const MapEquation& eq, std::string name,
                           std::string statement, unsigned workers) {
  const std::size_t n = ev.dim();
  const std::size_t inputs = eq.inputs();
  auto found = parallel_collect(
      tuple_count(n, inputs), workers, [&](std::size_t index) -> std::optional<std::vector<Witness>> {
        const auto input = decode_tuple(index, n, inputs);
        const LegTensor seed{{input, Scalar(1)}};
        const LegTensor lhs = ev.apply(eq.lhs, seed);
        const LegTensor rhs = ev.apply(eq.rhs, seed);
        if (lhs == rhs) return std::nullopt;
        // Group by all output legs except the last.
        std::map<std::vector<std::size_t>, std::pair<Vector, Vector>> groups;
        auto place = [&](const LegTensor& t, bool left) {
          for (const auto& [key, c] : t) {
            std::vector<std::size_t> prefix(key.begin(), key.end() - 1);
            auto [it, fresh] = groups.try_emplace(prefix, Vector(n), Vector(n));
            (left ? it->second.first : it->second.second).set(key.back(), c);
          }
        };
        place(lhs, true);
        place(rhs, false);
        std::vector<Witness> out;
        for (auto& [prefix, sides] : groups) {
          if (sides.first == sides.second) continue;
          Witness w;
          w.tuple = input;
          w.tuple.insert(w.tuple.end(), prefix.begin(), prefix.end());
          w.residual = sides.first - sides.second;
          w.lhs = std::move(sides.first);
          w.rhs = std::move(sides.second);
          out.push_back(std::move(w));
        }
        return out;
      });
  std::vector<Witness> flat;
  for (auto& group : found) {
    for (auto& w : group) flat.push_back(std::move(w));
  }
  return make_verdict(std::move(name), std::move(statement), std::move(flat));
}

const std::map<std::string, std::string>& coalgebra_laws() {
  static const std::map<std::string, std::string> laws = {
      {"co_right", "(id x delta) . delta = (delta x id) . delta + (deltat x id) . delta"},
      {"co_left", "(delta x id) . delta = (id x delta) . delta + (id x deltat) . delta"},
      {"cocommutative", "delta = deltat"},
      {"coassociative", "(delta x id) . delta = (id x delta) . delta"},
      {"co_antisymmetric", "delta = -deltat"},
      {"co_jacobi",
       "(id x delta) . delta + (id x tau) . (delta x id) . delta - (delta x id) . delta = 0"},
      {"eq33a", "(id x delta) . delta = (tau x id) . (id x delta) . delta"},
      {"eq33b", "(id x delta) . delta = (tau x id) . (delta x id) . deltat"},
      {"eq34a", "(delta x id) . delta = (id x tau) . (delta x id) . delta"},
      {"eq34b", "(delta x id) . delta = (id x tau) . (id x delta) . deltat"},
      {"eq35",
       "(id x deltat) . delta = (id x tau) . (delta x id) . delta + "
       "(tau x id) . (id x deltat) . deltat"},
      {"eq36",
       "(delta x id) . deltat = (id x tau) . (delta x id) . delta + "
       "(tau x id) . (id x deltat) . deltat"},
      {"eq37", "(deltat x id) . deltat = (id x delta) . deltat + (id x deltat) . deltat"},
  };
  return laws;
}

Verdict check_coalgebra_law(const CoalgebraTable& c, const std::string& law, unsigned workers) {
  const auto& laws = coalgebra_laws();
  auto it = laws.find(law);
  if (it == laws.end()) throw InputError("unknown coalgebra law '" + law + "'");
  const MapEvaluator ev(nullptr, &c);
  return check_map_equation(ev, parse_map_equation(it->second), law, it->second, workers);
}

Verdict check_co_right(const CoalgebraTable& c, unsigned workers) {
  return check_coalgebra_law(c, "co_right", workers);
}

Verdict check_co_left(const CoalgebraTable& c, unsigned workers) {
  return check_coalgebra_law(c, "co_left", workers);
}

namespace {

Verdict merge(std::string name, const Verdict& a, const Verdict& b) {
  Verdict v;
  v.name = std::move(name);
  v.statement = a.statement + " and " + b.statement;
  v.holds = a.holds && b.holds;
  v.violations = a.violations + b.violations;
  v.witnesses = a.witnesses;
  for (const auto& w : b.witnesses) {
    if (v.witnesses.size() < kMaxWitnesses) v.witnesses.push_back(w);
  }
  return v;
}

}  // namespace

Verdict check_cocomm_coassoc(const CoalgebraTable& c, unsigned workers) {
  return merge("cocomm_coassoc", check_coalgebra_law(c, "cocommutative", workers),
               check_coalgebra_law(c, "coassociative", workers));
}

Verdict check_lie_coalgebra(const CoalgebraTable& c, unsigned workers) {
  return merge("lie_coalgebra", check_coalgebra_law(c, "co_antisymmetric", workers),
               check_coalgebra_law(c, "co_jacobi", workers));
}

namespace {

const char* const kLeftAux[] = {"eq34a", "eq34b"};

void add_aux(AuditReport& report, const CoalgebraTable& c, const std::string& suffix,
             unsigned workers) {
  const bool right = check_co_right(c, workers).holds;
  const bool left = check_co_left(c, workers).holds;
  std::vector<Verdict> verdicts;
  auto run = [&](const char* law, bool requirement, const char* premise) {
    Verdict v = check_coalgebra_law(c, law, workers);
    v.name += suffix;
    if (requirement && !v.holds) {
      report.findings.push_back(v.name + " fails although " + premise + " holds: counterexample " +
                                first_witness(v));
    }
    verdicts.push_back(std::move(v));
  };
  for (const char* law : {"eq33a", "eq33b"}) run(law, right, "co_right");
  for (const char* law : kLeftAux) run(law, left, "co_left");
  for (const char* law : {"eq35", "eq36", "eq37"}) run(law, right, "co_right");
  for (auto& v : verdicts) report.claims.push_back(std::move(v));
}

}  // namespace

AuditReport check_aux_coalgebra_identities(const CoalgebraTable& c, const std::string& subject,
                                           unsigned workers) {
  AuditReport report;
  report.subject = subject + " (dim " + std::to_string(c.dim()) + ")";
  report.kind = "coalgebra";
  report.premises.push_back(check_co_right(c, workers));
  report.claims.push_back(check_co_left(c, workers));
  add_aux(report, c, "", workers);
  add_aux(report, opposite_coproduct(c), "_opposite", workers);
  return report;
}

AuditReport audit_coalgebra(const CoalgebraTable& c, const std::string& subject,
                            unsigned workers) {
  AuditReport report = check_aux_coalgebra_identities(c, subject, workers);
  const bool right = report.premises.front().holds;
  const bool left = report.claims.front().holds;
  const CoalgebraTable opp = opposite_coproduct(c);

  auto push = [&](Verdict v, std::string name, const std::string& what, bool expected) {
    v.name = std::move(name);
    v.statement = what + ": " + v.statement;
    if (expected && !v.holds) {
      report.findings.push_back(v.name + " fails: counterexample " +
                                first_witness(v));
    }
    report.claims.push_back(std::move(v));
  };
  push(check_co_left(opp, workers), "opposite_co_left", "opposite coalgebra", right);
  push(check_co_right(opp, workers), "opposite_co_right", "opposite coalgebra", left);
  push(check_cocomm_coassoc(sym_coproduct(c), workers), "sym_cocomm_coassoc",
       "delta + tau delta", right || left);
  push(check_lie_coalgebra(antisym_coproduct(c), workers), "antisym_lie_coalgebra",
       "delta - tau delta", right || left);
  return report;
}

}  // namespace zinbiel
