#include "zinbiel/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace zinbiel {

using nlohmann::json;

namespace {

// ---- writing ----

json entry(std::initializer_list<std::size_t> idx, const Scalar& v) {
  json e = json::array();
  for (auto i : idx) e.push_back(i);
  e.push_back(v.str());
  return e;
}

json algebra_json(const AlgebraTable& a) {
  json j;
  j["kind"] = "algebra";
  j["dim"] = a.dim();
  j["basis"] = a.basis_labels();
  json s = json::array();
  for (const auto& [k, v] : a.constants().entries()) s.push_back(entry({k[0], k[1], k[2]}, v));
  j["structure"] = std::move(s);
  return j;
}

json family_json(const std::vector<Matrix>& family) {
  json out = json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (const auto& [k, v] : family[i].entries()) out.push_back(entry({i, k.first, k.second}, v));
  }
  return out;
}

json coalgebra_json(const CoalgebraTable& c) {
  json j;
  j["kind"] = "coalgebra";
  j["dim"] = c.dim();
  json d = json::array();
  for (const auto& [k, v] : c.coproduct().entries()) d.push_back(entry({k[0], k[1], k[2]}, v));
  j["coproduct"] = std::move(d);
  return j;
}

json bimodule_json(const Bimodule& b) {
  json j;
  j["kind"] = "bimodule";
  j["algebra"] = algebra_json(b.base());
  j["v_dim"] = b.v_dim();
  j["l"] = family_json(b.l());
  j["r"] = family_json(b.r());
  return j;
}

json matched_pair_json(const MatchedPairData& mp) {
  json j;
  j["kind"] = "matched_pair";
  j["A"] = algebra_json(mp.A);
  j["B"] = algebra_json(mp.B);
  j["lA"] = family_json(mp.lA);
  j["rA"] = family_json(mp.rA);
  j["lB"] = family_json(mp.lB);
  j["rB"] = family_json(mp.rB);
  return j;
}

json candidate_json(const BialgebraCandidate& bc) {
  json j;
  j["kind"] = "bialgebra_candidate";
  j["A"] = algebra_json(bc.A);
  j["Astar"] = algebra_json(bc.Astar);
  return j;
}

bool is_entry_list(const json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& e : j) {
    if (!e.is_array()) return false;
  }
  return true;
}

// Objects one key per line, entry lists one entry per line, everything else compact.
void pretty(const json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += inner + json(key).dump() + ": ";
      pretty(value, indent + 2, out);
    }
    out += "\n" + pad + "}";
  } else if (is_entry_list(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner + j[i].dump();
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

std::string render(const json& j) {
  std::string out;
  pretty(j, 0, out);
  return out + "\n";
}

// ---- reading ----

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t count_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_unsigned()) bad(where, std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

void expect_kind(const json& j, const std::string& kind, const std::string& where, bool required) {
  if (!j.is_object()) bad(where, "expected a JSON object");
  auto it = j.find("kind");
  if (it == j.end()) {
    if (required) bad(where, "missing field \"kind\"");
    return;
  }
  if (!it->is_string() || it->get<std::string>() != kind) {
    bad(where, "expected kind \"" + kind + "\", got " + it->dump());
  }
}

Scalar coefficient(const json& v, const std::string& where) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer()) {
    try {
      return Scalar::parse(v.dump());
    } catch (const InputError&) {
      bad(where, "bad coefficient " + v.dump());
    }
  }
  bad(where, "coefficient must be a string \"p/q\" or an integer, got " + v.dump());
}

template <std::size_t N>
std::vector<std::pair<std::array<std::size_t, N>, Scalar>> entries(
    const json& j, const char* key, const std::array<std::size_t, N>& bounds,
    const std::string& where) {
  const json& list = field(j, key, where);
  const std::string at = where + "." + key;
  if (!list.is_array()) bad(at, "expected an array of entries");
  std::vector<std::pair<std::array<std::size_t, N>, Scalar>> out;
  std::set<std::array<std::size_t, N>> seen;
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != N + 1) {
      bad(at, "each entry must have " + std::to_string(N) + " indices and a value: " + e.dump());
    }
    std::array<std::size_t, N> idx{};
    for (std::size_t p = 0; p < N; ++p) {
      if (!e[p].is_number_unsigned()) bad(at, "index must be a nonnegative integer: " + e.dump());
      idx[p] = e[p].get<std::size_t>();
      if (idx[p] >= bounds[p]) bad(at, "index out of range: " + e.dump());
    }
    if (!seen.insert(idx).second) bad(at, "duplicate entry: " + e.dump());
    Scalar v = coefficient(e[N], at);
    if (!v.is_zero()) out.emplace_back(idx, std::move(v));
  }
  return out;
}

AlgebraTable algebra_from(const json& j, const std::string& where, bool kind_required) {
  expect_kind(j, "algebra", where, kind_required);
  const std::size_t n = count_field(j, "dim", where);
  std::vector<std::string> labels;
  if (auto it = j.find("basis"); it != j.end()) {
    if (!it->is_array()) bad(where, "\"basis\" must be an array of strings");
    for (const auto& l : *it) {
      if (!l.is_string()) bad(where, "\"basis\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != n) bad(where, "\"basis\" has " + std::to_string(labels.size()) +
                                           " labels for dimension " + std::to_string(n));
  }
  Tensor3 t(n, n, n);
  for (auto& [k, v] : entries<3>(j, "structure", {n, n, n}, where)) t.set(k, v);
  return AlgebraTable(n, std::move(t), std::move(labels));
}

CoalgebraTable coalgebra_from(const json& j, const std::string& where) {
  expect_kind(j, "coalgebra", where, true);
  const std::size_t n = count_field(j, "dim", where);
  Tensor3 d(n, n, n);
  for (auto& [k, v] : entries<3>(j, "coproduct", {n, n, n}, where)) d.set(k, v);
  return CoalgebraTable(n, std::move(d));
}

std::vector<Matrix> family_from(const json& j, const char* key, std::size_t count, std::size_t m,
                                const std::string& where) {
  std::vector<Matrix> out(count, Matrix(m, m));
  for (auto& [k, v] : entries<3>(j, key, {count, m, m}, where)) out[k[0]].set(k[1], k[2], v);
  return out;
}

Bimodule bimodule_from(const json& j, const std::string& where) {
  expect_kind(j, "bimodule", where, true);
  AlgebraTable a = algebra_from(field(j, "algebra", where), where + ".algebra", false);
  const std::size_t m = count_field(j, "v_dim", where);
  auto l = family_from(j, "l", a.dim(), m, where);
  auto r = family_from(j, "r", a.dim(), m, where);
  return Bimodule(std::move(a), m, std::move(l), std::move(r));
}

MatchedPairData matched_pair_from(const json& j, const std::string& where) {
  expect_kind(j, "matched_pair", where, true);
  AlgebraTable a = algebra_from(field(j, "A", where), where + ".A", false);
  AlgebraTable b = algebra_from(field(j, "B", where), where + ".B", false);
  const std::size_t n = a.dim();
  const std::size_t p = b.dim();
  MatchedPairData mp{a,
                     b,
                     family_from(j, "lA", n, p, where),
                     family_from(j, "rA", n, p, where),
                     family_from(j, "lB", p, n, where),
                     family_from(j, "rB", p, n, where)};
  return mp;
}

BialgebraCandidate candidate_from(const json& j, const std::string& where) {
  expect_kind(j, "bialgebra_candidate", where, true);
  BialgebraCandidate bc{algebra_from(field(j, "A", where), where + ".A", false),
                        algebra_from(field(j, "Astar", where), where + ".Astar", false)};
  if (bc.A.dim() != bc.Astar.dim()) bad(where, "A and Astar must have the same dimension");
  return bc;
}

template <typename Fn>
auto guarded(Fn fn) {
  try {
    return fn();
  } catch (const DimensionError& e) {
    throw InputError(e.what());
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON content: ") + e.what());
  }
}

}  // namespace

std::string to_json(const AlgebraTable& a) { return render(algebra_json(a)); }
std::string to_json(const CoalgebraTable& c) { return render(coalgebra_json(c)); }
std::string to_json(const Bimodule& b) { return render(bimodule_json(b)); }
std::string to_json(const MatchedPairData& mp) { return render(matched_pair_json(mp)); }
std::string to_json(const BialgebraCandidate& bc) { return render(candidate_json(bc)); }
std::string to_json(const AnyObject& object) {
  return std::visit([](const auto& o) { return to_json(o); }, object);
}

AlgebraTable algebra_from_json(std::string_view text) {
  return guarded([&] { return algebra_from(parse_text(text), "algebra", true); });
}
CoalgebraTable coalgebra_from_json(std::string_view text) {
  return guarded([&] { return coalgebra_from(parse_text(text), "coalgebra"); });
}
Bimodule bimodule_from_json(std::string_view text) {
  return guarded([&] { return bimodule_from(parse_text(text), "bimodule"); });
}
MatchedPairData matched_pair_from_json(std::string_view text) {
  return guarded([&] { return matched_pair_from(parse_text(text), "matched_pair"); });
}
BialgebraCandidate candidate_from_json(std::string_view text) {
  return guarded([&] { return candidate_from(parse_text(text), "bialgebra_candidate"); });
}

AnyObject load_any(std::string_view text) {
  return guarded([&]() -> AnyObject {
    const json j = parse_text(text);
    const json& kind = field(j, "kind", "object");
    if (!kind.is_string()) bad("object", "\"kind\" must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "algebra") return algebra_from(j, k, true);
    if (k == "coalgebra") return coalgebra_from(j, k);
    if (k == "bimodule") return bimodule_from(j, k);
    if (k == "matched_pair") return matched_pair_from(j, k);
    if (k == "bialgebra_candidate") return candidate_from(j, k);
    bad("object", "unknown kind \"" + k + "\"");
  });
}

std::string kind_of(const AnyObject& object) {
  static const char* names[] = {"algebra", "coalgebra", "bimodule", "matched_pair",
                                "bialgebra_candidate"};
  return names[object.index()];
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace zinbiel
