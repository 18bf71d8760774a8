#include "zinbiel/catalog.hpp"

#include "zinbiel/tensor_map.hpp"

namespace zinbiel {

namespace {

CatalogEntry from_dsl(std::string name, std::string source, std::string description) {
  Identity id = parse_identity(source);
  return CatalogEntry{std::move(name), std::move(source), std::move(description), std::move(id)};
}

CatalogEntry from_map(std::string name, std::string source, std::string description) {
  Identity id = expand_to_identity(parse_map_equation(source));
  return CatalogEntry{std::move(name), std::move(source), std::move(description), std::move(id)};
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;
  c.push_back(from_dsl("left_zinbiel", "forall x y z: ((x y) z) = (x (y z)) + (x (z y))",
                       "left Zinbiel law"));
  c.push_back(from_dsl("right_zinbiel", "forall x y z: (x (y z)) = ((x y) z) + ((y x) z)",
                       "right Zinbiel law"));
  c.push_back(from_dsl("left_associator_form",
                       "forall x y z: ((x y) z) - (x (y z)) = (x (z y))",
                       "associator form of the left law: (x,y,z) = x*(z*y)"));
  c.push_back(from_dsl("right_associator_form",
                       "forall x y z: ((x y) z) - (x (y z)) = -((y x) z)",
                       "associator form of the right law: (x,y,z) = -(y*x)*z"));

  c.push_back(from_dsl("left_relation", "forall x y z: (x (y z)) = (y (x z))",
                       "x*(y*z) = y*(x*z)"));
  c.push_back(from_map("eq10", "mu . (id x mu) = mu . (id x mu) . (tau x id)",
                       "tensor form of x*(y*z) = y*(x*z)"));
  c.push_back(from_map("eq11", "mu . (id x mu) = mut . (mu x id) . (id x tau)",
                       "second tensor form of x*(y*z) = y*(x*z)"));
  c.push_back(from_dsl("right_relation", "forall x y z: ((x y) z) = ((x z) y)",
                       "(x*y)*z = (x*z)*y"));
  c.push_back(from_map("eq13", "mu . (mu x id) = mu . (mu x id) . (id x tau)",
                       "tensor form of (x*y)*z = (x*z)*y"));
  c.push_back(from_map("eq14", "mu . (mu x id) = mut . (id x mu) . (tau x id)",
                       "second tensor form of (x*y)*z = (x*z)*y"));

  c.push_back(from_map(
      "eq15", "mu . (id x mut) = mu . (mu x id) . (id x tau) + mut . (id x mut) . (tau x id)",
      "auxiliary tensor identity 1"));
  c.push_back(from_map(
      "eq16", "mut . (mu x id) = mu . (mu x id) . (id x tau) + mut . (id x mut) . (tau x id)",
      "auxiliary tensor identity 2"));
  c.push_back(from_map("eq17", "mut . (mut x id) = mut . (id x mu) + mut . (id x mut)",
                       "auxiliary tensor identity 3"));
  c.push_back(from_map("eq18", "mu . (id x mu) = mu . (id x mu) . (tau x id)",
                       "auxiliary tensor identity 4"));

  c.push_back(from_dsl("commutative", "forall x y: (x y) = (y x)", "commutativity"));
  c.push_back(from_dsl("associative", "forall x y z: ((x y) z) = (x (y z))", "associativity"));
  c.push_back(from_dsl("jacobi", "forall x y z: (x (y z)) + (y (z x)) + (z (x y)) = 0",
                       "Jacobi identity of the product itself"));
  c.push_back(from_dsl("center_symmetric",
                       "forall x y z: ((x y) z) - (x (y z)) = ((z y) x) - (z (y x))",
                       "associator symmetry (x,y,z) = (z,y,x)"));

  const Identity& jacobi = c[c.size() - 2].identity;
  Identity lie = expand_bracket(jacobi);
  c.push_back(CatalogEntry{"lie_admissible", to_string(lie),
                           "Jacobi identity of the bracket x*y - y*x", std::move(lie)});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const std::map<std::string, Identity>& catalog() {
  static const std::map<std::string, Identity> by_name = [] {
    std::map<std::string, Identity> m;
    for (const auto& e : catalog_entries()) m.emplace(e.name, e.identity);
    return m;
  }();
  return by_name;
}

const Identity& catalog_identity(const std::string& name) {
  const auto& c = catalog();
  auto it = c.find(name);
  if (it == c.end()) throw InputError("unknown identity '" + name + "'");
  return it->second;
}

}  // namespace zinbiel
