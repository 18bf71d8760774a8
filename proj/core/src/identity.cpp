#include "zinbiel/identity.hpp"

#include <algorithm>
#include <map>

#include "lexer.hpp"
#include "zinbiel/parallel.hpp"

namespace zinbiel {

using detail::Lexer;
using detail::Tok;

ParseError::ParseError(const std::string& message, std::size_t position)
    : InputError(message + " at position " + std::to_string(position)), position_(position) {}

// ---------------------------------------------------------------- trees

ProductTree ProductTree::leaf(std::size_t variable) {
  ProductTree t;
  t.variable_ = variable;
  return t;
}

ProductTree ProductTree::node(ProductTree left, ProductTree right) {
  ProductTree t;
  t.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right)});
  return t;
}

void ProductTree::collect_variables(std::vector<std::size_t>& out) const {
  if (is_leaf()) {
    out.push_back(variable_);
    return;
  }
  left().collect_variables(out);
  right().collect_variables(out);
}

bool operator==(const ProductTree& a, const ProductTree& b) {
  if (a.is_leaf() || b.is_leaf()) {
    return a.is_leaf() && b.is_leaf() && a.variable_ == b.variable_;
  }
  return a.left() == b.left() && a.right() == b.right();
}

// ---------------------------------------------------------------- identity

namespace {

// Checks that a term uses every declared variable exactly once; returns an
// error message or an empty string.
std::string multilinearity_error(const ProductTree& tree,
                                 const std::vector<std::string>& variables) {
  std::vector<std::size_t> seen;
  tree.collect_variables(seen);
  std::vector<int> count(variables.size(), 0);
  for (std::size_t v : seen) {
    if (v >= variables.size()) return "undeclared variable index " + std::to_string(v);
    if (++count[v] > 1) return "variable '" + variables[v] + "' appears twice in one term";
  }
  for (std::size_t v = 0; v < variables.size(); ++v) {
    if (count[v] == 0) return "term is missing variable '" + variables[v] + "'";
  }
  return {};
}

}  // namespace

Identity::Identity(std::vector<std::string> variables, std::vector<IdentityTerm> terms)
    : variables_(std::move(variables)), terms_(std::move(terms)) {
  if (terms_.empty()) throw InputError("identity needs at least one term");
  for (const auto& term : terms_) {
    if (auto err = multilinearity_error(term.tree, variables_); !err.empty()) {
      throw InputError(err);
    }
  }
}

namespace {

class IdentityParser {
 public:
  explicit IdentityParser(std::string_view src) : lex_(src) {}

  Identity parse() {
    if (lex_.peek().kind == Tok::Name && lex_.peek().text == "forall") {
      lex_.next();
      while (lex_.peek().kind == Tok::Name) {
        const auto tok = lex_.next();
        if (index_.contains(std::string(tok.text))) {
          throw ParseError("variable '" + std::string(tok.text) + "' declared twice", tok.pos);
        }
        declare(std::string(tok.text));
      }
      if (variables_.empty()) lex_.fail("expected variable list after 'forall'");
      lex_.expect(Tok::Colon, "':' after variable list");
      declared_ = true;
    }
    side(Side::Lhs);
    if (lex_.accept(Tok::Equals)) side(Side::Rhs);
    if (lex_.peek().kind != Tok::End) lex_.fail("expected end of identity");
    if (terms_.empty()) throw ParseError("identity has no terms", 0);

    for (std::size_t t = 0; t < terms_.size(); ++t) {
      if (auto err = multilinearity_error(terms_[t].tree, variables_); !err.empty()) {
        throw ParseError("arity error: " + err, term_pos_[t]);
      }
    }
    return Identity(variables_, terms_);
  }

 private:
  void declare(std::string name) {
    index_.emplace(name, variables_.size());
    variables_.push_back(std::move(name));
  }

  void side(Side which) {
    // A lone "0" is the empty sum.
    if (lex_.peek().kind == Tok::Number && lex_.peek().text.find_first_not_of('0') ==
                                               std::string_view::npos) {
      const auto save = lex_.peek();
      Scalar zero = lex_.rational();
      (void)zero;
      if (lex_.peek().kind == Tok::Equals || lex_.peek().kind == Tok::End) return;
      throw ParseError("a zero coefficient is not allowed", save.pos);
    }
    Scalar sign(1);
    if (lex_.accept(Tok::Minus)) {
      sign = Scalar(-1);
    } else {
      lex_.accept(Tok::Plus);
    }
    term(which, sign);
    for (;;) {
      if (lex_.accept(Tok::Plus)) {
        term(which, Scalar(1));
      } else if (lex_.accept(Tok::Minus)) {
        term(which, Scalar(-1));
      } else {
        break;
      }
    }
  }

  void term(Side which, Scalar coefficient) {
    const std::size_t pos = lex_.peek().pos;
    if (lex_.peek().kind == Tok::Number) {
      const auto at = lex_.peek();
      Scalar c = lex_.rational();
      if (c.is_zero()) throw ParseError("a zero coefficient is not allowed", at.pos);
      lex_.expect(Tok::Star, "'*' after coefficient");
      coefficient *= c;
    }
    ProductTree t = tree();
    term_pos_.push_back(pos);
    terms_.push_back(IdentityTerm{coefficient, std::move(t), which});
  }

  ProductTree tree() {
    if (lex_.peek().kind == Tok::Name) {
      const auto tok = lex_.next();
      const std::string name(tok.text);
      if (name == "forall") throw ParseError("'forall' is reserved", tok.pos);
      auto it = index_.find(name);
      if (it == index_.end()) {
        if (declared_) throw ParseError("undeclared variable '" + name + "'", tok.pos);
        declare(name);
        it = index_.find(name);
      }
      return ProductTree::leaf(it->second);
    }
    lex_.expect(Tok::LParen, "variable or '('");
    ProductTree left = tree();
    ProductTree right = tree();
    lex_.expect(Tok::RParen, "')'");
    return ProductTree::node(std::move(left), std::move(right));
  }

  Lexer lex_;
  bool declared_ = false;
  std::vector<std::string> variables_;
  std::map<std::string, std::size_t> index_;
  std::vector<IdentityTerm> terms_;
  std::vector<std::size_t> term_pos_;
};

}  // namespace

Identity parse_identity(std::string_view source) { return IdentityParser(source).parse(); }

std::string to_string(const ProductTree& tree, const std::vector<std::string>& variables) {
  if (tree.is_leaf()) return variables.at(tree.variable());
  return "(" + to_string(tree.left(), variables) + " " + to_string(tree.right(), variables) +
         ")";
}

std::string to_string(const Identity& identity) {
  std::string out = "forall";
  for (const auto& v : identity.variables()) out += " " + v;
  out += ":";
  auto side = [&](Side which) {
    std::string s;
    bool first = true;
    for (const auto& term : identity.terms()) {
      if (term.side != which) continue;
      const bool negative = term.coefficient.sign() < 0;
      if (first) {
        s += negative ? " -" : " ";
      } else {
        s += negative ? " - " : " + ";
      }
      const Scalar mag = term.coefficient.abs();
      if (!mag.is_one()) s += mag.str() + " * ";
      s += to_string(term.tree, identity.variables());
      first = false;
    }
    return first ? std::string(" 0") : s;
  };
  out += side(Side::Lhs);
  out += " =";
  out += side(Side::Rhs);
  return out;
}

namespace {

std::vector<std::pair<int, ProductTree>> bracket_expansion(const ProductTree& tree) {
  if (tree.is_leaf()) return {{1, tree}};
  std::vector<std::pair<int, ProductTree>> out;
  for (const auto& [s1, l] : bracket_expansion(tree.left())) {
    for (const auto& [s2, r] : bracket_expansion(tree.right())) {
      out.emplace_back(s1 * s2, ProductTree::node(l, r));
      out.emplace_back(-s1 * s2, ProductTree::node(r, l));
    }
  }
  return out;
}

}  // namespace

Identity expand_bracket(const Identity& identity) {
  std::vector<IdentityTerm> terms;
  for (const auto& term : identity.terms()) {
    for (const auto& [sign, tree] : bracket_expansion(term.tree)) {
      terms.push_back(IdentityTerm{Scalar(sign) * term.coefficient, tree, term.side});
    }
  }
  return Identity(identity.variables(), std::move(terms));
}

// ---------------------------------------------------------------- evaluation

Vector evaluate_tree(const AlgebraTable& a, const ProductTree& tree,
                     const std::vector<std::size_t>& assignment) {
  if (tree.is_leaf()) return Vector::basis(a.dim(), assignment.at(tree.variable()));
  // Products of two basis vectors come straight from the table.
  if (tree.left().is_leaf() && tree.right().is_leaf()) {
    return a.product(assignment.at(tree.left().variable()),
                     assignment.at(tree.right().variable()));
  }
  return multiply(a, evaluate_tree(a, tree.left(), assignment),
                  evaluate_tree(a, tree.right(), assignment));
}

namespace {

Vector evaluate_tree_at(const AlgebraTable& a, const ProductTree& tree,
                        const std::vector<Vector>& values) {
  if (tree.is_leaf()) return values.at(tree.variable());
  return multiply(a, evaluate_tree_at(a, tree.left(), values),
                  evaluate_tree_at(a, tree.right(), values));
}

}  // namespace

Vector evaluate_at(const AlgebraTable& a, const Identity& identity,
                   const std::vector<Vector>& values) {
  if (values.size() != identity.arity()) {
    throw DimensionError("evaluate_at: expected " + std::to_string(identity.arity()) +
                         " values");
  }
  Vector out(a.dim());
  for (const auto& term : identity.terms()) {
    Vector v = term.coefficient * evaluate_tree_at(a, term.tree, values);
    if (term.side == Side::Lhs) {
      out += v;
    } else {
      out -= v;
    }
  }
  return out;
}

std::vector<Residual> evaluate(const AlgebraTable& a, const Identity& identity,
                               unsigned workers) {
  const std::size_t n = a.dim();
  const std::size_t k = identity.arity();
  const std::size_t count = n == 0 ? 0 : tuple_count(n, k);
  return parallel_collect(count, workers, [&](std::size_t index) -> std::optional<Residual> {
    auto tuple = decode_tuple(index, n, k);
    Vector lhs(n);
    Vector rhs(n);
    for (const auto& term : identity.terms()) {
      Vector v = term.coefficient * evaluate_tree(a, term.tree, tuple);
      if (term.side == Side::Lhs) {
        lhs += v;
      } else {
        rhs += v;
      }
    }
    Vector value = lhs - rhs;
    if (value.is_zero()) return std::nullopt;
    return Residual{std::move(tuple), std::move(value), std::move(lhs), std::move(rhs)};
  });
}

Verdict check_identity(const AlgebraTable& a, const Identity& identity, std::string name,
                       unsigned workers) {
  std::vector<Witness> violations;
  for (auto& r : evaluate(a, identity, workers)) {
    violations.push_back(Witness{std::move(r.assignment), std::move(r.lhs), std::move(r.rhs),
                                 std::move(r.value)});
  }
  return make_verdict(std::move(name), to_string(identity), std::move(violations));
}

}  // namespace zinbiel
