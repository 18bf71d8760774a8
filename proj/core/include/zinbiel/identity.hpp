#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/verdict.hpp"

namespace zinbiel {

/// Syntax error in one of the small languages; `position` is a 0-based
/// offset into the source text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A parenthesized monomial: either a variable (by index into the owning
/// identity's variable list) or an ordered product of two subtrees.
class ProductTree {
 public:
  static ProductTree leaf(std::size_t variable);
  static ProductTree node(ProductTree left, ProductTree right);

  bool is_leaf() const { return node_ == nullptr; }
  std::size_t variable() const { return variable_; }
  const ProductTree& left() const;
  const ProductTree& right() const;

  /// Appends each variable occurrence in left-to-right order.
  void collect_variables(std::vector<std::size_t>& out) const;

  friend bool operator==(const ProductTree& a, const ProductTree& b);

 private:
  struct Node;
  std::size_t variable_ = 0;
  std::shared_ptr<const Node> node_;
};

struct ProductTree::Node {
  ProductTree left;
  ProductTree right;
};

inline const ProductTree& ProductTree::left() const { return node_->left; }
inline const ProductTree& ProductTree::right() const { return node_->right; }

enum class Side { Lhs, Rhs };

struct IdentityTerm {
  Scalar coefficient;
  ProductTree tree;
  Side side = Side::Lhs;

  friend bool operator==(const IdentityTerm&, const IdentityTerm&) = default;
};

/// Multilinear law sum(lhs terms) = sum(rhs terms). Every term uses every
/// declared variable exactly once.
class Identity {
 public:
  Identity(std::vector<std::string> variables, std::vector<IdentityTerm> terms);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<IdentityTerm>& terms() const { return terms_; }
  std::size_t arity() const { return variables_.size(); }

  friend bool operator==(const Identity&, const Identity&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<IdentityTerm> terms_;
};

/// Grammar (whitespace-insensitive):
///   identity := [ "forall" VAR+ ":" ] side [ "=" side ]
///   side     := "0" | [sign] term { sign term }
///   term     := [ RATIONAL "*" ] tree
///   tree     := VAR | "(" tree tree ")"
/// Without "forall", variables are declared in order of first appearance.
/// A missing right side means "= 0".
Identity parse_identity(std::string_view source);

/// Canonical text, always with an explicit "forall" prefix; parses back to
/// an equal Identity.
std::string to_string(const Identity& identity);
std::string to_string(const ProductTree& tree, const std::vector<std::string>& variables);

/// Replaces every product (a b) by the bracket (a b) - (b a). Evaluating the
/// result on A equals evaluating the original on commutator(A).
Identity expand_bracket(const Identity& identity);

/// A basis assignment at which the identity fails.
struct Residual {
  std::vector<std::size_t> assignment;
  Vector value;
  Vector lhs;
  Vector rhs;
};

/// Evaluates the tree with e_{assignment[v]} substituted for variable v.
Vector evaluate_tree(const AlgebraTable& a, const ProductTree& tree,
                     const std::vector<std::size_t>& assignment);

/// Residual at an arbitrary vector assignment (linear extension).
Vector evaluate_at(const AlgebraTable& a, const Identity& identity,
                   const std::vector<Vector>& values);

/// All violating basis assignments in lexicographic order. Empty exactly
/// when the identity holds on A.
std::vector<Residual> evaluate(const AlgebraTable& a, const Identity& identity,
                               unsigned workers = 1);

/// Convenience: evaluate and fold into a named verdict.
Verdict check_identity(const AlgebraTable& a, const Identity& identity, std::string name,
                       unsigned workers = 1);

}  // namespace zinbiel
