#include "zinbiel/tensor_map.hpp"

#include "lexer.hpp"

namespace zinbiel {

using detail::Lexer;
using detail::Tok;

std::size_t MapFactor::inputs() const {
  switch (kind) {
    case Kind::Id: return 1;
    case Kind::Tau: return 2;
    case Kind::Mu: return 2;
    case Kind::Delta: return 1;
    case Kind::Composite: return composite->inputs();
  }
  return 0;
}

std::size_t MapFactor::outputs() const {
  switch (kind) {
    case Kind::Id: return 1;
    case Kind::Tau: return 2;
    case Kind::Mu: return 1;
    case Kind::Delta: return 2;
    case Kind::Composite: return composite->outputs();
  }
  return 0;
}

namespace {

std::size_t stage_inputs(const std::vector<MapFactor>& stage) {
  std::size_t n = 0;
  for (const auto& f : stage) n += f.inputs();
  return n;
}

std::size_t stage_outputs(const std::vector<MapFactor>& stage) {
  std::size_t n = 0;
  for (const auto& f : stage) n += f.outputs();
  return n;
}

template <typename Pred>
bool any_factor(const MapChain& chain, Pred pred) {
  for (const auto& stage : chain.stages) {
    for (const auto& f : stage) {
      if (pred(f)) return true;
      if (f.kind == MapFactor::Kind::Composite && any_factor(*f.composite, pred)) return true;
    }
  }
  return false;
}

}  // namespace

std::size_t MapChain::inputs() const { return stage_inputs(stages.back()); }
std::size_t MapChain::outputs() const { return stage_outputs(stages.front()); }

bool MapChain::uses_product() const {
  return any_factor(*this, [](const MapFactor& f) { return f.kind == MapFactor::Kind::Mu; });
}

bool MapChain::uses_coproduct() const {
  return any_factor(*this, [](const MapFactor& f) { return f.kind == MapFactor::Kind::Delta; });
}

std::size_t MapEquation::inputs() const {
  return lhs.empty() ? rhs.front().chain.inputs() : lhs.front().chain.inputs();
}

std::size_t MapEquation::outputs() const {
  return lhs.empty() ? rhs.front().chain.outputs() : lhs.front().chain.outputs();
}

namespace {

MapFactor simple(MapFactor::Kind kind) { return MapFactor{kind, nullptr}; }

MapFactor twisted(MapFactor::Kind inner, bool twist_after) {
  // mut = mu . tau ; deltat = tau . delta
  MapChain c;
  if (twist_after) {
    c.stages = {{simple(MapFactor::Kind::Tau)}, {simple(inner)}};
  } else {
    c.stages = {{simple(inner)}, {simple(MapFactor::Kind::Tau)}};
  }
  return MapFactor{MapFactor::Kind::Composite, std::make_shared<const MapChain>(std::move(c))};
}

class MapParser {
 public:
  explicit MapParser(std::string_view src) : lex_(src) {}

  MapEquation parse() {
    MapEquation eq;
    eq.lhs = sum();
    if (lex_.accept(Tok::Equals)) eq.rhs = sum();
    if (lex_.peek().kind != Tok::End) lex_.fail("expected end of equation");
    if (eq.lhs.empty() && eq.rhs.empty()) throw ParseError("equation has no terms", 0);
    return eq;
  }

 private:
  std::vector<MapTerm> sum() {
    std::vector<MapTerm> terms;
    if (lex_.peek().kind == Tok::Number &&
        lex_.peek().text.find_first_not_of('0') == std::string_view::npos) {
      lex_.next();
      return terms;
    }
    Scalar sign(1);
    if (lex_.accept(Tok::Minus)) {
      sign = Scalar(-1);
    } else {
      lex_.accept(Tok::Plus);
    }
    terms.push_back(term(sign));
    for (;;) {
      if (lex_.accept(Tok::Plus)) {
        terms.push_back(term(Scalar(1)));
      } else if (lex_.accept(Tok::Minus)) {
        terms.push_back(term(Scalar(-1)));
      } else {
        break;
      }
    }
    return terms;
  }

  MapTerm term(Scalar coefficient) {
    const std::size_t pos = lex_.peek().pos;
    if (lex_.peek().kind == Tok::Number) {
      const auto at = lex_.peek();
      Scalar c = lex_.rational();
      if (c.is_zero()) throw ParseError("a zero coefficient is not allowed", at.pos);
      lex_.expect(Tok::Star, "'*' after coefficient");
      coefficient *= c;
    }
    MapChain c = chain();
    if (!arity_set_) {
      inputs_ = c.inputs();
      outputs_ = c.outputs();
      arity_set_ = true;
    } else if (c.inputs() != inputs_ || c.outputs() != outputs_) {
      throw ParseError("term maps " + std::to_string(c.inputs()) + " -> " +
                           std::to_string(c.outputs()) + " tensor factors, expected " +
                           std::to_string(inputs_) + " -> " + std::to_string(outputs_),
                       pos);
    }
    return MapTerm{coefficient, std::move(c)};
  }

  MapChain chain() {
    MapChain c;
    c.stages.push_back(stage());
    while (lex_.peek().kind == Tok::Dot) {
      const std::size_t pos = lex_.next().pos;
      auto next = stage();
      if (stage_inputs(c.stages.back()) != stage_outputs(next)) {
        throw ParseError("composition mismatch: stage produces " +
                             std::to_string(stage_outputs(next)) + " factors but " +
                             std::to_string(stage_inputs(c.stages.back())) + " are consumed",
                         pos);
      }
      c.stages.push_back(std::move(next));
    }
    return c;
  }

  std::vector<MapFactor> stage() {
    std::vector<MapFactor> s;
    s.push_back(factor());
    while (lex_.peek().kind == Tok::Name && lex_.peek().text == "x") {
      lex_.next();
      s.push_back(factor());
    }
    return s;
  }

  MapFactor factor() {
    if (lex_.accept(Tok::LParen)) {
      MapChain inner = chain();
      lex_.expect(Tok::RParen, "')'");
      if (inner.stages.size() == 1 && inner.stages.front().size() == 1) {
        return inner.stages.front().front();
      }
      return MapFactor{MapFactor::Kind::Composite,
                       std::make_shared<const MapChain>(std::move(inner))};
    }
    const auto tok = lex_.expect(Tok::Name, "map name or '('");
    using K = MapFactor::Kind;
    if (tok.text == "id") return simple(K::Id);
    if (tok.text == "tau") return simple(K::Tau);
    if (tok.text == "mu") return simple(K::Mu);
    if (tok.text == "delta") return simple(K::Delta);
    if (tok.text == "mut") return twisted(K::Mu, false);
    if (tok.text == "deltat") return twisted(K::Delta, true);
    throw ParseError("unknown map '" + std::string(tok.text) + "'", tok.pos);
  }

  Lexer lex_;
  bool arity_set_ = false;
  std::size_t inputs_ = 0;
  std::size_t outputs_ = 0;
};

// Applies a chain to a list of trees (product-only maps are monomial, so the
// result is a single list).
std::vector<ProductTree> apply_chain(const MapChain& chain, std::vector<ProductTree> values);

std::vector<ProductTree> apply_factor(const MapFactor& f, std::vector<ProductTree> in) {
  using K = MapFactor::Kind;
  switch (f.kind) {
    case K::Id: return in;
    case K::Tau: return {in[1], in[0]};
    case K::Mu: return {ProductTree::node(in[0], in[1])};
    case K::Delta: throw InputError("coproduct in a product-only equation");
    case K::Composite: return apply_chain(*f.composite, std::move(in));
  }
  return {};
}

std::vector<ProductTree> apply_chain(const MapChain& chain, std::vector<ProductTree> values) {
  for (auto stage = chain.stages.rbegin(); stage != chain.stages.rend(); ++stage) {
    std::vector<ProductTree> next;
    std::size_t at = 0;
    for (const auto& f : *stage) {
      std::vector<ProductTree> slice(values.begin() + static_cast<std::ptrdiff_t>(at),
                                     values.begin() + static_cast<std::ptrdiff_t>(at + f.inputs()));
      at += f.inputs();
      for (auto& t : apply_factor(f, std::move(slice))) next.push_back(std::move(t));
    }
    values = std::move(next);
  }
  return values;
}

}  // namespace

MapEquation parse_map_equation(std::string_view source) { return MapParser(source).parse(); }

Identity expand_to_identity(const MapEquation& equation) {
  if (equation.outputs() != 1) {
    throw InputError("only equations with a single output expand to element form");
  }
  const std::size_t n = equation.inputs();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(n <= 3 ? std::string(1, "xyz"[i]) : "v" + std::to_string(i));
  }
  std::vector<ProductTree> inputs;
  for (std::size_t i = 0; i < n; ++i) inputs.push_back(ProductTree::leaf(i));

  std::vector<IdentityTerm> terms;
  auto emit = [&](const std::vector<MapTerm>& side, Side which) {
    for (const auto& t : side) {
      if (t.chain.uses_coproduct()) throw InputError("coproduct in a product-only equation");
      auto out = apply_chain(t.chain, inputs);
      terms.push_back(IdentityTerm{t.coefficient, out.front(), which});
    }
  };
  emit(equation.lhs, Side::Lhs);
  emit(equation.rhs, Side::Rhs);
  return Identity(std::move(names), std::move(terms));
}

}  // namespace zinbiel
