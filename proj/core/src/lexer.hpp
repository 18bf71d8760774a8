#pragma once

// Tokenizer shared by the identity and tensor-map languages.

#include <cctype>
#include <string>
#include <string_view>

#include "zinbiel/identity.hpp"

namespace zinbiel::detail {

enum class Tok { Name, Number, Slash, LParen, RParen, Plus, Minus, Star, Equals, Colon, Dot, End };

struct Token {
  Tok kind = Tok::End;
  std::string_view text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool accept(Tok kind) {
    if (current_.kind != kind) return false;
    advance();
    return true;
  }

  Token expect(Tok kind, const char* what) {
    if (current_.kind != kind) fail(std::string("expected ") + what);
    return next();
  }

  [[noreturn]] void fail(const std::string& message) const {
    const std::string found =
        current_.kind == Tok::End ? "end of input" : "'" + std::string(current_.text) + "'";
    throw ParseError(message + ", found " + found, current_.pos);
  }

  /// RATIONAL := NUMBER [ "/" NUMBER ]
  Scalar rational() {
    Token num = expect(Tok::Number, "number");
    std::string text(num.text);
    if (accept(Tok::Slash)) {
      Token den = expect(Tok::Number, "denominator");
      if (den.text.find_first_not_of('0') == std::string_view::npos) {
        throw ParseError("zero denominator", den.pos);
      }
      text += "/" + std::string(den.text);
    }
    return Scalar::parse(text);
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    current_.pos = pos_;
    if (pos_ >= src_.size()) {
      current_.kind = Tok::End;
      current_.text = {};
      return;
    }
    const char c = src_[pos_];
    auto single = [&](Tok kind) {
      current_.kind = kind;
      current_.text = src_.substr(pos_, 1);
      ++pos_;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_ + 1;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
        ++end;
      }
      current_.kind = Tok::Name;
      current_.text = src_.substr(pos_, end - pos_);
      pos_ = end;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_ + 1;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      current_.kind = Tok::Number;
      current_.text = src_.substr(pos_, end - pos_);
      pos_ = end;
      return;
    }
    switch (c) {
      case '/': return single(Tok::Slash);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '+': return single(Tok::Plus);
      case '-': return single(Tok::Minus);
      case '*': return single(Tok::Star);
      case '=': return single(Tok::Equals);
      case ':': return single(Tok::Colon);
      case '.': return single(Tok::Dot);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token current_;
};

}  // namespace zinbiel::detail
