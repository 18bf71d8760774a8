#include "zinbiel/scalar.hpp"

#include <cctype>
#include <ostream>

namespace zinbiel {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Scalar Scalar::from_integers(const mpz_class& numerator,
                             const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero();
  return Scalar(mpq_class(numerator, denominator));
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return from_integers(n, d);
}

std::optional<Scalar> Scalar::checked_div(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) return std::nullopt;
  return a / b;
}

Scalar Scalar::abs() const { return Scalar(mpq_class(::abs(value_))); }

std::string Scalar::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator+=(const Scalar& other) {
  value_ += other.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  value_ -= other.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  value_ *= other.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw DivisionByZero();
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace zinbiel
