#include "curvword/rational.hpp"

#include "curvword/error.hpp"

#include <cctype>

namespace curvword {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::UnknownCharacter: return "UnknownCharacter";
    case ErrorKind::MissingCharacter: return "MissingCharacter";
    case ErrorKind::NotAnNWord: return "NotAnNWord";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidBundle: return "InvalidBundle";
    case ErrorKind::DegenerateFiber: return "DegenerateFiber";
    case ErrorKind::ValidationGap: return "ValidationGap";
  }
  return "Unknown";
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw Error(ErrorKind::InvalidInput, "rational with zero denominator");
  // cpp_rational rejects negative denominators
  value_ = denominator < 0 ? boost::multiprecision::cpp_rational(-numerator, -denominator)
                           : boost::multiprecision::cpp_rational(numerator, denominator);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }

BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_integer() const { return denominator() == 1; }

Rational Rational::abs() const { return Rational(boost::multiprecision::abs(value_)); }

Rational Rational::operator-() const { return Rational(-value_); }

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  const BigInt den = denominator();
  std::string out = numerator().str();
  if (den != 1) out += "/" + den.str();
  return out;
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(digits));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  BigInt num = parse_integer(text.substr(0, slash), whole);
  BigInt den = slash == std::string_view::npos ? BigInt(1) : parse_integer(text.substr(slash + 1), whole);
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace curvword
