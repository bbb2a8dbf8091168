#include "bona/bigint.hpp"

#include <cctype>

#include "bona/errors.hpp"

namespace bona {

std::string to_decimal(const BigInt& x) { return x.str(); }

std::string to_decimal(const BigRat& x) {
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigRat parse_rational(const std::string& text) {
  const auto bad = [&]() -> DomainError {
    return DomainError("not a rational number: '" + text + "'");
  };
  const auto is_integer_token = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };

  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) throw bad();
    return BigRat(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) throw bad();
  const BigInt d(den);
  if (d == 0) throw DomainError("zero denominator: '" + text + "'");
  return BigRat(BigInt(num), d);
}

BigInt divide_exact(const BigInt& numerator, const BigInt& divisor) {
  if (divisor == 0) throw ExactnessError("exact division by zero");
  BigInt q;
  BigInt r;
  divide_qr(numerator, divisor, q, r);
  if (r != 0) {
    throw ExactnessError("division expected to be exact left remainder " +
                         r.str() + " (dividing " + numerator.str() + " by " +
                         divisor.str() + ")");
  }
  return q;
}

BigInt rational_to_integer(const BigRat& x) {
  if (denominator(x) != 1) {
    throw ExactnessError("value expected to be an integer is " + to_decimal(x));
  }
  return numerator(x);
}

}  // namespace bona
