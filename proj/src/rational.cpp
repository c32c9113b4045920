#include "eom/rational.hpp"

#include <algorithm>
#include <string>

#include "eom/errors.hpp"

namespace eom {

std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    auto body = s;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) body.erase(0, 1);
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) {
          return c >= '0' && c <= '9';
        })) {
      throw ArgumentError("malformed rational \"" + std::string(text) + "\"");
    }
    return BigInt(body.empty() || s[0] != '-' ? body : s);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw ArgumentError("zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt rising_factorial(unsigned n, unsigned k) {
  BigInt out = 1;
  for (unsigned i = 0; i < k; ++i) out *= n + i;
  return out;
}

BigInt falling_factorial(unsigned n, unsigned k) {
  BigInt out = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (i >= n) return 0;
    out *= n - i;
  }
  return out;
}

}  // namespace eom
