#include "rltlab/rational.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace rltlab {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  // Validate shape first; mpq set_str is permissive about whitespace.
  std::size_t slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(text)) return std::nullopt;
  } else {
    if (!valid_int(text.substr(0, slash)) || !valid_int(text.substr(slash + 1)))
      return std::nullopt;
  }
  Rational r;
  if (r.set_str(text, 10) != 0) return std::nullopt;
  if (r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& v) { return v.get_str(); }

std::string vec_str(const RatVector& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i].get_str();
  }
  return out.str();
}

bool is_integer(const Rational& v) { return v.get_den() == 1; }

bool is_binary_value(const Rational& v) { return v == 0 || v == 1; }

Rational dot(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  }
  return acc;
}

RatVector axpy(const RatVector& a, const Rational& s, const RatVector& b) {
  assert(a.size() == b.size());
  RatVector out(a);
  if (s == 0) return out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] != 0) out[i] += s * b[i];
  }
  return out;
}

RatVector zeros(std::size_t n) { return RatVector(n, Rational(0)); }

}  // namespace rltlab
