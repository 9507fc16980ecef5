#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace rltlab {

/// Exact arbitrary-precision rational; GMP keeps values canonical
/// (lowest terms, positive denominator). No floating point anywhere.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Convenience constructor for small literals.
Rational rat(long num, long den = 1);

/// Parses "p/q" or "p" (optionally signed). Returns nullopt on malformed
/// input or zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rational& v);

/// Comma-separated coordinates, e.g. "1/2,1".
std::string vec_str(const RatVector& v);

bool is_integer(const Rational& v);
bool is_binary_value(const Rational& v);

/// Exact dot product; vectors must have equal length.
Rational dot(const RatVector& a, const RatVector& b);

/// a + s*b componentwise.
RatVector axpy(const RatVector& a, const Rational& s, const RatVector& b);

RatVector zeros(std::size_t n);

}  // namespace rltlab
