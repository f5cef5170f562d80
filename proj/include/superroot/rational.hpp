#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace superroot {

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Precondition: is_integer(q) and the value fits in 64 bits.
long long to_int64(const Rational& q);

RationalMatrix zero_matrix(std::size_t rows, std::size_t cols);

/// Rank over Q by fraction-free row reduction on a copy.
std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m, std::size_t cols);

} // namespace superroot
