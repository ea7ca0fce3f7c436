#pragma once

#include <gmpxx.h>

#include <string>

namespace qc {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace qc
