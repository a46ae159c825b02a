// Exact rational scalars: the ground field for every computation in the
// workbench. Backed by boost::multiprecision (canonical form is maintained
// by the library: reduced fraction, positive denominator).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace wb {

using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

inline Int numer(const Scalar& s) { return boost::multiprecision::numerator(s); }
inline Int denom(const Scalar& s) { return boost::multiprecision::denominator(s); }

// Deterministic text form: "p" when the denominator is 1, else "p/q".
inline std::string scalar_to_string(const Scalar& s) {
    Int n = numer(s), d = denom(s);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

// Accepts optionally signed integer literals and "p/q" fractions. Returns
// nullopt for anything else, including q = 0; callers own the error message.
std::optional<Scalar> parse_scalar(const std::string& text);

} // namespace wb
