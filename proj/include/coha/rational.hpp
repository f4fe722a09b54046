#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace coha {

// Exact rational coefficients. mpq_class keeps values canonical
// (reduced fraction, positive denominator).
using Rational = mpq_class;

struct CohaError : std::runtime_error {
    explicit CohaError(const std::string& msg) : std::runtime_error(msg) {}
};

/// mpq_class(n, d) does not canonicalize; this does.
inline Rational make_rational(long num, long den) {
    if (den == 0)
        throw CohaError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw CohaError("cannot parse rational '" + s + "'");
    if (r.get_den() == 0)
        throw CohaError("zero denominator in rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

inline long rat_to_long(const Rational& r) {
    if (!rat_is_integer(r) || !r.get_num().fits_slong_p())
        throw CohaError("rational " + rat_to_string(r) + " is not a small integer");
    return r.get_num().get_si();
}

} // namespace coha
