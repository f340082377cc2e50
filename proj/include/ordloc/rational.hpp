#ifndef ORDLOC_RATIONAL_HPP
#define ORDLOC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ordloc {

// Exact rational number. All core quantities (locations, alphas, costs,
// utilities, objective values, certificates) are carried as Rat; no floating
// point ever enters a reported value.
using Rat = mpq_class;

inline Rat rat_abs(const Rat& v) { return v < 0 ? Rat(-v) : v; }

// The two-integer mpq constructor does not reduce, and operator== (mpq_equal)
// assumes canonical form; every fraction built from raw integers goes here.
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p/q", integer, or plain decimal strings ("0.4" -> 2/5), with an
// optional leading sign. Rejects empty input, zero denominators and
// exponent notation. Throws std::invalid_argument.
Rat parse_rational(std::string_view text);

// Canonical "p" or "p/q" form; parse_rational round-trips it losslessly.
std::string rat_to_string(const Rat& v);

// Deterministic fixed-point rendering with `digits` fractional digits,
// rounding half away from zero. Used only for human-readable columns.
std::string rat_to_decimal(const Rat& v, int digits = 6);

double rat_to_double(const Rat& v);

// A performance ratio: either a finite rational or +infinity (the marker for
// "mechanism pays, optimum is free").
struct RatioValue {
    bool infinite = false;
    Rat value = 0;  // meaningful only when !infinite

    static RatioValue infinity() { return RatioValue{true, Rat(0)}; }
    static RatioValue finite(Rat v) { return RatioValue{false, std::move(v)}; }

    friend bool operator==(const RatioValue& a, const RatioValue& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator<(const RatioValue& a, const RatioValue& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
    friend bool operator<=(const RatioValue& a, const RatioValue& b) {
        return a == b || a < b;
    }
};

std::string ratio_to_string(const RatioValue& r);

}  // namespace ordloc

#endif
