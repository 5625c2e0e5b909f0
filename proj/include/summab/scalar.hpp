#pragma once

// Scalar modes for every computation in this library: exact rational
// arithmetic (GMP mpq) as the verification mode, IEEE double as the
// large-scale mode. All algorithms are templated on the scalar and behave
// identically in both modes; exactness claims in the test suite refer to
// the rational instantiation.

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace summab {

using Rational = mpq_class;

template <class S>
concept ScalarMode = std::same_as<S, double> || std::same_as<S, Rational>;

// Contract violation of a documented precondition. The CLI maps this to
// exit code 3.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Size parameter above a documented exact-arithmetic ceiling. The CLI maps
// this to exit code 4.
class ceiling_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <ScalarMode S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    // Accumulator type used by the summation kernels.
    using accum = Rational;
    static Rational finish(const accum& a) { return a; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    // Extended-precision accumulation keeps the long alternating sums in
    // the probes well inside the documented 1e-10 agreement band.
    using accum = long double;
    static double finish(const accum& a) { return static_cast<double>(a); }
};

template <ScalarMode S>
inline constexpr bool is_exact_v = scalar_traits<S>::exact;

// p/q as a canonical scalar. mpq_class(p, q) does not canonicalize on its
// own, so all rational literals in the library go through here.
template <ScalarMode S>
S ratio(long num, long den = 1)
{
    if (den == 0)
        throw precondition_error("ratio: zero denominator");
    if constexpr (is_exact_v<S>) {
        Rational r(num, den);
        r.canonicalize();
        return r;
    } else {
        return static_cast<double>(num) / static_cast<double>(den);
    }
}

template <ScalarMode S>
S scalar_abs(const S& v)
{
    if constexpr (is_exact_v<S>)
        return S(abs(v));
    else
        return std::fabs(v);
}

template <ScalarMode S>
int scalar_sign(const S& v)
{
    if constexpr (is_exact_v<S>)
        return sgn(v);
    else
        return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
}

template <ScalarMode S>
bool scalar_finite(const S& v)
{
    if constexpr (is_exact_v<S>)
        return true;
    else
        return std::isfinite(v);
}

template <ScalarMode S>
double scalar_to_double(const S& v)
{
    if constexpr (is_exact_v<S>)
        return v.get_d();
    else
        return v;
}

// Canonical text form: "p/q" (denominator omitted when 1) for rationals,
// round-trippable %.17g for doubles. Used by the CSV/JSON writers, so it
// must stay byte-stable.
std::string format_scalar(const Rational& v);
std::string format_scalar(double v);

// Accepts "p/q", plain integers, and plain decimal strings ("0.5" parses
// to 1/2 exactly). No exponent notation in exact mode.
Rational parse_rational(const std::string& text);

template <ScalarMode S>
S parse_scalar(const std::string& text)
{
    if constexpr (is_exact_v<S>) {
        return parse_rational(text);
    } else {
        Rational r = parse_rational(text);
        return r.get_d();
    }
}

} // namespace summab
