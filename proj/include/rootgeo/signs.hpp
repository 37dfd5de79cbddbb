#ifndef ROOTGEO_SIGNS_HPP
#define ROOTGEO_SIGNS_HPP

#include "rootgeo/landmarks.hpp"
#include "rootgeo/roots.hpp"
#include "rootgeo/sequence.hpp"

namespace rootgeo {

struct delta_not_positive : error {
    using error::error;
};
struct x0_equals_fixed_point : error {
    using error::error;
};

// Side of the rotation point relative to the line through the origin that
// encodes sign(W_n(x0)); Right corresponds to W_n(x0) > 0.
enum class Side { Left, On, Right };

inline const char* side_name(Side s) {
    switch (s) {
        case Side::Left: return "left";
        case Side::On: return "on";
        case Side::Right: return "right";
    }
    return "?";
}

// discriminant of the constant recurrence frozen at x0
inline Rational delta_at(const RecurrenceSpec& s, const Rational& x0) {
    return s.a * s.a + 4 * (s.b * x0 + s.c);
}

// For Delta(x0) < 0 the sequence n -> W_n(x0) is a spiral rotation; the sign
// of W_n(x0) is read off the side of a fixed line the n-th rotation point
// falls on. Computed exactly through the rational pair
// (p_k, q_k) = components of (a + i sqrt(-Delta))^k.
inline Side angle_side_test(const RecurrenceSpec& s, const Rational& x0, int n) {
    validate(s);
    if (n < 0) throw domain_error("angle side test needs n >= 0");
    Rational delta = delta_at(s, x0);
    if (sgn(delta) >= 0) throw delta_not_negative("angle side test requires Delta(x0) < 0");
    if (n == 0) return Side::Right;
    Rational m = -delta;
    Rational w1 = s.t * (x0 - s.r);
    Rational p(1), q(0);
    for (int k = 0; k < n; ++k) {
        Rational pn = s.a * p - m * q;
        Rational qn = p + s.a * q;
        p = std::move(pn);
        q = std::move(qn);
    }
    int sg = sgn(p + (2 * w1 - s.a) * q);
    return sg > 0 ? Side::Right : (sg < 0 ? Side::Left : Side::On);
}

struct EventualSign {
    bool stabilized;  // sign(W_n(x0)) == sign(x0 - x_g) for all scanned n >= threshold
    int threshold;    // least such N within the scan window (valid when stabilized)
    int expected;     // sign(x0 - x_g)
};

// For Delta(x0) > 0 the sign of W_n(x0) eventually agrees with sign(x0 - x_g).
// Scans n = 1..cap with the exact recurrence for the least index from which the
// agreement is uniform. x0 must differ from the fixed point x_g.
inline EventualSign eventual_sign_test(const RecurrenceSpec& s, const Rational& x0, int cap = 500) {
    validate(s);
    Rational delta = delta_at(s, x0);
    if (sgn(delta) <= 0) throw delta_not_positive("eventual sign test requires Delta(x0) > 0");
    auto [ns, map] = normalize(s);
    // compare in normalized coordinates (the map is increasing)
    Rational x0n = s.t * (x0 - s.r);
    Rational apb = ns.a + ns.b;
    Rational gdisc = apb * apb + 4 * ns.c;
    if (sgn(gdisc) < 0) throw xg_not_real("x_g is not real: (a+b)^2 + 4c < 0");
    QuadraticSurd xg = (QuadraticSurd(apb) - QuadraticSurd::sqrt_of(gdisc)) * Rational(1, 2);
    int expected = -xg.compare(x0n);
    if (expected == 0) throw x0_equals_fixed_point("x0 equals the fixed point x_g");
    std::vector<Rational> vals = eval_sequence_at(s, x0, cap);
    int threshold = cap + 1;
    for (int n = cap; n >= 1; --n) {
        if (sgn(vals[static_cast<size_t>(n)]) == expected) threshold = n;
        else break;
    }
    return EventualSign{threshold <= cap, threshold <= cap ? threshold : -1, expected};
}

} // namespace rootgeo

#endif
