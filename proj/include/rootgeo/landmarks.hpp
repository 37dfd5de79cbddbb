#ifndef ROOTGEO_LANDMARKS_HPP
#define ROOTGEO_LANDMARKS_HPP

#include "rootgeo/sequence.hpp"

#include <optional>

namespace rootgeo {

struct c_is_zero : error {
    using error::error;
};
struct xg_not_real : error {
    using error::error;
};

// Sign-pattern regimes of a normalized sequence, split by where c sits
// relative to -(a^2 + 2ab)/4 and 0.
enum class CaseTag { I, II, III };

inline const char* case_name(CaseTag t) {
    switch (t) {
        case CaseTag::I: return "I";
        case CaseTag::II: return "II";
        case CaseTag::III: return "III";
    }
    return "?";
}

inline CaseTag classify_case(const RecurrenceSpec& s) {
    RecurrenceSpec n = normalize(s).first;
    if (sgn(n.c) == 0) throw c_is_zero("case classification needs c != 0 after normalization");
    if (sgn(n.c) > 0) return CaseTag::III;
    Rational threshold = -(n.a * n.a + 2 * n.a * n.b) / 4;
    return n.c <= threshold ? CaseTag::I : CaseTag::II;
}

// Distinguished points of the sequence. x_B, x_Delta, x_g and n0 are stated
// in normalized coordinates; the starred values live in the original ones.
struct Landmarks {
    CaseTag case_tag;
    Rational x_B;                       // -c/b: common point of all lines bx + c
    Rational x_Delta;                   // -(a^2 + 4c)/(4b): double-root point
    std::optional<QuadraticSurd> x_g;   // fixed point ((a+b) - sqrt((a+b)^2+4c))/2
    std::optional<Rational> n0;         // 2ab/(a^2+2ab+4c); absent when the
                                        // denominator is <= 0 (threshold at infinity)
    Rational x_star;                    // x_Delta carried back to original coordinates
    Rational r_star;                    // x_star - a/(2t)
    std::optional<QuadraticSurd> y_star; // r + ((at+b) - sqrt((at+b)^2+4t^2(br+c)))/(2t^2),
                                         // absent when the inner discriminant is negative
};

inline Landmarks compute_landmarks(const RecurrenceSpec& s) {
    auto [n, map] = normalize(s);
    if (sgn(n.c) == 0) throw c_is_zero("landmarks need c != 0 after normalization");
    Landmarks lm{classify_case(s),
                 -n.c / n.b,
                 -(n.a * n.a + 4 * n.c) / (4 * n.b),
                 std::nullopt,
                 std::nullopt,
                 Rational(0),
                 Rational(0),
                 std::nullopt};
    Rational apb = n.a + n.b;
    Rational disc = apb * apb + 4 * n.c;
    if (sgn(disc) >= 0)
        lm.x_g = (QuadraticSurd(apb) - QuadraticSurd::sqrt_of(disc)) * Rational(1, 2);
    Rational denom = n.a * n.a + 2 * n.a * n.b + 4 * n.c;
    if (sgn(denom) > 0) lm.n0 = 2 * n.a * n.b / denom;
    lm.x_star = -(4 * s.c + s.a * s.a) / (4 * s.b);
    lm.r_star = lm.x_star - s.a / (2 * s.t);
    Rational atb = s.a * s.t + s.b;
    Rational ydisc = atb * atb + 4 * s.t * s.t * (s.b * s.r + s.c);
    if (sgn(ydisc) >= 0)
        lm.y_star = (QuadraticSurd(atb) - QuadraticSurd::sqrt_of(ydisc)) * (1 / (2 * s.t * s.t)) + s.r;
    return lm;
}

// ---- closed-form values of a normalized sequence at the landmarks ----

// W_n(x_B) = a^{n-1} W_1(x_B)
inline Rational W_at_xB(const RecurrenceSpec& s, int n) {
    if (!s.normalized()) throw domain_error("landmark evaluation expects a normalized spec");
    Rational xB = -s.c / s.b;
    if (n == 0) return Rational(1);
    return pow_rat(s.a, static_cast<unsigned long>(n - 1)) * xB;
}

// W_n(x_Delta) = (1 + n (2 x_Delta - a)/a) (a/2)^n
inline Rational W_at_xDelta(const RecurrenceSpec& s, int n) {
    if (!s.normalized()) throw domain_error("landmark evaluation expects a normalized spec");
    Rational xD = -(s.a * s.a + 4 * s.c) / (4 * s.b);
    return (1 + Rational(n) * (2 * xD - s.a) / s.a) * pow_rat(s.a / 2, static_cast<unsigned long>(n));
}

// W_n(x_g) = x_g^n, evaluated exactly in Q[sqrt(d)]
inline QuadraticSurd W_at_xg(const RecurrenceSpec& s, int n) {
    if (!s.normalized()) throw domain_error("landmark evaluation expects a normalized spec");
    Rational apb = s.a + s.b;
    Rational disc = apb * apb + 4 * s.c;
    if (sgn(disc) < 0) throw xg_not_real("x_g is not real: (a+b)^2 + 4c < 0");
    QuadraticSurd xg = (QuadraticSurd(apb) - QuadraticSurd::sqrt_of(disc)) * Rational(1, 2);
    QuadraticSurd acc{Rational(1)};
    for (int k = 0; k < n; ++k) acc = acc * xg;
    return acc;
}

inline int sign_at_xB(const RecurrenceSpec& s, int n) { return n == 0 ? 1 : sgn(W_at_xB(s, n)); }
inline int sign_at_xDelta(const RecurrenceSpec& s, int n) { return sgn(W_at_xDelta(s, n)); }
inline int sign_at_xg(const RecurrenceSpec& s, int n) { return W_at_xg(s, n).sign(); }

} // namespace rootgeo

#endif
