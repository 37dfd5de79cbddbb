#ifndef ROOTGEO_SEQUENCE_HPP
#define ROOTGEO_SEQUENCE_HPP

#include "rootgeo/poly.hpp"
#include "rootgeo/surd.hpp"

#include <utility>
#include <vector>

namespace rootgeo {

struct invalid_spec : error {
    using error::error;
};
struct degree_law_violation : error {
    using error::error;
};
struct domain_error : error {
    using error::error;
};

// W_n = a W_{n-1} + (b x + c) W_{n-2}, W_0 = 1, W_1 = t (x - r).
// normalized means W_1(x) = x, i.e. t = 1 and r = 0.
struct RecurrenceSpec {
    Rational a, b, c;
    Rational t = Rational(1), r = Rational(0);

    bool normalized() const { return t == 1 && sgn(r) == 0; }

    DensePoly B() const { return DensePoly::linear(c, b); }
    DensePoly W1() const { return DensePoly::linear(-t * r, t); }
};

inline void validate(const RecurrenceSpec& s) {
    if (sgn(s.a) <= 0) throw invalid_spec("a must be positive");
    if (sgn(s.b) <= 0) throw invalid_spec("b must be positive");
    if (sgn(s.t) <= 0) throw invalid_spec("t must be positive");
    if (sgn(s.c) != 0 && s.r == -s.c / s.b) throw invalid_spec("r must differ from -c/b");
}

// Constant-coefficient recurrence W_n = A W_{n-1} + B W_{n-2}, W_0 = 1.
struct ConstantRecurrenceSpec {
    Rational A, B, W1;
};

// x -> x / t + r; carries normalized-coordinate values back to the original.
struct AffineMap {
    Rational t, r;
    Rational apply(const Rational& x) const { return x / t + r; }
    QuadraticSurd apply(const QuadraticSurd& s) const { return s * (1 / t) + r; }
};

inline std::pair<RecurrenceSpec, AffineMap> normalize(const RecurrenceSpec& s) {
    validate(s);
    RecurrenceSpec n{s.a, s.b / s.t, s.b * s.r + s.c, Rational(1), Rational(0)};
    return {n, AffineMap{s.t, s.r}};
}

// For a < 0: the sequence (-1)^n W_n(-x) satisfies the recurrence with
// parameters (-a, -b, c); its root sets are the negated originals.
inline RecurrenceSpec flip_sign(const RecurrenceSpec& s) {
    if (sgn(s.a) >= 0) throw invalid_spec("flip_sign expects a < 0");
    return RecurrenceSpec{-s.a, -s.b, s.c, s.t, -s.r};
}

struct SequenceCache {
    RecurrenceSpec spec;
    std::vector<DensePoly> polys; // polys[n] = W_n

    const DensePoly& operator[](size_t n) const { return polys.at(n); }
    size_t max_n() const { return polys.size() - 1; }
};

// Exact polynomials W_0..W_n_max. For normalized specs with c != 0 the
// degree and leading-coefficient laws are asserted after generation.
inline SequenceCache generate(const RecurrenceSpec& s, int n_max) {
    validate(s);
    SequenceCache cache{s, {}};
    auto& w = cache.polys;
    w.reserve(static_cast<size_t>(n_max) + 1);
    w.push_back(DensePoly::constant(Rational(1)));
    if (n_max >= 1) w.push_back(s.W1());
    DensePoly B = s.B();
    for (int n = 2; n <= n_max; ++n)
        w.push_back(w[static_cast<size_t>(n - 1)] * s.a + B * w[static_cast<size_t>(n - 2)]);
    if (s.normalized() && sgn(s.c) != 0) {
        for (int n = 1; n <= n_max; ++n) {
            const auto& p = w[static_cast<size_t>(n)];
            int d = (n + 1) / 2;
            if (p.degree() != d) throw degree_law_violation("degree law failed at n=" + std::to_string(n));
            Rational expect = (n % 2 == 1)
                                  ? pow_rat(s.b, static_cast<unsigned long>(n / 2))
                                  : pow_rat(s.b, static_cast<unsigned long>(n / 2 - 1)) * (Rational(n / 2) * s.a + s.b);
            if (p.lead() != expect) throw degree_law_violation("leading coefficient law failed at n=" + std::to_string(n));
        }
    }
    return cache;
}

// W_0(x)..W_n_max(x) by scalar recurrence, no polynomial expansion.
inline std::vector<Rational> eval_sequence_at(const RecurrenceSpec& s, const Rational& x, int n_max) {
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(n_max) + 1);
    v.push_back(Rational(1));
    if (n_max >= 1) v.push_back(s.t * (x - s.r));
    Rational bc = s.b * x + s.c;
    for (int n = 2; n <= n_max; ++n)
        v.push_back(s.a * v[static_cast<size_t>(n - 1)] + bc * v[static_cast<size_t>(n - 2)]);
    return v;
}

// Same recurrence iterated in Q[sqrt(d)]; used for exact surd identities
// such as W_n(x_g) = x_g^n.
inline std::vector<QuadraticSurd> eval_sequence_at_surd(const RecurrenceSpec& s, const QuadraticSurd& x, int n_max) {
    std::vector<QuadraticSurd> v;
    v.reserve(static_cast<size_t>(n_max) + 1);
    v.push_back(QuadraticSurd(Rational(1)));
    if (n_max >= 1) v.push_back((x - s.r) * s.t);
    QuadraticSurd bc = x * s.b + s.c;
    for (int n = 2; n <= n_max; ++n)
        v.push_back(v[static_cast<size_t>(n - 1)] * s.a + bc * v[static_cast<size_t>(n - 2)]);
    return v;
}

// Signs of W_1(x)..W_n_max(x) at x = u/v through a pure-integer recurrence:
// scaling W_n by (Dv)^n with D clearing all spec denominators keeps signs.
class SequenceSignEvaluator {
public:
    explicit SequenceSignEvaluator(RecurrenceSpec s) : spec_(std::move(s)) {
        D_ = 1;
        for (const Rational* q : {&spec_.a, &spec_.b, &spec_.c, &spec_.t, &spec_.r})
            mpz_lcm(D_.get_mpz_t(), D_.get_mpz_t(), q->get_den_mpz_t());
        alpha_ = Integer(spec_.a * D_);
        beta_ = Integer(spec_.b * D_);
        gamma_ = Integer(spec_.c * D_);
    }

    // sign of W_n(u/v), v > 0
    int sign_at(const Integer& u, const Integer& v, int n) const {
        if (n == 0) return 1;
        Rational w1 = spec_.t * (Rational(u, v) - spec_.r);
        if (n == 1) return sgn(w1);
        // z_k proportional to W_k(u/v) with a fixed positive factor
        Rational w1s = w1 * D_ * v;
        Integer z0 = w1s.get_den();
        Integer z1 = w1s.get_num(); // = den * w1s
        Integer k1 = alpha_ * v;
        Integer k2 = (beta_ * u + gamma_ * v) * D_ * v;
        Integer znm2 = z0 * 1, znm1 = z1, zn;
        for (int k = 2; k <= n; ++k) {
            zn = k1 * znm1 + k2 * znm2;
            znm2 = std::move(znm1);
            znm1 = std::move(zn);
        }
        return sgn(znm1);
    }

    int sign_at(const Rational& x, int n) const { return sign_at(x.get_num(), x.get_den(), n); }

    // signs of W_0..W_n_max in one sweep
    std::vector<int> signs_up_to(const Rational& x, int n_max) const {
        std::vector<int> out(static_cast<size_t>(n_max) + 1, 1);
        if (n_max >= 1) {
            Rational w1 = spec_.t * (x - spec_.r);
            out[1] = sgn(w1);
            if (n_max >= 2) {
                const Integer &u = x.get_num(), &v = x.get_den();
                Rational w1s = w1 * D_ * v;
                Integer znm2 = w1s.get_den(), znm1 = w1s.get_num();
                Integer k1 = alpha_ * v;
                Integer k2 = (beta_ * u + gamma_ * v) * D_ * v;
                for (int k = 2; k <= n_max; ++k) {
                    Integer zn = k1 * znm1 + k2 * znm2;
                    out[static_cast<size_t>(k)] = sgn(zn);
                    znm2 = std::move(znm1);
                    znm1 = std::move(zn);
                }
            }
        }
        return out;
    }

private:
    RecurrenceSpec spec_;
    Integer D_, alpha_, beta_, gamma_;
};

// c = 0 reduction: when additionally W_1(0) = 0 (i.e. r = 0), the number 0 is
// a root of every W_n with n >= 1, W_2 is a monomial, and W~_n = W_{n+2} / W_2
// is a polynomial sequence satisfying the same recurrence. Without r = 0 the
// quotients are not polynomials in general.
inline DensePoly reduce_c_zero(const RecurrenceSpec& s, int n) {
    if (sgn(s.c) != 0) throw domain_error("reduce_c_zero requires c = 0");
    if (sgn(s.r) != 0) throw domain_error("reduce_c_zero requires r = 0 so that W_2 divides W_{n+2}");
    SequenceCache cache = generate(s, n + 2);
    return exact_div(cache[static_cast<size_t>(n + 2)], cache[2]);
}

// The reduced sequence as a fresh general-form spec: W~_0 = 1 and
// W~_1 = W_3 / W_2 is linear, so the reduction re-enters the t(x - r) setting.
inline RecurrenceSpec reduced_c_zero_spec(const RecurrenceSpec& s) {
    DensePoly w1 = reduce_c_zero(s, 1);
    if (w1.degree() != 1) throw domain_error("reduced W~_1 is not linear");
    return RecurrenceSpec{s.a, s.b, s.c, w1[1], -w1[0] / w1[1]};
}

// ---- constant recurrences (Lemma-style closed forms) ----

// Direct iteration; the independent oracle for the closed forms.
inline Rational iterate_constant(const ConstantRecurrenceSpec& s, int n) {
    Rational wm2(1), wm1 = s.W1;
    if (n == 0) return wm2;
    for (int k = 2; k <= n; ++k) {
        Rational w = s.A * wm1 + s.B * wm2;
        wm2 = std::move(wm1);
        wm1 = std::move(w);
    }
    return wm1;
}

namespace detail {
// element u + v*sqrt(delta) of Q[sqrt(delta)], delta of either sign
struct QExt {
    Rational u, v, delta;
    QExt mul(const QExt& o) const {
        return {u * o.u + v * o.v * delta, u * o.v + v * o.u, delta};
    }
};
} // namespace detail

// Closed-form W_n of the constant recurrence, via the discriminant
// Delta = A^2 + 4B: the double-root branch when Delta = 0, otherwise exact
// arithmetic in Q[sqrt(Delta)] whose radical parts must cancel.
inline Rational closed_form_constant(const ConstantRecurrenceSpec& s, int n) {
    if (sgn(s.A) == 0) throw domain_error("closed form requires A != 0");
    if (n == 0) return Rational(1);
    Rational delta = s.A * s.A + 4 * s.B;
    Rational half_a = s.A / 2;
    if (sgn(delta) == 0)
        return (1 + Rational(n) * (2 * s.W1 - s.A) / s.A) * pow_rat(half_a, static_cast<unsigned long>(n));
    using detail::QExt;
    QExt gp{(2 * s.W1 - s.A) / 2, Rational(1, 2), delta};
    QExt gm{(2 * s.W1 - s.A) / 2, Rational(-1, 2), delta};
    QExt zp{s.A, Rational(1), delta}, zm{s.A, Rational(-1), delta};
    QExt pp{Rational(1), Rational(0), delta}, pm = pp;
    for (int k = 0; k < n; ++k) {
        pp = pp.mul(zp);
        pm = pm.mul(zm);
    }
    QExt num{gp.mul(pp).u - gm.mul(pm).u, gp.mul(pp).v - gm.mul(pm).v, delta};
    if (sgn(num.u) != 0) throw error("radical parts failed to cancel in closed form");
    // num = (2^n sqrt(delta)) * W_n  =>  W_n = num.v / 2^n
    return num.v / pow_rat(Rational(2), static_cast<unsigned long>(n));
}

struct delta_not_negative : error {
    using error::error;
};

// For Delta < 0 the solution is (R/2)^n (cos n8 + ((2W1-A)/sqrt(-Delta)) sin n8).
// Returns the exact rational pair (u_n, v_n) of the cos / sin contributions,
// with W_n = u_n + v_n; verified against iteration in tests.
inline std::pair<Rational, Rational> trig_form_constant(const ConstantRecurrenceSpec& s, int n) {
    Rational delta = s.A * s.A + 4 * s.B;
    if (sgn(delta) >= 0) throw delta_not_negative("trig form requires A^2 + 4B < 0");
    Rational m = -delta;
    // (p_k + q_k i sqrt(m)) = (A + i sqrt(m))^k
    Rational p(1), q(0);
    for (int k = 0; k < n; ++k) {
        Rational pn = s.A * p - m * q;
        Rational qn = p + s.A * q;
        p = std::move(pn);
        q = std::move(qn);
    }
    Rational two_n = pow_rat(Rational(2), static_cast<unsigned long>(n));
    return {p / two_n, (2 * s.W1 - s.A) * q / two_n};
}

// ---- Chebyshev cross-check ----

// W_n(x) expressed through second-kind Chebyshev polynomials evaluated at
// a / (2 sqrt(-bx-c)); computed in >= 50-digit floating arithmetic and
// compared against the exact recurrence value at relative tolerance tol.
inline bool chebyshev_crosscheck(const RecurrenceSpec& s, const Rational& x, int n, const Rational& tol) {
    if (sgn(s.b * x + s.c) >= 0) throw domain_error("chebyshev identity needs bx + c < 0");
    if (n < 1) throw domain_error("chebyshev cross-check needs n >= 1");
    const mp_bitcnt_t bits = 256; // ~77 decimal digits
    mpf_class q2 = to_mpf(-(s.b * x + s.c), bits);
    mpf_class sr(0, bits);
    mpf_sqrt(sr.get_mpf_t(), q2.get_mpf_t());
    mpf_class tau = to_mpf(s.a, bits) / (2 * sr);
    // U_0 = 1, U_1 = 2 tau, U_k = 2 tau U_{k-1} - U_{k-2}; U_{-1} = 0
    mpf_class um1(0, bits), u0(1, bits);
    mpf_class u_nm1(0, bits), u_nm2(0, bits);
    std::vector<mpf_class> u;
    u.reserve(static_cast<size_t>(n) + 1);
    u.push_back(u0);
    if (n >= 2) u.push_back(2 * tau * u0);
    for (int k = 2; k < n; ++k) u.push_back(2 * tau * u[static_cast<size_t>(k - 1)] - u[static_cast<size_t>(k - 2)]);
    mpf_class Unm1 = u[static_cast<size_t>(n - 1)];
    mpf_class Unm2 = n >= 2 ? u[static_cast<size_t>(n - 2)] : um1;
    mpf_class w1 = to_mpf(s.t * (x - s.r), bits);
    mpf_class sn(1, bits);
    for (int k = 0; k < n; ++k) sn *= sr;
    mpf_class ident = sn * ((w1 / sr) * Unm1 - Unm2);
    mpf_class exact = to_mpf(eval_sequence_at(s, x, n).back(), bits);
    mpf_class diff = abs(ident - exact);
    mpf_class scale = abs(exact);
    if (scale == 0) return diff <= to_mpf(tol, bits);
    return diff / scale <= to_mpf(tol, bits);
}

// ---- the fixed degree-3 recursion ----

// W_n = (1+144x) W_{n-1} + 54x(2-29x+306x^2) W_{n-2} - 5832x^3(1-11x) W_{n-3}
struct Degree3Spec {
    DensePoly A1() const { return DensePoly({rat(1), rat(144)}); }
    DensePoly A2() const { return DensePoly({rat(0), rat(108), rat(-1566), rat(16524)}); }
    DensePoly A3() const { return DensePoly({rat(0), rat(0), rat(0), rat(-5832), rat(64152)}); }
    DensePoly W0() const { return DensePoly::constant(Rational(1, 27)); }
    DensePoly W1() const { return DensePoly({rat(1), rat(7)}); }
    DensePoly W2() const { return DensePoly({rat(1), rat(139), rat(1120), rat(468)}); }
};

inline std::vector<DensePoly> generate_degree3(int n_max) {
    Degree3Spec d;
    std::vector<DensePoly> w{d.W0(), d.W1(), d.W2()};
    DensePoly a1 = d.A1(), a2 = d.A2(), a3 = d.A3();
    for (int n = 3; n <= n_max; ++n)
        w.push_back(a1 * w[static_cast<size_t>(n - 1)] + a2 * w[static_cast<size_t>(n - 2)] +
                    a3 * w[static_cast<size_t>(n - 3)]);
    w.resize(static_cast<size_t>(std::min(n_max, static_cast<int>(w.size()) - 1)) + 1);
    return w;
}

} // namespace rootgeo

#endif
