#ifndef ROOTGEO_SURD_HPP
#define ROOTGEO_SURD_HPP

#include "rootgeo/rational.hpp"

namespace rootgeo {

// Exact value p + q*sqrt(d) with rational p,q and non-negative integer d.
// Canonical form: square factors of d are pulled into q; rational values
// always have q == 0 and d == 0.
class QuadraticSurd {
public:
    QuadraticSurd() : p_(0), q_(0), d_(0) {}
    QuadraticSurd(Rational p) : p_(std::move(p)), q_(0), d_(0) {}

    static QuadraticSurd make(Rational p, Rational q, Integer d) {
        if (sgn(d) < 0) throw error("negative radicand");
        if (sgn(q) == 0 || d == 0) return QuadraticSurd(std::move(p));
        Integer sq, rem;
        mpz_sqrtrem(sq.get_mpz_t(), rem.get_mpz_t(), d.get_mpz_t());
        if (rem == 0) return QuadraticSurd(p + q * sq);
        // pull out square factors by trial division
        Integer f = 2;
        while (f * f <= d) {
            Integer ff = f * f;
            while (mpz_divisible_p(d.get_mpz_t(), ff.get_mpz_t())) {
                d /= ff;
                q *= f;
            }
            f += 1;
        }
        QuadraticSurd s;
        s.p_ = std::move(p);
        s.q_ = std::move(q);
        s.d_ = std::move(d);
        return s;
    }

    // sqrt(e) for rational e >= 0
    static QuadraticSurd sqrt_of(const Rational& e) {
        if (sgn(e) < 0) throw error("sqrt of negative rational");
        // sqrt(u/v) = sqrt(u*v)/v
        return make(Rational(0), Rational(1, e.get_den()), e.get_num() * e.get_den());
    }

    const Rational& rational_part() const { return p_; }
    const Rational& radical_coeff() const { return q_; }
    const Integer& radicand() const { return d_; }
    bool is_rational() const { return sgn(q_) == 0; }

    const Rational& as_rational() const {
        if (!is_rational()) throw error("surd is irrational");
        return p_;
    }

    QuadraticSurd operator-() const {
        QuadraticSurd s(*this);
        s.p_ = -s.p_;
        s.q_ = -s.q_;
        return s;
    }

    friend QuadraticSurd operator+(const QuadraticSurd& a, const Rational& r) {
        QuadraticSurd s(a);
        s.p_ += r;
        return s;
    }
    friend QuadraticSurd operator-(const QuadraticSurd& a, const Rational& r) { return a + Rational(-r); }
    friend QuadraticSurd operator*(const QuadraticSurd& a, const Rational& r) {
        if (sgn(r) == 0) return QuadraticSurd();
        QuadraticSurd s(a);
        s.p_ *= r;
        s.q_ *= r;
        return s;
    }

    friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
        if (b.is_rational()) return a + b.p_;
        if (a.is_rational()) return b + a.p_;
        if (a.d_ != b.d_) throw error("surd addition needs a common radicand");
        return make(a.p_ + b.p_, a.q_ + b.q_, a.d_);
    }
    friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return a + (-b); }
    friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
        if (b.is_rational()) return a * b.p_;
        if (a.is_rational()) return b * a.p_;
        if (a.d_ != b.d_) throw error("surd product needs a common radicand");
        return make(a.p_ * b.p_ + a.q_ * b.q_ * Rational(a.d_), a.p_ * b.q_ + a.q_ * b.p_, a.d_);
    }

    // Exact sign, decided by integer arithmetic only.
    int sign() const {
        int sp = sgn(p_), sq = sgn(q_);
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        // opposite signs: compare p^2 against q^2 d
        Rational lhs = p_ * p_, rhs = q_ * q_ * Rational(d_);
        int c = cmp(lhs, rhs);
        if (c == 0) return 0;
        return c > 0 ? sp : sq;
    }

    int compare(const Rational& r) const { return (*this - r).sign(); }

    int compare(const QuadraticSurd& o) const {
        if (o.is_rational()) return compare(o.p_);
        if (is_rational()) return -o.compare(p_);
        if (d_ == o.d_) return (*this - o).sign();
        // a + b*sqrt(m) vs c*sqrt(k) style comparison across distinct radicands:
        // value difference p + q*sqrt(m) - q'*sqrt(k) is zero only if p = 0 and
        // q^2 m = q'^2 k with equal signs (m,k squarefree and distinct excludes it),
        // so refining float brackets terminates.
        QuadraticSurd diffp = *this - o.p_; // p + q sqrt(m) - p', still radicand d_
        // zero test: diffp == q' sqrt(k)?
        if (sgn(diffp.p_) == 0) {
            // q sqrt(m) vs q' sqrt(k)
            int s1 = sgn(diffp.q_), s2 = sgn(o.q_);
            if (s1 != s2) return s1 != 0 ? s1 : -s2;
            int c = cmp(diffp.q_ * diffp.q_ * Rational(d_), o.q_ * o.q_ * Rational(o.d_));
            return s1 > 0 ? c : -c;
        }
        for (mp_bitcnt_t bits = 128;; bits *= 2) {
            if (bits > 1u << 16) throw error("surd comparison failed to converge");
            mpf_class va = approx(bits), vb = o.approx(bits);
            mpf_class diff = va - vb;
            mpf_class tol(abs(va) + abs(vb) + 1, bits);
            mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), bits / 2);
            if (abs(diff) > tol) return sgn(diff) > 0 ? 1 : -1;
        }
    }

    mpf_class approx(mp_bitcnt_t bits = 128) const {
        mpf_class root(0, bits);
        mpf_sqrt(root.get_mpf_t(), mpf_class(d_, bits).get_mpf_t());
        return to_mpf(p_, bits) + to_mpf(q_, bits) * root;
    }

    double to_double() const { return approx(64).get_d(); }

    std::string str() const {
        if (is_rational()) return p_.get_str();
        return p_.get_str() + " + (" + q_.get_str() + ")*sqrt(" + d_.get_str() + ")";
    }

    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) { return a.compare(b) == 0; }

private:
    Rational p_, q_;
    Integer d_;
};

inline int surd_sign(const QuadraticSurd& s) { return s.sign(); }

} // namespace rootgeo

#endif
