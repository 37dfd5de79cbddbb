#ifndef ROOTGEO_POLY_HPP
#define ROOTGEO_POLY_HPP

#include "rootgeo/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace rootgeo {

// Univariate polynomial with exact rational coefficients, dense ascending
// order, trailing zeros stripped. The zero polynomial has an empty
// coefficient list and degree() == -1.
class DensePoly {
public:
    DensePoly() = default;
    DensePoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { strip(); }
    explicit DensePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

    static DensePoly constant(Rational v) { return DensePoly({std::move(v)}); }
    static DensePoly x() { return DensePoly({Rational(0), Rational(1)}); }
    // b*x + c
    static DensePoly linear(Rational c0, Rational c1) { return DensePoly({std::move(c0), std::move(c1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& operator[](size_t i) const {
        static const Rational zero(0);
        return i < c_.size() ? c_[i] : zero;
    }

    const Rational& lead() const {
        if (c_.empty()) throw error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return DensePoly(std::move(r));
    }

    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

    DensePoly operator-() const {
        DensePoly r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return DensePoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return DensePoly(std::move(r));
    }

    friend DensePoly operator*(const DensePoly& a, const Rational& s) {
        if (sgn(s) == 0) return DensePoly();
        DensePoly r(a);
        for (auto& v : r.c_) v *= s;
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // sign at -inf / +inf
    int sign_at_neg_inf() const {
        if (is_zero()) return 0;
        return (degree() % 2 == 0) ? sgn(lead()) : -sgn(lead());
    }
    int sign_at_pos_inf() const { return is_zero() ? 0 : sgn(lead()); }

    DensePoly derivative() const {
        if (c_.size() <= 1) return DensePoly();
        std::vector<Rational> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return DensePoly(std::move(r));
    }

    // quotient, remainder with deg(rem) < deg(divisor)
    friend std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
        if (b.is_zero()) throw error("polynomial division by zero");
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> quo;
        int db = b.degree();
        if (a.degree() >= db) quo.assign(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
        while (static_cast<int>(rem.size()) - 1 >= db) {
            size_t k = rem.size() - 1 - static_cast<size_t>(db);
            Rational f = rem.back() / b.lead();
            quo[k] = f;
            for (int i = 0; i <= db; ++i) rem[k + static_cast<size_t>(i)] -= f * b.c_[static_cast<size_t>(i)];
            rem.pop_back();
            while (!rem.empty() && sgn(rem.back()) == 0) rem.pop_back();
        }
        return {DensePoly(std::move(quo)), DensePoly(std::move(rem))};
    }

    // exact division; throws if the remainder is nonzero
    friend DensePoly exact_div(const DensePoly& a, const DensePoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw error("nonzero remainder in exact polynomial division");
        return q;
    }

    // gcd of coefficient numerators over lcm of denominators; positive
    Rational content() const {
        if (is_zero()) return Rational(0);
        Integer num_gcd(0), den_lcm(1);
        for (const auto& v : c_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
        }
        Rational c(num_gcd, den_lcm);
        c.canonicalize();
        return c;
    }

    // content-free with positive leading coefficient preserved in sign:
    // divides by the (positive) content only
    DensePoly primitive_part() const {
        if (is_zero()) return *this;
        Rational c = content();
        DensePoly r(*this);
        for (auto& v : r.c_) v /= c;
        return r;
    }

    friend DensePoly poly_gcd(DensePoly a, DensePoly b) {
        if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
        if (b.is_zero()) return a.primitive_part();
        a = a.primitive_part();
        b = b.primitive_part();
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            (void)q;
            a = std::move(b);
            b = r.is_zero() ? DensePoly() : r.primitive_part();
        }
        if (sgn(a.lead()) < 0) a = -a;
        return a;
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (sgn(c_[i]) == 0) continue;
            if (!s.empty()) s += sgn(c_[i]) > 0 ? " + " : " - ";
            else if (sgn(c_[i]) < 0) s += "-";
            std::string mag = Rational(abs(c_[i])).get_str();
            if (i == 0) s += mag;
            else {
                if (mag != "1") s += mag + "*";
                s += i == 1 ? "x" : "x^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void strip() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace rootgeo

#endif
