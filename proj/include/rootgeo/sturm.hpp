#ifndef ROOTGEO_STURM_HPP
#define ROOTGEO_STURM_HPP

#include "rootgeo/poly.hpp"
#include "rootgeo/roots.hpp"

#include <optional>

namespace rootgeo {

struct non_squarefree : error {
    using error::error;
};

// Signed remainder sequence of p: [p, p', -rem(...), ...], each element
// divided by its positive content to control coefficient growth. Content
// normalization keeps every sign pattern intact.
class SturmChain {
public:
    explicit SturmChain(const DensePoly& p) {
        if (p.is_zero()) throw error("sturm chain of zero polynomial");
        polys_.push_back(p);
        DensePoly d = p.derivative();
        if (d.is_zero()) return; // constant p: chain is just [p]
        polys_.push_back(d);
        while (true) {
            auto [q, r] = divmod(polys_[polys_.size() - 2], polys_.back());
            (void)q;
            if (r.is_zero()) break;
            polys_.push_back((-r).primitive_part());
        }
    }

    const std::vector<DensePoly>& polys() const { return polys_; }

    // true when gcd(p, p') is constant
    bool squarefree() const { return polys_.size() < 2 || polys_.back().degree() == 0; }

    int variations_at(const Rational& x) const {
        int v = 0, prev = 0;
        for (const auto& f : polys_) {
            int s = sgn(f.eval(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    int variations_at_neg_inf() const {
        int v = 0, prev = 0;
        for (const auto& f : polys_) {
            int s = f.sign_at_neg_inf();
            if (prev != 0 && s != prev) ++v;
            if (s != 0) prev = s;
        }
        return v;
    }

    int variations_at_pos_inf() const {
        int v = 0, prev = 0;
        for (const auto& f : polys_) {
            int s = f.sign_at_pos_inf();
            if (prev != 0 && s != prev) ++v;
            if (s != 0) prev = s;
        }
        return v;
    }

private:
    std::vector<DensePoly> polys_;
};

// Distinct real roots over the whole line. Requires a squarefree input.
inline int count_real_roots(const SturmChain& chain) {
    if (!chain.squarefree()) throw non_squarefree("input polynomial has repeated roots");
    return chain.variations_at_neg_inf() - chain.variations_at_pos_inf();
}

// Distinct real roots in the open interval (lo, hi); endpoints must not be roots.
inline int count_real_roots(const SturmChain& chain, const Interval& iv) {
    if (!chain.squarefree()) throw non_squarefree("input polynomial has repeated roots");
    const DensePoly& p = chain.polys().front();
    if (sgn(p.eval(iv.lo)) == 0 || sgn(p.eval(iv.hi)) == 0)
        throw error("interval endpoint is a root");
    return chain.variations_at(iv.lo) - chain.variations_at(iv.hi);
}

// 1 + max|c_i| / |c_lead|; all roots lie strictly inside (-B, B)
inline Rational cauchy_bound(const DensePoly& p) {
    if (p.is_zero() || p.degree() == 0) throw error("cauchy bound needs degree >= 1");
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p[static_cast<size_t>(i)])));
    return 1 + m / abs(p.lead());
}

namespace detail {

// roots in the open interval (lo, hi) where p has no root at either endpoint
inline void isolate_in(const SturmChain& chain, const DensePoly& p,
                       const Rational& lo, const Rational& hi,
                       std::vector<IsolatedRoot>& out) {
    int k = chain.variations_at(lo) - chain.variations_at(hi);
    if (k == 0) return;
    if (k == 1) {
        int slo = sgn(p.eval(lo));
        out.push_back(IsolatedRoot::bracket(lo, hi, slo));
        return;
    }
    Rational m = (lo + hi) / 2;
    if (sgn(p.eval(m)) == 0) {
        // exact rational root at the midpoint; isolate around it
        Rational d = (hi - lo) / 4;
        while (sgn(p.eval(m - d)) == 0 || sgn(p.eval(m + d)) == 0 ||
               count_real_roots(chain, Interval(m - d, m + d)) != 1)
            d /= 2;
        isolate_in(chain, p, lo, m - d, out);
        out.push_back(IsolatedRoot::exact(m));
        isolate_in(chain, p, m + d, hi, out);
        return;
    }
    isolate_in(chain, p, lo, m, out);
    isolate_in(chain, p, m, hi, out);
}

} // namespace detail

// Guaranteed isolation of all real roots of a squarefree p, refined until each
// bracket is narrower than `precision`. Roots found exactly are reported exact.
inline RootSet isolate_roots_bisection(const DensePoly& p, const Rational& precision) {
    SturmChain chain(p);
    if (!chain.squarefree()) throw non_squarefree("input polynomial has repeated roots");
    RootSet rs;
    rs.sign = [p](const Rational& x) { return sgn(p.eval(x)); };
    if (p.degree() <= 0) return rs;
    if (p.degree() == 1) {
        rs.roots.push_back(IsolatedRoot::exact(-p[0] / p[1]));
        return rs;
    }
    Rational b = cauchy_bound(p);
    detail::isolate_in(chain, p, -b, b, rs.roots);
    rs.refine_all_below(precision);
    return rs;
}

} // namespace rootgeo

#endif
