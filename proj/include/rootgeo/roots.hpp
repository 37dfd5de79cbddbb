#ifndef ROOTGEO_ROOTS_HPP
#define ROOTGEO_ROOTS_HPP

#include "rootgeo/rational.hpp"
#include "rootgeo/surd.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rootgeo {

struct refinement_exhausted : error {
    using error::error;
};

// Open interval with rational endpoints, lo < hi.
struct Interval {
    Rational lo, hi;
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo >= hi) throw error("empty interval");
    }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
};

// Sign of the owning polynomial at a rational point.
using SignFn = std::function<int(const Rational&)>;

// One isolated simple real root: exact rational, exact quadratic surd, or a
// shrinking open interval with a strict sign change across its endpoints.
class IsolatedRoot {
public:
    enum class Kind { Exact, Surd, Bracket };

    static IsolatedRoot exact(Rational v) {
        IsolatedRoot r;
        r.kind_ = Kind::Exact;
        r.value_ = std::move(v);
        return r;
    }
    static IsolatedRoot surd(QuadraticSurd s) {
        if (s.is_rational()) return exact(s.as_rational());
        IsolatedRoot r;
        r.kind_ = Kind::Surd;
        r.surd_ = std::move(s);
        return r;
    }
    // requires sign(lo)*sign(hi) == -1 for the owning polynomial
    static IsolatedRoot bracket(Rational lo, Rational hi, int sign_lo) {
        IsolatedRoot r;
        r.kind_ = Kind::Bracket;
        r.lo_ = std::move(lo);
        r.hi_ = std::move(hi);
        r.sign_lo_ = sign_lo;
        return r;
    }

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ != Kind::Bracket; }
    const Rational& value() const {
        if (kind_ != Kind::Exact) throw error("root is not an exact rational");
        return value_;
    }
    const QuadraticSurd& surd_value() const {
        if (kind_ != Kind::Surd) throw error("root is not an exact surd");
        return surd_;
    }

    // rational bounds: lower() <= root <= upper(), equality only for exact kinds
    Rational lower() const {
        switch (kind_) {
            case Kind::Exact: return value_;
            case Kind::Bracket: return lo_;
            case Kind::Surd: break;
        }
        return surd_lower();
    }
    Rational upper() const {
        switch (kind_) {
            case Kind::Exact: return value_;
            case Kind::Bracket: return hi_;
            case Kind::Surd: break;
        }
        return surd_upper();
    }

    Rational width() const { return upper() - lower(); }

    Rational midpoint() const {
        if (kind_ == Kind::Exact) return value_;
        if (kind_ == Kind::Surd) return (surd_lower() + surd_upper()) / 2;
        return (lo_ + hi_) / 2;
    }

    // One bisection step; converts to exact if the midpoint is a root.
    void refine_step(const SignFn& sign) {
        if (kind_ != Kind::Bracket) return;
        Rational m = (lo_ + hi_) / 2;
        int s = sign(m);
        if (s == 0) {
            kind_ = Kind::Exact;
            value_ = std::move(m);
            return;
        }
        if (s == sign_lo_) lo_ = std::move(m);
        else hi_ = std::move(m);
    }

    void refine_below(const SignFn& sign, const Rational& eps) {
        int guard = 0;
        while (kind_ == Kind::Bracket && hi_ - lo_ >= eps) {
            refine_step(sign);
            if (++guard > 100000) throw refinement_exhausted("bracket refinement stalled");
        }
    }

    // Exact comparison against a rational point. Returns -1/0/+1 for
    // root < r / root == r / root > r.
    int compare(const Rational& r, const SignFn& sign) const {
        if (kind_ == Kind::Exact) return cmp(value_, r);
        if (kind_ == Kind::Surd) return surd_.compare(r);
        if (r <= lo_) return 1;
        if (r >= hi_) return -1;
        int sr = sign(r);
        if (sr == 0) return 0; // r is the bracketed root itself
        // exactly one simple root in (lo, hi): the sign flips once
        return sr == sign_lo_ ? 1 : -1;
    }

    // Exact comparison against a surd; the root must differ from the surd.
    int compare(const QuadraticSurd& s, const SignFn& sign) const {
        if (kind_ == Kind::Exact) return -s.compare(value_);
        if (kind_ == Kind::Surd) return surd_.compare(s);
        IsolatedRoot tmp(*this);
        for (int i = 0; i < 100000; ++i) {
            if (tmp.kind_ == Kind::Exact) return -s.compare(tmp.value_);
            if (s.compare(tmp.lo_) <= 0) return 1;
            if (s.compare(tmp.hi_) >= 0) return -1;
            tmp.refine_step(sign);
        }
        throw refinement_exhausted("root/surd comparison stalled (equal values?)");
    }

    std::string str() const {
        switch (kind_) {
            case Kind::Exact: return value_.get_str();
            case Kind::Surd: return surd_.str();
            case Kind::Bracket: break;
        }
        return "(" + lo_.get_str() + ", " + hi_.get_str() + ")";
    }

private:
    Rational surd_lower() const {
        mpf_class a = surd_.approx(192);
        // conservative rational bracket from the float image
        mpf_class w;
        mpf_div_2exp(w.get_mpf_t(), mpf_class(abs(a) + 1, 192).get_mpf_t(), 96);
        return Rational(mpf_class(a - w));
    }
    Rational surd_upper() const {
        mpf_class a = surd_.approx(192);
        mpf_class w;
        mpf_div_2exp(w.get_mpf_t(), mpf_class(abs(a) + 1, 192).get_mpf_t(), 96);
        return Rational(mpf_class(a + w));
    }

    Kind kind_ = Kind::Exact;
    Rational value_;
    QuadraticSurd surd_;
    Rational lo_, hi_;
    int sign_lo_ = 0;
};

// Ordered set of isolated roots of one polynomial, with the sign evaluator
// needed to refine its brackets.
struct RootSet {
    int n = 0; // sequence index when owned by a W_n, else unused
    std::vector<IsolatedRoot> roots;
    SignFn sign;

    size_t size() const { return roots.size(); }
    bool empty() const { return roots.empty(); }

    const IsolatedRoot& largest() const {
        if (roots.empty()) throw error("empty root set has no largest root");
        return roots.back();
    }

    void refine_all_below(const Rational& eps) {
        for (auto& r : roots)
            r.refine_below(sign, eps);
    }
};

// Strict order comparison of two roots from (possibly) different polynomials;
// refines both brackets until they are disjoint. Returns -1/0/+1.
inline int compare_roots(const IsolatedRoot& a, const SignFn& fa,
                         const IsolatedRoot& b, const SignFn& fb) {
    if (a.is_exact() && b.is_exact()) {
        if (a.kind() == IsolatedRoot::Kind::Exact && b.kind() == IsolatedRoot::Kind::Exact)
            return cmp(a.value(), b.value());
        QuadraticSurd sa = a.kind() == IsolatedRoot::Kind::Surd ? a.surd_value() : QuadraticSurd(a.value());
        QuadraticSurd sb = b.kind() == IsolatedRoot::Kind::Surd ? b.surd_value() : QuadraticSurd(b.value());
        return sa.compare(sb);
    }
    if (a.is_exact()) {
        if (a.kind() == IsolatedRoot::Kind::Exact) return -b.compare(a.value(), fb);
        return -b.compare(a.surd_value(), fb);
    }
    if (b.is_exact()) {
        if (b.kind() == IsolatedRoot::Kind::Exact) return a.compare(b.value(), fa);
        return a.compare(b.surd_value(), fa);
    }
    IsolatedRoot ra(a), rb(b);
    for (int i = 0; i < 100000; ++i) {
        if (ra.is_exact()) return -rb.compare(ra.value(), fb);
        if (rb.is_exact()) return ra.compare(rb.value(), fa);
        if (ra.upper() <= rb.lower()) return -1;
        if (rb.upper() <= ra.lower()) return 1;
        ra.refine_step(fa);
        rb.refine_step(fb);
    }
    throw refinement_exhausted("root comparison stalled (shared root?)");
}

} // namespace rootgeo

#endif
