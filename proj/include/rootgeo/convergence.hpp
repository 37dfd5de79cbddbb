#ifndef ROOTGEO_CONVERGENCE_HPP
#define ROOTGEO_CONVERGENCE_HPP

#include "rootgeo/isolate.hpp"
#include "rootgeo/landmarks.hpp"

namespace rootgeo {

namespace detail {

// conservative rational enclosure of a surd from a 192-bit float image
inline Interval surd_enclosure(const QuadraticSurd& s) {
    if (s.is_rational()) {
        Rational v = s.as_rational();
        return Interval(v - Rational(1, 1000000000), v + Rational(1, 1000000000));
    }
    mpf_class a = s.approx(192);
    mpf_class w;
    mpf_div_2exp(w.get_mpf_t(), mpf_class(abs(a) + 1, 192).get_mpf_t(), 96);
    return Interval(Rational(mpf_class(a - w)), Rational(mpf_class(a + w)));
}

// upper bound on |root - landmark interval|
inline Rational distance_bound(const IsolatedRoot& r, const Interval& lm) {
    Rational d1 = abs(Rational(r.upper() - lm.lo));
    Rational d2 = abs(Rational(lm.hi - r.lower()));
    return std::max(d1, d2);
}

} // namespace detail

// One root column tracked at a fixed offset from the top: the sequence
// n -> xi_{n, d_n - offset}.
struct OffsetTrace {
    int offset;
    bool monotone_increasing = false;
    bool oscillating = false; // even subsequence up, odd down, sandwiching x_g
    Rational last_value;      // midpoint at n_max
    std::string landmark;     // "x_g" or "x_Delta"
    Rational distance_bound;  // certified upper bound on |xi - landmark| at n_max
};

// One root column tracked at a fixed index from the bottom.
struct FixedIndexTrace {
    int index;          // 1-based from the smallest root
    Rational value_ref; // midpoint at the reference n
    Rational value_last;
    bool diverging; // xi_{n_max, index} strictly left of xi_{ref, index}, certified
};

struct ConvergenceReport {
    CaseTag case_tag;
    std::vector<OffsetTrace> offsets;
    std::vector<FixedIndexTrace> fixed;
};

// Finite-horizon picture of the limit behavior of the root columns: offsets
// from the top approach x_g (offset 0, cases II/III) or x_Delta, fixed
// low indices run off to the left.
inline ConvergenceReport convergence_report(const RecurrenceSpec& spec, std::vector<RootSet>& rs,
                                            int n_max, int i_max, int ref_n = 20) {
    if (!spec.normalized()) throw domain_error("convergence report expects a normalized spec");
    if (n_max > static_cast<int>(rs.size()) - 1 || ref_n > n_max)
        throw domain_error("root sets do not cover the requested range");
    Landmarks lm = compute_landmarks(spec);
    ConvergenceReport rep;
    rep.case_tag = lm.case_tag;
    Rational fine(1, 1000000000);
    for (int i = 0; i <= i_max; ++i) {
        int n_start = 2 * i + 1; // first n with d_n > i
        if (n_start > n_max) break;
        OffsetTrace tr;
        tr.offset = i;
        auto pick = [&](int n) -> IsolatedRoot& {
            auto& set = rs[static_cast<size_t>(n)];
            return set.roots[set.size() - 1 - static_cast<size_t>(i)];
        };
        bool inc = true;
        for (int n = n_start; n + 1 <= n_max; ++n) {
            auto& a = rs[static_cast<size_t>(n)];
            auto& b = rs[static_cast<size_t>(n + 1)];
            if (compare_roots(pick(n), a.sign, pick(n + 1), b.sign) >= 0) {
                inc = false;
                break;
            }
        }
        tr.monotone_increasing = inc;
        if (i == 0 && lm.case_tag == CaseTag::III) {
            bool osc = true;
            for (int n = n_start; n + 2 <= n_max; ++n) {
                auto& a = rs[static_cast<size_t>(n)];
                auto& b = rs[static_cast<size_t>(n + 2)];
                int c = compare_roots(pick(n), a.sign, pick(n + 2), b.sign);
                if (n % 2 == 0 ? c >= 0 : c <= 0) {
                    osc = false;
                    break;
                }
            }
            for (int n = n_start; n <= n_max && osc; ++n) {
                int c = pick(n).compare(*lm.x_g, rs[static_cast<size_t>(n)].sign);
                if (n % 2 == 0 ? c >= 0 : c <= 0) osc = false;
            }
            tr.oscillating = osc;
        }
        IsolatedRoot& last = pick(n_max);
        last.refine_below(rs[static_cast<size_t>(n_max)].sign, fine);
        tr.last_value = last.midpoint();
        bool to_xg = i == 0 && lm.case_tag != CaseTag::I && lm.x_g.has_value();
        tr.landmark = to_xg ? "x_g" : "x_Delta";
        Interval target = to_xg ? detail::surd_enclosure(*lm.x_g)
                                : Interval(lm.x_Delta - fine, lm.x_Delta + fine);
        tr.distance_bound = detail::distance_bound(last, target);
        rep.offsets.push_back(std::move(tr));
    }
    for (int i = 1; i <= i_max; ++i) {
        if (i > (ref_n + 1) / 2) break;
        auto& ra = rs[static_cast<size_t>(ref_n)];
        auto& rb = rs[static_cast<size_t>(n_max)];
        IsolatedRoot& a = ra.roots[static_cast<size_t>(i - 1)];
        IsolatedRoot& b = rb.roots[static_cast<size_t>(i - 1)];
        a.refine_below(ra.sign, Rational(1, 1000000));
        b.refine_below(rb.sign, Rational(1, 1000000));
        FixedIndexTrace tr{i, a.midpoint(), b.midpoint(), b.upper() < a.lower()};
        rep.fixed.push_back(std::move(tr));
    }
    return rep;
}

} // namespace rootgeo

#endif
