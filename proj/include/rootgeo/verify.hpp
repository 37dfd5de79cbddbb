#ifndef ROOTGEO_VERIFY_HPP
#define ROOTGEO_VERIFY_HPP

#include "rootgeo/convergence.hpp"
#include "rootgeo/isolate.hpp"
#include "rootgeo/landmarks.hpp"
#include "rootgeo/sturm.hpp"

#include <sstream>
#include <string>

namespace rootgeo {

struct premise_violated : error {
    using error::error;
};

enum class Relation { bowtie, rtimes };

struct InterlacingVerdict {
    Relation relation;
    int lhs_n = 0, rhs_n = 0;
    bool holds = false;
    std::string witness; // first violated comparison, empty when holds
};

struct TheoremReport {
    std::string theorem_id;
    int checks_passed = 0;
    int checks_failed = 0;
    std::vector<std::string> failures;

    bool ok() const { return checks_failed == 0; }
    void check(bool cond, const std::string& what) {
        if (cond) {
            ++checks_passed;
        } else {
            ++checks_failed;
            failures.push_back(what);
        }
    }
    void merge(const TheoremReport& o) {
        checks_passed += o.checks_passed;
        checks_failed += o.checks_failed;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

namespace detail {

// strict alternation x1 < y1 < x2 < ... (bowtie) or y1 < x1 < y2 < ... (rtimes,
// equal-size branch); returns index of the first failing comparison or -1
inline int alternation_violation(const std::vector<IsolatedRoot>& xs, const SignFn& fx,
                                 const std::vector<IsolatedRoot>& ys, const SignFn& fy,
                                 bool x_first) {
    // merged chain: element 2k is from the set that starts the chain
    size_t total = xs.size() + ys.size();
    for (size_t i = 0; i + 1 < total; ++i) {
        const auto& lo = (i % 2 == 0) == x_first ? xs[i / 2] : ys[i / 2];
        const auto& lf = (i % 2 == 0) == x_first ? fx : fy;
        size_t j = i + 1;
        const auto& hi = (j % 2 == 0) == x_first ? xs[j / 2] : ys[j / 2];
        const auto& hf = (j % 2 == 0) == x_first ? fx : fy;
        if (compare_roots(lo, lf, hi, hf) >= 0) return static_cast<int>(i);
    }
    return -1;
}

} // namespace detail

// Definition of the two interlacing relations, decided with exact root
// comparisons (brackets are refined until disjoint as needed).
inline InterlacingVerdict check_interlacing(const RootSet& x, const RootSet& y, Relation rel) {
    InterlacingVerdict v{rel, x.n, y.n, false, ""};
    const size_t s = x.size(), t = y.size();
    if (rel == Relation::bowtie || s == t + 1) {
        // x1 < y1 < x2 < ... < y_t < x_s
        if (s != t + 1) {
            v.witness = "size mismatch: |X| = " + std::to_string(s) + ", |Y| = " + std::to_string(t);
            return v;
        }
        int bad = detail::alternation_violation(x.roots, x.sign, y.roots, y.sign, true);
        if (bad >= 0) {
            v.witness = "alternation fails at chain position " + std::to_string(bad);
            return v;
        }
        v.holds = true;
        return v;
    }
    // rtimes with equal sizes: y1 < x1 < y2 < ... < y_t < x_s
    if (s != t) {
        v.witness = "size mismatch: |X| = " + std::to_string(s) + ", |Y| = " + std::to_string(t);
        return v;
    }
    if (s == 0) {
        v.holds = true; // empty vs empty
        return v;
    }
    int bad = detail::alternation_violation(x.roots, x.sign, y.roots, y.sign, false);
    if (bad >= 0) {
        v.witness = "alternation fails at chain position " + std::to_string(bad);
        return v;
    }
    v.holds = true;
    return v;
}

// R_n with its largest element removed (the primed sets of the c > 0 case)
inline RootSet primed(const RootSet& rs) {
    RootSet p{rs.n, rs.roots, rs.sign};
    if (!p.roots.empty()) p.roots.pop_back();
    return p;
}

// Distinct-real-rootedness theorem: counts, ordering against x_B, and the
// interlacing chains (plain sets for c < 0, primed sets for c > 0).
inline TheoremReport verify_theorem_RR(const RecurrenceSpec& spec, const std::vector<RootSet>& rs,
                                       int n_max) {
    if (!spec.normalized()) throw domain_error("verification expects a normalized spec");
    TheoremReport rep{"distinct-real-rootedness"};
    Rational xB = -spec.c / spec.b;
    bool cneg = sgn(spec.c) < 0;
    Rational xD = -(spec.a * spec.a + 4 * spec.c) / (4 * spec.b);
    for (int n = 1; n <= n_max; ++n) {
        const RootSet& r = rs[static_cast<size_t>(n)];
        rep.check(static_cast<int>(r.size()) == (n + 1) / 2,
                  "root count != floor((n+1)/2) at n=" + std::to_string(n));
        int c = r.largest().compare(xB, r.sign);
        rep.check(cneg ? c < 0 : c > 0,
                  std::string("largest root not ") + (cneg ? "below" : "above") + " x_B at n=" +
                      std::to_string(n));
        if (!cneg) {
            RootSet rp = primed(r);
            bool below = true;
            for (const auto& root : rp.roots)
                if (root.compare(xD, rp.sign) >= 0) below = false;
            rep.check(below, "primed set not inside (-inf, x_Delta) at n=" + std::to_string(n));
        }
    }
    for (int n = 1; n + 1 <= n_max; ++n) {
        const RootSet& lo = rs[static_cast<size_t>(n)];
        const RootSet& hi = rs[static_cast<size_t>(n + 1)];
        InterlacingVerdict v = cneg ? check_interlacing(hi, lo, Relation::rtimes)
                                    : check_interlacing(primed(hi), primed(lo), Relation::rtimes);
        rep.check(v.holds, "rtimes fails between n=" + std::to_string(n + 1) + " and n=" +
                               std::to_string(n) + ": " + v.witness);
    }
    for (int n = 1; n + 2 <= n_max; ++n) {
        const RootSet& lo = rs[static_cast<size_t>(n)];
        const RootSet& hi = rs[static_cast<size_t>(n + 2)];
        InterlacingVerdict v = cneg ? check_interlacing(hi, lo, Relation::bowtie)
                                    : check_interlacing(primed(hi), primed(lo), Relation::bowtie);
        rep.check(v.holds, "bowtie fails between n=" + std::to_string(n + 2) + " and n=" +
                               std::to_string(n) + ": " + v.witness);
    }
    return rep;
}

// Case-split bound theorem: everything below x_Delta except the tracked
// largest roots, whose position is governed by n0 (case II) or oscillates
// around x_g (case III).
inline TheoremReport verify_theorem_bounds(const RecurrenceSpec& spec, const std::vector<RootSet>& rs,
                                           int n_max) {
    if (!spec.normalized()) throw domain_error("verification expects a normalized spec");
    TheoremReport rep{"zero-set-bounds"};
    Landmarks lm = compute_landmarks(spec);
    auto all_below_xD = [&](const RootSet& set, int skip_largest) {
        size_t count = set.size() - static_cast<size_t>(skip_largest);
        for (size_t i = 0; i < count; ++i)
            if (set.roots[i].compare(lm.x_Delta, set.sign) >= 0) return false;
        return true;
    };
    switch (lm.case_tag) {
        case CaseTag::I:
            for (int n = 1; n <= n_max; ++n)
                rep.check(all_below_xD(rs[static_cast<size_t>(n)], 0),
                          "case I: root >= x_Delta at n=" + std::to_string(n));
            break;
        case CaseTag::II: {
            for (int n = 1; n <= n_max; ++n) {
                const RootSet& r = rs[static_cast<size_t>(n)];
                rep.check(all_below_xD(r, 1),
                          "case II: non-largest root >= x_Delta at n=" + std::to_string(n));
                int rel = cmp(Rational(n), *lm.n0);
                int pos = r.largest().compare(lm.x_Delta, r.sign);
                if (rel < 0) {
                    rep.check(pos < 0, "case II: y_n not < x_Delta for n < n0, n=" + std::to_string(n));
                } else if (rel == 0) {
                    rep.check(pos == 0, "case II: y_n != x_Delta at n = n0 = " + std::to_string(n));
                } else {
                    bool in = pos > 0 && r.largest().compare(*lm.x_g, r.sign) < 0;
                    rep.check(in, "case II: y_n not in (x_Delta, x_g) at n=" + std::to_string(n));
                }
            }
            break;
        }
        case CaseTag::III: {
            for (int n = 1; n <= n_max; ++n)
                rep.check(all_below_xD(rs[static_cast<size_t>(n)], 1),
                          "case III: non-largest root >= x_Delta at n=" + std::to_string(n));
            // x_B < y_2 < y_4 < ... < x_g < ... < y_5 < y_3 < y_1 = 0
            const RootSet& r1 = rs[1];
            rep.check(r1.largest().kind() == IsolatedRoot::Kind::Exact &&
                          sgn(r1.largest().value()) == 0,
                      "case III: y_1 != 0");
            if (n_max >= 2) {
                const RootSet& r2 = rs[2];
                rep.check(r2.largest().compare(lm.x_B, r2.sign) > 0, "case III: y_2 <= x_B");
            }
            for (int n = 2; n + 2 <= n_max; n += 2) {
                const RootSet& a = rs[static_cast<size_t>(n)];
                const RootSet& b = rs[static_cast<size_t>(n + 2)];
                rep.check(compare_roots(a.largest(), a.sign, b.largest(), b.sign) < 0,
                          "case III: even largest roots not increasing at n=" + std::to_string(n));
            }
            for (int n = 1; n + 2 <= n_max; n += 2) {
                const RootSet& a = rs[static_cast<size_t>(n)];
                const RootSet& b = rs[static_cast<size_t>(n + 2)];
                rep.check(compare_roots(a.largest(), a.sign, b.largest(), b.sign) > 0,
                          "case III: odd largest roots not decreasing at n=" + std::to_string(n));
            }
            for (int n = 1; n <= n_max; ++n) {
                const RootSet& r = rs[static_cast<size_t>(n)];
                int c = r.largest().compare(*lm.x_g, r.sign);
                rep.check(n % 2 == 0 ? c < 0 : c > 0,
                          "case III: largest root on the wrong side of x_g at n=" + std::to_string(n));
            }
            break;
        }
    }
    return rep;
}

namespace detail {

// exact sign of the polynomial behind `host` at a root of another polynomial,
// by refining until the foreign root's enclosure avoids every root of host
inline int sign_at_root(IsolatedRoot at, const SignFn& at_sign, const RootSet& host) {
    if (at.is_exact() && at.kind() == IsolatedRoot::Kind::Exact) {
        int s = host.sign(at.value());
        if (s != 0) return s;
        throw error("sign requested at a shared root");
    }
    std::vector<IsolatedRoot> h = host.roots;
    for (int guard = 0; guard < 100000; ++guard) {
        bool clear = true;
        for (auto& rho : h) {
            if (rho.upper() <= at.lower() || rho.lower() >= at.upper()) continue;
            clear = false;
            rho.refine_step(host.sign);
            at.refine_step(at_sign);
        }
        if (clear) break;
        if (at.is_exact() && at.kind() == IsolatedRoot::Kind::Exact) {
            int s = host.sign(at.value());
            if (s != 0) return s;
            throw error("sign requested at a shared root");
        }
    }
    return host.sign(at.midpoint());
}

} // namespace detail

// Sign-inequality lemma for two interlacing zero-sets truncated below beta:
// f(y_j) f(beta) (-1)^{q-j} < 0 over j in [q+1-p, q+1] and
// g(x_i) g(beta) (-1)^{p-i} > 0 over i in [p-q, p], with the conventions
// x_0 = y_0 = -inf and y_{q+1} = beta.
inline TheoremReport verify_appendix_A(const RootSet& f_roots, int f_sign_neg_inf,
                                       const RootSet& g_roots, int g_sign_neg_inf,
                                       const Rational& beta) {
    TheoremReport rep{"interlacing-sign-lemma"};
    RootSet X{f_roots.n, {}, f_roots.sign};
    RootSet Y{g_roots.n, {}, g_roots.sign};
    for (const auto& r : f_roots.roots)
        if (r.compare(beta, f_roots.sign) < 0) X.roots.push_back(r);
    for (const auto& r : g_roots.roots)
        if (r.compare(beta, g_roots.sign) < 0) Y.roots.push_back(r);
    const int p = static_cast<int>(X.size()), q = static_cast<int>(Y.size());
    InterlacingVerdict pre = check_interlacing(X, Y, Relation::rtimes);
    if (!pre.holds)
        throw premise_violated("truncated sets do not satisfy the rtimes premise: " + pre.witness);
    int fb = f_roots.sign(beta);
    if (fb != 0) {
        for (int j = std::max(0, q + 1 - p); j <= q + 1; ++j) {
            int fy;
            if (j == 0) fy = f_sign_neg_inf;
            else if (j == q + 1) fy = fb; // y_{q+1} = beta: holds trivially
            else fy = detail::sign_at_root(Y.roots[static_cast<size_t>(j - 1)], Y.sign, f_roots);
            int parity = (q - j) % 2 == 0 ? 1 : -1;
            rep.check(fy * fb * parity < 0, "f-family inequality fails at j=" + std::to_string(j));
        }
    }
    int gb = g_roots.sign(beta);
    if (gb != 0) {
        for (int i = std::max(0, p - q); i <= p; ++i) {
            int gx = i == 0 ? g_sign_neg_inf
                            : detail::sign_at_root(X.roots[static_cast<size_t>(i - 1)], X.sign, g_roots);
            int parity = (p - i) % 2 == 0 ? 1 : -1;
            rep.check(gx * gb * parity > 0, "g-family inequality fails at i=" + std::to_string(i));
        }
    }
    return rep;
}

// One step of the real-rootedness criterion: verify the four premises at
// (m, k, beta), then confirm the concluded set T_{m+2} exists among the
// actual roots of W_{m+2}.
inline TheoremReport verify_criterion_step(const RecurrenceSpec& spec, const std::vector<RootSet>& rs,
                                           int m, int k, const Rational& beta) {
    if (!spec.normalized()) throw domain_error("verification expects a normalized spec");
    if (beta > -spec.c / spec.b) throw premise_violated("beta must be <= -c/b");
    if (m + 2 >= static_cast<int>(rs.size())) throw domain_error("need root sets up to m+2");
    SequenceSignEvaluator ev(spec);
    int wmb = ev.sign_at(beta, m);
    if (wmb * (k % 2 == 0 ? 1 : -1) <= 0)
        throw premise_violated("condition W_m(beta)(-1)^k > 0 fails");
    auto truncate = [&](const RootSet& full) {
        RootSet t{full.n, {}, full.sign};
        for (const auto& r : full.roots)
            if (r.compare(beta, full.sign) < 0) t.roots.push_back(r);
        return t;
    };
    RootSet Tm = truncate(rs[static_cast<size_t>(m)]);
    RootSet Tm1 = truncate(rs[static_cast<size_t>(m + 1)]);
    int dm = (m + 1) / 2, dm1 = (m + 2) / 2, dm2 = (m + 3) / 2;
    if (static_cast<int>(Tm.size()) != dm - k) throw premise_violated("condition |T_m| = d_m - k fails");
    if (static_cast<int>(Tm1.size()) != dm1 - k)
        throw premise_violated("condition |T_{m+1}| = d_{m+1} - k fails");
    if (!check_interlacing(Tm1, Tm, Relation::rtimes).holds)
        throw premise_violated("condition T_{m+1} rtimes T_m fails");

    TheoremReport rep{"criterion-step"};
    RootSet S = truncate(rs[static_cast<size_t>(m + 2)]);
    int want = dm2 - k;
    bool exists = false;
    if (static_cast<int>(S.size()) >= want) {
        for (size_t start = 0; start + static_cast<size_t>(want) <= S.size() && !exists; ++start) {
            RootSet cand{S.n, {S.roots.begin() + static_cast<long>(start),
                               S.roots.begin() + static_cast<long>(start) + want},
                         S.sign};
            exists = check_interlacing(cand, Tm1, Relation::rtimes).holds;
        }
    }
    rep.check(exists, "no T_{m+2} of size d_{m+2}-k with T_{m+2} rtimes T_{m+1}");
    if (static_cast<int>(S.size()) == want)
        rep.check(check_interlacing(S, Tm, Relation::bowtie).holds,
                  "T_{m+2} bowtie T_m fails when T_{m+2} exhausts the truncated set");
    return rep;
}

// Finite-horizon proxies for the limit theorems: exact monotonicity /
// oscillation of the top root columns, landmark proximity within `slack`
// at n_max, and a divergence proxy for the fixed low indices.
inline TheoremReport verify_limits(const RecurrenceSpec& spec, std::vector<RootSet>& rs,
                                   int n_max, int i_max, const Rational& slack) {
    if (n_max < 20) throw domain_error("limit verification needs n_max >= 20");
    TheoremReport rep{"limit-points"};
    ConvergenceReport conv = convergence_report(spec, rs, n_max, i_max, std::min(20, n_max - 10));
    for (const auto& tr : conv.offsets) {
        bool top = tr.offset == 0;
        if (top && conv.case_tag == CaseTag::III)
            rep.check(tr.oscillating, "largest roots do not oscillate around x_g");
        else
            rep.check(tr.monotone_increasing,
                      "root column at offset " + std::to_string(tr.offset) + " not increasing");
        rep.check(tr.distance_bound < slack,
                  "offset " + std::to_string(tr.offset) + " column not within slack of " + tr.landmark);
    }
    for (const auto& tr : conv.fixed)
        rep.check(tr.diverging,
                  "fixed index " + std::to_string(tr.index) + " shows no leftward divergence");
    return rep;
}

// Real-rootedness of the fixed degree-3 recursion at desk scale.
struct ConjectureVerdict {
    int n_verified = 0;
    struct PerN {
        int n;
        int degree;
        int real_roots;
        bool squarefree;
    };
    std::vector<PerN> per_n;
    bool all_real = true;
};

inline ConjectureVerdict verify_conjecture(int n_max) {
    std::vector<DensePoly> w = generate_degree3(n_max);
    ConjectureVerdict v;
    v.n_verified = n_max;
    for (int n = 0; n <= n_max; ++n) {
        const DensePoly& p = w[static_cast<size_t>(n)];
        int deg = p.degree();
        if (deg <= 0) {
            v.per_n.push_back({n, deg, 0, true});
            continue;
        }
        DensePoly g = poly_gcd(p, p.derivative());
        bool sf = g.degree() == 0;
        // a polynomial is real-rooted iff its squarefree part is: every
        // distinct root appears there
        DensePoly core = sf ? p : exact_div(p, g);
        int count = count_real_roots(SturmChain(core));
        v.per_n.push_back({n, deg, count, sf});
        if (count != core.degree()) v.all_real = false;
    }
    return v;
}

} // namespace rootgeo

#endif
