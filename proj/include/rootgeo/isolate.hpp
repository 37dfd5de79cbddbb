#ifndef ROOTGEO_ISOLATE_HPP
#define ROOTGEO_ISOLATE_HPP

#include "rootgeo/landmarks.hpp"
#include "rootgeo/roots.hpp"
#include "rootgeo/sequence.hpp"

#include <algorithm>
#include <memory>

namespace rootgeo {

struct bracket_failure : error {
    using error::error;
};

namespace detail {

// walls for step n: landmark points, adaptive outer bounds, and the (refined)
// enclosures of the previous root set
inline std::vector<Rational> build_walls(const std::vector<IsolatedRoot>& prev,
                                         const Rational& xB, const Rational& xDelta,
                                         const Rational& L, const Rational& U) {
    std::vector<Rational> w{L, U, xB, xDelta, Rational(0)};
    for (const auto& r : prev) {
        if (r.is_exact()) {
            w.push_back(r.value());
        } else {
            w.push_back(r.lower());
            w.push_back(r.upper());
        }
    }
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    w.erase(std::remove_if(w.begin(), w.end(), [&](const Rational& x) { return x < L || x > U; }), w.end());
    return w;
}

} // namespace detail

// Root sets of W_1..W_n_max for a c != 0 spec, produced bottom-up: the roots
// of W_{n-1} interlace those of W_n, so their enclosures (plus the landmark
// points) cut the line into cells that each trap at most one sign change of
// W_n. Missing changes are recovered by shrinking the previous enclosures and
// widening the outer bounds. Entry 0 of the result is the empty set of W_0.
inline std::vector<RootSet> isolate_roots_interlaced(const RecurrenceSpec& spec, int n_max,
                                                     const Rational& eps = Rational(0)) {
    validate(spec);
    auto [ns, map] = normalize(spec);
    if (sgn(ns.c) == 0) throw c_is_zero("interlaced isolation needs c != 0 after normalization");
    auto eval = std::make_shared<SequenceSignEvaluator>(ns);
    auto sign_fn = [eval](int n) {
        return SignFn([eval, n](const Rational& x) { return eval->sign_at(x, n); });
    };

    Rational xB = -ns.c / ns.b;
    Rational xDelta = -(ns.a * ns.a + 4 * ns.c) / (4 * ns.b);

    std::vector<RootSet> sets;
    sets.reserve(static_cast<size_t>(n_max) + 1);
    sets.push_back(RootSet{0, {}, [](const Rational&) { return 1; }});
    if (n_max >= 1)
        sets.push_back(RootSet{1, {IsolatedRoot::exact(Rational(0))}, sign_fn(1)});
    if (n_max >= 2)
        sets.push_back(RootSet{2, {IsolatedRoot::exact(-ns.c / (ns.a + ns.b))}, sign_fn(2)});

    Rational spread = abs(xB) + abs(xDelta) + 1;
    for (int n = 3; n <= n_max; ++n) {
        const int d = (n + 1) / 2;
        auto& prev = sets[static_cast<size_t>(n - 1)];
        SignFn sn = sign_fn(n);
        Rational L = std::min({prev.roots.front().lower(), xDelta, xB}) - spread;
        Rational U = std::max({prev.roots.back().upper(), Rational(0)}) + spread;
        std::vector<IsolatedRoot> found;
        bool ok = false;
        for (int attempt = 0; attempt < 200 && !ok; ++attempt) {
            found.clear();
            std::vector<Rational> walls = detail::build_walls(prev.roots, xB, xDelta, L, U);
            // augmented scan points: a wall where W_n vanishes exactly is an
            // exact root; it is replaced by two flanking points whose signs
            // differ (the simple root flips the sign exactly once between
            // them), and the flanked segment is excluded from bracket search
            struct Pt {
                Rational x;
                int s;
                bool skip_before; // segment ending here holds a recorded exact root
            };
            std::vector<Pt> pts;
            bool punctured_ok = true;
            for (size_t i = 0; i < walls.size(); ++i) {
                int s = sn(walls[i]);
                if (s != 0) {
                    pts.push_back(Pt{walls[i], s, false});
                    continue;
                }
                found.push_back(IsolatedRoot::exact(walls[i]));
                Rational gl = i > 0 ? walls[i] - walls[i - 1] : Rational(1);
                Rational gr = i + 1 < walls.size() ? walls[i + 1] - walls[i] : Rational(1);
                Rational delta = std::min(gl, gr) / 4;
                for (int k = 0; k < attempt; ++k) delta /= 2;
                int sl = 0, sr = 0;
                for (int k = 0; k < 64 && (sl == 0 || sr == 0 || sl == sr); ++k) {
                    sl = sn(walls[i] - delta);
                    sr = sn(walls[i] + delta);
                    if (sl == 0 || sr == 0 || sl == sr) delta /= 2;
                }
                if (sl == 0 || sr == 0 || sl == sr) {
                    punctured_ok = false;
                    break;
                }
                pts.push_back(Pt{walls[i] - delta, sl, false});
                pts.push_back(Pt{walls[i] + delta, sr, true});
            }
            if (punctured_ok) {
                for (size_t i = 1; i < pts.size(); ++i)
                    if (!pts[i].skip_before && pts[i].s != pts[i - 1].s)
                        found.push_back(IsolatedRoot::bracket(pts[i - 1].x, pts[i].x,
                                                              pts[i - 1].s));
            }
            // exact count certifies the partition: d simple roots in total and
            // each detected cell holds at least one of them
            if (punctured_ok && static_cast<int>(found.size()) == d) {
                ok = true;
                break;
            }
            // not all roots separated yet: sharpen the interlacing enclosures
            // and push the outer bounds further out
            for (auto& r : prev.roots) {
                r.refine_step(prev.sign);
                r.refine_step(prev.sign);
            }
            L -= spread;
            U += spread;
            spread *= 2;
        }
        if (!ok)
            throw bracket_failure("failed to separate the roots of step " + std::to_string(n));
        std::sort(found.begin(), found.end(),
                  [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lower() < b.lower(); });
        sets.push_back(RootSet{n, std::move(found), sn});
    }

    // carry everything back to the original coordinates
    auto orig_eval = std::make_shared<SequenceSignEvaluator>(spec);
    for (auto& rs : sets) {
        int n = rs.n;
        std::vector<IsolatedRoot> mapped;
        mapped.reserve(rs.roots.size());
        for (const auto& r : rs.roots) {
            if (r.kind() == IsolatedRoot::Kind::Exact)
                mapped.push_back(IsolatedRoot::exact(map.apply(r.value())));
            else {
                // the sign pattern survives: W_n(y/t + r) equals the normalized
                // sequence value at y, and the map is increasing (t > 0)
                IsolatedRoot b = r;
                mapped.push_back(IsolatedRoot::bracket(map.apply(b.lower()), map.apply(b.upper()),
                                                       rs.sign(b.lower())));
            }
        }
        rs.roots = std::move(mapped);
        rs.sign = SignFn([orig_eval, n](const Rational& x) { return orig_eval->sign_at(x, n); });
        if (sgn(eps) > 0) rs.refine_all_below(eps);
    }
    return sets;
}

} // namespace rootgeo

#endif
