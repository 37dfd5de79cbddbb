#ifndef ROOTGEO_REPORT_HPP
#define ROOTGEO_REPORT_HPP

#include "rootgeo/convergence.hpp"
#include "rootgeo/isolate.hpp"
#include "rootgeo/landmarks.hpp"

#include <array>
#include <string>
#include <vector>

namespace rootgeo {

struct golden_mismatch : error {
    using error::error;
};

// Reference root tables for the two worked examples (a=b=1 with c=-1/2 and
// c=1), printed to 4 truncated decimals, roots ascending per row.
inline const std::vector<std::vector<std::string>>& golden_table(const std::string& name) {
    static const std::vector<std::vector<std::string>> t1 = {
        {"0"},
        {"0.2500"},
        {"-1.7807", "0.2807"},
        {"-0.2886", "0.2886"},
        {"-4.2912", "0", "0.2912"},
        {"-1.0218", "0.1046", "0.2922"},
        {"-7.5833", "-0.3639", "0.1547", "0.2926"},
        {"-1.9561", "-0.1194", "0.1827", "0.2927"},
    };
    static const std::vector<std::vector<std::string>> t2 = {
        {"0"},
        {"-0.5000"},
        {"-2.6180", "-0.3819"},
        {"-1.5773", "-0.4226"},
        {"-5.1819", "-1.4064", "-0.4116"},
        {"-2.2405", "-1.3444", "-0.4149"},
        {"-8.5525", "-1.7194", "-1.3140", "-0.4139"},
        {"-3.1548", "-1.5342", "-1.2966", "-0.4142"},
    };
    if (name == "table1") return t1;
    if (name == "table2") return t2;
    throw error("unknown golden table: " + name);
}

// spec behind each golden table
inline RecurrenceSpec golden_spec(const std::string& name) {
    if (name == "table1") return RecurrenceSpec{rat(1), rat(1), rat(-1, 2)};
    if (name == "table2") return RecurrenceSpec{rat(1), rat(1), rat(1)};
    throw error("unknown golden table: " + name);
}

// 4-decimal display with truncation toward zero; brackets are refined until
// both endpoints truncate identically, so the printed digits are certified.
inline std::string display_4dp(IsolatedRoot& r, const SignFn& sign) {
    if (r.kind() == IsolatedRoot::Kind::Exact) return format_fixed_trunc(r.value(), 4);
    if (r.kind() == IsolatedRoot::Kind::Surd) {
        for (mp_bitcnt_t bits = 192;; bits *= 2) {
            if (bits > 1u << 14) throw refinement_exhausted("surd display failed to stabilize");
            mpf_class a = r.surd_value().approx(bits);
            mpf_class w;
            mpf_div_2exp(w.get_mpf_t(), mpf_class(abs(a) + 1, bits).get_mpf_t(), bits / 2);
            std::string lo = format_fixed_trunc(Rational(mpf_class(a - w)), 4);
            std::string hi = format_fixed_trunc(Rational(mpf_class(a + w)), 4);
            if (lo == hi) return lo;
        }
    }
    for (int guard = 0; guard < 100000; ++guard) {
        if (r.kind() != IsolatedRoot::Kind::Bracket) return display_4dp(r, sign);
        std::string lo = format_fixed_trunc(r.lower(), 4);
        std::string hi = format_fixed_trunc(r.upper(), 4);
        if (lo == hi) return lo;
        r.refine_step(sign);
    }
    throw refinement_exhausted("root display failed to stabilize at 4 decimals");
}

// exact decimal rendering of a rational after round-half-even at `digits`
inline std::string format_fixed_round(const Rational& q, int digits) {
    Rational r = round_half_even(q, digits);
    Integer scale = pow_int(10, static_cast<unsigned long>(digits));
    Integer n(r * scale);
    bool neg = sgn(n) < 0;
    Integer a = abs(n);
    Integer ip = a / scale, fp = a % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (digits > 0) out += "." + frac;
    return out;
}

// decimal image of a surd at `digits` places (round-half-even of a
// high-precision enclosure midpoint); for display only
inline std::string surd_decimal(const QuadraticSurd& s, int digits = 6) {
    if (s.is_rational()) return format_fixed_round(s.as_rational(), digits);
    mpf_class a = s.approx(256);
    return format_fixed_round(Rational(a), digits);
}

struct RootRow {
    int n;
    std::vector<std::string> display;   // 4-decimal certified strings
    std::vector<Rational> lo, hi, mid;  // exact enclosures after refinement
    std::vector<bool> exact;
};

struct RootsTable {
    RecurrenceSpec spec;
    std::vector<RootRow> rows;
};

inline RootsTable make_roots_table(const RecurrenceSpec& spec, int n_max, const Rational& precision) {
    std::vector<RootSet> sets = isolate_roots_interlaced(spec, n_max, precision);
    RootsTable t{spec, {}};
    for (int n = 1; n <= n_max; ++n) {
        RootSet& rs = sets[static_cast<size_t>(n)];
        RootRow row;
        row.n = n;
        for (auto& r : rs.roots) {
            row.display.push_back(display_4dp(r, rs.sign));
            row.lo.push_back(r.lower());
            row.hi.push_back(r.upper());
            row.mid.push_back(r.midpoint());
            row.exact.push_back(r.is_exact());
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

// true iff every printed value matches the embedded table byte-for-byte
inline bool matches_golden(const RootsTable& t, const std::string& name,
                           std::string* first_mismatch = nullptr) {
    const auto& gold = golden_table(name);
    if (t.rows.size() != gold.size()) {
        if (first_mismatch) *first_mismatch = "row count differs";
        return false;
    }
    for (size_t i = 0; i < gold.size(); ++i) {
        if (t.rows[i].display != gold[i]) {
            if (first_mismatch) *first_mismatch = "row n=" + std::to_string(t.rows[i].n);
            return false;
        }
    }
    return true;
}

} // namespace rootgeo

#endif
