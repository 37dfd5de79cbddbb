#ifndef ROOTGEO_RATIONAL_HPP
#define ROOTGEO_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rootgeo {

using Integer = mpz_class;
using Rational = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    using error::error;
};

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q"; anything else (notably decimals) is rejected.
inline Rational parse_rational(std::string_view s) {
    auto ok_int = [](std::string_view v) {
        if (!v.empty() && (v[0] == '-' || v[0] == '+')) v.remove_prefix(1);
        if (v.empty()) return false;
        for (char ch : v)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
    if (!ok_int(num) || !ok_int(den))
        throw parse_error("not an exact rational: '" + std::string(s) + "'");
    Rational q(std::string(num) + "/" + std::string(den));
    if (q.get_den() == 0) throw parse_error("zero denominator: '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rat(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

inline Integer floor_rat(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// |q| truncated to `digits` fractional decimal digits, e.g. -1.78077 -> "-1.7807".
// An exact zero prints as "0".
inline std::string format_fixed_trunc(const Rational& q, int digits) {
    if (sgn(q) == 0) return "0";
    Rational a = abs(q);
    Integer scale = pow_int(10, static_cast<unsigned long>(digits));
    Integer t = floor_rat(Rational(a * scale));
    Integer ip = t / scale, fp = t % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = (sgn(q) < 0 ? "-" : "") + ip.get_str();
    if (digits > 0) out += "." + frac;
    return out;
}

// Round-half-even to `digits` decimals (used for machine-readable midpoints).
inline Rational round_half_even(const Rational& q, int digits) {
    Integer scale = pow_int(10, static_cast<unsigned long>(digits));
    Rational s = q * scale;
    Integer fl = floor_rat(s);
    Rational frac = s - fl;
    Integer n;
    if (frac < Rational(1, 2)) n = fl;
    else if (frac > Rational(1, 2)) n = fl + 1;
    else n = (mpz_even_p(fl.get_mpz_t()) ? fl : fl + 1);
    Rational r(n, scale);
    r.canonicalize();
    return r;
}

// Decimal floating form with enough digits for reports; not used in exact paths.
inline double to_double(const Rational& q) { return q.get_d(); }

// High-precision float image (bits of mantissa), for cross-checks only.
inline mpf_class to_mpf(const Rational& q, mp_bitcnt_t bits) {
    mpf_class num(q.get_num(), bits), den(q.get_den(), bits);
    return num / den;
}

} // namespace rootgeo

#endif
