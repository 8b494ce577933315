#include "slowreal/rational.hpp"

#include <cctype>

namespace slowreal {

Rational pow2(long k) {
    Rational r;
    if (k >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), Integer(1).get_mpz_t(),
                     static_cast<unsigned long>(k));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), Integer(1).get_mpz_t(),
                     static_cast<unsigned long>(-k));
        r.get_num() = 1;
    }
    return r;
}

Rational pow3(unsigned long k) {
    Integer n;
    mpz_ui_pow_ui(n.get_mpz_t(), 3, k);
    return Rational(n);
}

Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }

Rational rat_max(const Rational& a, const Rational& b) { return a > b ? a : b; }

Rational clamp(const Rational& q, const Rational& lo, const Rational& hi) {
    if (q < lo) return lo;
    if (q > hi) return hi;
    return q;
}

Integer rat_ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Integer rat_floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    auto slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
        throw std::invalid_argument("rational: malformed '" + s + "'");
    // mpz_set_str rejects a leading '+'
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    return make_rational(n, d);
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_truncate(const Rational& q, int digits) {
    bool neg = q < 0;
    Rational a = rat_abs(q);
    Integer ip = rat_floor(a);
    Rational frac = a - Rational(ip);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // truncated fractional digits: floor(frac * 10^digits)
    Integer fd = rat_floor(frac * Rational(scale));
    std::string fs = fd.get_str();
    if (static_cast<int>(fs.size()) < digits)
        fs = std::string(digits - fs.size(), '0') + fs;
    std::string out = (neg ? "-" : "") + ip.get_str() + "." + fs;
    return out;
}

}  // namespace slowreal
