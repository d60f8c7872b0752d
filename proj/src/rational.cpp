#include "mc/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace mc {

Integer floor_int(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_int(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer round_half_up(const Rational& q) { return floor_int(q + rat(1, 2)); }

Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return rat(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && base == 0) fail(ErrorKind::PoleAtPoint, "0 to a negative power");
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
    return inv ? make_rational(den, num) : make_rational(num, den);
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) fail(ErrorKind::ParseError, "empty number");
    auto bad = [&](size_t pos) {
        fail(ErrorKind::ParseError, "invalid rational '" + text + "' at position " + std::to_string(pos));
    };

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
        if (ns.empty()) bad(0);
        if (ds.empty()) bad(slash + 1);
        Integer n, d;
        if (mpz_set_str(n.get_mpz_t(), ns.c_str(), 10) != 0) bad(0);
        if (mpz_set_str(d.get_mpz_t(), ds.c_str(), 10) != 0) bad(slash + 1);
        if (d == 0) bad(slash + 1);
        return make_rational(n, d);
    }

    // [sign] digits [. digits] [ (e|E) [sign] digits ]
    size_t i = 0, n = text.size();
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
    std::string intpart, fracpart;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) intpart.push_back(text[i++]);
    if (i < n && text[i] == '.') {
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) fracpart.push_back(text[i++]);
    }
    if (intpart.empty() && fracpart.empty()) bad(i);
    long exp10 = 0;
    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < n && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
        if (i >= n) bad(i);
        std::string es;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) es.push_back(text[i++]);
        if (es.empty() || es.size() > 6) bad(i);
        exp10 = std::strtol(es.c_str(), nullptr, 10);
        if (eneg) exp10 = -exp10;
    }
    if (i != n) bad(i);

    Integer mant;
    std::string digits = intpart + fracpart;
    if (mpz_set_str(mant.get_mpz_t(), digits.empty() ? "0" : digits.c_str(), 10) != 0) bad(0);
    if (neg) mant = -mant;
    long shift = exp10 - static_cast<long>(fracpart.size());
    Integer p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    return shift >= 0 ? Rational(mant * p10) : make_rational(mant, p10);
}

std::string decimal_string(const Rational& q, int digits) {
    if (digits < 0) digits = 0;
    Integer p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    bool neg = sgn(q) < 0;
    Rational a = neg ? Rational(-q) : q;
    Integer scaled = floor_int(a * Rational(p10) + rat(1, 2));
    Integer whole = scaled / p10, frac = scaled % p10;
    std::string out = whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        f.insert(f.begin(), digits - f.size(), '0');
        while (f.size() > 1 && f.back() == '0') f.pop_back();
        if (!(f.size() == 1 && f[0] == '0')) out += "." + f;
    }
    if (neg && !(whole == 0 && frac == 0)) out.insert(out.begin(), '-');
    return out;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

// Simplest (minimum denominator) rational strictly inside (a, b), 0 <= a < b.
Rational simplest_pos(const Rational& a, const Rational& b) {
    Integer n = floor_int(a);
    Rational a1 = a - Rational(n), b1 = b - Rational(n);
    if (b1 > 1) return Rational(n + 1);
    if (a1 == 0) {
        Integer k = floor_int(Rational(1) / b1) + 1;
        return Rational(n) + make_rational(Integer(1), k);
    }
    Rational y = simplest_pos(Rational(1) / b1, Rational(1) / a1);
    return Rational(n) + Rational(1) / y;
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) fail(ErrorKind::DegenerateInterval, "simplest_rational_between needs lo < hi");
    if (sgn(lo) < 0 && sgn(hi) > 0) return rat(0);
    if (lo == 0) return simplest_pos(lo, hi);
    if (sgn(hi) <= 0) return -simplest_pos(-hi, -lo);
    return simplest_pos(lo, hi);
}

std::pair<Rational, Rational> nth_root_enclosure(const Rational& x, unsigned n, const Rational& tol) {
    if (sgn(x) < 0) fail(ErrorKind::BadIndex, "nth_root_enclosure needs x >= 0");
    if (n == 0) fail(ErrorKind::BadIndex, "nth_root_enclosure needs n >= 1");
    if (x == 0) return {rat(0), rat(0)};
    Rational lo = rat(0), hi = x < 1 ? rat(1) : Rational(x + 1);
    auto val = [&](const Rational& t) -> Rational { return pow_rat(t, static_cast<long>(n)) - x; };
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        int s = sgn(val(mid));
        if (s == 0) return {mid, mid};
        (s < 0 ? lo : hi) = mid;
    }
    return {lo, hi};
}

}  // namespace mc
