#include "apollonite/exactmath.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace apollonite {

Int floor_div(Int a, Int b) {
    if (b == 0) throw std::domain_error("division by zero");
    if (a == INT64_MIN && b == -1) throw OverflowError("integer overflow in floor_div");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int floor_mod(Int a, Int b) {
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) r += b;
    return r;
}

Int ceil_div(Int a, Int b) { return ck::sub(0, floor_div(ck::sub(0, a), b)); }

Int gcd(Int a, Int b) {
    if (a < 0) a = ck::sub(0, a);
    if (b < 0) b = ck::sub(0, b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int isqrt(Int n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    auto r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<__int128>(r) * r > n) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

GaussInt gi_rot(GaussInt v, int s) {
    switch (((s % 4) + 4) % 4) {
        case 0: return v;
        case 1: return {ck::sub(0, v.im), v.re};
        case 2: return -v;
        default: return {v.im, ck::sub(0, v.re)};
    }
}

std::ostream& operator<<(std::ostream& os, GaussInt v) {
    os << v.re << (v.im < 0 ? "-" : "+") << (v.im < 0 ? -v.im : v.im) << "i";
    return os;
}

std::string to_string(GaussInt v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

GaussInt HalfGauss::to_int() const {
    if (!is_integral()) throw std::domain_error("half-integral value is not a Gaussian integer");
    return {twice.re / 2, twice.im / 2};
}

std::ostream& operator<<(std::ostream& os, HalfGauss v) {
    return os << "(" << v.twice << ")/2";
}

Rational Rational::raw(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    Rational r;
    r.num_ = ck::narrow(n);
    r.den_ = ck::narrow(d);
    if (r.num_ == 0) r.den_ = 1;
    return r;
}

Rational::Rational(Int n, Int d) { *this = raw(n, d); }

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational::raw(static_cast<__int128>(a.num_) + b.num_, a.den_);
    return Rational::raw(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::raw(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return Rational::raw(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num();
    if (r.den() != 1) os << "/" << r.den();
    return os;
}

std::string to_string(const Rational& r) {
    std::ostringstream s;
    s << r;
    return s.str();
}

int orientation(const RatPoint& a, const RatPoint& b, const RatPoint& p) {
    Rational c = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    return c.sign();
}

std::pair<Rational, Rational> RatSym2::apply(GaussInt v) const {
    return {a11 * Rational(v.re) + a12 * Rational(v.im), a12 * Rational(v.re) + a22 * Rational(v.im)};
}

Rational RatSym2::half_form(GaussInt x) const {
    auto [u, w] = apply(x);
    return (u * Rational(x.re) + w * Rational(x.im)) * Rational(1, 2);
}

bool RatSym2::psd() const { return a11.sign() >= 0 && a22.sign() >= 0 && det().sign() >= 0; }

std::pair<Rational, Rational> ratsym_apply(const RatSym2& A, GaussInt v) { return A.apply(v); }

bool apply_integral(const RatSym2& A, GaussInt v, GaussInt* out) {
    auto [u, w] = A.apply(v);
    if (!u.is_integer() || !w.is_integer()) return false;
    if (out) *out = {u.num(), w.num()};
    return true;
}

}  // namespace apollonite
