#pragma once

// Exact integer, Gaussian-integer and rational arithmetic.
// Every operation is overflow-checked; overflow throws instead of wrapping.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace apollonite {

using Int = std::int64_t;

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Raised when a structural property fails on a constructed object.
struct Falsification : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace ck {
inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
    return r;
}
inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
    return r;
}
inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
    return r;
}
inline Int narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("integer overflow in narrow");
    return static_cast<Int>(v);
}
}  // namespace ck

// floor(a/b) and the matching non-negative remainder, b != 0
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);
Int ceil_div(Int a, Int b);
Int gcd(Int a, Int b);
// largest r with r*r <= n
Int isqrt(Int n);

struct GaussInt {
    Int re = 0;
    Int im = 0;

    constexpr GaussInt() = default;
    constexpr GaussInt(Int r, Int i = 0) : re(r), im(i) {}

    friend GaussInt operator+(GaussInt a, GaussInt b) { return {ck::add(a.re, b.re), ck::add(a.im, b.im)}; }
    friend GaussInt operator-(GaussInt a, GaussInt b) { return {ck::sub(a.re, b.re), ck::sub(a.im, b.im)}; }
    friend GaussInt operator-(GaussInt a) { return {ck::sub(0, a.re), ck::sub(0, a.im)}; }
    friend GaussInt operator*(GaussInt a, GaussInt b) {
        return {ck::sub(ck::mul(a.re, b.re), ck::mul(a.im, b.im)),
                ck::add(ck::mul(a.re, b.im), ck::mul(a.im, b.re))};
    }
    GaussInt& operator+=(GaussInt b) { return *this = *this + b; }
    GaussInt& operator-=(GaussInt b) { return *this = *this - b; }

    GaussInt conj() const { return {re, ck::sub(0, im)}; }
    Int norm() const { return ck::add(ck::mul(re, re), ck::mul(im, im)); }
    // dot product of the underlying vectors of Z^2
    Int dot(GaussInt b) const { return ck::add(ck::mul(re, b.re), ck::mul(im, b.im)); }
    // Im(conj(this) * b): signed area spanned by the two vectors
    Int cross(GaussInt b) const { return ck::sub(ck::mul(re, b.im), ck::mul(im, b.re)); }

    friend bool operator==(GaussInt, GaussInt) = default;
    friend auto operator<=>(GaussInt a, GaussInt b) {
        if (auto c = a.re <=> b.re; c != 0) return c;
        return a.im <=> b.im;
    }
};

inline constexpr GaussInt I{0, 1};

// i^s * v
GaussInt gi_rot(GaussInt v, int s);

std::ostream& operator<<(std::ostream& os, GaussInt v);
std::string to_string(GaussInt v);

struct GaussHash {
    std::size_t operator()(GaussInt v) const noexcept {
        auto h = static_cast<std::uint64_t>(v.re) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(v.im) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// A value in (1/2) Z[i], stored as twice its value.
struct HalfGauss {
    GaussInt twice;

    static HalfGauss from_int(GaussInt v) { return {v + v}; }
    static HalfGauss half(GaussInt v) { return {v}; }

    bool is_integral() const { return twice.re % 2 == 0 && twice.im % 2 == 0; }
    GaussInt to_int() const;

    friend HalfGauss operator+(HalfGauss a, HalfGauss b) { return {a.twice + b.twice}; }
    friend HalfGauss operator-(HalfGauss a, HalfGauss b) { return {a.twice - b.twice}; }
    friend HalfGauss operator-(HalfGauss a) { return {-a.twice}; }
    friend HalfGauss operator*(HalfGauss a, GaussInt b) { return {a.twice * b}; }
    friend HalfGauss operator*(GaussInt b, HalfGauss a) { return {a.twice * b}; }
    friend bool operator==(HalfGauss, HalfGauss) = default;
};

std::ostream& operator<<(std::ostream& os, HalfGauss v);

class Rational {
public:
    Rational() = default;
    Rational(Int n) : num_(n), den_(1) {}
    Rational(Int n, Int d);

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    Int floor() const { return floor_div(num_, den_); }
    Int ceil() const { return ceil_div(num_, den_); }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(ck::sub(0, a.num_), a.den_); }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

private:
    static Rational raw(__int128 n, __int128 d);
    Int num_ = 0;
    Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::string to_string(const Rational& r);

// A point of Q^2, also read as an element of Q[i].
struct RatPoint {
    Rational x, y;
    friend RatPoint operator+(const RatPoint& a, const RatPoint& b) { return {a.x + b.x, a.y + b.y}; }
    friend RatPoint operator-(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

// cross((b-a),(p-a)) sign: >0 when p lies to the left of a->b
int orientation(const RatPoint& a, const RatPoint& b, const RatPoint& p);

// Symmetric 2x2 matrix with rational entries.
struct RatSym2 {
    Rational a11, a12, a22;

    std::pair<Rational, Rational> apply(GaussInt v) const;
    Rational trace() const { return a11 + a22; }
    Rational det() const { return a11 * a22 - a12 * a12; }
    // (1/2) x^T A x
    Rational half_form(GaussInt x) const;
    bool psd() const;
    friend RatSym2 operator+(const RatSym2& a, const RatSym2& b) { return {a.a11 + b.a11, a.a12 + b.a12, a.a22 + b.a22}; }
    friend RatSym2 operator-(const RatSym2& a, const RatSym2& b) { return {a.a11 - b.a11, a.a12 - b.a12, a.a22 - b.a22}; }
    friend bool operator==(const RatSym2&, const RatSym2&) = default;
};

std::pair<Rational, Rational> ratsym_apply(const RatSym2& A, GaussInt v);

// Apply A to v and return the result if it lies in Z^2.
bool apply_integral(const RatSym2& A, GaussInt v, GaussInt* out);

}  // namespace apollonite
