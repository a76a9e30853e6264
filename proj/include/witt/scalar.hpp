#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace witt {

// Exact Gaussian rational: re + im*i with both components in Q.
// Components are always kept canonical (gmp reduces on every operation).
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {} // NOLINT: implicit by design
    Scalar(long num, long den);
    explicit Scalar(mpq_class re) : re_(std::move(re)), im_(0) {}
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    // Multiplicative inverse; throws domain_error on zero.
    Scalar inv() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Total order (re, then im); used only to keep containers deterministic.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return a.im_ < b.im_;
    }

    // Canonical literal: [-]A[/B][(+|-)C[/D]i], e.g. "0", "1/2", "-3i", "2/3+1/5i".
    std::string str() const;

    // Parses the literal grammar above; also accepts a bare "i"/"-i"/"+i".
    // Throws input_error on malformed input or a zero denominator.
    static Scalar parse(std::string_view s);

private:
    mpq_class re_, im_;
};

} // namespace witt
