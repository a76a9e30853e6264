#include "witt/scalar.hpp"

#include "witt/error.hpp"

#include <cctype>

namespace witt {

Scalar::Scalar(long num, long den) {
    if (den == 0) throw domain_error("scalar: zero denominator");
    re_ = mpq_class(num, den);
    re_.canonicalize();
    im_ = 0;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
    mpq_class a = re_, b = im_;
    re_ = a * o.re_ - b * o.im_;
    im_ = a * o.im_ + b * o.re_;
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw domain_error("scalar: division by zero");
    mpq_class n = re_ * re_ + im_ * im_; // norm, nonzero
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inv();
}

namespace {

std::string q_str(const mpq_class& q) {
    return q.get_str();
}

mpq_class q_abs(const mpq_class& q) {
    return q < 0 ? mpq_class(-q) : q;
}

// One [-]A[/B] or [-]A[/B]i or [-]i chunk. Advances pos past the chunk.
struct Chunk {
    mpq_class value;
    bool imaginary = false;
};

bool scan_uint(std::string_view s, size_t& pos, std::string& out) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    out.assign(s.substr(start, pos - start));
    return true;
}

Chunk scan_chunk(std::string_view s, size_t& pos, bool sign_required) {
    bool neg = false;
    bool saw_sign = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        saw_sign = true;
        ++pos;
    }
    if (sign_required && !saw_sign)
        throw input_error("scalar: expected explicit sign before imaginary part");

    Chunk c;
    std::string num;
    if (!scan_uint(s, pos, num)) {
        // bare i (coefficient 1)
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            c.value = neg ? -1 : 1;
            c.imaginary = true;
            return c;
        }
        throw input_error("scalar: expected digits");
    }
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        if (!scan_uint(s, pos, den)) throw input_error("scalar: expected denominator digits");
    }
    mpz_class den_z(den);
    if (den_z == 0) throw input_error("scalar: zero denominator");
    mpq_class q(mpz_class(num), den_z);
    q.canonicalize();
    if (neg) q = -q;
    c.value = q;
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        c.imaginary = true;
    }
    return c;
}

} // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0 || im_ == 0) out += q_str(re_);
    if (im_ != 0) {
        if (!out.empty()) out += im_ < 0 ? "-" : "+";
        else if (im_ < 0) out += "-";
        out += q_str(q_abs(im_));
        out += 'i';
    }
    return out;
}

Scalar Scalar::parse(std::string_view s) {
    // trim outer whitespace
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    s = s.substr(b, e - b);
    if (s.empty()) throw input_error("scalar: empty literal");

    size_t pos = 0;
    Chunk first = scan_chunk(s, pos, false);
    if (pos == s.size()) {
        return first.imaginary ? Scalar(mpq_class(0), first.value) : Scalar(first.value);
    }
    if (first.imaginary)
        throw input_error("scalar: real part must precede imaginary part in '" + std::string(s) + "'");
    Chunk second = scan_chunk(s, pos, true);
    if (!second.imaginary || pos != s.size())
        throw input_error("scalar: malformed literal '" + std::string(s) + "'");
    return Scalar(first.value, second.value);
}

} // namespace witt
