#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace mha {

// Gaussian rational re + im*i with canonical (reduced) parts.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : re_(v) {}
    Scalar(long v) : re_(v) {}
    Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar frac(long num, long den)
    {
        if (den == 0) throw std::domain_error("zero denominator");
        return Scalar(mpq_class(num, den));
    }
    static Scalar imag_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

    Scalar& operator+=(const Scalar& o)
    {
        re_ += o.re_;
        if (sgn(o.im_) != 0) im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o)
    {
        re_ -= o.re_;
        if (sgn(o.im_) != 0) im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o)
    {
        if (sgn(im_) == 0 && sgn(o.im_) == 0) {
            re_ *= o.re_;
            return *this;
        }
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o)
    {
        if (o.is_zero()) throw std::domain_error("division by zero scalar");
        if (sgn(im_) == 0 && sgn(o.im_) == 0) {
            re_ /= o.re_;
            return *this;
        }
        mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inverse() const { Scalar one(1); one /= *this; return one; }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const
    {
        if (sgn(im_) == 0) return re_.get_str();
        if (sgn(re_) == 0) return im_.get_str() + "i";
        std::string s = re_.get_str();
        if (sgn(im_) > 0) s += "+";
        return s + im_.get_str() + "i";
    }
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

}  // namespace mha
