#include "valtree/ratfunc.hpp"

#include "valtree/error.hpp"

namespace valtree {

RatFunc::RatFunc(const UPoly& num, const UPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw Error(Errc::InvalidArgument, "rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly(Scalar(1));
        return;
    }
    if (den_.degree() > 0) {
        UPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divrem(num_, g).first;
            den_ = divrem(den_, g).first;
        }
    }
    Scalar lc = den_.leading();
    if (!lc.is_one()) {
        Scalar inv = lc.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(Errc::InvalidArgument, "inverting the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ - b.num_);
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

Value ord_x(const RatFunc& r) {
    if (r.is_zero()) return Value::infinity();
    return Value(static_cast<long>(r.num().ord() - r.den().ord()));
}

}  // namespace valtree
