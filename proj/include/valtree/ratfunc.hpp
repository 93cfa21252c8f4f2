#pragma once

#include "valtree/upoly.hpp"
#include "valtree/value.hpp"

namespace valtree {

// Element of k(x) in lowest terms with monic denominator.
class RatFunc {
public:
    RatFunc() : den_(Scalar(1)) {}
    RatFunc(const UPoly& num) : num_(num), den_(Scalar(1)) {}
    RatFunc(const Scalar& c) : num_(c), den_(Scalar(1)) {}
    RatFunc(const UPoly& num, const UPoly& den);

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_one() const { return is_polynomial() && num_.is_one(); }

    RatFunc inverse() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    void normalize();
    UPoly num_;
    UPoly den_;
};

// order of vanishing at x = 0; infinite for 0
Value ord_x(const RatFunc& r);

}  // namespace valtree
