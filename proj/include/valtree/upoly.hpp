#pragma once

#include <utility>
#include <vector>

#include "valtree/scalar.hpp"

namespace valtree {

// Dense univariate polynomial in x, coefficients stored low degree first.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Scalar> coeffs);
    UPoly(const Scalar& c);

    static UPoly monomial(const Scalar& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    // lowest exponent with nonzero coefficient; -1 for zero
    int ord() const;
    const Scalar& coeff(int i) const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    const Scalar& leading() const { return c_.back(); }

    UPoly monic() const;
    // multiply by x^k; negative k requires x^-k | *this
    UPoly shifted(int k) const;
    Scalar eval(const Scalar& t) const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Scalar& s, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Scalar> c_;
};

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
// monic gcd; gcd(0, 0) = 0
UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace valtree
