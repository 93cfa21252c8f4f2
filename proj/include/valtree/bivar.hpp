#pragma once

#include <map>
#include <utility>

#include "valtree/ratfunc.hpp"

namespace valtree {

// Element of k(x)[y], stored sparsely by y-degree.
class BivarPoly {
public:
    // (x-exponent, y-exponent) -> coefficient; polynomial case only
    using Terms = std::map<std::pair<int, int>, Scalar>;

    BivarPoly() = default;
    BivarPoly(const RatFunc& c);
    BivarPoly(const Scalar& c) : BivarPoly(RatFunc(c)) {}
    BivarPoly(int c) : BivarPoly(Scalar(c)) {}

    static BivarPoly x(int n = 1) { return monomial(Scalar(1), n, 0); }
    static BivarPoly y(int n = 1) { return monomial(Scalar(1), 0, n); }
    static BivarPoly monomial(const Scalar& c, int a, int b);
    static BivarPoly from_terms(const Terms& terms);

    // -1 stands for the degree of the zero polynomial
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    bool is_zero() const { return c_.empty(); }
    const RatFunc& coeff(int j) const;
    const RatFunc& leading_coeff() const { return c_.rbegin()->second; }
    const std::map<int, RatFunc>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && leading_coeff().is_one(); }
    bool is_polynomial() const;
    // the field of the first nonzero coefficient (Q for the zero polynomial)
    BaseField field() const;

    Terms terms() const;

    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const RatFunc& r, const BivarPoly& a);
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.c_ == b.c_; }

    BivarPoly pow(unsigned n) const;
    // multiply by y^k
    BivarPoly shifted_y(int k) const;

private:
    void add_term(int j, const RatFunc& r);
    std::map<int, RatFunc> c_;
};

struct DivRem {
    BivarPoly q;
    BivarPoly r;
};

DivRem euclid_divrem(const BivarPoly& f, const BivarPoly& g);
BivarPoly hasse_derivative(const BivarPoly& f, int b);

// f = num / den with num in k[x][y] and den in k[x] monic
std::pair<BivarPoly, UPoly> clear_denominators(const BivarPoly& f);
// exchange the roles of x and y; f must be a polynomial
BivarPoly swap_xy(const BivarPoly& f);
// f(x, g)
BivarPoly substitute_y(const BivarPoly& f, const BivarPoly& g);

}  // namespace valtree
