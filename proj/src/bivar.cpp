#include "valtree/bivar.hpp"

#include "valtree/error.hpp"

namespace valtree {

BivarPoly::BivarPoly(const RatFunc& c) {
    if (!c.is_zero()) c_.emplace(0, c);
}

BivarPoly BivarPoly::monomial(const Scalar& c, int a, int b) {
    BivarPoly r;
    if (!c.is_zero()) r.c_.emplace(b, RatFunc(UPoly::monomial(c, a)));
    return r;
}

BivarPoly BivarPoly::from_terms(const Terms& terms) {
    std::map<int, std::vector<Scalar>> rows;
    for (const auto& [e, c] : terms) {
        auto& row = rows[e.second];
        if (static_cast<int>(row.size()) <= e.first) row.resize(e.first + 1);
        row[e.first] += c;
    }
    BivarPoly r;
    for (auto& [j, row] : rows) r.add_term(j, RatFunc(UPoly(std::move(row))));
    return r;
}

const RatFunc& BivarPoly::coeff(int j) const {
    static const RatFunc zero;
    auto it = c_.find(j);
    return it == c_.end() ? zero : it->second;
}

bool BivarPoly::is_polynomial() const {
    for (const auto& [j, r] : c_)
        if (!r.is_polynomial()) return false;
    return true;
}

BaseField BivarPoly::field() const {
    if (c_.empty()) return BaseField::rationals();
    return c_.begin()->second.num().leading().field();
}

BivarPoly::Terms BivarPoly::terms() const {
    Terms t;
    for (const auto& [j, r] : c_) {
        if (!r.is_polynomial()) throw Error(Errc::InvalidArgument, "coefficient is not a polynomial in x");
        const auto& cs = r.num().coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (!cs[i].is_zero()) t.emplace(std::make_pair(static_cast<int>(i), j), cs[i]);
    }
    return t;
}

void BivarPoly::add_term(int j, const RatFunc& r) {
    if (r.is_zero()) return;
    auto it = c_.find(j);
    if (it == c_.end()) {
        c_.emplace(j, r);
        return;
    }
    it->second += r;
    if (it->second.is_zero()) c_.erase(it);
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto& [j, c] : r.c_) c = -c;
    return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [j, c] : o.c_) add_term(j, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [j, c] : o.c_) add_term(j, -c);
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [i, ca] : a.c_)
        for (const auto& [j, cb] : b.c_) r.add_term(i + j, ca * cb);
    return r;
}

BivarPoly operator*(const RatFunc& s, const BivarPoly& a) {
    BivarPoly r;
    if (s.is_zero()) return r;
    for (const auto& [j, c] : a.c_) r.c_.emplace(j, s * c);
    return r;
}

BivarPoly BivarPoly::pow(unsigned n) const {
    BivarPoly result(1);
    BivarPoly base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

BivarPoly BivarPoly::shifted_y(int k) const {
    BivarPoly r;
    for (const auto& [j, c] : c_) {
        if (j + k < 0) throw Error(Errc::InvalidArgument, "negative y-exponent");
        r.c_.emplace_hint(r.c_.end(), j + k, c);
    }
    return r;
}

DivRem euclid_divrem(const BivarPoly& f, const BivarPoly& g) {
    if (!g.is_monic()) throw Error(Errc::NonMonicDivisor, "divisor is not monic in y");
    const int dg = g.degree();
    DivRem out;
    out.r = f;
    while (out.r.degree() >= dg) {
        const int j = out.r.degree();
        RatFunc c = out.r.leading_coeff();
        out.q += BivarPoly(c).shifted_y(j - dg);
        out.r -= (c * g).shifted_y(j - dg);
    }
    return out;
}

BivarPoly hasse_derivative(const BivarPoly& f, int b) {
    if (b < 1) throw Error(Errc::InvalidArgument, "derivative order must be positive");
    BivarPoly r;
    for (const auto& [n, c] : f.coeffs()) {
        if (n < b) continue;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, b);
        r += (RatFunc(Scalar(mpq_class(binom), 0)) * BivarPoly(c)).shifted_y(n - b);
    }
    return r;
}

std::pair<BivarPoly, UPoly> clear_denominators(const BivarPoly& f) {
    UPoly l(Scalar(1));
    for (const auto& [j, c] : f.coeffs()) {
        if (c.is_polynomial()) continue;
        UPoly g = gcd(l, c.den());
        l = divrem(l * c.den(), g).first;
    }
    if (l.is_one()) return {f, l};
    return {RatFunc(l) * f, l};
}

BivarPoly swap_xy(const BivarPoly& f) {
    BivarPoly::Terms out;
    for (const auto& [e, c] : f.terms()) out.emplace(std::make_pair(e.second, e.first), c);
    return BivarPoly::from_terms(out);
}

BivarPoly substitute_y(const BivarPoly& f, const BivarPoly& g) {
    BivarPoly acc;
    int prev = f.degree();
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        for (int k = it->first; k < prev; ++k) acc = acc * g;
        acc += BivarPoly(it->second);
        prev = it->first;
    }
    for (int k = 0; k < prev; ++k) acc = acc * g;
    return acc;
}

}  // namespace valtree
