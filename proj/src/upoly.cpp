#include "valtree/upoly.hpp"

#include "valtree/error.hpp"

namespace valtree {

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Scalar& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UPoly UPoly::monomial(const Scalar& c, int k) {
    UPoly r;
    if (c.is_zero()) return r;
    r.c_.assign(k + 1, c.field().zero());
    r.c_[k] = c;
    return r;
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int UPoly::ord() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

const Scalar& UPoly::coeff(int i) const {
    static const Scalar zero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

UPoly UPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    UPoly r;
    if (k > 0) {
        r.c_.assign(k, leading().field().zero());
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }
    if (ord() < -k) throw Error(Errc::InvalidArgument, "x-shift would leave a pole");
    r.c_.assign(c_.begin() - k, c_.end());
    return r;
}

Scalar UPoly::eval(const Scalar& t) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
}

UPoly operator*(const Scalar& s, const UPoly& a) {
    if (s.is_zero()) return UPoly();
    UPoly r = a;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Scalar> r = a.coeffs();
    std::vector<Scalar> q(a.degree() - b.degree() + 1);
    Scalar inv = b.leading().inverse();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        if (r[k].is_zero()) continue;
        Scalar t = r[k] * inv;
        q[k - db] = t;
        for (int i = 0; i <= db; ++i) r[k - db + i] -= t * b.coeff(i);
    }
    r.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly u = a, v = b;
    while (!v.is_zero()) {
        UPoly r = divrem(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

}  // namespace valtree
