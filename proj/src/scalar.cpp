#include "valtree/scalar.hpp"

#include <charconv>

#include "valtree/error.hpp"

namespace valtree {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

BaseField BaseField::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw Error(Errc::InvalidArgument, "field characteristic must be a prime below 2^31, got " + std::to_string(p));
    BaseField f;
    f.p_ = static_cast<std::uint32_t>(p);
    return f;
}

BaseField BaseField::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.substr(0, 3) == "Fp:") {
        std::uint64_t p = 0;
        auto rest = text.substr(3);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
        if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty())
            throw Error(Errc::ParseError, "bad field '" + std::string(text) + "'");
        if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
            throw Error(Errc::ParseError, "field characteristic must be a prime below 2^31");
        return prime(p);
    }
    throw Error(Errc::ParseError, "bad field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string BaseField::to_string() const {
    return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar BaseField::zero() const { return Scalar(mpq_class(0), p_); }
Scalar BaseField::one() const { return Scalar(mpq_class(1), p_); }
Scalar BaseField::from_int(long n) const { return Scalar(mpq_class(n), p_); }
Scalar BaseField::from_rational(const mpq_class& q) const { return Scalar(q, p_); }

Scalar::Scalar(const mpq_class& q, std::uint32_t p) : p_(p), v_(q) {
    v_.canonicalize();
    reduce();
}

BaseField Scalar::field() const {
    return p_ == 0 ? BaseField::rationals() : BaseField::prime(p_);
}

void Scalar::reduce() {
    if (p_ == 0) return;
    mpz_class p(p_);
    if (v_.get_den() == 1) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), v_.get_num_mpz_t(), p.get_mpz_t());
        v_ = r;
        return;
    }
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), v_.get_den_mpz_t(), p.get_mpz_t()) == 0)
        throw Error(Errc::InvalidArgument, "denominator divisible by the characteristic");
    mpz_class r = v_.get_num() * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    v_ = r;
}

Scalar Scalar::in(const BaseField& f) const {
    if (f.characteristic() == p_) return *this;
    if (p_ != 0) throw Error(Errc::FieldMismatch, "cannot move an F_" + std::to_string(p_) + " element into " + f.to_string());
    return Scalar(v_, f.characteristic());
}

void Scalar::unify(Scalar& o) {
    if (p_ == o.p_) return;
    if (p_ == 0) {
        p_ = o.p_;
        reduce();
    } else if (o.p_ == 0) {
        o = o.in(field());
    } else {
        throw Error(Errc::FieldMismatch, "F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.v_ = -r.v_;
    r.reduce();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (p_ == o.p_) {
        v_ += o.v_;
        if (p_ && v_ >= p_) v_ -= p_;
        return *this;
    }
    Scalar b = o;
    unify(b);
    v_ += b.v_;
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (p_ == o.p_) {
        v_ -= o.v_;
        if (p_ && sgn(v_) < 0) v_ += p_;
        return *this;
    }
    Scalar b = o;
    unify(b);
    v_ -= b.v_;
    reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (p_ == o.p_) {
        v_ *= o.v_;
        reduce();
        return *this;
    }
    Scalar b = o;
    unify(b);
    v_ *= b.v_;
    reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(Errc::InvalidArgument, "division by zero");
    Scalar r = *this;
    if (p_ == 0) {
        r.v_ = 1 / v_;
        return r;
    }
    mpz_class inv;
    mpz_class p(p_);
    mpz_invert(inv.get_mpz_t(), v_.get_num_mpz_t(), p.get_mpz_t());
    r.v_ = inv;
    return r;
}

Scalar Scalar::pow(unsigned long n) const {
    Scalar result(mpq_class(1), p_);
    Scalar base = *this;
    while (n) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ == b.p_) return a.v_ == b.v_;
    Scalar x = a, y = b;
    x.unify(y);
    return x.v_ == y.v_;
}

std::string Scalar::to_string() const {
    if (p_ != 0 && v_ > p_ / 2) {
        mpz_class neg = mpz_class(p_) - v_.get_num();
        return "-" + neg.get_str();
    }
    return v_.get_str();
}

}  // namespace valtree
