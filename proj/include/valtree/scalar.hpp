#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace valtree {

class Scalar;

// The prime field of the coefficients: Q (characteristic 0) or F_p.
class BaseField {
public:
    BaseField() = default;

    static BaseField rationals() { return BaseField(); }
    static BaseField prime(std::uint64_t p);
    // "Q" or "Fp:<p>"
    static BaseField parse(std::string_view text);

    std::uint32_t characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }
    std::string to_string() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long n) const;
    Scalar from_rational(const mpq_class& q) const;

    friend bool operator==(const BaseField&, const BaseField&) = default;

private:
    std::uint32_t p_ = 0;
};

// Element of Q or F_p. A scalar built from a plain integer has characteristic 0
// and is coerced into F_p on first contact with a prime-field element.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : v_(n) {}
    Scalar(int n) : v_(n) {}
    Scalar(const mpq_class& q, std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    BaseField field() const;
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar in(const BaseField& f) const;
    Scalar inverse() const;
    Scalar pow(unsigned long n) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Integers print in the symmetric range (-p/2, p/2] for prime fields.
    std::string to_string() const;

private:
    void unify(Scalar& o);
    void reduce();

    std::uint32_t p_ = 0;
    mpq_class v_;
};

bool is_prime(std::uint64_t n);

}  // namespace valtree
