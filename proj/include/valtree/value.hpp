#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace valtree {

// Element of Q ∪ {+inf}.
class Value {
public:
    Value() = default;
    Value(long n) : q_(n) {}
    Value(int n) : q_(n) {}
    Value(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Value infinity() {
        Value v;
        v.inf_ = true;
        return v;
    }
    // "p/q", integer, or "inf"
    static Value parse(std::string_view text);

    bool is_infinite() const { return inf_; }
    bool is_finite() const { return !inf_; }
    const mpq_class& q() const;

    Value& operator+=(const Value& o);
    friend Value operator+(Value a, const Value& b) { return a += b; }
    // a - b with b finite
    friend Value operator-(const Value& a, const Value& b);
    Value operator-() const;
    // scaling by a positive rational (or by zero when finite)
    friend Value operator*(const mpq_class& k, const Value& v);
    friend Value operator*(const Value& v, const mpq_class& k) { return k * v; }
    friend Value operator/(const Value& v, const mpq_class& k);

    friend bool operator==(const Value& a, const Value& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.q_ == b.q_);
    }
    friend std::strong_ordering operator<=>(const Value& a, const Value& b);

    std::string to_string() const;

private:
    bool inf_ = false;
    mpq_class q_;
};

inline Value min(const Value& a, const Value& b) { return b < a ? b : a; }
inline Value max(const Value& a, const Value& b) { return a < b ? b : a; }

}  // namespace valtree
