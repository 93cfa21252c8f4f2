#include "valtree/value.hpp"

#include <cctype>

#include "valtree/error.hpp"

namespace valtree {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Value Value::parse(std::string_view text) {
    if (text == "inf") return infinity();
    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(Errc::ParseError, "bad rational value '" + std::string(text) + "'");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Value(neg ? mpq_class(-q) : q);
}

const mpq_class& Value::q() const {
    if (inf_) throw Error(Errc::InvalidArgument, "infinite value has no rational part");
    return q_;
}

Value& Value::operator+=(const Value& o) {
    if (inf_ || o.inf_) {
        inf_ = true;
        q_ = 0;
    } else {
        q_ += o.q_;
    }
    return *this;
}

Value operator-(const Value& a, const Value& b) {
    if (b.inf_) throw Error(Errc::InvalidArgument, "subtracting an infinite value");
    if (a.inf_) return a;
    return Value(mpq_class(a.q_ - b.q_));
}

Value Value::operator-() const {
    if (inf_) throw Error(Errc::InvalidArgument, "negating an infinite value");
    return Value(mpq_class(-q_));
}

Value operator*(const mpq_class& k, const Value& v) {
    if (v.inf_) {
        if (sgn(k) <= 0) throw Error(Errc::InvalidArgument, "non-positive multiple of infinity");
        return v;
    }
    return Value(mpq_class(k * v.q_));
}

Value operator/(const Value& v, const mpq_class& k) {
    if (sgn(k) <= 0) throw Error(Errc::InvalidArgument, "division of a value by a non-positive number");
    if (v.inf_) return v;
    return Value(mpq_class(v.q_ / k));
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Value::to_string() const {
    return inf_ ? "inf" : q_.get_str();
}

}  // namespace valtree
