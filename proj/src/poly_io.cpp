#include "valtree/poly_io.hpp"

#include <cctype>
#include <vector>

#include "valtree/error.hpp"

namespace valtree {

namespace {

class Parser {
public:
    Parser(std::string_view text, const BaseField& field) : field_(field) {
        // fold the unicode minus and middle dot into ASCII, drop whitespace
        for (std::size_t i = 0; i < text.size(); ++i) {
            unsigned char c = text[i];
            if (text.substr(i, 3) == "\xE2\x88\x92") {
                src_ += '-';
                i += 2;
            } else if (text.substr(i, 2) == "\xC2\xB7") {
                src_ += '*';
                i += 1;
            } else if (!std::isspace(c)) {
                src_ += static_cast<char>(c);
            }
        }
    }

    BivarPoly parse() {
        if (src_.empty()) fail("empty polynomial");
        BivarPoly f = expr();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(Errc::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + src_ + "'");
    }

    bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    BivarPoly expr() {
        BivarPoly acc;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        BivarPoly t = term();
        acc = neg ? -t : t;
        while (pos_ < src_.size()) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else break;
        }
        return acc;
    }

    BivarPoly term() {
        BivarPoly acc = power();
        while (true) {
            if (eat('*')) {
                acc = acc * power();
            } else if (eat('/')) {
                BivarPoly d = power();
                if (d.is_zero()) fail("division by zero");
                if (d.degree() != 0) fail("division by a polynomial involving y");
                try {
                    acc = d.coeff(0).inverse() * acc;
                } catch (const Error&) {
                    fail("division by zero");
                }
            } else {
                break;
            }
        }
        return acc;
    }

    BivarPoly power() {
        BivarPoly base = atom();
        if (eat('^')) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            if (pos_ - start > 4) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(src_.substr(start, pos_ - start))));
        }
        return base;
    }

    BivarPoly atom() {
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_];
        if (c == 'x') {
            ++pos_;
            return BivarPoly::monomial(field_.one(), 1, 0);
        }
        if (c == 'y') {
            ++pos_;
            return BivarPoly::monomial(field_.one(), 0, 1);
        }
        if (c == '(') {
            ++pos_;
            BivarPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            mpz_class n(src_.substr(start, pos_ - start));
            return BivarPoly(field_.from_rational(mpq_class(n)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    BaseField field_;
    std::string src_;
    std::size_t pos_ = 0;
};

std::string monomial_text(int a, int b) {
    std::string s;
    if (a > 0) s += a == 1 ? "x" : "x^" + std::to_string(a);
    if (b > 0) {
        if (!s.empty()) s += "*";
        s += b == 1 ? "y" : "y^" + std::to_string(b);
    }
    return s;
}

std::string term_text(const Scalar& c, int a, int b) {
    std::string m = monomial_text(a, b);
    std::string cs = c.to_string();
    if (m.empty()) return cs;
    if (cs == "1") return m;
    if (cs == "-1") return "-" + m;
    return cs + "*" + m;
}

void append_term(std::string& out, const std::string& t) {
    if (out.empty()) {
        out = t;
    } else if (t[0] == '-') {
        out += " - " + t.substr(1);
    } else {
        out += " + " + t;
    }
}

}  // namespace

BivarPoly parse_poly(std::string_view text, const BaseField& field) {
    return Parser(text, field).parse();
}

std::string to_string(const UPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i)
        if (!p.coeff(i).is_zero()) append_term(out, term_text(p.coeff(i), i, 0));
    return out;
}

std::string to_string(const BivarPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        const int j = it->first;
        const RatFunc& r = it->second;
        if (r.is_polynomial()) {
            const UPoly& n = r.num();
            for (int i = n.degree(); i >= 0; --i)
                if (!n.coeff(i).is_zero()) append_term(out, term_text(n.coeff(i), i, j));
        } else {
            std::string t = "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
            if (j > 0) t += "*" + monomial_text(0, j);
            append_term(out, t);
        }
    }
    return out;
}

}  // namespace valtree
