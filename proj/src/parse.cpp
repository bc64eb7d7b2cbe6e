#include "localext/parse.hpp"

#include "localext/error.hpp"

#include <cctype>

namespace localext {

namespace {

constexpr long kMaxExponent = 256;

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Poly run() {
        Poly f = expr();
        skip();
        if (i_ < s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
        return f;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorKind::Parse, msg + " at position " + std::to_string(i_ + 1));
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly f = term();
        for (;;) {
            if (accept('+')) f += term();
            else if (accept('-')) f -= term();
            else return f;
        }
    }

    Poly term() {
        Poly f = unary();
        for (;;) {
            if (accept('*')) {
                f *= unary();
            } else if (accept('/')) {
                size_t at = i_;
                Poly g = unary();
                if (g.degree() != 0) {
                    i_ = at;
                    error(g.is_zero() ? "division by zero" : "division by a non-constant");
                }
                f *= Rational(1) / g.leading();
            } else {
                return f;
            }
        }
    }

    Poly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (!accept('^')) return base;
        skip();
        size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) error("expected a nonnegative integer exponent");
        if (i_ - start > 4 || std::stol(s_.substr(start, i_ - start)) > kMaxExponent) {
            i_ = start;
            error("exponent too large");
        }
        return base.pow(std::stol(s_.substr(start, i_ - start)));
    }

    Poly atom() {
        skip();
        if (i_ >= s_.size()) error("unexpected end of input");
        char c = s_[i_];
        if (c == 'x') {
            ++i_;
            return Poly::x();
        }
        if (c == '(') {
            ++i_;
            Poly f = expr();
            if (!accept(')')) error("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return Poly({Rational(Integer(s_.substr(start, i_ - start)))});
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    size_t i_ = 0;
};

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Poly parse_list(const std::string& text) {
    std::vector<Rational> c;
    size_t start = 0;
    for (;;) {
        size_t comma = text.find(',', start);
        std::string item = trimmed(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (item.empty()) fail(ErrorKind::Parse, "empty coefficient at position " + std::to_string(start + 1));
        bool neg = item[0] == '-';
        std::string body = neg || item[0] == '+' ? item.substr(1) : item;
        if (body.empty() || body.find_first_not_of("0123456789/") != std::string::npos || body[0] == '/' ||
            body.back() == '/')
            fail(ErrorKind::Parse, "bad coefficient '" + item + "' at position " + std::to_string(start + 1));
        Rational r = Rational::parse(body);
        c.push_back(neg ? -r : r);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Poly(c);
}

}  // namespace

Poly parse_poly(const std::string& text) {
    Poly f = text.find(',') != std::string::npos ? parse_list(text) : Parser(text).run();
    if (f.is_zero()) fail(ErrorKind::Parse, "the zero polynomial is not allowed");
    if (f.degree() == 0) fail(ErrorKind::Parse, "constant polynomials are not allowed");
    return f;
}

}  // namespace localext
