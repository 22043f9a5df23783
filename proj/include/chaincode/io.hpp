#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "chaincode/code.hpp"

namespace chaincode {

namespace detail {

/// Recursive-descent parser for expressions over R[x] = (F_q + uF_q)[x].
/// Accepts +, -, ^, optional *, implicit products, parentheses; 'u' is the
/// nilpotent, 'a' the extension-field generator (when k > 1).
class ExprParser {
public:
    ExprParser(const Field& f, std::string_view src) : f_(&f), src_(src) {}

    RPoly parse() {
        RPoly v = expr();
        skip_ws();
        if (pos_ != src_.size()) fail(errc::parse_error, "trailing input at '" + rest() + "'");
        return v;
    }

private:
    RPoly expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        RPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            RPoly t = term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    RPoly term() {
        RPoly acc = factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '(' || c == 'x' || c == 'u' || c == 'a' || std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    RPoly factor() {
        RPoly base = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            long long e = integer();
            RPoly acc{Poly::one(*f_), Poly::zero(*f_)};
            for (long long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    RPoly primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RPoly v = expr();
            skip_ws();
            if (peek() != ')') fail(errc::parse_error, "expected ')' at '" + rest() + "'");
            ++pos_;
            return v;
        }
        if (c == 'x') {
            ++pos_;
            return RPoly(Poly::x(*f_));
        }
        if (c == 'u') {
            ++pos_;
            return {Poly::zero(*f_), Poly::one(*f_)};
        }
        if (c == 'a') {
            if (f_->degree() == 1) fail(errc::parse_error, "'a' is only valid over extension fields");
            ++pos_;
            return RPoly(Poly(*f_, {f_->from_coords({0, 1})}));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = integer();
            int p = f_->characteristic();
            return RPoly(Poly(*f_, {static_cast<int>(((v % p) + p) % p)}));
        }
        fail(errc::parse_error, "unexpected input at '" + rest() + "'");
    }

    long long integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(errc::parse_error, "expected integer");
        long long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            v = v * 10 + (src_[pos_++] - '0');
        return v;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    std::string rest() const { return std::string(src_.substr(pos_)); }

    const Field* f_;
    std::string_view src_;
    size_t pos_ = 0;
};

} // namespace detail

inline RPoly parse_rpoly(const Field& f, std::string_view s) { return detail::ExprParser(f, s).parse(); }

inline Poly parse_poly(const Field& f, std::string_view s) {
    RPoly r = parse_rpoly(f, s);
    if (!r.f1().is_zero()) fail(errc::parse_error, "'u' is not allowed in an F_q[x] polynomial");
    return r.f0();
}

/// Comma-separated generator list, e.g. "(x+1)*(x^2+1), u*(x+1)".
inline std::vector<RPoly> parse_generator_list(const Field& f, std::string_view s) {
    std::vector<RPoly> out;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '(') ++depth;
        if (i < s.size() && s[i] == ')') --depth;
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            out.push_back(parse_rpoly(f, s.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (out.empty()) fail(errc::parse_error, "empty generator list");
    return out;
}

inline std::string to_string(const RPoly& r) {
    if (r.is_zero()) return "0";
    std::string s;
    if (!r.f0().is_zero()) s = to_string(r.f0());
    if (!r.f1().is_zero()) {
        if (!s.empty()) s += " + ";
        if (r.f1().is_one())
            s += "u";
        else
            s += "u*(" + to_string(r.f1()) + ")";
    }
    return s;
}

/// Canonical display: "<g + u*p>" when a = g, else "<g + u*p>, u*<a>".
inline std::string code_display(const CyclicCode& C) {
    std::string s = to_string(C.mixed_generator());
    if (!C.single_generator()) {
        const Poly& a = C.a();
        s += ", ";
        s += a.is_one() ? "u" : "u*(" + to_string(a) + ")";
    }
    return s;
}

/// "GF(q)", "GF(q; modulus)" or "GF(p^k; modulus)".
inline Field parse_field(std::string_view spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.rfind("GF(", 0) != 0 || s.back() != ')') fail(errc::parse_error, "field spec must look like GF(...)");
    std::string body = s.substr(3, s.size() - 4);
    std::string head = body, modstr;
    if (auto semi = body.find(';'); semi != std::string::npos) {
        head = body.substr(0, semi);
        modstr = body.substr(semi + 1);
    }
    long long p = 0, k = 1;
    if (auto caret = head.find('^'); caret != std::string::npos) {
        p = std::stoll(head.substr(0, caret));
        k = std::stoll(head.substr(caret + 1));
    } else {
        long long q = std::stoll(head);
        if (q < 2) fail(errc::parse_error, "field size must be >= 2");
        p = q;
        for (long long d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        k = 0;
        long long v = q;
        while (v > 1) {
            if (v % p != 0) fail(errc::not_prime, "field size is not a prime power");
            v /= p;
            ++k;
        }
    }
    if (k == 1) {
        if (!modstr.empty()) fail(errc::degree_mismatch, "prime field takes no modulus");
        return field_new(static_cast<int>(p), 1);
    }
    if (modstr.empty()) fail(errc::degree_mismatch, "extension field requires GF(q; modulus)");
    Field fp(static_cast<int>(p), 1);
    Poly mod = parse_poly(fp, modstr);
    std::vector<int> coeffs(mod.deg() + 1);
    for (int i = 0; i <= mod.deg(); ++i) coeffs[i] = mod.coeff_index(i);
    return field_new(static_cast<int>(p), static_cast<int>(k), std::move(coeffs));
}

} // namespace chaincode
