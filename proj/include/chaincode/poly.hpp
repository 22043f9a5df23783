#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <tuple>
#include <vector>

#include "chaincode/field.hpp"

namespace chaincode {

/// Dense polynomial over F_q, lowest degree first, no trailing zeros.
/// The zero polynomial is the empty coefficient vector (degree -1 sentinel).
/// Coefficients are stored as element indices of the carrier field.
class Poly {
public:
    Poly() : f_(nullptr) {}
    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<int> coeff_indices) : f_(&f), c_(std::move(coeff_indices)) { trim(); }

    /// Polynomial from integer coefficients, lowest degree first; each is
    /// reduced into the prime subfield (i.e. taken mod p).
    static Poly from_ints(const Field& f, const std::vector<int>& ints) {
        std::vector<int> idx(ints.size());
        int p = f.characteristic();
        for (size_t i = 0; i < ints.size(); ++i) idx[i] = ((ints[i] % p) + p) % p;
        return {f, std::move(idx)};
    }

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return {f, {f.one()}}; }
    static Poly x(const Field& f) { return {f, {0, f.one()}}; }

    /// x^n - 1 over f.
    static Poly xn_minus_1(const Field& f, int n) {
        std::vector<int> c(n + 1, 0);
        c[0] = f.neg(f.one());
        c[n] = f.one();
        return {f, std::move(c)};
    }

    const Field& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == f_->one(); }
    bool is_monic() const { return !c_.empty() && c_.back() == f_->one(); }

    /// Coefficient of x^i as an element index (0 past the degree).
    int coeff_index(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
    FieldElement coeff(int i) const { return {*f_, coeff_index(i)}; }
    const std::vector<int>& coeff_indices() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_same(a, b);
        std::vector<int> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i)
            r[i] = a.f_->add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
        return {*a.f_, std::move(r)};
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        check_same(a, b);
        std::vector<int> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i)
            r[i] = a.f_->sub(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
        return {*a.f_, std::move(r)};
    }

    Poly operator-() const {
        std::vector<int> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->neg(c_[i]);
        return {*f_, std::move(r)};
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(*a.f_);
        std::vector<int> r(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = a.f_->add(r[i + j], a.f_->mul(a.c_[i], b.c_[j]));
        }
        return {*a.f_, std::move(r)};
    }

    Poly scaled(const FieldElement& s) const {
        std::vector<int> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], s.index());
        return {*f_, std::move(r)};
    }

    /// Multiply by x^e.
    Poly shifted(int e) const {
        if (is_zero()) return *this;
        std::vector<int> r(c_.size() + e, 0);
        std::copy(c_.begin(), c_.end(), r.begin() + e);
        return {*f_, std::move(r)};
    }

    /// Euclidean division: f = q*g + r with deg r < deg g.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& g) {
        check_same(a, g);
        if (g.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
        const Field& f = *a.f_;
        std::vector<int> rem = a.c_;
        std::vector<int> quo;
        int dg = g.deg();
        int lead_inv = f.inv(g.c_.back());
        auto rdeg = [&rem] { return static_cast<int>(rem.size()) - 1; };
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rdeg() >= dg) quo.assign(rdeg() - dg + 1, 0);
        while (rdeg() >= dg) {
            int shift = rdeg() - dg;
            int c = f.mul(rem.back(), lead_inv);
            quo[shift] = c;
            for (int i = 0; i <= dg; ++i)
                rem[shift + i] = f.sub(rem[shift + i], f.mul(c, g.c_[i]));
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    friend bool operator==(const Poly& a, const Poly& b) {
        check_same(a, b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Total order used for deterministic enumeration: graded, then
    /// lexicographic on coefficient indices from the top.
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        for (int i = a.deg(); i >= 0; --i)
            if (a.coeff_index(i) != b.coeff_index(i)) return a.coeff_index(i) < b.coeff_index(i);
        return false;
    }

    Poly monic() const {
        if (is_zero() || is_monic()) return *this;
        return scaled(FieldElement(*f_, f_->inv(c_.back())));
    }

    FieldElement eval(const FieldElement& at) const {
        FieldElement acc(*f_, 0);
        for (int i = deg(); i >= 0; --i) acc = acc * at + coeff(i);
        return acc;
    }

private:
    static void check_same(const Poly& a, const Poly& b) {
        if (a.f_ != b.f_ && *a.f_ != *b.f_) fail(errc::field_mismatch, "polynomials over different fields");
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const Field* f_;
    std::vector<int> c_;
};

/// Monic gcd; gcd(f, 0) is the monic scaling of f.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid: returns (d, s, t) with s*a + t*b = d, d monic.
inline std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(f), s1 = Poly::zero(f);
    Poly t0 = Poly::zero(f), t1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (!r0.is_zero() && !r0.is_monic()) {
        FieldElement inv = r0.coeff(r0.deg()).inv();
        r0 = r0.scaled(inv);
        s0 = s0.scaled(inv);
        t0 = t0.scaled(inv);
    }
    return {r0, s0, t0};
}

/// true iff a | b; a nonzero.
inline bool divides(const Poly& a, const Poly& b) {
    if (a.is_zero()) fail(errc::division_by_zero, "divisibility by the zero polynomial");
    return (b % a).is_zero();
}

/// Reciprocal with respect to the actual degree: x^{deg f} * f(1/x), i.e.
/// the coefficient vector reversed then normalized. deg f* <= deg f with
/// equality iff f(0) != 0.
inline Poly reciprocal(const Poly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "reciprocal of the zero polynomial");
    std::vector<int> rev(f.coeff_indices().rbegin(), f.coeff_indices().rend());
    return {f.field(), std::move(rev)};
}

/// f* = f exactly (palindromic coefficient vector).
inline bool is_self_reciprocal(const Poly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "self-reciprocity of the zero polynomial");
    return reciprocal(f) == f;
}

// ---------------------------------------------------------------------------
// Text format. Printer emits descending powers ("x^3+2x+1"); parser accepts
// "^", optional "*", terms in any order, parentheses, and implicit products.
// Extension-field coefficients use the generator symbol 'a', e.g. "(a+1)x^2".
// ---------------------------------------------------------------------------

inline std::string coeff_to_string(const Field& f, int idx) {
    if (f.degree() == 1) return std::to_string(idx);
    auto c = f.coords(idx);
    std::string s;
    for (int d = f.degree() - 1; d >= 0; --d) {
        if (c[d] == 0) continue;
        if (!s.empty()) s += "+";
        if (d == 0) {
            s += std::to_string(c[d]);
        } else {
            if (c[d] != 1) s += std::to_string(c[d]);
            s += "a";
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s.empty() ? "0" : s;
}

inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const Field& fld = f.field();
    std::string out;
    for (int d = f.deg(); d >= 0; --d) {
        int c = f.coeff_index(d);
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        std::string cs = coeff_to_string(fld, c);
        bool composite = cs.find('+') != std::string::npos;
        if (d == 0) {
            out += composite ? "(" + cs + ")" : cs;
        } else {
            if (c != fld.one()) out += composite ? "(" + cs + ")" : cs;
            out += "x";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

} // namespace chaincode
