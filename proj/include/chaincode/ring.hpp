#pragma once

#include <vector>

#include "chaincode/poly.hpp"

namespace chaincode {

/// Element a + u*b of R = F_q + uF_q with u^2 = 0.
/// Units are exactly the elements with a != 0; a = 0, b != 0 are the
/// zero divisors.
class RElement {
public:
    RElement() = default;
    RElement(FieldElement a, FieldElement b) : a_(a), b_(b) {}

    static RElement zero(const Field& f) { return {FieldElement(f, 0), FieldElement(f, 0)}; }
    static RElement one(const Field& f) { return {FieldElement(f, f.one()), FieldElement(f, 0)}; }
    static RElement u(const Field& f) { return {FieldElement(f, 0), FieldElement(f, f.one())}; }

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_unit() const { return !a_.is_zero(); }

    friend RElement operator+(const RElement& x, const RElement& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend RElement operator-(const RElement& x, const RElement& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    RElement operator-() const { return {-a_, -b_}; }

    // (a+ub)(c+ud) = ac + u(ad+bc)
    friend RElement operator*(const RElement& x, const RElement& y) {
        return {x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_};
    }

    friend bool operator==(const RElement& x, const RElement& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const RElement& x, const RElement& y) { return !(x == y); }

private:
    FieldElement a_, b_;
};

/// Polynomial f0 + u*f1 over R, both parts normalized Poly over F_q.
struct Word;

class RPoly {
public:
    RPoly() = default;
    explicit RPoly(const Field& f) : f0_(f), f1_(f) {}
    RPoly(Poly f0, Poly f1) : f0_(std::move(f0)), f1_(std::move(f1)) {}

    /// Embeds an F_q[x] polynomial (u-part zero).
    explicit RPoly(const Poly& f0) : f0_(f0), f1_(Poly::zero(f0.field())) {}

    const Poly& f0() const { return f0_; }
    const Poly& f1() const { return f1_; }
    const Field& field() const { return f0_.field(); }
    bool is_zero() const { return f0_.is_zero() && f1_.is_zero(); }
    int deg() const { return std::max(f0_.deg(), f1_.deg()); }

    friend RPoly operator+(const RPoly& x, const RPoly& y) { return {x.f0_ + y.f0_, x.f1_ + y.f1_}; }
    friend RPoly operator-(const RPoly& x, const RPoly& y) { return {x.f0_ - y.f0_, x.f1_ - y.f1_}; }
    RPoly operator-() const { return {-f0_, -f1_}; }

    friend RPoly operator*(const RPoly& x, const RPoly& y) {
        return {x.f0_ * y.f0_, x.f0_ * y.f1_ + x.f1_ * y.f0_};
    }

    friend bool operator==(const RPoly& x, const RPoly& y) { return x.f0_ == y.f0_ && x.f1_ == y.f1_; }
    friend bool operator!=(const RPoly& x, const RPoly& y) { return !(x == y); }

    /// Reduce both parts mod x^n - 1 (fold coefficient i onto i mod n).
    RPoly mod_xn_minus_1(int n) const {
        auto fold = [n](const Poly& f) {
            const Field& fld = f.field();
            std::vector<int> r(n, 0);
            for (int i = 0; i <= f.deg(); ++i) r[i % n] = fld.add(r[i % n], f.coeff_index(i));
            return Poly(fld, std::move(r));
        };
        return {fold(f0_), fold(f1_)};
    }

    RElement coeff(int i) const { return {f0_.coeff(i), f1_.coeff(i)}; }

    /// As a length-n word (requires deg < n).
    Word to_word(int n) const;

private:
    Poly f0_, f1_;
};

/// Length-n vector over R, identified with c_0 + c_1 x + ... + c_{n-1}x^{n-1}.
struct Word {
    std::vector<RElement> entries;

    int n() const { return static_cast<int>(entries.size()); }

    friend bool operator==(const Word& x, const Word& y) { return x.entries == y.entries; }

    int hamming_weight() const {
        int w = 0;
        for (const auto& e : entries) w += !e.is_zero();
        return w;
    }
};

inline Word RPoly::to_word(int n) const {
    Word w;
    w.entries.reserve(n);
    for (int i = 0; i < n; ++i) w.entries.push_back(coeff(i));
    return w;
}

/// c -> (c_{n-1}, ..., c_0); an involution.
inline Word word_reverse(const Word& c) {
    Word r = c;
    std::reverse(r.entries.begin(), r.entries.end());
    return r;
}

/// (c_0, ..., c_{n-1}) -> (c_{n-1}, c_0, ..., c_{n-2}).
inline Word cyclic_shift(const Word& c) {
    Word r = c;
    if (!r.entries.empty()) std::rotate(r.entries.begin(), r.entries.end() - 1, r.entries.end());
    return r;
}

inline RElement inner_product(const Word& x, const Word& y) {
    RElement acc = RElement::zero(x.entries.at(0).a().field());
    for (size_t i = 0; i < x.entries.size(); ++i) acc = acc + x.entries[i] * y.entries[i];
    return acc;
}

} // namespace chaincode
