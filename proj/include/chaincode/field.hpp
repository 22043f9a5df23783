#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "chaincode/errors.hpp"

namespace chaincode {

namespace detail {

// Polynomials over Z_p as dense coefficient vectors, lowest degree first,
// normalized (no trailing zeros). Used for field moduli and the irreducible
// search in the factorization module, before Poly/Field exist.
namespace zpx {

using pvec = std::vector<int>;

inline void trim(pvec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const pvec& f) { return static_cast<int>(f.size()) - 1; }

inline int mod_inv(int a, int p) {
    // extended Euclid; a nonzero mod p, p prime
    int t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        int q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return ((t % p) + p) % p;
}

inline pvec add(const pvec& f, const pvec& g, int p) {
    pvec r(std::max(f.size(), g.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int v = (i < f.size() ? f[i] : 0) + (i < g.size() ? g[i] : 0);
        r[i] = v % p;
    }
    trim(r);
    return r;
}

inline pvec sub(const pvec& f, const pvec& g, int p) {
    pvec r(std::max(f.size(), g.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int v = (i < f.size() ? f[i] : 0) - (i < g.size() ? g[i] : 0);
        r[i] = ((v % p) + p) % p;
    }
    trim(r);
    return r;
}

inline pvec mul(const pvec& f, const pvec& g, int p) {
    if (f.empty() || g.empty()) return {};
    pvec r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    trim(r);
    return r;
}

inline std::pair<pvec, pvec> divmod(const pvec& f, const pvec& g, int p) {
    if (g.empty()) fail(errc::division_by_zero, "zpx division by zero polynomial");
    pvec rem = f, quo;
    int dg = deg(g);
    int lead_inv = mod_inv(g.back(), p);
    if (deg(rem) >= dg) quo.assign(rem.size() - g.size() + 1, 0);
    while (deg(rem) >= dg) {
        int shift = deg(rem) - dg;
        int c = rem.back() * lead_inv % p;
        quo[shift] = c;
        for (int i = 0; i <= dg; ++i) {
            int v = rem[shift + i] - c * g[i] % p;
            rem[shift + i] = ((v % p) + p) % p;
        }
        trim(rem);
    }
    trim(quo);
    return {quo, rem};
}

inline pvec monic(pvec f, int p) {
    if (f.empty()) return f;
    int inv = mod_inv(f.back(), p);
    for (int& c : f) c = c * inv % p;
    return f;
}

inline pvec gcd(pvec f, pvec g, int p) {
    while (!g.empty()) {
        pvec r = divmod(f, g, p).second;
        f = std::move(g);
        g = std::move(r);
    }
    return monic(std::move(f), p);
}

inline pvec mulmod(const pvec& f, const pvec& g, const pvec& m, int p) {
    return divmod(mul(f, g, p), m, p).second;
}

// x^e mod f by square-and-multiply
inline pvec xpowmod(std::uint64_t e, const pvec& f, int p) {
    pvec result{1};
    pvec base{0, 1};
    if (deg(f) == 0) return {};
    base = divmod(base, f, p).second;
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

inline std::vector<int> prime_factors(std::uint64_t n) {
    std::vector<int> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(static_cast<int>(d));
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(static_cast<int>(n));
    return out;
}

// Rabin test: f irreducible over Z_p iff x^{p^d} = x (mod f) and
// gcd(x^{p^{d/r}} - x, f) = 1 for every prime r | d.
inline bool is_irreducible(const pvec& f, int p) {
    int d = deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    auto pow_u64 = [](std::uint64_t b, int e) {
        std::uint64_t r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    pvec x{0, 1};
    pvec frob = xpowmod(pow_u64(p, d), f, p);
    if (sub(frob, x, p) != pvec{}) return false;
    for (int r : prime_factors(d)) {
        pvec fr = xpowmod(pow_u64(p, d / r), f, p);
        if (deg(gcd(sub(fr, x, p), f, p)) != 0) return false;
    }
    return true;
}

} // namespace zpx

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

/// Context for F_q, q = p^k, in polynomial basis over F_p.
///
/// Elements are referred to by index in [0, q): the index's base-p digits are
/// the polynomial-basis coordinates, lowest power first. Index 0 is zero and
/// index 1 is one. Immutable after construction; q is capped at 2^16.
class Field {
public:
    // Hard representation cap; splitting fields built internally by the
    // factorization module may use the full range. User-facing construction
    // goes through field_new, which enforces the tighter 2^16 limit.
    static constexpr long long max_size = 1 << 24;

    /// p prime, k >= 1; modulus (coeffs low->high, length k+1, monic,
    /// irreducible over F_p) required exactly when k > 1.
    Field(int p, int k, std::vector<int> modulus = {}) : p_(p), k_(k), modulus_(std::move(modulus)) {
        if (!detail::is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
        if (k < 1) fail(errc::degree_mismatch, "extension degree must be >= 1");
        q_ = 1;
        for (int i = 0; i < k; ++i) {
            q_ *= p;
            if (q_ > max_size) fail(errc::unsupported_field_size, "q = p^k exceeds 2^16");
        }
        if (k == 1) {
            if (!modulus_.empty()) fail(errc::degree_mismatch, "prime field takes no modulus");
        } else {
            if (modulus_.empty()) fail(errc::degree_mismatch, "extension field requires a modulus");
            for (int& c : modulus_) c = ((c % p) + p) % p;
            detail::zpx::trim(modulus_);
            if (detail::zpx::deg(modulus_) != k) fail(errc::degree_mismatch, "modulus degree must equal k");
            if (modulus_.back() != 1) fail(errc::reducible_modulus, "modulus must be monic");
            if (!detail::zpx::is_irreducible(modulus_, p))
                fail(errc::reducible_modulus, "modulus is reducible over F_p");
        }
        if (q_ <= table_limit) build_tables();
    }

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    long long size() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    bool operator==(const Field& o) const { return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    // --- element index arithmetic ---

    int zero() const { return 0; }
    int one() const { return 1; }

    std::vector<int> coords(int idx) const {
        std::vector<int> c(k_, 0);
        for (int i = 0; i < k_; ++i) {
            c[i] = idx % p_;
            idx /= p_;
        }
        return c;
    }

    int from_coords(const std::vector<int>& c) const {
        int idx = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) idx = idx * p_ + (((c[i] % p_) + p_) % p_);
        return idx;
    }

    int add(int a, int b) const {
        if (k_ == 1) return (a + b) % p_;
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_slow(a, b);
    }

    int neg(int a) const {
        if (k_ == 1) return (p_ - a) % p_;
        auto c = coords(a);
        for (int& v : c) v = (p_ - v) % p_;
        return from_coords(c);
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

    int mul(int a, int b) const {
        if (k_ == 1) return a * b % p_;
        if (!mul_table_.empty()) return mul_table_[a * q_ + b];
        return mul_slow(a, b);
    }

    int inv(int a) const {
        if (a == 0) fail(errc::division_by_zero, "inverse of zero field element");
        if (k_ == 1) return detail::zpx::mod_inv(a, p_);
        if (!inv_table_.empty()) return inv_table_[a];
        return pow(a, static_cast<std::uint64_t>(q_ - 2));
    }

    /// a^e by square-and-multiply; 0^0 = 1 by convention (keeps polynomial
    /// evaluation at 0 total).
    int pow(int a, std::uint64_t e) const {
        int result = 1, base = a;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    /// "GF(q)" for prime fields, "GF(q; modulus)" otherwise.
    std::string description() const {
        if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
        std::string m;
        for (int d = k_; d >= 0; --d) {
            int c = modulus_[d];
            if (c == 0) continue;
            if (!m.empty()) m += "+";
            if (d == 0) {
                m += std::to_string(c);
            } else {
                if (c != 1) m += std::to_string(c);
                m += "x";
                if (d > 1) m += "^" + std::to_string(d);
            }
        }
        return "GF(" + std::to_string(q_) + "; " + m + ")";
    }

private:
    static constexpr long long table_limit = 256;

    int add_slow(int a, int b) const {
        auto ca = coords(a), cb = coords(b);
        for (int i = 0; i < k_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
        return from_coords(ca);
    }

    int mul_slow(int a, int b) const {
        auto prod = detail::zpx::mulmod(coords(a), coords(b), modulus_, p_);
        prod.resize(k_, 0);
        return from_coords(prod);
    }

    void build_tables() {
        if (k_ == 1) return; // direct mod-p arithmetic is already cheap
        add_table_.resize(q_ * q_);
        mul_table_.resize(q_ * q_);
        inv_table_.assign(q_, 0);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                add_table_[a * q_ + b] = add_slow(a, b);
                int m = mul_slow(a, b);
                mul_table_[a * q_ + b] = m;
                if (m == 1) inv_table_[a] = b;
            }
    }

    int p_, k_;
    long long q_;
    std::vector<int> modulus_;
    std::vector<int> add_table_, mul_table_, inv_table_;
};

/// An element of F_q carrying its field context. Arithmetic between elements
/// of different fields is a FieldMismatch error.
class FieldElement {
public:
    FieldElement() : f_(nullptr), idx_(0) {}
    FieldElement(const Field& f, int idx) : f_(&f), idx_(idx) {}

    const Field& field() const { return *f_; }
    int index() const { return idx_; }
    std::vector<int> coords() const { return f_->coords(idx_); }
    bool is_zero() const { return idx_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {*a.f_, a.f_->add(a.idx_, b.idx_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {*a.f_, a.f_->sub(a.idx_, b.idx_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {*a.f_, a.f_->mul(a.idx_, b.idx_)};
    }
    FieldElement operator-() const { return {*f_, f_->neg(idx_)}; }

    FieldElement inv() const { return {*f_, f_->inv(idx_)}; }
    FieldElement pow(std::uint64_t e) const { return {*f_, f_->pow(idx_, e)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return a.idx_ == b.idx_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (a.f_ != b.f_ && *a.f_ != *b.f_) fail(errc::field_mismatch, "operands from different fields");
    }

    const Field* f_;
    int idx_;
};

/// Validated field construction at desk scale: q = p^k <= 2^16.
inline Field field_new(int p, int k = 1, std::vector<int> modulus = {}) {
    long long q = 1;
    for (int i = 0; i < k && q <= (1 << 16); ++i) q *= p;
    if (q > (1 << 16)) fail(errc::unsupported_field_size, "q = p^k exceeds 2^16");
    return Field(p, k, std::move(modulus));
}

/// Least t >= 1 with q^t = 1 (mod m); requires gcd(q, m) = 1.
inline int mult_order(long long q, long long m) {
    if (m < 1) fail(errc::not_coprime, "modulus must be positive");
    if (std::gcd(q, m) != 1) fail(errc::not_coprime, "q and m are not coprime");
    if (m == 1) return 1;
    long long v = q % m;
    int t = 1;
    while (v != 1) {
        v = v * (q % m) % m;
        ++t;
    }
    return t;
}

} // namespace chaincode
