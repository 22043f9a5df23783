#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "chaincode/factorization.hpp"
#include "chaincode/linalg.hpp"
#include "chaincode/ring.hpp"

namespace chaincode {

inline std::vector<int> word_to_vec(const Word& w) {
    int n = w.n();
    std::vector<int> v(2 * n);
    for (int i = 0; i < n; ++i) {
        v[i] = w.entries[i].a().index();
        v[n + i] = w.entries[i].b().index();
    }
    return v;
}

inline Word vec_to_word(const Field& f, const std::vector<int>& v) {
    int n = static_cast<int>(v.size()) / 2;
    Word w;
    w.entries.reserve(n);
    for (int i = 0; i < n; ++i)
        w.entries.push_back({FieldElement(f, v[i]), FieldElement(f, v[n + i])});
    return w;
}

/// Cyclic code over R in canonical form: C = <g + u*p, u*a> with
///   a | g | x^n - 1,  deg p < deg a,  a | p * (x^n - 1)/g,
/// and p = 0 whenever gcd(n, q) = 1. Single-generator codes carry a = g.
/// Immutable; the F_q row span (2n columns: u^0 parts then u^1 parts) is
/// built at construction.
class CyclicCode {
public:
    CyclicCode(int n, const Field& field, Poly g, Poly p, Poly a)
        : n_(n), f_(&field), g_(std::move(g)), p_(std::move(p)), a_(std::move(a)), span_(field, 2 * n) {
        validate();
        build_span();
    }

    int n() const { return n_; }
    const Field& field() const { return *f_; }
    const Poly& g() const { return g_; }
    const Poly& p() const { return p_; }
    const Poly& a() const { return a_; }

    bool coprime_case() const { return std::gcd(static_cast<long long>(n_), f_->size()) == 1; }
    bool single_generator() const { return a_ == g_; }
    bool is_zero_code() const { return g_.deg() == n_ && a_.deg() == n_; }

    RPoly mixed_generator() const { return {g_, p_}; }       // g + u*p
    RPoly torsion_generator() const { return {Poly::zero(*f_), a_}; } // u*a

    /// |C| = q^{(n - deg g) + (n - deg a)}.
    int cardinality_exponent() const { return (n_ - g_.deg()) + (n_ - a_.deg()); }

    std::uint64_t cardinality() const {
        std::uint64_t c = 1;
        for (int i = 0; i < cardinality_exponent(); ++i) {
            if (c > UINT64_MAX / static_cast<std::uint64_t>(f_->size()))
                fail(errc::budget_exceeded, "cardinality exceeds 2^64");
            c *= static_cast<std::uint64_t>(f_->size());
        }
        return c;
    }

    const LinearSpan& span() const { return span_; }

    bool contains(const Word& w) const {
        if (w.n() != n_) fail(errc::degree_mismatch, "word length differs from code length");
        return span_.contains(word_to_vec(w));
    }

    /// Stream every codeword (as a 2n index vector) in a deterministic
    /// order; throws BudgetExceeded if |C| > budget.
    void for_each_codeword(std::uint64_t budget, const std::function<void(const std::vector<int>&)>& fn) const {
        int e = cardinality_exponent();
        long double est = 1;
        for (int i = 0; i < e; ++i) est *= static_cast<long double>(f_->size());
        if (est > static_cast<long double>(budget))
            fail(errc::budget_exceeded, "codeword enumeration exceeds budget");
        std::vector<int> cur(2 * n_, 0);
        stream(0, cur, fn);
    }

    friend bool operator==(const CyclicCode& x, const CyclicCode& y) {
        return x.n_ == y.n_ && *x.f_ == *y.f_ && x.g_ == y.g_ && x.p_ == y.p_ && x.a_ == y.a_;
    }

private:
    void validate() const {
        if (n_ < 1) fail(errc::degree_mismatch, "length must be >= 1");
        Poly xn1 = Poly::xn_minus_1(*f_, n_);
        if (g_.is_zero() || !g_.is_monic()) fail(errc::not_divisor, "g must be monic and nonzero");
        if (a_.is_zero() || !a_.is_monic()) fail(errc::chain_violation, "a must be monic and nonzero");
        if (!divides(g_, xn1)) fail(errc::not_divisor, "g does not divide x^n - 1");
        if (!divides(a_, g_)) fail(errc::chain_violation, "a does not divide g");
        if (!p_.is_zero() && p_.deg() >= a_.deg()) fail(errc::degree_violation, "deg p must be < deg a");
        if (coprime_case() && !p_.is_zero()) fail(errc::coprime_case_nonzero_p, "gcd(n,q)=1 forces p = 0");
        Poly h = xn1 / g_;
        if (!divides(a_, p_ * h)) fail(errc::torsion_violation, "a does not divide p*(x^n-1)/g");
    }

    void build_span() {
        for (int i = 0; i < n_ - g_.deg(); ++i) {
            Word w = RPoly(g_.shifted(i), p_.shifted(i)).mod_xn_minus_1(n_).to_word(n_);
            span_.insert(word_to_vec(w));
        }
        for (int j = 0; j < n_ - a_.deg(); ++j) {
            Word w = RPoly(Poly::zero(*f_), a_.shifted(j)).mod_xn_minus_1(n_).to_word(n_);
            span_.insert(word_to_vec(w));
        }
    }

    void stream(size_t row, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& fn) const {
        if (row == span_.rows().size()) {
            fn(cur);
            return;
        }
        const auto& r = span_.rows()[row];
        // coefficient 0 first, then each nonzero scalar once
        stream(row + 1, cur, fn);
        std::vector<int> saved = cur;
        for (int c = 1; c < f_->size(); ++c) {
            for (int j = 0; j < 2 * n_; ++j) cur[j] = f_->add(saved[j], f_->mul(c, r[j]));
            stream(row + 1, cur, fn);
        }
        cur = saved;
    }

    int n_;
    const Field* f_;
    Poly g_, p_, a_;
    LinearSpan span_;
};

/// code_new: validated canonical construction (throws the specific violation).
inline CyclicCode code_new(int n, const Field& field, Poly g, Poly p, Poly a) {
    return CyclicCode(n, field, std::move(g), std::move(p), std::move(a));
}

/// All canonical cyclic codes of length n over F_q + uF_q, deterministic
/// order: divisor order on g, then on a, then coefficient order on p.
inline std::vector<CyclicCode> enumerate_codes(int n, const Field& field) {
    Factorization fact = factor_xn_minus_1(n, field);
    std::vector<Poly> divs = divisors(fact);
    Poly xn1 = Poly::xn_minus_1(field, n);
    bool coprime = std::gcd(static_cast<long long>(n), field.size()) == 1;

    std::vector<CyclicCode> out;
    for (const Poly& g : divs) {
        Poly h = xn1 / g;
        for (const Poly& a : divs) {
            if (!divides(a, g)) continue;
            if (coprime || a.is_one()) {
                out.emplace_back(n, field, g, Poly::zero(field), a);
                continue;
            }
            // valid residues p: kernel of p -> p*h mod a on {deg p < deg a}
            int da = a.deg();
            std::vector<std::vector<int>> m_rows(da, std::vector<int>(da, 0));
            for (int j = 0; j < da; ++j) {
                Poly img = h.shifted(j) % a;
                for (int i = 0; i < da; ++i) m_rows[i][j] = img.coeff_index(i);
            }
            LinearSpan kernel = null_space(field, m_rows, da);
            std::vector<Poly> residues;
            std::function<void(int, std::vector<int>)> walk = [&](int depth, std::vector<int> acc) {
                if (depth == kernel.rank()) {
                    residues.emplace_back(field, acc);
                    return;
                }
                for (int c = 0; c < field.size(); ++c) {
                    std::vector<int> next = acc;
                    for (int j = 0; j < da; ++j)
                        next[j] = field.add(next[j], field.mul(c, kernel.rows()[depth][j]));
                    walk(depth + 1, std::move(next));
                }
            };
            walk(0, std::vector<int>(da, 0));
            std::sort(residues.begin(), residues.end());
            residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
            for (const Poly& p : residues) out.emplace_back(n, field, g, p, a);
        }
    }
    return out;
}

/// Reduce an arbitrary generator list to the canonical triple by F_q-span
/// computation: g from the image of the reduction-mod-u map, a from the
/// torsion, p from a codeword with u^0 part exactly g.
inline CyclicCode canonicalize_ideal(const std::vector<RPoly>& gens, int n, const Field& field) {
    LinearSpan span(field, 2 * n);
    for (const RPoly& gen : gens) {
        for (int i = 0; i < n; ++i) {
            RPoly shifted(gen.f0().shifted(i), gen.f1().shifted(i));
            span.insert(word_to_vec(shifted.mod_xn_minus_1(n).to_word(n)));
            RPoly ushifted(Poly::zero(field), gen.f0().shifted(i));
            span.insert(word_to_vec(ushifted.mod_xn_minus_1(n).to_word(n)));
        }
    }

    Poly xn1 = Poly::xn_minus_1(field, n);
    Poly g = xn1, a = xn1;
    for (int r = 0; r < span.rank(); ++r) {
        const auto& row = span.rows()[r];
        if (span.pivots()[r] < n) {
            g = poly_gcd(g, Poly(field, std::vector<int>(row.begin(), row.begin() + n)));
        } else {
            a = poly_gcd(a, Poly(field, std::vector<int>(row.begin() + n, row.end())));
        }
    }

    Poly p = Poly::zero(field);
    if (g.deg() < n) {
        std::vector<int> target(2 * n, 0);
        for (int i = 0; i <= g.deg(); ++i) target[i] = g.coeff_index(i);
        std::vector<int> residual = span.reduce(target);
        for (int i = 0; i < n; ++i)
            if (residual[i] != 0) fail(errc::non_canonical, "image generator not reachable in the span");
        std::vector<int> pc(n);
        for (int i = 0; i < n; ++i) pc[i] = field.neg(residual[n + i]);
        p = Poly(field, std::move(pc)) % a;
    }

    CyclicCode code(n, field, g, p, a);
    if (code.span() != span) fail(errc::non_canonical, "generator list does not span a canonical ideal");
    return code;
}

} // namespace chaincode
