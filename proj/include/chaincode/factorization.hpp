#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "chaincode/poly.hpp"

namespace chaincode {

/// q-orbit of a residue class mod m. Cosets partition {0, ..., m-1}.
struct CyclotomicCoset {
    int representative;
    std::vector<int> members; // sorted
};

/// Partition of Z_m into orbits under multiplication by q; gcd(m, q) = 1.
inline std::vector<CyclotomicCoset> cyclotomic_cosets(int m, long long q) {
    if (std::gcd(static_cast<long long>(m), q) != 1) fail(errc::not_coprime, "cyclotomic cosets need gcd(m,q)=1");
    std::vector<bool> seen(m, false);
    std::vector<CyclotomicCoset> out;
    for (int r = 0; r < m; ++r) {
        if (seen[r]) continue;
        CyclotomicCoset cs;
        cs.representative = r;
        long long v = r;
        do {
            cs.members.push_back(static_cast<int>(v));
            seen[v] = true;
            v = v * (q % m) % m;
        } while (v != r);
        std::sort(cs.members.begin(), cs.members.end());
        out.push_back(std::move(cs));
    }
    return out;
}

namespace detail {

/// Splitting context for x^m - 1 over F_q: the extension F_{p^K} with
/// K = k * mult_order(q, m), the embedding F_q -> F_{p^K}, and a subgroup
/// generator alpha of exact order m.
struct SplittingField {
    Field big;
    std::vector<int> up;        // base element index -> big element index
    std::map<int, int> down;    // inverse of up
    int alpha;

    FieldElement alpha_pow(std::uint64_t e) const { return FieldElement(big, big.pow(alpha, e)); }
};

inline std::vector<int> find_irreducible(int p, int K) {
    // lexicographic search over monic degree-K polynomials
    long long count = 1;
    for (int i = 0; i < K; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
        std::vector<int> f(K + 1, 0);
        long long v = code;
        for (int i = 0; i < K; ++i) {
            f[i] = static_cast<int>(v % p);
            v /= p;
        }
        f[K] = 1;
        if (zpx::is_irreducible(f, p)) return f;
    }
    fail(errc::no_subgroup_generator, "no irreducible polynomial found (unreachable for K >= 1)");
}

/// alpha_skip > 0 picks a later subgroup generator; the factorization must
/// not depend on the choice (tested).
inline SplittingField make_splitting_field(const Field& base, int m, int alpha_skip = 0) {
    int p = base.characteristic();
    int k = base.degree();
    int t = mult_order(base.size(), m);
    int K = k * t;
    long long big_q = 1;
    for (int i = 0; i < K; ++i) {
        big_q *= p;
        if (big_q > Field::max_size) fail(errc::unsupported_field_size, "splitting field exceeds 2^24");
    }

    SplittingField ctx{K == k ? base : Field(p, K, find_irreducible(p, K)), {}, {}, 0};
    const Field& big = ctx.big;

    // embedding F_q -> F_{p^K}
    ctx.up.assign(base.size(), 0);
    if (k == 1 || K == k) {
        for (int e = 0; e < base.size(); ++e) ctx.up[e] = e; // prime subfield / identity
    } else {
        // beta = root of the base modulus in the big field
        int beta = -1;
        Poly mod_big = Poly::from_ints(big, base.modulus());
        for (int cand = 0; cand < big.size(); ++cand)
            if (mod_big.eval(FieldElement(big, cand)).is_zero()) {
                beta = cand;
                break;
            }
        if (beta < 0) fail(errc::no_subgroup_generator, "base modulus has no root in the splitting field");
        for (int e = 0; e < base.size(); ++e) {
            auto c = base.coords(e);
            int acc = 0;
            for (int i = k - 1; i >= 0; --i) acc = big.add(big.mul(acc, beta), c[i]);
            ctx.up[e] = acc;
        }
    }
    for (int e = 0; e < base.size(); ++e) ctx.down[ctx.up[e]] = e;

    if (m == 1) {
        ctx.alpha = big.one();
        return ctx;
    }

    // alpha of exact order m: gamma^{(P-1)/m} for successive gamma
    std::uint64_t cofactor = static_cast<std::uint64_t>(big.size() - 1) / m;
    auto ell = zpx::prime_factors(m);
    int skipped = 0;
    for (int gamma = 2; gamma < big.size(); ++gamma) {
        int cand = big.pow(gamma, cofactor);
        bool exact = cand != 1 || m == 1;
        for (int l : ell)
            if (big.pow(cand, m / l) == 1) {
                exact = false;
                break;
            }
        if (!exact) continue;
        if (skipped++ < alpha_skip) continue;
        ctx.alpha = cand;
        return ctx;
    }
    fail(errc::no_subgroup_generator, "no element of order m in the splitting field");
}

/// prod_{i in coset} (x - alpha^i), with coefficient descent to the base field.
inline Poly coset_minimal_polynomial(const CyclotomicCoset& coset, const SplittingField& ctx, const Field& base) {
    const Field& big = ctx.big;
    Poly acc = Poly::one(big);
    for (int i : coset.members) {
        Poly lin(big, {big.neg(big.pow(ctx.alpha, i)), big.one()});
        acc = acc * lin;
    }
    std::vector<int> base_coeffs(acc.deg() + 1);
    for (int i = 0; i <= acc.deg(); ++i) {
        auto it = ctx.down.find(acc.coeff_index(i));
        if (it == ctx.down.end())
            fail(errc::no_subgroup_generator, "minimal polynomial coefficient not in the base field");
        base_coeffs[i] = it->second;
    }
    return Poly(base, std::move(base_coeffs));
}

} // namespace detail

/// Minimal polynomial over F_q of alpha^rep for the given coset of Z_m.
/// Builds the splitting context internally; alpha^m = 1 enforced.
inline Poly minimal_polynomial(const CyclotomicCoset& coset, int m, const Field& field) {
    auto ctx = detail::make_splitting_field(field, m);
    return detail::coset_minimal_polynomial(coset, ctx, field);
}

/// x^n - 1 = prod factors[i]^mult[i] over F_q, factors distinct monic
/// irreducible. With n = p^s * m, gcd(m, p) = 1, every multiplicity is p^s.
struct Factorization {
    int n;
    const Field* field;
    std::vector<std::pair<Poly, int>> factors;
};

inline Factorization factor_xn_minus_1(int n, const Field& field, int alpha_skip = 0) {
    if (n < 1) fail(errc::degree_mismatch, "length must be >= 1");
    int p = field.characteristic();
    int m = n, mult = 1;
    while (m % p == 0) {
        m /= p;
        mult *= p;
    }

    Factorization fact{n, &field, {}};
    if (m == 1) {
        fact.factors.emplace_back(Poly(field, {field.neg(field.one()), field.one()}), mult);
    } else {
        auto ctx = detail::make_splitting_field(field, m, alpha_skip);
        for (const auto& coset : cyclotomic_cosets(m, field.size()))
            fact.factors.emplace_back(detail::coset_minimal_polynomial(coset, ctx, field), mult);
    }
    std::sort(fact.factors.begin(), fact.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    Poly prod = Poly::one(field);
    for (const auto& [f, e] : fact.factors)
        for (int i = 0; i < e; ++i) prod = prod * f;
    if (prod != Poly::xn_minus_1(field, n))
        fail(errc::no_subgroup_generator, "internal factorization check failed");
    return fact;
}

/// All monic divisors of x^n - 1, ordered by degree then coefficient order.
/// Count = prod (e_i + 1).
inline std::vector<Poly> divisors(const Factorization& fact) {
    std::vector<Poly> out{Poly::one(*fact.field)};
    for (const auto& [f, e] : fact.factors) {
        std::vector<Poly> next;
        next.reserve(out.size() * (e + 1));
        for (const auto& d : out) {
            Poly cur = d;
            next.push_back(cur);
            for (int i = 0; i < e; ++i) {
                cur = cur * f;
                next.push_back(cur);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Independent irreducibility oracle over F_q (Rabin criterion via repeated
/// Frobenius powering). Used by tests against the coset construction.
inline bool is_irreducible_oracle(const Poly& f) {
    int d = f.deg();
    if (d < 1) return false;
    if (d == 1) return true;
    const Field& fld = f.field();
    std::uint64_t q = static_cast<std::uint64_t>(fld.size());
    auto mulmod = [&](const Poly& a, const Poly& b) { return (a * b) % f; };
    auto frob = [&](Poly h) {
        // h^q mod f
        Poly r = Poly::one(fld), base = std::move(h);
        std::uint64_t e = q;
        while (e > 0) {
            if (e & 1) r = mulmod(r, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return r;
    };
    Poly x = Poly::x(fld) % f;
    // x^{q^i} mod f for i = 1..d
    Poly h = x;
    for (int i = 1; i <= d; ++i) {
        h = frob(h);
        if (i < d && d % i == 0) {
            if (!poly_gcd(h - x, f).is_one()) return false;
        }
    }
    return h == x;
}

} // namespace chaincode
