#pragma once

#include <optional>

#include "chaincode/code.hpp"

namespace chaincode {

struct DistanceReport {
    std::optional<int> d;      // empty = infinite (zero code)
    int k = 0;                 // n - deg a, the tabulated dimension
    bool mds = false;          // d = n - k + 1
    bool brute_force = false;  // true when d came from streaming C over R
    Poly cu_generator;         // a(x), the claimed residue-code generator
    Poly torsion_generator;    // oracle: gcd over {b : u b in C}
    bool torsion_matches = true;
};

/// Generator of {b : u b in C}, read off the rows of the code span whose
/// pivot lies in the u^1 half.
inline Poly torsion_oracle_generator(const CyclicCode& C) {
    const Field& f = C.field();
    int n = C.n();
    Poly t = Poly::xn_minus_1(f, n);
    const auto& span = C.span();
    for (int r = 0; r < span.rank(); ++r)
        if (span.pivots()[r] >= n) {
            const auto& row = span.rows()[r];
            t = poly_gcd(t, Poly(f, std::vector<int>(row.begin() + n, row.end())));
        }
    return t;
}

/// C_u generator per the residue-code theorem: a(x). The torsion oracle
/// value is computed alongside and compared (authoritative on mismatch).
inline std::pair<Poly, Poly> residue_code(const CyclicCode& C) {
    return {C.a(), torsion_oracle_generator(C)};
}

/// Minimum weight of the q-ary cyclic code <gen> of length n; empty when
/// the code is zero. Enumerates the q^{n - deg gen} message space with
/// incremental row updates.
inline std::optional<int> field_code_min_weight(const Poly& gen, int n, std::uint64_t budget = 1ull << 24) {
    const Field& f = gen.field();
    int k = n - gen.deg();
    if (k <= 0) return std::nullopt;
    long double est = 1;
    for (int i = 0; i < k; ++i) est *= static_cast<long double>(f.size());
    if (est > static_cast<long double>(budget)) fail(errc::budget_exceeded, "distance enumeration exceeds budget");

    std::vector<std::vector<int>> rows(k, std::vector<int>(n, 0));
    for (int j = 0; j < k; ++j) {
        Poly r = gen.shifted(j);
        for (int d = 0; d <= r.deg(); ++d) rows[j][d % n] = f.add(rows[j][d % n], r.coeff_index(d));
    }

    int best = n + 1;
    std::vector<int> cur(n, 0);
    // depth-first over message symbols; "nonzero seen" tracked so the zero
    // word is skipped
    auto rec = [&](auto&& self, int depth, bool nonzero) -> void {
        if (depth == k) {
            if (!nonzero) return;
            int w = 0;
            for (int i = 0; i < n; ++i) w += cur[i] != 0;
            if (w < best) best = w;
            return;
        }
        self(self, depth + 1, nonzero);
        std::vector<int> saved = cur;
        for (int c = 1; c < f.size(); ++c) {
            for (int i = 0; i < n; ++i) cur[i] = f.add(saved[i], f.mul(c, rows[depth][i]));
            self(self, depth + 1, true);
        }
        cur = saved;
    };
    rec(rec, 0, false);
    return best;
}

inline bool is_mds(std::optional<int> d, int k, int n) { return d.has_value() && *d == n - k + 1; }

/// Hamming distance of C via its residue code C_u (d_H(C) = d_H(C_u)).
/// When the torsion oracle disagrees with a(x), the oracle generator is
/// used for d and the mismatch is reported.
inline DistanceReport min_distance(const CyclicCode& C, std::uint64_t budget = 1ull << 24) {
    DistanceReport rep;
    auto [a, torsion] = residue_code(C);
    rep.cu_generator = a;
    rep.torsion_generator = torsion;
    rep.torsion_matches = (a == torsion) || (a.deg() == C.n() && torsion.deg() == C.n());
    rep.k = C.n() - a.deg();
    rep.d = field_code_min_weight(torsion, C.n(), budget);
    rep.mds = is_mds(rep.d, rep.k, C.n());
    return rep;
}

/// Direct transcription over R: minimum Hamming weight over all nonzero
/// codewords of C itself. Empty = zero code.
inline std::optional<int> min_distance_oracle(const CyclicCode& C, std::uint64_t budget = 1ull << 24) {
    int n = C.n();
    int best = n + 1;
    C.for_each_codeword(budget, [&](const std::vector<int>& v) {
        int w = 0;
        for (int i = 0; i < n; ++i) w += (v[i] != 0 || v[n + i] != 0);
        if (w > 0 && w < best) best = w;
    });
    if (best > n) return std::nullopt;
    return best;
}

} // namespace chaincode
