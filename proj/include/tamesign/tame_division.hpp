/*
 * Copyright 2026 The tamesign Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Level-one representations of D^x for a division algebra D of index n over a
// non-archimedean local field with residue field F_q.
//
// A tame character chi of k_f^x is the pair (a, w): its value on a fixed
// generator of F_{q^f}^x is zeta_{q^f - 1}^a and chi(varpi_k) = w. The
// representation pi_chi of dimension f is induced from chi o Nrd on
// D^x(1) D_f^x; modulo D^x(1) and varpi^(2n) this is the metacyclic group
// C_{q^n - 1} x|_q C_{2n} with varpi -> t.

#include <cstdint>
#include <optional>
#include <vector>

#include "tamesign/arith.hpp"
#include "tamesign/errors.hpp"
#include "tamesign/metacyclic.hpp"
#include "tamesign/parallel.hpp"
#include "tamesign/sign.hpp"

namespace tamesign {

struct TameCharacter {
    u64 q = 2;
    u64 f = 1;
    u64 a = 0;
    Sign w = Sign::plus();

    /// q^f - 1, the order of F_{q^f}^x.
    u64 residue_order() const { return arith::checked_pow(q, f) - 1; }

    friend bool operator==(const TameCharacter&, const TameCharacter&) = default;
};

inline void validate_tame(const TameCharacter& chi) {
    if (!arith::is_prime_power(chi.q))
        throw UsageError("q = " + std::to_string(chi.q) + " is not a prime power");
    if (chi.f == 0) throw UsageError("f must be positive");
    if (chi.a >= chi.residue_order())
        throw UsageError("residue exponent a must lie in [0, q^f - 1)");
}

/// All Gal(k_f/k)-conjugates distinct: a has orbit size f under a -> q a.
inline bool is_regular(const TameCharacter& chi) {
    validate_tame(chi);
    return arith::orbit_size(chi.a, chi.q, chi.residue_order()) == chi.f;
}

/// Self-duality of pi_chi for regular chi: f = 2d and chi^-1 = chi^(q^d),
/// i.e. a (q^d + 1) = 0 mod q^f - 1. The uniformizer value w = +-1 adds no
/// condition.
inline bool is_selfdual_division(const TameCharacter& chi) {
    if (!is_regular(chi)) throw UsageError("self-duality is only defined here for regular characters");
    if (chi.f % 2 != 0) return false;
    const u64 d = chi.f / 2;
    return arith::mulmod(chi.a, arith::checked_pow(chi.q, d) + 1, chi.residue_order()) == 0;
}

/// +1 iff chi is trivial on k^x = F_q^x x varpi_k^Z.
inline Sign sign_division_closed_form(const TameCharacter& chi) {
    if (!is_selfdual_division(chi)) throw UsageError("closed-form sign requires a self-dual regular character");
    // Trivial on F_q^x means a = 0 mod q - 1; self-duality forces it.
    if (chi.a % (chi.q - 1) != 0)
        throw InternalConsistencyError("self-dual character is nontrivial on F_q^x");
    return chi.w;
}

/// A finite group together with the character whose induction is modeled.
struct GroupModel {
    MetacyclicGroup group;
    SubgroupCharacter psi;
};

/// C_{q^n - 1} x|_q C_{2n} and chi o Nrd on <x, t^f>: x -> zeta^(a (q^n-1)/(q^f-1))
/// (the residue norm F_{q^n} -> F_{q^f}), t^f -> w since Nrd(varpi^f) = varpi_k.
inline GroupModel division_model(u64 n, const TameCharacter& chi) {
    validate_tame(chi);
    if (n == 0 || n % chi.f != 0) throw UsageError("f must divide n");
    const u64 m = arith::checked_pow(chi.q, n) - 1;
    const u64 N = 2 * n;
    const u64 top = N / chi.f;  // = 2e; t^f has order 2e
    const SubgroupCharacter psi{chi.f, chi.a * (m / chi.residue_order()) % m, chi.w.is_plus() ? 0 : top / 2};
    GroupModel model{MetacyclicGroup(m, N, chi.q), psi};
    validate_character(model.group, model.psi);
    return model;
}

/// The indicator of the modeled representation, with the raw element sum.
inline FsSum division_oracle_sum(u64 n, const TameCharacter& chi, unsigned threads = 1) {
    const auto model = division_model(n, chi);
    return fs_indicator_sum(model.group, model.psi, threads);
}

/// Sign by exhaustive Frobenius-Schur summation over the division model.
inline Sign sign_division_oracle(u64 n, const TameCharacter& chi, unsigned threads = 1) {
    if (!is_selfdual_division(chi)) throw UsageError("oracle sign requires a self-dual regular character");
    const auto sum = division_oracle_sum(n, chi, threads);
    if (sum.indicator == 0)
        throw InternalConsistencyError("indicator 0 for a character asserted to be self-dual");
    return Sign::from_int(sum.indicator);
}

struct Level1Entry {
    TameCharacter chi;
    u64 dim = 0;
    Sign closed_form = Sign::plus();
    Sign oracle = Sign::plus();
    i64 raw_indicator_sum = 0;
    u64 group_order = 0;
};

/// Regular self-dual characters of dimension f | n, f even: one per Galois
/// orbit (minimal a) and uniformizer value, ordered by f, then a, then w
/// (+1 before -1).
inline std::vector<TameCharacter> level1_selfdual_characters(u64 q, u64 n) {
    if (!arith::is_prime_power(q)) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
    if (n == 0) throw UsageError("n must be positive");
    std::vector<TameCharacter> out;
    for (u64 f : arith::divisors(n)) {
        if (f % 2 != 0) continue;
        const u64 order = arith::checked_pow(q, f) - 1;
        // a (q^d + 1) = 0 mod (q^d - 1)(q^d + 1) iff q^d - 1 divides a.
        const u64 stride = arith::checked_pow(q, f / 2) - 1;
        for (u64 a = 0; a < order; a += stride) {
            if (arith::orbit_size(a, q, order) != f || arith::orbit_min(a, q, order) != a) continue;
            for (Sign w : {Sign::plus(), Sign::minus()}) {
                const TameCharacter chi{q, f, a, w};
                if (!is_selfdual_division(chi)) throw InternalConsistencyError("stride enumeration out of sync");
                out.push_back(chi);
            }
        }
    }
    return out;
}

inline std::vector<Level1Entry> enumerate_level1_selfdual(u64 q, u64 n, unsigned threads = 1) {
    const auto characters = level1_selfdual_characters(q, n);
    return parallel_map<Level1Entry>(characters.size(), threads, [&](std::size_t k) {
        const TameCharacter& chi = characters[k];
        const auto model = division_model(n, chi);
        const FsSum sum = fs_indicator_sum(model.group, model.psi);
        if (sum.indicator == 0)
            throw InternalConsistencyError("indicator 0 for a character asserted to be self-dual");
        return Level1Entry{chi, chi.f, sign_division_closed_form(chi), Sign::from_int(sum.indicator), sum.raw,
                           model.group.order()};
    });
}

/// A regular self-dual character of dimension f = 2d: pull back a character
/// of order q^d + 1 of the norm-one circle group along x -> x / xbar, i.e.
/// a = (q^d - 1) u with u a unit mod q^d + 1.
inline TameCharacter construct_selfdual_of_dim(u64 q, u64 n, u64 f) {
    if (!arith::is_prime_power(q)) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
    if (f == 0 || f % 2 != 0 || n % f != 0) throw UsageError("f must be even and divide n");
    const u64 d = f / 2;
    const u64 circle = arith::checked_pow(q, d) + 1;
    for (u64 u = 1; u < circle; ++u) {
        if (std::gcd(u, circle) != 1) continue;
        const TameCharacter chi{q, f, (circle - 2) * u, Sign::plus()};
        if (is_regular(chi) && is_selfdual_division(chi)) return chi;
    }
    throw InternalConsistencyError("no circle-group character of full order is regular");
}

} // namespace tamesign
