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

// Small integer number theory on 64-bit words. Every modulus used by the
// library is below 2^32, so products are formed in 128 bits only as a guard.

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "tamesign/errors.hpp"

namespace tamesign::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    if (((a | b) >> 32) == 0) return a * b % m;
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Reduces a signed value into [0, m).
inline u64 mod(i64 a, u64 m) {
    const i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

/// q^k, throwing instead of wrapping.
inline u64 checked_pow(u64 q, u64 k) {
    u64 result = 1;
    for (u64 i = 0; i < k; ++i) {
        if (q != 0 && result > UINT64_MAX / q) throw UsageError("integer power overflows 64 bits");
        result *= q;
    }
    return result;
}

inline u64 lcm(u64 a, u64 b) { return std::lcm(a, b); }

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline u64 inverse_mod(u64 a, u64 m) {
    if (m == 1) return 0;
    i64 t = 0, new_t = 1;
    i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
    while (new_r != 0) {
        const i64 quotient = r / new_r;
        t = std::exchange(new_t, t - quotient * new_t);
        r = std::exchange(new_r, r - quotient * new_r);
    }
    if (r != 1) throw UsageError("element is not invertible modulo " + std::to_string(m));
    return mod(t, m);
}

struct PrimePower {
    u64 p;
    u64 e;
    u64 pe;
};

/// Trial-division factorization, primes ascending.
inline std::vector<PrimePower> factorize(u64 n) {
    std::vector<PrimePower> out;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        PrimePower pp{p, 0, 1};
        while (n % p == 0) {
            n /= p;
            ++pp.e;
            pp.pe *= p;
        }
        out.push_back(pp);
    }
    if (n > 1) out.push_back({n, 1, n});
    return out;
}

inline u64 euler_phi(u64 n) {
    u64 phi = n;
    for (const auto& pp : factorize(n)) phi = phi / pp.p * (pp.p - 1);
    return phi;
}

/// Returns (p, k) with q = p^k, p prime, k >= 1; nullopt otherwise.
inline std::optional<std::pair<u64, u64>> prime_power_decomposition(u64 q) {
    if (q < 2) return std::nullopt;
    const auto factors = factorize(q);
    if (factors.size() != 1) return std::nullopt;
    return std::pair{factors.front().p, factors.front().e};
}

inline bool is_prime_power(u64 q) { return prime_power_decomposition(q).has_value(); }

inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

/// Size of the orbit of a under x -> x*s (mod m).
inline u64 orbit_size(u64 a, u64 s, u64 m) {
    if (m == 1) return 1;
    a %= m;
    u64 cur = mulmod(a, s, m);
    u64 size = 1;
    while (cur != a) {
        cur = mulmod(cur, s, m);
        ++size;
    }
    return size;
}

/// Smallest element of the orbit of a under x -> x*s (mod m).
inline u64 orbit_min(u64 a, u64 s, u64 m) {
    if (m == 1) return 0;
    a %= m;
    u64 best = a;
    for (u64 cur = mulmod(a, s, m); cur != a; cur = mulmod(cur, s, m)) best = std::min(best, cur);
    return best;
}

} // namespace tamesign::arith
