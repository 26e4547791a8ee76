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

// Sign algebra relating c(pi) on GL_m(D) to c(sigma) of its parameter, and the
// exhaustive level-one flip check that ties the division and Weil sides
// together.

#include <algorithm>
#include <span>
#include <vector>

#include "tamesign/sign.hpp"
#include "tamesign/tame_division.hpp"
#include "tamesign/tame_weil.hpp"

namespace tamesign {

/// c(pi) from (-1)^m c(pi) = (-1)^n c(sigma)^m, n = m r. For odd n the
/// parameter is odd-dimensional, hence orthogonal, and c(pi) = +1 whatever
/// c_sigma is passed.
inline Sign inner_form_sign(u64 m, u64 r, Sign c_sigma) {
    if (m == 0 || r == 0) throw UsageError("m and r must be positive");
    const u64 n = m * r;
    if (n % 2 != 0) return Sign::plus();
    return Sign::parity(n - m) * c_sigma.pow(m);
}

/// D^x of index n: always orthogonal for odd n, otherwise the opposite of the
/// parameter.
inline Sign division_algebra_sign(u64 n, Sign c_sigma) {
    if (n == 0) throw UsageError("n must be positive");
    if (n % 2 != 0) {
        if (!c_sigma.is_plus()) throw UsageError("an odd-dimensional self-dual parameter cannot be symplectic");
        return Sign::plus();
    }
    return -c_sigma;
}

/// GL_m(D) with D of index d.
inline Sign gl_m_division_sign(u64 m, u64 d, Sign c_sigma) {
    if (m == 0 || d == 0) throw UsageError("m and d must be positive");
    if (d % 2 != 0) return Sign::plus();
    if (m % 2 != 0) return -c_sigma;
    return Sign::plus();
}

inline Sign tensor_power_sign(Sign c, u64 k) {
    if (k == 0) throw UsageError("tensor power needs k >= 1");
    return c.pow(k);
}

/// True iff the product of the local signs is +1 (the empty product is +1).
inline bool product_check(std::span<const Sign> local_signs) {
    Sign product = Sign::plus();
    for (Sign s : local_signs) product = product * s;
    return product.is_plus();
}

struct FlipRow {
    u64 q = 0;
    u64 n = 0;
    u64 f = 0;
    u64 e = 0;
    TameCharacter chi;
    Sign division_closed = Sign::plus();
    Sign division_oracle = Sign::plus();
    i64 raw_indicator_sum = 0;
    u64 group_order = 0;
    Recipe recipe = Recipe::PR;
    TameCharacter mu;
    Sign parameter_sign = Sign::plus();
    Sign predicted_division = Sign::plus();
    bool consistent = false;
};

struct FlipReport {
    u64 q = 0;
    u64 n = 0;
    Recipe recipe = Recipe::PR;
    std::vector<FlipRow> rows;

    std::size_t inconsistent_count() const {
        return static_cast<std::size_t>(
            std::count_if(rows.begin(), rows.end(), [](const FlipRow& r) { return !r.consistent; }));
    }
    bool all_consistent() const { return inconsistent_count() == 0; }
};

/// Attaches parameters to already-enumerated characters.
inline FlipReport flip_report_from_entries(u64 q, u64 n, std::span<const Level1Entry> entries, Recipe recipe) {
    FlipReport report{q, n, recipe, {}};
    for (const auto& entry : entries) {
        const WeilParameter p = attach_parameter(n, entry.chi, recipe);
        const Sign c_sigma = full_parameter_sign(p);
        const Sign predicted = division_algebra_sign(n, c_sigma);
        report.rows.push_back({q, n, entry.chi.f, p.e, entry.chi, entry.closed_form, entry.oracle,
                               entry.raw_indicator_sum, entry.group_order, recipe, p.mu, c_sigma, predicted,
                               entry.oracle == predicted && entry.closed_form == entry.oracle});
    }
    return report;
}

/// Every level-one self-dual representation of D^x (index n, residue field
/// F_q) against the sign predicted from its attached parameter.
inline FlipReport verify_flip(u64 q, u64 n, Recipe recipe, unsigned threads = 1) {
    if (n < 2) throw UsageError("verify_flip needs n >= 2");
    const auto entries = enumerate_level1_selfdual(q, n, threads);
    return flip_report_from_entries(q, n, entries, recipe);
}

} // namespace tamesign
