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

// Field of character values of Ind psi, through the action of (Z/M)^x on
// cyclotomic values, M = lcm(m, N).

#include <algorithm>
#include <numeric>
#include <vector>

#include "tamesign/arith.hpp"
#include "tamesign/metacyclic.hpp"

namespace tamesign {

struct CharacterField {
    u64 conductor = 1;
    std::vector<u64> stabilizer;  // ascending j in (Z/M)^x with chi^(sigma_j) = chi
    u64 degree = 1;               // [(Z/M)^x : stabilizer]
};

namespace detail {

/// sigma_j sends psi = (f, a, c) to (f, a j, c j); Ind of the two agree iff
/// a j lies in the s-orbit of a and c j = c mod N/f.
inline bool galois_fixes(const MetacyclicGroup& G, const SubgroupCharacter& psi, u64 j) {
    const u64 top = G.N() / psi.f;
    if (arith::mulmod(psi.c, j, top) != psi.c % top) return false;
    return arith::orbit_min(arith::mulmod(psi.a, j, G.m()), G.s(), G.m()) ==
           arith::orbit_min(psi.a, G.s(), G.m());
}

} // namespace detail

inline CharacterField character_field(const MetacyclicGroup& G, const SubgroupCharacter& psi) {
    validate_character(G, psi);
    CharacterField field;
    field.conductor = arith::lcm(G.m(), G.N());
    u64 units = 0;
    for (u64 j = 1; j <= field.conductor; ++j) {
        const u64 jm = j % field.conductor;
        if (std::gcd(jm, field.conductor) != 1) continue;
        ++units;
        if (detail::galois_fixes(G, psi, jm)) field.stabilizer.push_back(jm);
    }
    std::sort(field.stabilizer.begin(), field.stabilizer.end());
    field.degree = units / field.stabilizer.size();
    return field;
}

/// Every character value is fixed by complex conjugation.
inline bool is_real_character(const MetacyclicGroup& G, const SubgroupCharacter& psi) {
    validate_character(G, psi);
    const u64 M = arith::lcm(G.m(), G.N());
    return detail::galois_fixes(G, psi, M - 1);
}

} // namespace tamesign
