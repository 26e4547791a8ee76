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

// Test-only reference computations. They share the group multiplication and
// the cyclotomic type with the library but none of its induced-character,
// indicator, or matrix code: cosets are found by scanning, and induced
// characters come straight from chi(g) = sum_r psi(r^-1 g r).

#include <vector>

#include "tamesign/cyclotomic.hpp"
#include "tamesign/metacyclic.hpp"

namespace oracle {

using tamesign::CycInt;
using tamesign::GroupElem;
using tamesign::MetacyclicGroup;
using tamesign::SubgroupCharacter;
using tamesign::u64;

inline u64 value_conductor(const MetacyclicGroup& G) { return std::lcm(G.m(), G.N()); }

inline bool in_subgroup(const SubgroupCharacter& psi, const GroupElem& h) { return h.j % psi.f == 0; }

/// psi(x^i t^(f k)) = zeta_m^(a i) zeta_(N/f)^(c k), at conductor lcm(m, N).
inline CycInt psi_value(const MetacyclicGroup& G, const SubgroupCharacter& psi, const GroupElem& h) {
    const u64 M = value_conductor(G);
    const u64 top = G.N() / psi.f;
    const CycInt x_part = CycInt::root(G.m(), static_cast<std::int64_t>(psi.a * h.i % G.m())).embed(M);
    const CycInt t_part = CycInt::root(top, static_cast<std::int64_t>(psi.c * (h.j / psi.f) % top)).embed(M);
    return x_part * t_part;
}

/// Left coset representatives of A_f, the first of each coset in element order.
inline std::vector<GroupElem> coset_representatives(const MetacyclicGroup& G, const SubgroupCharacter& psi) {
    std::vector<GroupElem> reps;
    G.for_each_element([&](const GroupElem& r) {
        for (const auto& known : reps)
            if (in_subgroup(psi, G.mul(G.inverse(known), r))) return;
        reps.push_back(r);
    });
    return reps;
}

class InducedCharacter {
public:
    InducedCharacter(const MetacyclicGroup& G, const SubgroupCharacter& psi)
        : G_(G), psi_(psi), reps_(coset_representatives(G, psi)) {}

    CycInt operator()(const GroupElem& g) const {
        CycInt total = CycInt::zero(value_conductor(G_));
        for (const auto& r : reps_) {
            const GroupElem h = G_.mul(G_.mul(G_.inverse(r), g), r);
            if (in_subgroup(psi_, h)) total += psi_value(G_, psi_, h);
        }
        return total;
    }

    std::size_t degree() const { return reps_.size(); }

private:
    MetacyclicGroup G_;
    SubgroupCharacter psi_;
    std::vector<GroupElem> reps_;
};

/// (1/|G|) sum_g chi(g g), exactly; fails the test harness if not an integer.
inline long fs_indicator(const MetacyclicGroup& G, const SubgroupCharacter& psi) {
    const InducedCharacter chi(G, psi);
    CycInt total = CycInt::zero(value_conductor(G));
    G.for_each_element([&](const GroupElem& g) { total += chi(G.mul(g, g)); });
    const auto n = total.as_integer();
    if (!n || *n % G.order() != 0) return 99;
    return static_cast<long>(*n / G.order());
}

/// <chi, chi>.
inline long norm(const MetacyclicGroup& G, const SubgroupCharacter& psi) {
    const InducedCharacter chi(G, psi);
    CycInt total = CycInt::zero(value_conductor(G));
    G.for_each_element([&](const GroupElem& g) {
        const CycInt v = chi(g);
        total += v * v.conj();
    });
    const auto n = total.as_integer();
    if (!n || *n % G.order() != 0) return -1;
    return static_cast<long>(*n / G.order());
}

} // namespace oracle
