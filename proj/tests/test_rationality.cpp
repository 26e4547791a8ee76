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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tamesign/rationality.hpp"
#include "tamesign/tame_division.hpp"

using namespace tamesign;
using arith::u64;

namespace {

const MetacyclicGroup kDic12(3, 4, 2);

std::vector<MetacyclicGroup> groups() {
    return {MetacyclicGroup(3, 4, 2), MetacyclicGroup(5, 4, 2), MetacyclicGroup(7, 6, 2), MetacyclicGroup(8, 4, 3),
            MetacyclicGroup(15, 8, 2), MetacyclicGroup(9, 6, 2), MetacyclicGroup(7, 3, 2), MetacyclicGroup(6, 4, 1)};
}

} // namespace

TEST(CharacterField, TrivialCharacterIsRational) {
    for (const auto& G : groups()) {
        const auto field = character_field(G, {1, 0, 0});
        EXPECT_EQ(field.degree, 1u);
        EXPECT_EQ(field.stabilizer.size(), arith::euler_phi(field.conductor));
    }
}

TEST(CharacterField, DicyclicTwoDimensionalIrrepsAreRational) {
    for (u64 c : {0, 1}) {
        const auto field = character_field(kDic12, {2, 1, c});
        EXPECT_EQ(field.conductor, 12u);
        EXPECT_EQ(field.degree, 1u);
    }
    // A faithful character of C_4 generates Q(i).
    EXPECT_EQ(character_field(kDic12, {1, 0, 1}).degree, 2u);
}

TEST(CharacterField, SelfDualStabilizerContainsConjugation) {
    for (const auto& G : groups()) {
        for (const auto& r : enumerate_irreps(G)) {
            if (fs_indicator(G, r.psi) == 0) continue;
            const auto field = character_field(G, r.psi);
            EXPECT_TRUE(std::binary_search(field.stabilizer.begin(), field.stabilizer.end(), field.conductor - 1));
        }
    }
}

TEST(CharacterField, StabilizerIsASubgroupOfTheRightIndex) {
    for (const auto& G : groups()) {
        for (const auto& r : enumerate_irreps(G)) {
            const auto field = character_field(G, r.psi);
            const auto& stab = field.stabilizer;
            const u64 M = field.conductor;
            EXPECT_TRUE(std::binary_search(stab.begin(), stab.end(), 1 % M));
            for (u64 x : stab)
                for (u64 y : stab) EXPECT_TRUE(std::binary_search(stab.begin(), stab.end(), arith::mulmod(x, y, M)));
            EXPECT_EQ(field.degree * stab.size(), arith::euler_phi(M));
        }
    }
}

TEST(CharacterField, StabilizerIsExactlyTheValueFixer) {
    for (const auto& G : groups()) {
        for (const auto& r : enumerate_irreps(G)) {
            const auto field = character_field(G, r.psi);
            const oracle::InducedCharacter chi(G, r.psi);
            std::vector<CycInt> values;
            G.for_each_element([&](const GroupElem& g) { values.push_back(chi(g)); });
            for (u64 j = 1; j < field.conductor; ++j) {
                if (std::gcd(j, field.conductor) != 1) continue;
                const bool fixes = std::all_of(values.begin(), values.end(), [&](const CycInt& v) {
                    return v.galois(static_cast<std::int64_t>(j)) == v;
                });
                EXPECT_EQ(fixes, std::binary_search(field.stabilizer.begin(), field.stabilizer.end(), j))
                    << "j=" << j << " psi=(" << r.psi.f << "," << r.psi.a << "," << r.psi.c << ")";
            }
        }
    }
}

TEST(IsRealCharacter, Examples) {
    EXPECT_TRUE(is_real_character(kDic12, {2, 1, 0}));
    EXPECT_TRUE(is_real_character(kDic12, {1, 0, 0}));
    EXPECT_FALSE(is_real_character(kDic12, {1, 0, 1}));

    const auto model = division_model(3, {2, 3, 1, Sign::plus()});
    EXPECT_TRUE(is_irreducible_induced(model.group, model.psi));
    EXPECT_FALSE(is_real_character(model.group, model.psi));
}

TEST(IsRealCharacter, RealIffIndicatorNonzero) {
    for (const auto& G : groups()) {
        for (const auto& r : enumerate_irreps(G)) {
            const int fs = fs_indicator(G, r.psi);
            EXPECT_EQ(is_real_character(G, r.psi), fs != 0);
            if (fs == 1) {
                EXPECT_TRUE(is_real_character(G, r.psi));
            }
        }
    }
}
