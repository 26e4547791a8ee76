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

// Irreducible characters of C_m x|_(-1) C_4 (dicyclic of order 4m for odd m)
// with their Frobenius-Schur indicators and determinants at the generators.
//
//   dicyclic_signs [m]      (default 3)

#include <cstdlib>
#include <iostream>

#include "tamesign/metacyclic.hpp"

int main(int argc, char** argv) {
    using namespace tamesign;
    const u64 m = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 3;
    if (m < 3) {
        std::cerr << "m must be at least 3\n";
        return 1;
    }
    const MetacyclicGroup G(m, 4, m - 1);
    std::cout << "|G| = " << G.order() << "\n";
    for (const auto& r : enumerate_irreps(G)) {
        const auto mats = matrix_model(G, r.psi);
        std::cout << "f=" << r.psi.f << " a=" << r.psi.a << " c=" << r.psi.c << "  dim " << r.dim
                  << "  FS " << fs_indicator(G, r.psi) << "  det(x) " << mats.x.det_root().str() << "  det(t) "
                  << mats.t.det_root().str() << "\n";
    }
    return 0;
}
