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

// Tame Weil-side parameters sigma_mu (x) sp_e.
//
// sigma_mu = Ind_{W_{k_f}}^{W_k} mu is modeled on C_{q^f - 1} x|_q C_{2f}, the
// tame quotient of W_{k_f/k} with varpi^(2f) = 1, where x generates the
// residue units of k_f and t maps to Frobenius with t^f a uniformizer of k_f.
// sp_e only enters through its dimension and sign.

#include <string>

#include "tamesign/metacyclic.hpp"
#include "tamesign/sign.hpp"
#include "tamesign/tame_division.hpp"

namespace tamesign {

struct WeilParameter {
    TameCharacter mu;
    u64 e = 1;

    u64 dim() const { return mu.f * e; }
};

/// How the parameter of pi_chi is guessed from chi.
enum class Recipe {
    PR,  // mu = chi omega_2^(e(f-1))
    SZ,  // mu = chi omega_2^(f-1)
};

inline std::string recipe_name(Recipe r) { return r == Recipe::PR ? "PR" : "SZ"; }

inline Recipe parse_recipe(const std::string& text) {
    if (text == "PR") return Recipe::PR;
    if (text == "SZ") return Recipe::SZ;
    throw UsageError("unknown recipe '" + text + "' (expected PR or SZ)");
}

inline GroupModel weil_model(const TameCharacter& mu) {
    if (!is_regular(mu)) throw UsageError("Weil model requires a regular character");
    const u64 m = mu.residue_order();
    const SubgroupCharacter psi{mu.f, mu.a, mu.w.is_plus() ? 0u : 1u};
    GroupModel model{MetacyclicGroup(m, 2 * mu.f, mu.q), psi};
    validate_character(model.group, model.psi);
    return model;
}

/// Self-duality of sigma_mu; the same exponent condition as on the division side.
inline bool is_selfdual_weil(const TameCharacter& mu) { return is_selfdual_division(mu); }

/// det sigma_mu is nontrivial, read off the matrix model at the generators.
inline bool weil_determinant_nontrivial(const TameCharacter& mu) {
    const auto model = weil_model(mu);
    const auto det = det_at_generators(model.group, model.psi);
    const auto one = CycInt::integer(1, det.x.conductor());
    return det.x != one || det.t != one;
}

/// +1 iff mu is trivial on k^x. Cross-checked against the determinant
/// criterion; a disagreement is an internal-consistency failure.
inline Sign sign_weil_closed_form(const TameCharacter& mu) {
    if (!is_selfdual_weil(mu)) throw UsageError("closed-form Weil sign requires a self-dual regular character");
    const bool trivial_on_base = mu.a % (mu.q - 1) == 0 && mu.w.is_plus();
    if (trivial_on_base != weil_determinant_nontrivial(mu))
        throw InternalConsistencyError("restriction and determinant criteria disagree for mu = (q=" +
                                       std::to_string(mu.q) + ", f=" + std::to_string(mu.f) +
                                       ", b=" + std::to_string(mu.a) + ", w=" + mu.w.str() + ")");
    return trivial_on_base ? Sign::plus() : Sign::minus();
}

/// Brute-force sign of sigma_mu on the Weil model; 0 when not self-dual.
inline FsSum weil_oracle_sum(const TameCharacter& mu, unsigned threads = 1) {
    const auto model = weil_model(mu);
    return fs_indicator_sum(model.group, model.psi, threads);
}

/// sp_e = Sym^(e-1) of the standard representation of SL(2, C): alternating
/// for e even, symmetric for e odd.
inline Sign sp_sign(u64 e) {
    if (e == 0) throw UsageError("sp_e needs e >= 1");
    return e % 2 == 0 ? Sign::minus() : Sign::plus();
}

/// c(sigma_mu (x) sp_e) = c(sigma_mu) c(sp_e).
inline Sign full_parameter_sign(const WeilParameter& p) {
    if (p.e == 0) throw UsageError("parameter needs e >= 1");
    return sign_weil_closed_form(p.mu) * sp_sign(p.e);
}

/// Twists chi by omega_2^k, where omega_2 is unramified quadratic (trivial on
/// units, -1 at the uniformizer), with k = e(f-1) for PR and f-1 for SZ.
inline WeilParameter attach_parameter(u64 n, const TameCharacter& chi, Recipe recipe) {
    if (n == 0 || n % chi.f != 0) throw UsageError("f must divide n");
    if (!is_regular(chi)) throw UsageError("parameters are attached to regular characters only");
    const u64 e = n / chi.f;
    const u64 twist = recipe == Recipe::PR ? e * (chi.f - 1) : chi.f - 1;
    TameCharacter mu = chi;
    mu.w = chi.w * Sign::parity(twist);
    return {mu, e};
}

} // namespace tamesign
