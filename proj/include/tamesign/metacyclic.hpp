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

// Finite metacyclic groups C_m x|_s C_N = <x, t | x^m, t^N, t x t^-1 = x^s>
// and the monomial representations induced from the normal subgroups
// A_f = <x, t^f>. Everything is computed by summing over raw group elements;
// conjugacy classes are never formed.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamesign/arith.hpp"
#include "tamesign/cyclotomic.hpp"
#include "tamesign/errors.hpp"
#include "tamesign/parallel.hpp"

namespace tamesign {

using arith::i64;
using arith::u64;

/// x^i t^j.
struct GroupElem {
    u64 i = 0;
    u64 j = 0;

    friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
};

class MetacyclicGroup {
public:
    MetacyclicGroup(u64 m, u64 N, u64 s) : m_(m), N_(N), s_(m == 0 ? 0 : s % m) {
        if (m == 0 || N == 0) throw UsageError("metacyclic group needs m >= 1 and N >= 1");
        if (std::gcd(s_, m_) != 1 && m_ != 1) throw UsageError("action exponent must be a unit mod m");
        s_pows_.resize(N_);
        u64 cur = 1 % m_;
        for (u64 j = 0; j < N_; ++j) {
            s_pows_[j] = cur;
            cur = arith::mulmod(cur, s_, m_);
        }
        if (cur != 1 % m_)
            throw UsageError("inconsistent presentation: s^N != 1 mod m for (m, N, s) = (" + std::to_string(m) +
                             ", " + std::to_string(N) + ", " + std::to_string(s) + ")");
    }

    u64 m() const { return m_; }
    u64 N() const { return N_; }
    u64 s() const { return s_; }
    u64 order() const { return m_ * N_; }

    /// s^j mod m; j may exceed N.
    u64 s_pow(u64 j) const { return s_pows_[j % N_]; }
    /// s^(-r) mod m.
    u64 s_inv_pow(u64 r) const { return s_pows_[(N_ - r % N_) % N_]; }

    GroupElem identity() const { return {}; }
    GroupElem x() const { return {1 % m_, 0}; }
    GroupElem t() const { return {0, 1 % N_}; }

    bool contains(const GroupElem& g) const { return g.i < m_ && g.j < N_; }

    GroupElem mul(const GroupElem& a, const GroupElem& b) const {
        return {(a.i + arith::mulmod(s_pow(a.j), b.i, m_)) % m_, (a.j + b.j) % N_};
    }

    GroupElem inverse(const GroupElem& g) const {
        const u64 j_inv = (N_ - g.j) % N_;
        return {(m_ - arith::mulmod(s_pow(j_inv), g.i, m_)) % m_, j_inv};
    }

    GroupElem pow(GroupElem g, u64 k) const {
        GroupElem out = identity();
        while (k > 0) {
            if (k & 1) out = mul(out, g);
            g = mul(g, g);
            k >>= 1;
        }
        return out;
    }

    template <class Fn>
    void for_each_element(Fn&& fn) const {
        for (u64 j = 0; j < N_; ++j)
            for (u64 i = 0; i < m_; ++i) fn(GroupElem{i, j});
    }

    friend bool operator==(const MetacyclicGroup& a, const MetacyclicGroup& b) {
        return a.m_ == b.m_ && a.N_ == b.N_ && a.s_ == b.s_;
    }

private:
    u64 m_;
    u64 N_;
    u64 s_;
    std::vector<u64> s_pows_;
};

inline GroupElem elem_mul(const MetacyclicGroup& G, const GroupElem& a, const GroupElem& b) { return G.mul(a, b); }

/// psi on A_f = <x, t^f>: x^i (t^f)^k -> zeta_m^(a i) zeta_(N/f)^(c k).
struct SubgroupCharacter {
    u64 f = 1;
    u64 a = 0;
    u64 c = 0;

    friend auto operator<=>(const SubgroupCharacter&, const SubgroupCharacter&) = default;
};

/// Throws UsageError unless psi is a character of A_f. The only relation to
/// check is t^f x t^-f = x^(s^f), i.e. a (s^f - 1) = 0 mod m; A_f itself need
/// not be abelian.
inline void validate_character(const MetacyclicGroup& G, const SubgroupCharacter& psi) {
    if (psi.f == 0 || G.N() % psi.f != 0) throw UsageError("subgroup index f must divide N");
    if (psi.a >= G.m()) throw UsageError("residue exponent a must lie in [0, m)");
    if (psi.c >= G.N() / psi.f) throw UsageError("t^f exponent c must lie in [0, N/f)");
    const u64 drift = (G.s_pow(psi.f) + G.m() - 1) % G.m();
    if (arith::mulmod(psi.a, drift, G.m()) != 0)
        throw UsageError("psi is not a homomorphism on <x, t^f>: a (s^f - 1) != 0 mod m");
}

/// zeta_order^exponent with gcd(exponent, order) = 1; order 1 is the value 1.
struct RootOfUnity {
    u64 order = 1;
    u64 exponent = 0;

    CycInt value() const { return CycInt::root(order, static_cast<i64>(exponent)); }

    std::string str() const {
        if (order == 1) return "1";
        if (order == 2) return "-1";
        return "z" + std::to_string(order) + "^" + std::to_string(exponent);
    }

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Monomial matrix whose nonzero entries are roots of unity: column c holds
/// zeta_conductor^exponent[c] in row row_of_col[c].
struct MonomialMatrix {
    u64 conductor = 1;
    std::vector<u64> row_of_col;
    std::vector<u64> exponent;

    std::size_t size() const { return row_of_col.size(); }

    static MonomialMatrix identity(std::size_t n, u64 conductor) {
        MonomialMatrix out{conductor, std::vector<u64>(n), std::vector<u64>(n, 0)};
        for (std::size_t c = 0; c < n; ++c) out.row_of_col[c] = c;
        return out;
    }

    friend MonomialMatrix operator*(const MonomialMatrix& A, const MonomialMatrix& B) {
        if (A.size() != B.size() || A.conductor != B.conductor) throw UsageError("monomial matrix shape mismatch");
        MonomialMatrix out{A.conductor, std::vector<u64>(A.size()), std::vector<u64>(A.size())};
        for (std::size_t c = 0; c < B.size(); ++c) {
            const u64 mid = B.row_of_col[c];
            out.row_of_col[c] = A.row_of_col[mid];
            out.exponent[c] = (A.exponent[mid] + B.exponent[c]) % A.conductor;
        }
        return out;
    }

    MonomialMatrix inverse() const {
        MonomialMatrix out{conductor, std::vector<u64>(size()), std::vector<u64>(size())};
        for (std::size_t c = 0; c < size(); ++c) {
            out.row_of_col[row_of_col[c]] = c;
            out.exponent[row_of_col[c]] = (conductor - exponent[c]) % conductor;
        }
        return out;
    }

    MonomialMatrix pow(u64 k) const {
        MonomialMatrix out = identity(size(), conductor), base = *this;
        while (k > 0) {
            if (k & 1) out = out * base;
            base = base * base;
            k >>= 1;
        }
        return out;
    }

    CycInt trace() const {
        RootSum sum(conductor);
        for (std::size_t c = 0; c < size(); ++c)
            if (row_of_col[c] == c) sum.add(exponent[c]);
        return sum.to_cycint();
    }

    CycInt det() const {
        const bool odd = permutation_is_odd();
        u64 total = 0;
        for (u64 e : exponent) total = (total + e) % conductor;
        const CycInt value = CycInt::root(conductor, static_cast<i64>(total));
        return odd ? -value : value;
    }

    /// The determinant as a root of unity in lowest terms.
    RootOfUnity det_root() const {
        const u64 L = arith::lcm(conductor, 2);
        u64 k = 0;
        for (u64 e : exponent) k = (k + e * (L / conductor)) % L;
        if (permutation_is_odd()) k = (k + L / 2) % L;
        const u64 g = std::gcd(k, L);
        return {L / g, k / g};
    }

    bool permutation_is_odd() const {
        std::vector<bool> seen(size(), false);
        bool odd = false;
        for (std::size_t c = 0; c < size(); ++c) {
            if (seen[c]) continue;
            std::size_t len = 0;
            for (std::size_t k = c; !seen[k]; k = row_of_col[k]) {
                seen[k] = true;
                ++len;
            }
            if (len % 2 == 0) odd = !odd;
        }
        return odd;
    }

    /// Dense form, rows of CycInt.
    std::vector<std::vector<CycInt>> dense() const {
        std::vector<std::vector<CycInt>> out(size(), std::vector<CycInt>(size(), CycInt::zero(conductor)));
        for (std::size_t c = 0; c < size(); ++c)
            out[row_of_col[c]][c] = CycInt::root(conductor, static_cast<i64>(exponent[c]));
        return out;
    }

    friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

/// Ind_{A_f}^G psi with coset basis t^0 A_f, ..., t^(f-1) A_f.
///
/// All values are roots of unity of order dividing conductor() = lcm(m, N/f)
/// (or sums of f of them), addressed by their exponent.
class InducedRepresentation {
public:
    InducedRepresentation(MetacyclicGroup G, SubgroupCharacter psi) : G_(std::move(G)), psi_(psi) {
        validate_character(G_, psi_);
        const u64 top = G_.N() / psi_.f;
        conductor_ = arith::lcm(G_.m(), top);
        x_scale_ = conductor_ / G_.m();
        t_scale_ = conductor_ / top;
        twisted_a_.resize(psi_.f);
        for (u64 r = 0; r < psi_.f; ++r) twisted_a_[r] = arith::mulmod(psi_.a, G_.s_inv_pow(r), G_.m());
    }

    const MetacyclicGroup& group() const { return G_; }
    const SubgroupCharacter& character() const { return psi_; }
    u64 dim() const { return psi_.f; }
    u64 conductor() const { return conductor_; }

    /// a s^-r mod m: the x-exponent of the r-th conjugate psi^(t^r).
    u64 twisted_a(u64 r) const { return twisted_a_[r]; }

    /// Exponent of psi(x^I t^J) for J = 0 mod f.
    u64 psi_exponent(u64 I, u64 J) const {
        const u64 top = G_.N() / psi_.f;
        const u64 k = (J % G_.N()) / psi_.f;
        return (arith::mulmod(psi_.a, I, G_.m()) * x_scale_ + (psi_.c * k % top) * t_scale_) % conductor_;
    }

    /// Exponent of psi(t^-r x^I t^J t^r) = psi(x^(I s^-r) t^J).
    u64 conjugate_exponent(u64 r, u64 I, u64 J) const {
        const u64 top = G_.N() / psi_.f;
        const u64 k = (J % G_.N()) / psi_.f;
        return (arith::mulmod(twisted_a_[r], I, G_.m()) * x_scale_ + (psi_.c * k % top) * t_scale_) % conductor_;
    }

    /// Adds chi(g) to the histogram.
    void add_character_value(const GroupElem& g, RootSum& acc) const {
        if (g.j % psi_.f != 0) return;
        for (u64 r = 0; r < psi_.f; ++r) acc.add(conjugate_exponent(r, g.i, g.j));
    }

    CycInt character_value(const GroupElem& g) const {
        RootSum acc(conductor_);
        add_character_value(g, acc);
        return acc.to_cycint();
    }

    /// The row-th row of M(g) has its single entry in the returned column.
    std::pair<u64, u64> entry_in_row(const GroupElem& g, u64 row) const {
        const u64 f = psi_.f;
        const u64 col = (row + f - g.j % f) % f;
        // g t^col = t^row h with h = x^(i s^-row) t^(j + col - row) in A_f.
        const u64 J = (g.j + col + G_.N() - row) % G_.N();
        return {col, conjugate_exponent(row, g.i, J)};
    }

    MonomialMatrix matrix(const GroupElem& g) const {
        const u64 f = psi_.f;
        MonomialMatrix out{conductor_, std::vector<u64>(f), std::vector<u64>(f)};
        for (u64 row = 0; row < f; ++row) {
            const auto [col, e] = entry_in_row(g, row);
            out.row_of_col[col] = row;
            out.exponent[col] = e;
        }
        return out;
    }

private:
    MetacyclicGroup G_;
    SubgroupCharacter psi_;
    u64 conductor_ = 1;
    u64 x_scale_ = 1;
    u64 t_scale_ = 1;
    std::vector<u64> twisted_a_;  // a s^-r mod m
};

inline CycInt induced_character(const MetacyclicGroup& G, const SubgroupCharacter& psi, const GroupElem& g) {
    return InducedRepresentation(G, psi).character_value(g);
}

/// The f conjugates psi^(t^r) are pairwise distinct, i.e. a has orbit size f
/// under multiplication by s.
inline bool conjugates_distinct(const MetacyclicGroup& G, const SubgroupCharacter& psi) {
    validate_character(G, psi);
    return arith::orbit_size(psi.a, G.s(), G.m()) == psi.f;
}

namespace detail {

/// Splits [0, m) into `threads` contiguous chunks, sums each with `body`, and
/// merges the partial histograms in chunk order.
template <class Body>
RootSum chunked_root_sum(u64 conductor, u64 m, unsigned threads, Body&& body) {
    const u64 chunks = std::max<u64>(1, std::min<u64>(threads, m));
    auto partials = parallel_map<RootSum>(chunks, static_cast<unsigned>(chunks), [&](std::size_t k) {
        RootSum acc(conductor);
        body(m * k / chunks, m * (k + 1) / chunks, acc);
        return acc;
    });
    RootSum total(conductor);
    for (const auto& p : partials) total.merge(p);
    return total;
}

} // namespace detail

/// <chi, chi>_G as an exact integer, from sum_g chi(g) conj(chi(g)).
inline BigInt induced_norm(const MetacyclicGroup& G, const SubgroupCharacter& psi, unsigned threads = 1) {
    const InducedRepresentation rep(G, psi);
    const u64 M = rep.conductor();
    const u64 f = psi.f;
    const RootSum total = detail::chunked_root_sum(M, G.m(), threads, [&](u64 lo, u64 hi, RootSum& acc) {
        std::vector<u64> e(f);
        for (u64 j = 0; j < G.N(); j += f) {
            for (u64 i = lo; i < hi; ++i) {
                for (u64 r = 0; r < f; ++r) e[r] = rep.conjugate_exponent(r, i, j);
                for (u64 r = 0; r < f; ++r)
                    for (u64 r2 = 0; r2 < f; ++r2) acc.add((e[r] + M - e[r2]) % M);
            }
        }
    });
    const auto raw = total.as_integer();
    if (!raw || *raw % static_cast<i64>(G.order()) != 0)
        throw InternalConsistencyError("character norm sum is not a multiple of |G|");
    return BigInt(*raw / static_cast<i64>(G.order()));
}

inline bool is_irreducible_induced(const MetacyclicGroup& G, const SubgroupCharacter& psi, unsigned threads = 1) {
    return induced_norm(G, psi, threads) == 1;
}

struct IrrepDescriptor {
    SubgroupCharacter psi;
    u64 dim = 1;

    friend bool operator==(const IrrepDescriptor&, const IrrepDescriptor&) = default;
};

/// One induced descriptor per isomorphism class: for each orbit of
/// multiplication by s on Z/m (represented by its smallest element a, orbit
/// size f) and each c in Z/(N/f). Ordered by a, then c.
inline std::vector<IrrepDescriptor> enumerate_irreps(const MetacyclicGroup& G) {
    std::vector<IrrepDescriptor> out;
    std::vector<bool> seen(G.m(), false);
    u64 dim_square_sum = 0;
    for (u64 a = 0; a < G.m(); ++a) {
        if (seen[a]) continue;
        u64 f = 0;
        for (u64 cur = a; !seen[cur]; cur = arith::mulmod(cur, G.s(), G.m())) {
            seen[cur] = true;
            ++f;
        }
        for (u64 c = 0; c < G.N() / f; ++c) {
            const SubgroupCharacter psi{f, a, c};
            validate_character(G, psi);
            out.push_back({psi, f});
        }
        dim_square_sum += (G.N() / f) * f * f;
    }
    if (dim_square_sum != G.order())
        throw InternalConsistencyError("unsupported group shape: sum of dim^2 = " + std::to_string(dim_square_sum) +
                                       " != |G| = " + std::to_string(G.order()));
    return out;
}

/// Raw Frobenius-Schur sum sum_g chi(g^2) and the indicator it certifies.
struct FsSum {
    i64 raw = 0;
    int indicator = 0;
};

namespace detail {

inline int certify_indicator(const MetacyclicGroup& G, i64 raw, const char* route) {
    const i64 order = static_cast<i64>(G.order());
    if (raw % order != 0 || raw / order < -1 || raw / order > 1)
        throw InternalConsistencyError(std::string(route) + ": Frobenius-Schur sum " + std::to_string(raw) +
                                       " is not |G|*c with c in {-1,0,1} (|G| = " + std::to_string(order) + ")");
    return static_cast<int>(raw / order);
}

} // namespace detail

/// Frobenius-Schur sum over every element of G.
inline FsSum fs_indicator_sum(const MetacyclicGroup& G, const SubgroupCharacter& psi, unsigned threads = 1) {
    const InducedRepresentation rep(G, psi);
    const u64 M = rep.conductor();
    const u64 m = G.m();
    const u64 f = psi.f;
    const u64 x_scale = M / m;

    const RootSum total = detail::chunked_root_sum(M, m, threads, [&](u64 lo, u64 hi, RootSum& acc) {
        std::vector<u64> step(f), cur(f);
        for (u64 j = 0; j < G.N(); ++j) {
            // (x^i t^j)^2 = x^(i (1 + s^j)) t^(2j)
            const u64 J = 2 * j % G.N();
            if (J % f != 0) continue;  // chi vanishes off A_f
            const u64 mult = (1 + G.s_pow(j)) % m;
            const u64 t_part = rep.psi_exponent(0, J);
            for (u64 r = 0; r < f; ++r) {
                step[r] = arith::mulmod(rep.twisted_a(r), mult, m);
                cur[r] = arith::mulmod(step[r], lo, m);
            }
            for (u64 i = lo; i < hi; ++i) {
                for (u64 r = 0; r < f; ++r) {
                    u64 e = cur[r] * x_scale + t_part;
                    if (e >= M) e -= M;
                    acc.add(e);
                    cur[r] += step[r];
                    if (cur[r] >= m) cur[r] -= m;
                }
            }
        }
    });

    const auto raw = total.as_integer();
    if (!raw) throw InternalConsistencyError("Frobenius-Schur sum is not a rational integer");
    return {*raw, detail::certify_indicator(G, *raw, "element sum")};
}

/// Frobenius-Schur indicator: +1 orthogonal, -1 symplectic, 0 not self-dual.
inline int fs_indicator(const MetacyclicGroup& G, const SubgroupCharacter& psi, unsigned threads = 1) {
    return fs_indicator_sum(G, psi, threads).indicator;
}

/// Second route to the same sum. Summing chi((x^i t^j)^2) over i first is a
/// geometric sum over Z/m, which is m when a (1 + s^j) = 0 mod m and 0
/// otherwise; what remains is a sum of (N/f)-th roots of unity over j.
inline FsSum fs_indicator_by_cosets(const MetacyclicGroup& G, const SubgroupCharacter& psi) {
    validate_character(G, psi);
    const u64 top = G.N() / psi.f;
    std::vector<BigInt> dense(top);
    for (u64 j = 0; j < G.N(); ++j) {
        const u64 J = 2 * j % G.N();
        if (J % psi.f != 0) continue;
        if (arith::mulmod(psi.a, (1 + G.s_pow(j)) % G.m(), G.m()) != 0) continue;
        dense[psi.c * (J / psi.f) % top] += 1;
    }
    const auto inner = CycInt::from_dense(top, std::move(dense)).as_integer();
    if (!inner) throw InternalConsistencyError("coset route: Frobenius-Schur sum is not a rational integer");
    const i64 raw = static_cast<i64>(*inner) * static_cast<i64>(psi.f * G.m());
    return {raw, detail::certify_indicator(G, raw, "coset route")};
}

/// #{g in G : g^2 = 1}, by enumeration.
inline u64 count_square_roots_of_identity(const MetacyclicGroup& G) {
    u64 count = 0;
    G.for_each_element([&](const GroupElem& g) {
        if (G.mul(g, g) == G.identity()) ++count;
    });
    return count;
}

struct MatrixModel {
    MonomialMatrix x;
    MonomialMatrix t;
};

inline MatrixModel matrix_model(const MetacyclicGroup& G, const SubgroupCharacter& psi) {
    const InducedRepresentation rep(G, psi);
    return {rep.matrix(G.x()), rep.matrix(G.t())};
}

struct DetAtGenerators {
    CycInt x;
    CycInt t;
};

/// Determinants of the matrix model at x and t.
inline DetAtGenerators det_at_generators(const MetacyclicGroup& G, const SubgroupCharacter& psi) {
    const auto model = matrix_model(G, psi);
    return {model.x.det(), model.t.det()};
}

/// theta(x) = x^u, theta(t) = x^v t^w.
struct InvolutionSpec {
    u64 u = 1;
    u64 v = 0;
    u64 w = 1;
};

/// A validated involutive automorphism of G.
class Involution {
public:
    Involution(MetacyclicGroup G, InvolutionSpec spec) : G_(std::move(G)), spec_(spec) {
        if (spec.u >= G_.m() || spec.v >= G_.m() || spec.w >= G_.N())
            throw UsageError("involution exponents out of range");
        const GroupElem tx{spec.u, 0};
        const GroupElem tt{spec.v, spec.w};
        t_pows_.resize(G_.N());
        GroupElem cur = G_.identity();
        for (u64 j = 0; j < G_.N(); ++j) {
            t_pows_[j] = cur;
            cur = G_.mul(cur, tt);
        }
        if (cur != G_.identity()) throw UsageError("theta(t)^N != 1");
        if (G_.mul(G_.mul(tt, tx), G_.inverse(tt)) != G_.pow(tx, G_.s()))
            throw UsageError("theta does not respect t x t^-1 = x^s");
        if (apply(tx) != G_.x() || apply(tt) != G_.t()) throw UsageError("theta is not an involution");
    }

    static Involution identity(const MetacyclicGroup& G) { return Involution(G, {1 % G.m(), 0, 1 % G.N()}); }

    GroupElem apply(const GroupElem& g) const {
        return G_.mul({arith::mulmod(spec_.u, g.i, G_.m()), 0}, t_pows_[g.j]);
    }

    const InvolutionSpec& spec() const { return spec_; }

private:
    MetacyclicGroup G_;
    InvolutionSpec spec_;
    std::vector<GroupElem> t_pows_;
};

/// The sign c with B^T = c B for the bilinear form
///   B = sum_g M(g)^T B_0 M(theta(g)),
/// trying B_0 = E_00, E_01, ... until B != 0; 0 when every seed averages to
/// zero (Ind psi is not theta-self-dual).
inline int theta_sign(const MetacyclicGroup& G, const Involution& theta, const SubgroupCharacter& psi) {
    const InducedRepresentation rep(G, psi);
    const u64 f = psi.f;
    const u64 M = rep.conductor();
    for (u64 k = 0; k < f; ++k) {
        for (u64 l = 0; l < f; ++l) {
            // (M(g)^T E_kl M(theta g))_uv = M(g)_ku M(theta g)_lv: one entry per g.
            // For g = x^i t^j the columns depend only on j and the exponent
            // is affine in i modulo M.
            std::map<std::pair<u64, u64>, RootSum> entries;
            const auto exponent_at = [&](const GroupElem& g) {
                return (rep.entry_in_row(g, k).second + rep.entry_in_row(theta.apply(g), l).second) % M;
            };
            for (u64 j = 0; j < G.N(); ++j) {
                const GroupElem head{0, j};
                const u64 u = rep.entry_in_row(head, k).first;
                const u64 v = rep.entry_in_row(theta.apply(head), l).first;
                RootSum& acc = entries.try_emplace({u, v}, M).first->second;
                const u64 base = exponent_at(head);
                const u64 step = (exponent_at({1 % G.m(), j}) + M - base) % M;
                u64 e = base;
                for (u64 i = 0; i < G.m(); ++i) {
                    acc.add(e);
                    e += step;
                    if (e >= M) e -= M;
                }
            }
            std::map<std::pair<u64, u64>, std::vector<i64>> form;
            for (const auto& [pos, sum] : entries) {
                auto reduced = sum.reduced();
                if (std::any_of(reduced.begin(), reduced.end(), [](i64 c) { return c != 0; }))
                    form.emplace(pos, std::move(reduced));
            }
            if (form.empty()) continue;

            auto transposed_equals = [&](int sign) {
                for (const auto& [pos, value] : form) {
                    const auto it = form.find({pos.second, pos.first});
                    if (it == form.end()) return false;
                    for (std::size_t e = 0; e < value.size(); ++e)
                        if (it->second[e] != sign * value[e]) return false;
                }
                return true;
            };
            if (transposed_equals(+1)) return +1;
            if (transposed_equals(-1)) return -1;
            throw InternalConsistencyError("invariant form is neither symmetric nor alternating");
        }
    }
    return 0;
}

} // namespace tamesign
