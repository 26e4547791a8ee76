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

// Exact arithmetic in Z[zeta_M].
//
// Values are stored in a canonical integral basis: zeta_M^k is a basis
// element iff, writing k = sum_p k_p * (M / p^e) mod M over the prime powers
// p^e || M, every digit satisfies k_p < (p-1) p^(e-1). This is the tensor
// product of the power bases of the Z[zeta_{p^e}], so it has phi(M) elements
// and equals the power basis 1, zeta, ..., zeta^(phi(M)-1) when M is a prime
// power. Reduction into the basis is a single linear pass per prime, using
// Phi_{p^e}(y) = 1 + y^(p^(e-1)) + ... + y^((p-1) p^(e-1)).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tamesign/arith.hpp"
#include "tamesign/errors.hpp"

namespace tamesign {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline void subtract_into(std::int64_t& target, std::int64_t v) {
    if (__builtin_sub_overflow(target, v, &target))
        throw InternalConsistencyError("cyclotomic coefficient overflow");
}

inline void subtract_into(BigInt& target, const BigInt& v) { target -= v; }

/// CRT digit structure of Z/M and the reduction onto the canonical basis.
class CrtReducer {
public:
    struct Block {
        arith::u64 p;
        arith::u64 pe;
        arith::u64 top;      // (p-1) p^(e-1): digits >= top are reduced
        arith::u64 cof_inv;  // (M / pe)^(-1) mod pe
        arith::u64 shift;    // p^(e-1) * (M / pe): moves the digit by p^(e-1)
    };

    explicit CrtReducer(arith::u64 conductor) : conductor_(conductor) {
        if (conductor == 0) throw UsageError("conductor must be positive");
        for (const auto& pp : arith::factorize(conductor)) {
            const arith::u64 step = pp.pe / pp.p;
            const arith::u64 cofactor = conductor / pp.pe;
            blocks_.push_back({pp.p, pp.pe, (pp.p - 1) * step, arith::inverse_mod(cofactor % pp.pe, pp.pe),
                               step * cofactor});
        }
    }

    arith::u64 conductor() const { return conductor_; }

    arith::u64 digit(const Block& b, arith::u64 k) const { return arith::mulmod(k % b.pe, b.cof_inv, b.pe); }

    bool in_basis(arith::u64 k) const {
        return std::all_of(blocks_.begin(), blocks_.end(), [&](const Block& b) { return digit(b, k) < b.top; });
    }

    /// Rewrites a dense exponent vector (length M) so that only basis
    /// exponents carry nonzero coefficients.
    template <class T>
    void reduce(std::vector<T>& dense) const {
        const arith::u64 M = conductor_;
        for (const Block& b : blocks_) {
            for (arith::u64 k = 0; k < M; ++k) {
                if (dense[k] == 0 || digit(b, k) < b.top) continue;
                const T v = dense[k];
                dense[k] = 0;
                arith::u64 idx = k;
                for (arith::u64 j = 1; j < b.p; ++j) {
                    idx = (idx + M - b.shift) % M;
                    subtract_into(dense[idx], v);
                }
            }
        }
    }

    /// Basis exponents in ascending order.
    std::vector<arith::u64> basis() const {
        std::vector<arith::u64> out;
        for (arith::u64 k = 0; k < conductor_; ++k)
            if (in_basis(k)) out.push_back(k);
        return out;
    }

private:
    arith::u64 conductor_;
    std::vector<Block> blocks_;
};

} // namespace detail

/// An element of Z[zeta_M] in canonical coordinates.
class CycInt {
public:
    CycInt() : conductor_(1), coeffs_(1) {}

    static CycInt integer(const BigInt& n, arith::u64 conductor = 1) {
        CycInt out = zero(conductor);
        out.coeffs_[0] = n;
        return out;
    }

    static CycInt zero(arith::u64 conductor) {
        CycInt out;
        out.conductor_ = conductor;
        out.coeffs_.assign(arith::euler_phi(conductor), BigInt(0));
        return out;
    }

    /// zeta_M^k, k taken mod M.
    static CycInt root(arith::u64 conductor, std::int64_t k) {
        if (conductor == 0) throw UsageError("conductor must be positive");
        std::vector<BigInt> dense(conductor);
        dense[arith::mod(k, conductor)] = 1;
        return from_dense(conductor, std::move(dense));
    }

    /// Canonicalizes sum_k dense[k] zeta_M^k.
    template <class T>
    static CycInt from_dense(arith::u64 conductor, std::vector<T> dense) {
        if (dense.size() != conductor) throw UsageError("dense vector length must equal the conductor");
        const detail::CrtReducer reducer(conductor);
        reducer.reduce(dense);
        CycInt out;
        out.conductor_ = conductor;
        const auto basis = reducer.basis();
        out.coeffs_.resize(basis.size());
        for (std::size_t slot = 0; slot < basis.size(); ++slot) out.coeffs_[slot] = BigInt(dense[basis[slot]]);
        return out;
    }

    arith::u64 conductor() const { return conductor_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
    }

    /// The rational integer this value equals, if any. Exponent 0 is always
    /// the first basis element.
    std::optional<BigInt> as_integer() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return std::nullopt;
        return coeffs_[0];
    }

    /// Same value at a conductor divisible by this one.
    CycInt embed(arith::u64 target) const {
        if (target == 0 || target % conductor_ != 0)
            throw UsageError("cannot embed conductor " + std::to_string(conductor_) + " into " +
                             std::to_string(target));
        const arith::u64 scale = target / conductor_;
        std::vector<BigInt> dense(target);
        const auto basis = detail::CrtReducer(conductor_).basis();
        for (std::size_t slot = 0; slot < basis.size(); ++slot) dense[basis[slot] * scale] = coeffs_[slot];
        return from_dense(target, std::move(dense));
    }

    /// Applies zeta_M -> zeta_M^j.
    CycInt galois(std::int64_t j) const {
        const arith::u64 jm = arith::mod(j, conductor_);
        if (std::gcd(jm, conductor_) != 1)
            throw UsageError("Galois exponent " + std::to_string(j) + " is not coprime to " +
                             std::to_string(conductor_));
        std::vector<BigInt> dense(conductor_);
        const auto basis = detail::CrtReducer(conductor_).basis();
        for (std::size_t slot = 0; slot < basis.size(); ++slot)
            dense[arith::mulmod(basis[slot], jm, conductor_)] += coeffs_[slot];
        return from_dense(conductor_, std::move(dense));
    }

    CycInt conj() const { return galois(static_cast<std::int64_t>(conductor_) - 1); }

    CycInt operator-() const {
        CycInt out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend CycInt operator+(const CycInt& a, const CycInt& b) {
        require_same_conductor(a, b);
        CycInt out = a;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
        return out;
    }

    friend CycInt operator-(const CycInt& a, const CycInt& b) { return a + (-b); }

    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        require_same_conductor(a, b);
        const arith::u64 M = a.conductor_;
        const auto basis = detail::CrtReducer(M).basis();
        std::vector<BigInt> dense(M);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                dense[(basis[i] + basis[j]) % M] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return from_dense(M, std::move(dense));
    }

    CycInt& operator+=(const CycInt& b) { return *this = *this + b; }
    CycInt& operator*=(const CycInt& b) { return *this = *this * b; }

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
    }

    /// Human-readable form, e.g. "2 - z12^5".
    std::string str() const {
        if (auto n = as_integer()) return n->str();
        const auto basis = detail::CrtReducer(conductor_).basis();
        std::ostringstream os;
        bool first = true;
        for (std::size_t slot = 0; slot < basis.size(); ++slot) {
            BigInt c = coeffs_[slot];
            if (c == 0) continue;
            const bool negative = c < 0;
            if (negative) c = -c;
            os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
            first = false;
            if (basis[slot] == 0) {
                os << c;
                continue;
            }
            if (c != 1) os << c << '*';
            os << 'z' << conductor_ << '^' << basis[slot];
        }
        return os.str();
    }

private:
    static void require_same_conductor(const CycInt& a, const CycInt& b) {
        if (a.conductor_ != b.conductor_)
            throw UsageError("conductor mismatch: " + std::to_string(a.conductor_) + " vs " +
                             std::to_string(b.conductor_) + " (embed into a common conductor first)");
    }

    arith::u64 conductor_;
    std::vector<BigInt> coeffs_;
};

inline CycInt cyc_root(arith::u64 conductor, std::int64_t k) { return CycInt::root(conductor, k); }
inline CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
inline CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }
inline CycInt cyc_embed(const CycInt& a, arith::u64 target) { return a.embed(target); }
inline CycInt cyc_galois(std::int64_t j, const CycInt& a) { return a.galois(j); }
inline std::optional<BigInt> cyc_as_integer(const CycInt& a) { return a.as_integer(); }

/// A sum of M-th roots of unity kept as a histogram over Z/M, i.e. an element
/// of Z[x]/(x^M - 1). Canonicalization is deferred to the read-out.
class RootSum {
public:
    explicit RootSum(arith::u64 conductor) : counts_(conductor, 0) {
        if (conductor == 0) throw UsageError("conductor must be positive");
    }

    arith::u64 conductor() const { return counts_.size(); }

    void add(arith::u64 exponent, std::int64_t coeff = 1) {
        auto& slot = counts_[exponent % counts_.size()];
        if (__builtin_add_overflow(slot, coeff, &slot))
            throw InternalConsistencyError("root histogram overflow");
    }

    void merge(const RootSum& other) {
        if (other.conductor() != conductor()) throw UsageError("conductor mismatch in RootSum::merge");
        for (std::size_t k = 0; k < counts_.size(); ++k) add(k, other.counts_[k]);
    }

    const std::vector<std::int64_t>& raw() const { return counts_; }

    /// Canonical coordinates as a dense exponent vector; two sums are equal
    /// in Z[zeta_M] iff their reduced vectors are equal.
    std::vector<std::int64_t> reduced() const {
        auto dense = counts_;
        detail::CrtReducer(conductor()).reduce(dense);
        return dense;
    }

    std::optional<std::int64_t> as_integer() const {
        const auto dense = reduced();
        for (std::size_t k = 1; k < dense.size(); ++k)
            if (dense[k] != 0) return std::nullopt;
        return dense[0];
    }

    CycInt to_cycint() const { return CycInt::from_dense(conductor(), counts_); }

private:
    std::vector<std::int64_t> counts_;
};

} // namespace tamesign
