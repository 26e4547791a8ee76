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

#include <string>

#include "tamesign/errors.hpp"

namespace tamesign {

/// An element of {+1, -1}: +1 orthogonal, -1 symplectic.
class Sign {
public:
    static constexpr Sign plus() { return Sign(1); }
    static constexpr Sign minus() { return Sign(-1); }

    static Sign from_int(int v) {
        if (v != 1 && v != -1) throw UsageError("a sign must be +1 or -1, got " + std::to_string(v));
        return Sign(v);
    }

    /// Accepts "+1", "1", "-1", "+", "-".
    static Sign parse(const std::string& text) {
        if (text == "+1" || text == "1" || text == "+") return plus();
        if (text == "-1" || text == "-") return minus();
        throw UsageError("cannot parse sign '" + text + "' (expected +1 or -1)");
    }

    constexpr int value() const { return value_; }
    constexpr bool is_plus() const { return value_ == 1; }

    constexpr Sign operator-() const { return Sign(-value_); }
    friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.value_ * b.value_); }
    friend constexpr bool operator==(Sign, Sign) = default;

    /// (-1)^k.
    static constexpr Sign parity(unsigned long long k) { return k % 2 == 0 ? plus() : minus(); }

    constexpr Sign pow(unsigned long long k) const { return k % 2 == 0 ? plus() : *this; }

    std::string str() const { return value_ > 0 ? "+1" : "-1"; }

private:
    constexpr explicit Sign(int v) : value_(v) {}
    int value_;
};

} // namespace tamesign
