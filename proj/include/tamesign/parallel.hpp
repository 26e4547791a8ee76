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

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace tamesign {

/// results[k] = fn(k) for k < count, spread over up to `threads` workers.
///
/// Work is assigned round-robin and results are stored by index, so the
/// output never depends on the thread count. If several calls throw, the
/// exception of the smallest index is rethrown.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, Fn&& fn) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
    std::vector<std::optional<Result>> slots(count);
    std::vector<std::exception_ptr> errors(count);

    auto run = [&](std::size_t first) {
        for (std::size_t k = first; k < count; k += workers) {
            try {
                slots[k].emplace(fn(k));
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<Result> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

} // namespace tamesign
