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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "tamesign/tamesign.hpp"

using namespace tamesign;

namespace {

const std::vector<u64> kQs = {2, 3, 4, 5, 7, 8, 9};
const std::vector<u64> kNs = {2, 4, 6};
constexpr u64 kMaxResidueOrder = 1'000'000;
// Groups up to this order get the brute-force indicator and theta_sign on every irrep.
constexpr u64 kFullCoverageOrder = 60'000;
constexpr std::size_t kLargeGroupSample = 12;

struct QN {
    u64 q;
    u64 n;
};

std::vector<QN> test_range() {
    std::vector<QN> out;
    for (u64 q : kQs)
        for (u64 n : kNs)
            if (arith::checked_pow(q, n) - 1 <= kMaxResidueOrder) out.push_back({q, n});
    return out;
}

class Criterion {
public:
    explicit Criterion(int number) : number_(number), start_(std::chrono::steady_clock::now()) {}

    void fail(const std::string& why) {
        if (failures_++ < 5) std::cerr << "  criterion " << number_ << ": " << why << "\n";
    }
    void check(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
    std::ostringstream& detail() { return detail_; }

    bool report() const {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::cout << "criterion " << number_ << ": " << (failures_ == 0 ? "PASS" : "FAIL") << " (" << detail_.str();
        if (failures_ > 0) std::cout << "; " << failures_ << " failures";
        std::cout << "; " << static_cast<long>(secs * 1000) << " ms)" << std::endl;
        return failures_ == 0;
    }

private:
    int number_;
    std::chrono::steady_clock::time_point start_;
    std::ostringstream detail_;
    std::size_t failures_ = 0;
};

std::string describe(const TameCharacter& chi) {
    return "q=" + std::to_string(chi.q) + " f=" + std::to_string(chi.f) + " a=" + std::to_string(chi.a) +
           " w=" + chi.w.str();
}

unsigned threads() { return std::max(1u, std::thread::hardware_concurrency()); }

} // namespace

int main() {
    const auto range = test_range();
    bool all = true;

    // Enumerations are shared by criteria 1, 3 and 6.
    std::vector<std::vector<Level1Entry>> entries;

    {
        Criterion c(1);
        std::size_t rows = 0;
        for (auto [q, n] : range) {
            try {
                entries.push_back(enumerate_level1_selfdual(q, n, threads()));
            } catch (const std::exception& e) {
                entries.emplace_back();
                c.fail("q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " + e.what());
                continue;
            }
            for (const auto& e : entries.back()) {
                ++rows;
                c.check(e.closed_form == e.oracle, "closed form != oracle for " + describe(e.chi));
                c.check(e.raw_indicator_sum == static_cast<i64>(e.group_order) * e.oracle.value(),
                        "raw indicator sum is not |G| c for " + describe(e.chi));
            }
        }
        c.detail() << "division side, " << range.size() << " (q, n) pairs, " << rows << " self-dual characters";
        all &= c.report();
    }

    {
        Criterion c(2);
        std::size_t rows = 0;
        for (auto [q, f] : range) {
            for (const auto& mu : level1_selfdual_characters(q, f)) {
                if (mu.f != f) continue;
                ++rows;
                try {
                    const Sign closed = sign_weil_closed_form(mu);  // also checks the determinant clause
                    const bool det_nontrivial = weil_determinant_nontrivial(mu);
                    const bool restriction_trivial = mu.a % (q - 1) == 0 && mu.w.is_plus();
                    const FsSum sum = weil_oracle_sum(mu, threads());
                    c.check(det_nontrivial == restriction_trivial, "clauses disagree for " + describe(mu));
                    c.check(closed.value() == sum.indicator, "closed form != oracle for " + describe(mu));
                } catch (const std::exception& e) {
                    c.fail(describe(mu) + ": " + e.what());
                }
            }
        }
        c.detail() << "Weil side, " << rows << " self-dual parameters, both clauses";
        all &= c.report();
    }

    {
        Criterion c(3);
        std::size_t rows = 0;
        for (std::size_t k = 0; k < range.size(); ++k) {
            const auto report = flip_report_from_entries(range[k].q, range[k].n, entries[k], Recipe::PR);
            rows += report.rows.size();
            for (const auto& r : report.rows)
                c.check(r.consistent, "PR falsification witness: n=" + std::to_string(r.n) + " " + describe(r.chi) +
                                          " raw=" + std::to_string(r.raw_indicator_sum) + " |G|=" +
                                          std::to_string(r.group_order));
        }
        c.detail() << "recipe PR, " << rows << " rows";
        all &= c.report();
    }

    {
        Criterion c(4);
        const auto sz = verify_flip(2, 4, Recipe::SZ, threads());
        const auto pr = verify_flip(2, 4, Recipe::PR, threads());
        const auto witnesses = std::count_if(sz.rows.begin(), sz.rows.end(),
                                             [](const FlipRow& r) { return !r.consistent && r.e == 2 && r.f == 2; });
        c.check(witnesses > 0, "no inconsistent SZ row with e = 2, f = 2");
        c.check(pr.all_consistent(), "PR is not all-consistent at q = 2, n = 4");
        c.detail() << "q=2 n=4: SZ inconsistent rows with e=f=2: " << witnesses << ", PR inconsistent: "
                   << pr.inconsistent_count();
        all &= c.report();
    }

    {
        Criterion c(5);
        const auto start = std::chrono::steady_clock::now();
        std::size_t checks = 0;
        for (Sign s : {Sign::plus(), Sign::minus()}) {
            for (u64 n = 1; n <= 64; ++n) {
                ++checks;
                if (n % 2 != 0 && !s.is_plus()) {
                    // no odd-dimensional symplectic parameter
                    bool rejected = false;
                    try {
                        division_algebra_sign(n, s);
                    } catch (const UsageError&) {
                        rejected = true;
                    }
                    c.check(rejected, "division_algebra_sign accepted n=" + std::to_string(n) + " with -1");
                    continue;
                }
                c.check(division_algebra_sign(n, s) == inner_form_sign(1, n, s),
                        "division_algebra_sign n=" + std::to_string(n));
            }
            for (u64 m = 1; m <= 16; ++m)
                for (u64 d = 1; d <= 16; ++d, ++checks)
                    c.check(gl_m_division_sign(m, d, s) == inner_form_sign(m, d, s),
                            "gl_m_division_sign m=" + std::to_string(m) + " d=" + std::to_string(d));
            for (u64 m = 1; m <= 64; ++m, ++checks)
                c.check(inner_form_sign(m, 1, s) == Sign::plus(), "GL_m case m=" + std::to_string(m));
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.check(secs < 1.0, "sign identities took more than one second");
        c.detail() << checks << " identities";
        all &= c.report();
    }

    {
        Criterion c(6);
        std::size_t groups = 0, irreps_total = 0, brute = 0, theta = 0;
        for (std::size_t k = 0; k < range.size(); ++k) {
            const auto [q, n] = range[k];
            const MetacyclicGroup G(arith::checked_pow(q, n) - 1, 2 * n, q);
            const std::string tag = "G(" + std::to_string(q) + "^" + std::to_string(n) + "-1, " +
                                    std::to_string(2 * n) + ", " + std::to_string(q) + ")";
            ++groups;
            try {
                const auto irreps = enumerate_irreps(G);
                irreps_total += irreps.size();
                u64 dim_squares = 0;
                i64 weighted = 0;
                std::vector<int> fs(irreps.size());
                for (std::size_t r = 0; r < irreps.size(); ++r) {
                    dim_squares += irreps[r].dim * irreps[r].dim;
                    fs[r] = fs_indicator_by_cosets(G, irreps[r].psi).indicator;
                    weighted += static_cast<i64>(irreps[r].dim) * fs[r];
                }
                c.check(dim_squares == G.order(), tag + ": sum of dim^2 != |G|");
                c.check(weighted == static_cast<i64>(count_square_roots_of_identity(G)),
                        tag + ": sum of dim FS != #{g : g^2 = 1}");

                std::vector<std::size_t> picks;
                if (G.order() <= kFullCoverageOrder) {
                    for (std::size_t r = 0; r < irreps.size(); ++r) picks.push_back(r);
                } else {
                    for (std::size_t s = 0; s < kLargeGroupSample; ++s)
                        picks.push_back(s * irreps.size() / kLargeGroupSample + s % 7);
                }
                std::vector<SubgroupCharacter> targets;
                for (std::size_t r : picks) targets.push_back(irreps[std::min(r, irreps.size() - 1)].psi);
                if (G.order() > kFullCoverageOrder) {
                    // the self-dual level-one irreps of largest and smallest dimension
                    const auto& level1 = entries[k];
                    for (std::size_t e : {std::size_t{0}, std::size_t{1}, level1.size() - 2, level1.size() - 1})
                        if (e < level1.size()) targets.push_back(division_model(n, level1[e].chi).psi);
                }
                const auto identity = Involution::identity(G);
                for (const auto& psi : targets) {
                    const FsSum sum = fs_indicator_sum(G, psi, threads());
                    const int cosets = fs_indicator_by_cosets(G, psi).indicator;
                    ++brute;
                    c.check(sum.raw == static_cast<i64>(G.order()) * sum.indicator, tag + ": raw sum not |G| c");
                    c.check(sum.indicator == cosets, tag + ": brute-force and coset indicators differ");
                    c.check(theta_sign(G, identity, psi) == sum.indicator, tag + ": theta_sign(identity) != FS");
                    ++theta;
                }
            } catch (const std::exception& e) {
                c.fail(tag + ": " + e.what());
            }
        }
        c.detail() << groups << " groups, " << irreps_total << " irreps; coset indicator on all, brute-force sum and "
                   << "theta_sign on " << theta << " (all irreps when |G| <= " << kFullCoverageOrder << ")";
        all &= c.report();
    }

    {
        Criterion c(7);
        std::size_t built = 0;
        for (auto [q, n] : range) {
            for (u64 f : arith::divisors(n)) {
                if (f % 2 != 0) continue;
                try {
                    const auto chi = construct_selfdual_of_dim(q, n, f);
                    ++built;
                    c.check(chi.f == f, describe(chi) + ": wrong dimension");
                    c.check(is_regular(chi), describe(chi) + ": not regular");
                    c.check(is_selfdual_division(chi), describe(chi) + ": not self-dual");
                    const auto model = division_model(n, chi);
                    c.check(is_irreducible_induced(model.group, model.psi, threads()),
                            describe(chi) + ": model not irreducible");
                    c.check(fs_indicator_by_cosets(model.group, model.psi).indicator != 0,
                            describe(chi) + ": model indicator is 0");
                } catch (const std::exception& e) {
                    c.fail("q=" + std::to_string(q) + " n=" + std::to_string(n) + " f=" + std::to_string(f) + ": " +
                           e.what());
                }
            }
        }
        c.detail() << built << " constructed characters";
        all &= c.report();
    }

    {
        Criterion c(8);
        const std::vector<std::string> base{"verify-flip", "--q", "2..5", "--n",     "2..6",
                                            "--recipe",    "both", "--format", "json"};
        std::string outputs[2];
        int codes[2];
        const char* jobs[2] = {"1", "8"};
        for (int k = 0; k < 2; ++k) {
            auto args = base;
            args.insert(args.end(), {"--jobs", jobs[k]});
            std::ostringstream out, err;
            codes[k] = cli::run(args, out, err);
            outputs[k] = out.str();
        }
        c.check(codes[0] == 0 && codes[1] == 0, "verify-flip exited with " + std::to_string(codes[0]) + "/" +
                                                   std::to_string(codes[1]));
        c.check(!outputs[0].empty() && outputs[0] == outputs[1], "outputs differ between --jobs 1 and --jobs 8");
        c.detail() << "verify-flip json, " << outputs[0].size() << " bytes at --jobs 1 and 8";
        all &= c.report();
    }

    return all ? 0 : 1;
}
