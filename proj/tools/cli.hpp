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

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams so that tests can drive it in-process.

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tamesign/tamesign.hpp"

namespace tamesign::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitInternal = 2,
    kExitFalsified = 3,
};

enum class Format { Csv, Json };

// Largest residue group q^n - 1 the models are built for.
inline constexpr u64 kMaxModelOrder = (u64{1} << 24) - 1;

struct RunConfig {
    std::string command;
    std::vector<u64> qs;
    std::vector<u64> ns;
    std::string recipe = "PR";
    Format format = Format::Csv;
    unsigned jobs = 1;
};

using Json = nlohmann::ordered_json;

inline Json generator_metadata() {
    return Json{{"convention", "conway"},
                {"description",
                 "residue exponents a refer to a fixed generator of F_{q^f}^x, a root of the Conway polynomial; "
                 "signs, regularity and self-duality depend only on orbit data and not on this choice"}};
}

/// "lo..hi" (inclusive) or a single value.
inline std::vector<u64> parse_range(const std::string& text, const std::string& flag) {
    const auto fail = [&]() -> std::vector<u64> {
        throw UsageError(flag + " expects N or LO..HI, got '" + text + "'");
    };
    const auto number = [&](const std::string& part) -> u64 {
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
            fail();
        try {
            return std::stoull(part);
        } catch (const std::exception&) {
            fail();
        }
        return 0;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {number(text)};
    const u64 lo = number(text.substr(0, dots));
    const u64 hi = number(text.substr(dots + 2));
    if (lo > hi) throw UsageError(flag + " range " + text + " is empty");
    if (hi - lo > 4096) throw UsageError(flag + " range " + text + " is too wide");
    std::vector<u64> out;
    for (u64 v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

/// A single value must be a prime power; a range keeps its prime powers.
inline std::vector<u64> parse_q(const std::string& text) {
    const auto values = parse_range(text, "--q");
    if (values.size() == 1) {
        if (!arith::is_prime_power(values[0]))
            throw UsageError("q = " + std::to_string(values[0]) + " is not a prime power");
        return values;
    }
    std::vector<u64> out;
    std::copy_if(values.begin(), values.end(), std::back_inserter(out), [](u64 q) { return arith::is_prime_power(q); });
    if (out.empty()) throw UsageError("--q range " + text + " contains no prime power");
    return out;
}

inline std::vector<u64> parse_n(const std::string& text, u64 min_n) {
    auto values = parse_range(text, "--n");
    for (u64 n : values)
        if (n < min_n) throw UsageError("n must be at least " + std::to_string(min_n) + ", got " + std::to_string(n));
    return values;
}

inline void check_model_size(u64 q, u64 n) {
    u64 power = 1;
    for (u64 k = 0; k < n; ++k) {
        if (power > kMaxModelOrder / q + 1) power = kMaxModelOrder + 2;
        else power *= q;
    }
    if (power - 1 > kMaxModelOrder)
        throw UsageError("q^n - 1 exceeds " + std::to_string(kMaxModelOrder) + " for q = " + std::to_string(q) +
                         ", n = " + std::to_string(n));
}

inline Format parse_format(const std::string& text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    throw UsageError("unknown format '" + text + "' (expected csv or json)");
}

inline std::vector<Recipe> parse_recipes(const std::string& text) {
    if (text == "both") return {Recipe::PR, Recipe::SZ};
    return {parse_recipe(text)};
}

inline const char* bool_str(bool b) { return b ? "true" : "false"; }

inline std::string indicator_str(int fs) { return fs == 0 ? "0" : Sign::from_int(fs).str(); }

/// Comma-joined CSV line; no field contains a comma or a quote.
class CsvLine {
public:
    template <class T>
    CsvLine& operator<<(const T& value) {
        if (!first_) line_ << ',';
        first_ = false;
        line_ << value;
        return *this;
    }
    std::string str() const { return line_.str() + "\n"; }

private:
    std::ostringstream line_;
    bool first_ = true;
};

inline void write_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

// enumerate

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    for (u64 q : cfg.qs)
        for (u64 n : cfg.ns) check_model_size(q, n);

    Json rows = Json::array();
    std::string csv = "q,n,f,a,w,regular,selfdual,closed_form,oracle,raw_indicator_sum,group_order\n";
    std::size_t mismatches = 0;
    for (u64 q : cfg.qs) {
        for (u64 n : cfg.ns) {
            for (const auto& e : enumerate_level1_selfdual(q, n, cfg.jobs)) {
                if (e.closed_form != e.oracle) ++mismatches;
                csv += (CsvLine() << q << n << e.chi.f << e.chi.a << e.chi.w.str() << "true"
                                  << "true" << e.closed_form.str() << e.oracle.str() << e.raw_indicator_sum
                                  << e.group_order)
                           .str();
                rows.push_back(Json{{"q", q},
                                    {"n", n},
                                    {"f", e.chi.f},
                                    {"a", e.chi.a},
                                    {"w", e.chi.w.str()},
                                    {"regular", true},
                                    {"selfdual", true},
                                    {"closed_form", e.closed_form.str()},
                                    {"oracle", e.oracle.str()},
                                    {"raw_indicator_sum", e.raw_indicator_sum},
                                    {"group_order", e.group_order}});
            }
        }
    }
    if (cfg.format == Format::Csv) {
        out << csv;
    } else {
        write_json(out, Json{{"schema_version", kSchemaVersion},
                             {"command", "enumerate"},
                             {"generator", generator_metadata()},
                             {"parameters", {{"q", cfg.qs}, {"n", cfg.ns}}},
                             {"rows", rows},
                             {"summary", {{"rows", rows.size()}, {"closed_form_oracle_mismatches", mismatches}}}});
    }
    if (mismatches > 0) {
        err << "internal consistency failure: " << mismatches << " closed-form/oracle mismatches\n";
        return kExitInternal;
    }
    return kExitOk;
}

// verify-flip

inline Json flip_row_json(const FlipRow& r) {
    return Json{{"q", r.q},
                {"n", r.n},
                {"f", r.f},
                {"e", r.e},
                {"a", r.chi.a},
                {"w", r.chi.w.str()},
                {"recipe", recipe_name(r.recipe)},
                {"mu_w", r.mu.w.str()},
                {"parameter_sign", r.parameter_sign.str()},
                {"predicted_division", r.predicted_division.str()},
                {"division_closed", r.division_closed.str()},
                {"division_oracle", r.division_oracle.str()},
                {"raw_indicator_sum", r.raw_indicator_sum},
                {"group_order", r.group_order},
                {"consistent", r.consistent}};
}

struct RecipeTally {
    std::size_t rows = 0;
    std::size_t consistent = 0;
};

inline int cmd_verify_flip(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto recipes = parse_recipes(cfg.recipe);
    for (u64 q : cfg.qs)
        for (u64 n : cfg.ns) check_model_size(q, n);

    std::vector<FlipRow> rows;
    for (u64 q : cfg.qs) {
        for (u64 n : cfg.ns) {
            const auto entries = enumerate_level1_selfdual(q, n, cfg.jobs);
            for (Recipe recipe : recipes) {
                auto report = flip_report_from_entries(q, n, entries, recipe);
                rows.insert(rows.end(), report.rows.begin(), report.rows.end());
            }
        }
    }

    std::vector<RecipeTally> tally(recipes.size());
    std::size_t mismatches = 0;
    std::vector<const FlipRow*> witnesses;
    for (const auto& r : rows) {
        const std::size_t k = std::find(recipes.begin(), recipes.end(), r.recipe) - recipes.begin();
        ++tally[k].rows;
        if (r.consistent) ++tally[k].consistent;
        if (r.division_closed != r.division_oracle) ++mismatches;
        if (r.recipe == Recipe::PR && !r.consistent) witnesses.push_back(&r);
    }

    if (cfg.format == Format::Csv) {
        out << "q,n,f,e,a,w,recipe,mu_w,parameter_sign,predicted_division,division_closed,division_oracle,"
               "raw_indicator_sum,group_order,consistent\n";
        for (const auto& r : rows) {
            out << (CsvLine() << r.q << r.n << r.f << r.e << r.chi.a << r.chi.w.str() << recipe_name(r.recipe)
                              << r.mu.w.str() << r.parameter_sign.str() << r.predicted_division.str()
                              << r.division_closed.str() << r.division_oracle.str() << r.raw_indicator_sum
                              << r.group_order << bool_str(r.consistent))
                       .str();
        }
        for (std::size_t k = 0; k < recipes.size(); ++k) {
            out << "# summary recipe=" << recipe_name(recipes[k]) << " rows=" << tally[k].rows
                << " consistent=" << tally[k].consistent << " inconsistent=" << tally[k].rows - tally[k].consistent
                << "\n";
        }
    } else {
        Json json_rows = Json::array();
        for (const auto& r : rows) json_rows.push_back(flip_row_json(r));
        Json summary = Json::array();
        for (std::size_t k = 0; k < recipes.size(); ++k) {
            summary.push_back(Json{{"recipe", recipe_name(recipes[k])},
                                   {"rows", tally[k].rows},
                                   {"consistent", tally[k].consistent},
                                   {"inconsistent", tally[k].rows - tally[k].consistent}});
        }
        write_json(out, Json{{"schema_version", kSchemaVersion},
                             {"command", "verify-flip"},
                             {"generator", generator_metadata()},
                             {"parameters", {{"q", cfg.qs}, {"n", cfg.ns}, {"recipe", cfg.recipe}}},
                             {"rows", json_rows},
                             {"summary", summary}});
    }

    if (mismatches > 0) {
        err << "internal consistency failure: " << mismatches << " closed-form/oracle mismatches\n";
        return kExitInternal;
    }
    for (const FlipRow* r : witnesses) {
        err << "falsification witness (PR): q=" << r->q << " n=" << r->n << " f=" << r->f << " a=" << r->chi.a
            << " w=" << r->chi.w.str() << " division sign " << r->division_oracle.str() << " (raw sum "
            << r->raw_indicator_sum << " over |G|=" << r->group_order << ") vs predicted "
            << r->predicted_division.str() << "\n";
    }
    return witnesses.empty() ? kExitOk : kExitFalsified;
}

// sign

struct SignArgs {
    std::string side = "division";
    u64 q = 0;
    u64 n = 0;
    u64 f = 0;
    u64 a = 0;
    std::string w = "+1";
    bool has_n = false;
};

inline int cmd_sign(const SignArgs& args, Format format, std::ostream& out, std::ostream& err) {
    if (args.side != "division" && args.side != "weil")
        throw UsageError("unknown side '" + args.side + "' (expected division or weil)");
    const bool division = args.side == "division";
    if (division && !args.has_n) throw UsageError("--n is required for --side division");
    if (!division && args.has_n) throw UsageError("--n applies to --side division only");

    const TameCharacter chi{args.q, args.f, args.a, Sign::parse(args.w)};
    validate_tame(chi);
    if (division && (args.n == 0 || args.n % args.f != 0)) throw UsageError("f must divide n");
    check_model_size(args.q, division ? args.n : args.f);

    std::string status = "not regular", closed, oracle, det_x, det_t, degree, raw, order;
    int code = kExitOk;
    if (is_regular(chi)) {
        const bool selfdual = is_selfdual_division(chi);
        status = selfdual ? "selfdual" : "not selfdual";
        const GroupModel model = division ? division_model(args.n, chi) : weil_model(chi);
        const FsSum sum = fs_indicator_sum(model.group, model.psi, 1);
        oracle = indicator_str(sum.indicator);
        raw = std::to_string(sum.raw);
        order = std::to_string(model.group.order());
        if (selfdual) {
            const Sign c = division ? sign_division_closed_form(chi) : sign_weil_closed_form(chi);
            closed = c.str();
            if (c.value() != sum.indicator) code = kExitInternal;
        } else if (sum.indicator != 0) {
            code = kExitInternal;
        }
        const auto mats = matrix_model(model.group, model.psi);
        det_x = mats.x.det_root().str();
        det_t = mats.t.det_root().str();
        degree = std::to_string(character_field(model.group, model.psi).degree);
    }

    const std::string n_text = division ? std::to_string(args.n) : "";
    if (format == Format::Csv) {
        out << "side,q,n,f,a,w,status,closed_form,oracle,raw_indicator_sum,group_order,det_x,det_t,field_degree\n";
        out << (CsvLine() << args.side << args.q << n_text << args.f << args.a << chi.w.str() << status << closed
                          << oracle << raw << order << det_x << det_t << degree)
                   .str();
    } else {
        const auto opt = [](const std::string& s) { return s.empty() ? Json(nullptr) : Json(s); };
        const auto opt_int = [](const std::string& s) { return s.empty() ? Json(nullptr) : Json(std::stoll(s)); };
        write_json(out, Json{{"schema_version", kSchemaVersion},
                             {"command", "sign"},
                             {"generator", generator_metadata()},
                             {"side", args.side},
                             {"q", args.q},
                             {"n", division ? Json(args.n) : Json(nullptr)},
                             {"f", args.f},
                             {"a", args.a},
                             {"w", chi.w.str()},
                             {"status", status},
                             {"closed_form", opt(closed)},
                             {"oracle", opt(oracle)},
                             {"raw_indicator_sum", opt_int(raw)},
                             {"group_order", opt_int(order)},
                             {"det_x", opt(det_x)},
                             {"det_t", opt(det_t)},
                             {"field_degree", opt_int(degree)}});
    }
    if (code == kExitInternal) err << "internal consistency failure: closed form and oracle disagree\n";
    return code;
}

// product-check

inline int cmd_product_check(const std::vector<std::string>& texts, Format format, std::ostream& out) {
    std::vector<Sign> signs;
    for (const auto& t : texts) signs.push_back(Sign::parse(t));
    const bool ok = product_check(signs);
    const std::string product = ok ? "+1" : "-1";
    const std::string verdict = ok ? "OK" : "violation";
    if (format == Format::Csv) {
        out << "count,product,verdict\n" << (CsvLine() << signs.size() << product << verdict).str();
    } else {
        Json list = Json::array();
        for (Sign s : signs) list.push_back(s.str());
        write_json(out, Json{{"schema_version", kSchemaVersion},
                             {"command", "product-check"},
                             {"signs", list},
                             {"product", product},
                             {"verdict", verdict}});
    }
    return kExitOk;
}

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orthogonal/symplectic signs of level-one representations of D^x and their parameters",
                 "tamesign"};
    app.require_subcommand(1);

    std::string q_text, n_text, format_text = "csv", recipe_text = "PR";
    unsigned jobs = default_jobs();
    SignArgs sign_args;
    std::vector<std::string> sign_texts;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "csv or json")->capture_default_str();
        sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* enumerate = app.add_subcommand("enumerate", "list regular self-dual level-one characters");
    enumerate->add_option("--q", q_text, "residue field size, N or LO..HI")->required();
    enumerate->add_option("--n", n_text, "index of D, N or LO..HI")->required();
    add_common(enumerate);

    auto* flip = app.add_subcommand("verify-flip", "compare division signs with their attached parameters");
    flip->add_option("--q", q_text, "residue field size, N or LO..HI")->required();
    flip->add_option("--n", n_text, "index of D, N or LO..HI")->required();
    flip->add_option("--recipe", recipe_text, "PR, SZ or both")->capture_default_str();
    add_common(flip);

    auto* sign = app.add_subcommand("sign", "sign of a single character");
    sign->add_option("--side", sign_args.side, "division or weil")->capture_default_str();
    sign->add_option("--q", sign_args.q)->required();
    auto* n_opt = sign->add_option("--n", sign_args.n);
    sign->add_option("--f", sign_args.f)->required();
    sign->add_option("--a", sign_args.a)->required();
    sign->add_option("--w", sign_args.w, "+1 or -1")->capture_default_str();
    add_common(sign);

    auto* product = app.add_subcommand("product-check", "check that local signs multiply to +1");
    product->add_option("signs", sign_texts, "signs, each +1 or -1");
    add_common(product);

    std::vector<const char*> argv{"tamesign"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        RunConfig cfg;
        cfg.format = parse_format(format_text);
        cfg.jobs = jobs;
        if (enumerate->parsed() || flip->parsed()) {
            cfg.qs = parse_q(q_text);
            cfg.ns = parse_n(n_text, flip->parsed() ? 2 : 1);
            cfg.recipe = recipe_text;
        }
        if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
        if (flip->parsed()) return cmd_verify_flip(cfg, out, err);
        if (sign->parsed()) {
            sign_args.has_n = n_opt->count() > 0;
            return cmd_sign(sign_args, cfg.format, out, err);
        }
        return cmd_product_check(sign_texts, cfg.format, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace tamesign::cli
