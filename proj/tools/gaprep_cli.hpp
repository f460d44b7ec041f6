#pragma once

// Command-line front end. Kept in a header so the tests can drive it with
// in-memory streams.
//
//   gaprep runs                        [FILE]
//   gaprep repeats  --alpha P/Q        [FILE]
//   gaprep subreps  --delta P/Q        [FILE]
//   gaprep factorize                   [FILE]
//   gaprep census   --alpha P/Q [--delta P/Q] [FILE | --random-length N ...]
//   gaprep verify   [FILE | --max-len L | --random-count C --random-length N]
//
// Global flags (before or after the subcommand): --text, --format tsv|json.
// Exit codes: 0 success, 2 usage error, 1 internal logic fault or a verify
// counterexample.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaprep/census.hpp"
#include "gaprep/core.hpp"
#include "gaprep/factorization.hpp"
#include "gaprep/gapped.hpp"
#include "gaprep/runs.hpp"
#include "gaprep/subreps.hpp"
#include "gaprep/verify.hpp"

namespace gaprep::cli {

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Tsv, Json };

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in, bool strip_newline) {
    std::string data;
    if (path.empty() || path == "-") {
        data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw usage_error("cannot open input file '" + path + "'");
        data.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    if (strip_newline && !data.empty() && data.back() == '\n') {
        data.pop_back();
        if (!data.empty() && data.back() == '\r') data.pop_back();
    }
    return data;
}

inline Rational parse_rational(const std::string& text, const char* what) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw usage_error(std::string(what) + " must be an exact rational P/Q or integer, got '" + text + "'");
    }
}

inline std::string exponent_text(std::size_t len, std::size_t period) {
    return std::to_string(len) + "/" + std::to_string(period);
}

inline std::string fixed(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << x;
    return os.str();
}

// Accumulates records; TSV streams lines, JSON collects arrays per key.
class Emitter {
public:
    Emitter(Format format, std::ostream& out) : format_(format), out_(out) {}

    void record(const std::string& key, const std::string& tag, const std::vector<std::string>& fields,
                nlohmann::ordered_json object) {
        if (format_ == Format::Tsv) {
            out_ << tag;
            for (const auto& f : fields) out_ << '\t' << f;
            out_ << '\n';
        } else {
            json_[key].push_back(std::move(object));
        }
    }

    void ensure_key(const std::string& key) {
        if (format_ == Format::Json && !json_.contains(key)) json_[key] = nlohmann::ordered_json::array();
    }

    void finish() {
        if (format_ == Format::Json) out_ << json_.dump(2) << '\n';
    }

private:
    Format format_;
    std::ostream& out_;
    nlohmann::ordered_json json_ = nlohmann::ordered_json::object();
};

inline void emit_runs(Emitter& em, const std::vector<Run>& runs) {
    em.ensure_key("runs");
    for (const Run& r : runs)
        em.record("runs", "RUN",
                  {std::to_string(r.start), std::to_string(r.end), std::to_string(r.period),
                   exponent_text(r.length(), r.period)},
                  {{"start", r.start}, {"end", r.end}, {"period", r.period},
                   {"exponent", exponent_text(r.length(), r.period)}});
}

inline void emit_repeats(Emitter& em, const Word& w, const std::vector<GappedRepeat>& repeats) {
    em.ensure_key("repeats");
    for (const GappedRepeat& g : repeats) {
        const std::string cls(to_string(classify(w, g)));
        em.record("repeats", "GREP",
                  {std::to_string(g.left_start), std::to_string(g.left_end()), std::to_string(g.right_start()),
                   std::to_string(g.right_end()), std::to_string(g.period), std::to_string(g.copy_len), cls},
                  {{"lbeg", g.left_start}, {"lend", g.left_end()}, {"rbeg", g.right_start()},
                   {"rend", g.right_end()}, {"period", g.period}, {"copylen", g.copy_len}, {"class", cls}});
    }
}

inline void emit_subreps(Emitter& em, const std::vector<Subrepetition>& subreps) {
    em.ensure_key("subreps");
    for (const Subrepetition& s : subreps)
        em.record("subreps", "SUBREP",
                  {std::to_string(s.start), std::to_string(s.end), std::to_string(s.period),
                   exponent_text(s.length(), s.period)},
                  {{"beg", s.start}, {"end", s.end}, {"period", s.period},
                   {"exponent", exponent_text(s.length(), s.period)}});
}

inline void emit_factors(Emitter& em, const std::vector<Factor>& factors) {
    em.ensure_key("factors");
    for (const Factor& f : factors) {
        nlohmann::ordered_json obj{{"index", f.index}, {"start", f.start}, {"len", f.len}};
        obj["delta"] = f.delta ? nlohmann::ordered_json(*f.delta) : nlohmann::ordered_json(nullptr);
        em.record("factors", "FACTOR",
                  {std::to_string(f.index), std::to_string(f.start), std::to_string(f.len),
                   f.delta ? std::to_string(*f.delta) : std::string("-")},
                  std::move(obj));
    }
}

inline void emit_census(Emitter& em, const std::optional<std::uint64_t>& seed, const CensusReport& r) {
    em.ensure_key("census");
    const std::string delta = r.delta ? r.delta->to_string() : "-";
    const std::string subreps = r.subrep_count ? std::to_string(*r.subrep_count) : "-";
    nlohmann::ordered_json obj{{"seed", seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr)},
                               {"n", r.n},
                               {"alphabetSize", r.alphabet_size},
                               {"alpha", r.alpha.to_string()},
                               {"delta", r.delta ? nlohmann::ordered_json(delta) : nlohmann::ordered_json(nullptr)},
                               {"runCount", r.run_count},
                               {"sumExponents", to_string(r.sum_exponents)},
                               {"repeatCount", r.repeat_count},
                               {"countsByClass",
                                {{"Periodic", r.class_count(RepeatClass::Periodic)},
                                 {"PrefixSemiperiodic", r.class_count(RepeatClass::PrefixSemiperiodic)},
                                 {"SuffixSemiperiodic", r.class_count(RepeatClass::SuffixSemiperiodic)},
                                 {"Ordinary", r.class_count(RepeatClass::Ordinary)}}},
                               {"subrepCount", r.subrep_count ? nlohmann::ordered_json(*r.subrep_count)
                                                              : nlohmann::ordered_json(nullptr)},
                               {"ratioAlphaN", r.ratio_alpha_n()},
                               {"ratioAlpha2N", r.ratio_alpha2_n()}};
    em.record("census", "CENSUS",
              {seed ? std::to_string(*seed) : std::string("-"), std::to_string(r.n), std::to_string(r.alphabet_size),
               r.alpha.to_string(), delta, std::to_string(r.run_count), to_string(r.sum_exponents),
               std::to_string(r.repeat_count), std::to_string(r.class_count(RepeatClass::Periodic)),
               std::to_string(r.class_count(RepeatClass::PrefixSemiperiodic)),
               std::to_string(r.class_count(RepeatClass::SuffixSemiperiodic)),
               std::to_string(r.class_count(RepeatClass::Ordinary)), subreps, fixed(r.ratio_alpha_n()),
               fixed(r.ratio_alpha2_n())},
              std::move(obj));
}

}  // namespace detail

/// Runs one command. `args` excludes the program name. `color` enables ANSI
/// decoration of the verify verdict; it is forced off when NO_COLOR is set.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
                   bool color = false) {
    if (std::getenv("NO_COLOR") != nullptr) color = false;

    CLI::App app{"Maximal repetitions, gapped repeats and subrepetitions in words", "gaprep"};
    app.require_subcommand(1);
    app.fallthrough();

    bool text = false;
    std::string format_name = "tsv";
    app.add_flag("--text", text, "Strip one trailing newline from the input");
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"tsv", "json"}));

    std::string input;
    auto add_input = [&](CLI::App* sub) { sub->add_option("file", input, "Input file (default: standard input)"); };

    auto* runs_cmd = app.add_subcommand("runs", "Maximal repetitions");
    add_input(runs_cmd);

    std::string alpha_text, delta_text;
    auto* repeats_cmd = app.add_subcommand("repeats", "Maximal alpha-gapped repeats");
    repeats_cmd->add_option("--alpha", alpha_text, "Gap ratio bound alpha > 1 as P/Q")->required();
    add_input(repeats_cmd);

    auto* subreps_cmd = app.add_subcommand("subreps", "Maximal delta-subrepetitions");
    subreps_cmd->add_option("--delta", delta_text, "Exponent excess 0 < delta < 1 as P/Q")->required();
    add_input(subreps_cmd);

    auto* factorize_cmd = app.add_subcommand("factorize", "Non-overlapping s-factorization");
    add_input(factorize_cmd);

    std::size_t random_length = 0;
    unsigned sigma = 2;
    std::uint64_t seed = 1;
    std::size_t count = 1;
    unsigned threads = 1;
    auto* census_cmd = app.add_subcommand("census", "Counts and bound ratios for a word or random words");
    census_cmd->add_option("--alpha", alpha_text, "Gap ratio bound alpha > 1 as P/Q")->required();
    census_cmd->add_option("--delta", delta_text, "Also count delta-subrepetitions");
    auto* census_random =
        census_cmd->add_option("--random-length", random_length, "Generate random words of this length");
    census_cmd->add_option("--sigma", sigma, "Alphabet size of random words")->check(CLI::Range(2u, 26u));
    census_cmd->add_option("--seed", seed, "First seed");
    census_cmd->add_option("--count", count, "Number of consecutive seeds");
    census_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
    add_input(census_cmd);

    std::size_t max_len = 0;
    std::size_t random_count = 0;
    std::vector<std::string> verify_alphas, verify_deltas;
    auto* verify_cmd = app.add_subcommand("verify", "Compare the fast algorithms with brute force");
    auto* verify_exhaustive = verify_cmd->add_option("--max-len", max_len, "Check every word up to this length");
    verify_cmd->add_option("--random-count", random_count, "Check this many random words");
    verify_cmd->add_option("--random-length", random_length, "Length of random words");
    verify_cmd->add_option("--sigma", sigma, "Alphabet size")->check(CLI::Range(2u, 26u));
    verify_cmd->add_option("--seed", seed, "First seed for random words");
    verify_cmd->add_option("--alpha", verify_alphas, "Alpha values (default 3/2 2 3 4)")->allow_extra_args(false);
    verify_cmd->add_option("--delta", verify_deltas, "Delta values (default 1/4 1/3 1/2)")->allow_extra_args(false);
    add_input(verify_cmd);

    std::vector<std::string> argv_store{"gaprep"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "gaprep: " << e.what() << "\n";
        return 2;
    }

    const Format format = format_name == "json" ? Format::Json : Format::Tsv;
    try {
        detail::Emitter em(format, out);
        auto load_word = [&] { return Word(detail::read_input(input, in, text)); };

        if (runs_cmd->parsed()) {
            detail::emit_runs(em, find_runs(load_word()));
        } else if (repeats_cmd->parsed()) {
            const Rational alpha = detail::parse_rational(alpha_text, "--alpha");
            require_alpha(alpha);
            const Word w = load_word();
            detail::emit_repeats(em, w, find_maximal_gapped_repeats(w, alpha).flatten());
        } else if (subreps_cmd->parsed()) {
            const Rational delta = detail::parse_rational(delta_text, "--delta");
            require_delta(delta);
            detail::emit_subreps(em, find_subrepetitions(load_word(), delta));
        } else if (factorize_cmd->parsed()) {
            detail::emit_factors(em, s_factorize(load_word()));
        } else if (census_cmd->parsed()) {
            const Rational alpha = detail::parse_rational(alpha_text, "--alpha");
            require_alpha(alpha);
            std::optional<Rational> delta;
            if (!delta_text.empty()) {
                delta = detail::parse_rational(delta_text, "--delta");
                require_delta(*delta);
            }
            if (census_random->count() == 0) {
                detail::emit_census(em, std::nullopt, census(load_word(), alpha, delta));
            } else {
                // Each worker fills disjoint slots; output follows seed order.
                std::vector<CensusReport> reports(count);
                std::vector<std::exception_ptr> failures(count);
                auto work = [&](std::size_t worker) {
                    for (std::size_t j = worker; j < count; j += threads) {
                        try {
                            reports[j] = census(random_word(random_length, sigma, seed + j), alpha, delta);
                        } catch (...) {
                            failures[j] = std::current_exception();
                        }
                    }
                };
                std::vector<std::thread> pool;
                for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
                work(0);
                for (auto& th : pool) th.join();
                for (const auto& f : failures)
                    if (f) std::rethrow_exception(f);
                for (std::size_t j = 0; j < count; ++j) detail::emit_census(em, seed + j, reports[j]);
            }
        } else if (verify_cmd->parsed()) {
            VerifyPlan plan;
            if (!verify_alphas.empty()) {
                plan.alphas.clear();
                for (const auto& a : verify_alphas) {
                    plan.alphas.push_back(detail::parse_rational(a, "--alpha"));
                    require_alpha(plan.alphas.back());
                }
            }
            if (!verify_deltas.empty()) {
                plan.deltas.clear();
                for (const auto& d : verify_deltas) {
                    plan.deltas.push_back(detail::parse_rational(d, "--delta"));
                    require_delta(plan.deltas.back());
                }
            }
            std::size_t checked = 0;
            std::optional<std::pair<std::string, std::string>> failure;
            auto check = [&](const Word& w) {
                ++checked;
                if (auto what = verify_word(w, plan)) {
                    failure = std::pair{*what, w.str()};
                    return false;
                }
                return true;
            };
            if (verify_exhaustive->count() > 0) {
                for_each_word(max_len, sigma, check);
            } else if (random_count > 0) {
                for (std::size_t j = 0; j < random_count && check(random_word(random_length, sigma, seed + j)); ++j) {
                }
            } else {
                check(load_word());
            }
            const char* green = color ? "\x1b[32m" : "";
            const char* red = color ? "\x1b[31m" : "";
            const char* reset = color ? "\x1b[0m" : "";
            if (format == Format::Json) {
                nlohmann::ordered_json obj{{"checked", checked}, {"ok", !failure.has_value()}};
                if (failure) obj["counterexample"] = {{"check", failure->first}, {"word", failure->second}};
                out << nlohmann::ordered_json{{"verify", obj}}.dump(2) << '\n';
            } else if (failure) {
                out << red << "COUNTEREXAMPLE" << reset << '\t' << failure->first << '\t' << failure->second << '\n';
            } else {
                out << green << "VERIFIED" << reset << '\t' << checked << '\n';
            }
            return failure ? 1 : 0;
        }
        em.finish();
    } catch (const usage_error& e) {
        err << "gaprep: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "gaprep: " << e.what() << "\n";
        return 2;
    } catch (const logic_fault& e) {
        err << "gaprep: internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace gaprep::cli
