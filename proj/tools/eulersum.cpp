// eulersum: arbitrary-precision Euler summation toolkit.
//
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 precision error.
// Errors go to stderr prefixed EULERSUM-E<code>:.

#include <chrono>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulersum/bernoulli.hpp"
#include "eulersum/em.hpp"
#include "eulersum/errors.hpp"
#include "eulersum/logapps.hpp"
#include "eulersum/recip.hpp"
#include "eulersum/replay.hpp"

using nlohmann::json;
using namespace eulersum;

namespace {

struct GlobalOpts {
    long digits = 18;
    long terms = -1;            // force term count when >= 0
    std::string epsilon;        // decimal string; empty = default
    std::string format = "text";
    bool euler_style = false;
    bool timing = false;

    MathContext ctx() const { return MathContext{digits, 10}; }
    EMOptions em_options() const {
        EMOptions o;
        o.force_terms = terms;
        if (!epsilon.empty()) o.epsilon = Real::of_string(epsilon, digits + 10);
        return o;
    }
};

struct OutputRecord {
    std::string command;
    std::map<std::string, std::string> inputs;
    std::string value;
    std::string bracket_lo;
    std::string bracket_hi;
    long terms_used = 0;
    std::string reason = "series_terminated";
    long elapsed_ms = 0;
    std::vector<ReplayLine> replay_lines; // replay only
    std::vector<std::string> extra_text;  // additional text-mode lines
};

void fill_bracket(OutputRecord& rec, const BracketedValue& v, const GlobalOpts& g) {
    rec.value = v.mid.to_string(g.digits);
    rec.bracket_lo = v.lo.to_string(g.digits + 2);
    rec.bracket_hi = v.hi.to_string(g.digits + 2);
    if (v.asymptotic_limit) rec.extra_text.push_back("note: asymptotic-limit (honest bracket)");
}

void fill_exact(OutputRecord& rec, const Rational& q, const GlobalOpts& g) {
    rec.value = to_string(q);
    Real r = Real::of_rational(q, g.digits);
    rec.bracket_lo = r.to_string(g.digits);
    rec.bracket_hi = rec.bracket_lo;
    rec.reason = "series_terminated";
}

void emit(const OutputRecord& rec, const GlobalOpts& g) {
    if (g.format == "json") {
        json j;
        j["command"] = rec.command;
        j["inputs"] = rec.inputs;
        j["value"] = rec.value;
        j["bracket_lo"] = rec.bracket_lo;
        j["bracket_hi"] = rec.bracket_hi;
        j["terms_used"] = rec.terms_used;
        j["reason"] = rec.reason;
        j["elapsed_ms"] = rec.elapsed_ms;
        if (!rec.replay_lines.empty()) {
            json lines = json::array();
            for (const auto& l : rec.replay_lines)
                lines.push_back({{"label", l.label},
                                 {"expected", l.expected},
                                 {"computed", l.computed},
                                 {"match", l.match},
                                 {"note", l.note}});
            j["lines"] = lines;
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (g.format == "csv") {
        if (!rec.replay_lines.empty()) {
            std::cout << "label,expected,computed,match\n";
            for (const auto& l : rec.replay_lines)
                std::cout << '"' << l.label << "\",\"" << l.expected << "\",\"" << l.computed
                          << "\"," << (l.match ? "true" : "false") << "\n";
            return;
        }
        std::cout << "command,value,bracket_lo,bracket_hi,terms_used,reason,elapsed_ms\n";
        std::cout << rec.command << ',' << rec.value << ',' << rec.bracket_lo << ','
                  << rec.bracket_hi << ',' << rec.terms_used << ',' << rec.reason << ','
                  << rec.elapsed_ms << "\n";
        return;
    }
    // text
    if (!rec.replay_lines.empty()) {
        bool all = true;
        for (const auto& l : rec.replay_lines) {
            std::cout << l.label << ": expected=" << l.expected << " computed=" << l.computed
                      << (l.match ? "  OK" : "  MISMATCH");
            if (!l.note.empty()) std::cout << "  [" << l.note << "]";
            std::cout << "\n";
            all = all && l.match;
        }
        std::cout << "replay " << rec.inputs.at("section") << ": " << (all ? "PASS" : "FAIL")
                  << "\n";
        return;
    }
    std::cout << rec.value << "\n";
    if (rec.bracket_lo != rec.bracket_hi)
        std::cout << "bracket [" << rec.bracket_lo << ", " << rec.bracket_hi << "]  terms="
                  << rec.terms_used << "  reason=" << rec.reason << "\n";
    for (const auto& line : rec.extra_text) std::cout << line << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler summation formula toolkit: exact Bernoulli machinery, "
                 "divergent-series bracketing, and its classical applications"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--digits", g.digits, "Target precision in significant decimal digits")
        ->capture_default_str();
    app.add_option("--terms", g.terms, "Force the number of correction terms");
    app.add_option("--epsilon", g.epsilon, "Truncation threshold (decimal string)");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--euler-style", g.euler_style, "Comma decimal separators in replay tables");
    app.add_flag("--timing", g.timing, "Report wall-clock elapsed_ms (off: always 0)");

    unsigned long arg_order = 0, arg_n = 0, arg_c = 0, arg_s = 0, arg_x = 0, arg_m = 0;
    unsigned long arg_anchor = 10;
    int arg_section = 0;
    std::string arg_base = "natural";

    auto* cmd_bernoulli = app.add_subcommand("bernoulli", "Modern signed Bernoulli number B_2k");
    cmd_bernoulli->add_option("order", arg_order, "Even order 2k")->required();

    auto* cmd_coeff = app.add_subcommand("coeff", "Raw summation-formula coefficient");
    cmd_coeff->add_option("n", arg_n, "Coefficient index, n >= 1")->required();

    auto* cmd_powersum = app.add_subcommand("powersum", "Exact sum of c-th powers 1^c+...+n^c");
    cmd_powersum->add_option("c", arg_c, "Exponent c >= 1")->required();
    cmd_powersum->add_option("n", arg_n, "Upper limit n >= 0")->required();

    auto* cmd_zeta = app.add_subcommand("zeta", "zeta(s) with rigorous bracket");
    cmd_zeta->add_option("s", arg_s, "Integer s >= 2")->required();
    cmd_zeta->add_option("--anchor", arg_anchor, "Anchor x0 for the constant determination")
        ->capture_default_str();

    auto* cmd_gamma = app.add_subcommand("gamma", "Euler-Mascheroni constant");
    cmd_gamma->add_option("--anchor", arg_anchor, "Anchor x0")->capture_default_str();

    auto* cmd_harmonic = app.add_subcommand("harmonic", "Harmonic partial sum H_n");
    cmd_harmonic->add_option("n", arg_n, "n >= 1")->required();

    auto* cmd_logfact = app.add_subcommand("logfact", "Sum of logarithms l1+...+lx");
    cmd_logfact->add_option("x", arg_x, "x >= 0")->required();
    cmd_logfact->add_option("--base", arg_base, "Logarithm base")
        ->check(CLI::IsMember({"natural", "common"}))
        ->capture_default_str();

    auto* cmd_fdigits = app.add_subcommand("factorial-digits", "Digit count and leading digits of x!");
    cmd_fdigits->add_option("x", arg_x, "x >= 1")->required();

    auto* cmd_fbracket =
        app.add_subcommand("factorial-bracket", "Smallest m with x! uniquely between S(x,m), S(x,m+1)");
    cmd_fbracket->add_option("x", arg_x, "x >= 2")->required();

    auto* cmd_binom = app.add_subcommand("binomial-middle", "Ratio 2^m to the middle binomial coefficient");
    cmd_binom->add_option("m", arg_m, "Even m >= 2")->required();

    auto* cmd_replay = app.add_subcommand("replay", "Recompute a worked table: 149, 159 or 162");
    cmd_replay->add_option("section", arg_section, "Section number")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "EULERSUM-E2: " << e.what() << "\n";
        return 2;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        MathContext ctx = g.ctx();
        OutputRecord rec;

        if (cmd_bernoulli->parsed()) {
            rec.command = "bernoulli";
            rec.inputs["order"] = std::to_string(arg_order);
            fill_exact(rec, bernoulli_number(arg_order), g);
        } else if (cmd_coeff->parsed()) {
            rec.command = "coeff";
            rec.inputs["n"] = std::to_string(arg_n);
            fill_exact(rec, em_coefficient(arg_n), g);
        } else if (cmd_powersum->parsed()) {
            rec.command = "powersum";
            rec.inputs["c"] = std::to_string(arg_c);
            rec.inputs["n"] = std::to_string(arg_n);
            fill_exact(rec, eval_power_sum(arg_c, Int(static_cast<long>(arg_n))), g);
        } else if (cmd_zeta->parsed()) {
            rec.command = "zeta";
            rec.inputs["s"] = std::to_string(arg_s);
            rec.inputs["anchor"] = std::to_string(arg_anchor);
            ZetaResult z = zeta_approx(arg_s, arg_anchor, ctx, g.em_options());
            fill_bracket(rec, z.value, g);
            rec.terms_used = z.terms_used;
            rec.reason = to_string(z.reason);
            if (z.exact_form)
                rec.extra_text.push_back("exact form: " + to_string(z.exact_form->first) +
                                         " * pi^" + std::to_string(z.exact_form->second));
        } else if (cmd_gamma->parsed()) {
            rec.command = "gamma";
            rec.inputs["anchor"] = std::to_string(arg_anchor);
            GammaConstant gc = euler_gamma(ctx, arg_anchor, g.em_options());
            fill_bracket(rec, gc.value, g);
            rec.terms_used = gc.terms_used;
            rec.reason = to_string(gc.reason);
        } else if (cmd_harmonic->parsed()) {
            rec.command = "harmonic";
            rec.inputs["n"] = std::to_string(arg_n);
            BracketedValue h = harmonic_sum(arg_n, ctx);
            fill_bracket(rec, h, g);
            rec.reason = h.width.is_zero() ? "series_terminated" : "smallest_term";
        } else if (cmd_logfact->parsed()) {
            rec.command = "logfact";
            rec.inputs["x"] = std::to_string(arg_x);
            rec.inputs["base"] = arg_base;
            LogSumResult r = log_factorial(
                arg_x, ctx, arg_base == "common" ? LogBase::common : LogBase::natural, g.terms);
            fill_bracket(rec, r.value, g);
            rec.terms_used = r.terms_used;
            rec.reason = to_string(r.reason);
        } else if (cmd_fdigits->parsed()) {
            rec.command = "factorial-digits";
            rec.inputs["x"] = std::to_string(arg_x);
            FactorialDigits d = factorial_digits(arg_x, ctx);
            rec.value = d.leading_digits;
            rec.bracket_lo = rec.bracket_hi = rec.value;
            rec.terms_used = d.digits_certified;
            rec.extra_text.push_back("digit_count: " + std::to_string(d.digit_count));
            rec.extra_text.push_back("digits_certified: " + std::to_string(d.digits_certified));
        } else if (cmd_fbracket->parsed()) {
            rec.command = "factorial-bracket";
            rec.inputs["x"] = std::to_string(arg_x);
            BracketReport r = factorial_bracket_search(arg_x, ctx);
            if (r.unique_value) {
                rec.value = r.unique_value->get_str();
                rec.extra_text.push_back("m: " + std::to_string(r.m_low));
            } else {
                rec.value = "no unique bracket in decreasing range";
            }
            rec.bracket_lo = rec.bracket_hi = rec.value;
            rec.terms_used = r.m_low;
            rec.reason = r.unique_value ? "smallest_term" : "budget_exhausted";
        } else if (cmd_binom->parsed()) {
            rec.command = "binomial-middle";
            rec.inputs["m"] = std::to_string(arg_m);
            CentralBinomialResult r = central_binomial_log_ratio(arg_m, ctx, g.em_options());
            fill_bracket(rec, r.ratio, g);
            rec.terms_used = r.terms_used;
            rec.reason = to_string(r.reason);
            rec.extra_text.push_back("log10(2^m/u) = " + r.log_ratio.mid.to_string(g.digits));
            rec.extra_text.push_back("probability = " + r.probability.mid.to_string(g.digits));
        } else if (cmd_replay->parsed()) {
            rec.command = "replay";
            rec.inputs["section"] = std::to_string(arg_section);
            ReplayReport rep = replay(arg_section, ctx);
            rec.replay_lines = rep.lines;
            if (!g.euler_style)
                for (auto& l : rec.replay_lines)
                    for (auto& c : l.computed)
                        if (c == ',') c = '.';
            rec.value = rep.all_match ? "PASS" : "FAIL";
            rec.bracket_lo = rec.bracket_hi = rec.value;
            rec.terms_used = static_cast<long>(rep.lines.size());
            rec.reason = "smallest_term";
        }

        if (g.timing) {
            const auto end = std::chrono::steady_clock::now();
            rec.elapsed_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
        }
        emit(rec, g);
        return 0;
    } catch (const precision_error& e) {
        std::cerr << "EULERSUM-E4: " << e.what() << "\n";
        return 4;
    } catch (const domain_error& e) {
        std::cerr << "EULERSUM-E3: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "EULERSUM-E2: " << e.what() << "\n";
        return 2;
    }
}
