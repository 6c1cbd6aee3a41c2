#pragma once

// Command-line front end. Exit codes:
//   0  property holds (up to the bound) / suite consistent
//   1  refuted / contradiction
//   2  usage, parse, structural or precondition error
//   3  budget or size cap exceeded, or an inconclusive sampled search

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringlab/dsl.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/radicals.hpp"
#include "ringlab/report.hpp"
#include "ringlab/table_io.hpp"
#include "ringlab/verifier.hpp"

namespace ringlab {

enum ExitCode : int { kExitHolds = 0, kExitRefuted = 1, kExitUsage = 2, kExitBudget = 3 };

inline int exit_code_for(const PropertyVerdict& v) {
    if (v.kind == PropertyVerdict::Kind::Inconclusive) return kExitBudget;
    return v.refuted() ? kExitRefuted : kExitHolds;
}

/// Reads a corpus file: one expression per line, '#' starts a comment.
inline std::vector<std::string> read_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open corpus file '" + path + "'");
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(b, e - b + 1));
    }
    return out;
}

namespace detail {

struct CliState {
    std::string format = "text";
    std::string property, from, to, expr, out_path, corpus_path, bivariate;
    std::size_t max_deg = 2;
    std::optional<std::size_t> laurent;
    std::uint64_t budget = kDefaultSearchBudget;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::size_t max_size = kDefaultSearchRingCap;
    std::size_t prime_cap = kDefaultPrimeOracleCap;
    bool stretch = false;
    bool verbose = false;
};

inline std::pair<std::size_t, std::size_t> parse_bivariate(const std::string& s) {
    const auto comma = s.find(',');
    std::size_t dx = 0, dy = 0;
    try {
        if (comma == std::string::npos) throw std::invalid_argument(s);
        std::size_t used = 0;
        dx = std::stoul(s.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(s);
        const std::string rest = s.substr(comma + 1);
        dy = std::stoul(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
        throw PreconditionError("--bivariate expects Dx,Dy");
    }
    return {dx, dy};
}

inline Property require_property(const std::string& name) {
    const auto p = parse_property(name);
    if (!p) throw PreconditionError("unknown property '" + name + "'");
    return *p;
}

class Command {
public:
    Command(const CliState& st, std::string echo, std::ostream& out) : st_(st), echo_(std::move(echo)), out_(out) {}

    bool json() const { return st_.format == "json"; }

    Json header() const { return {{"schema", kReportSchema}, {"version", kToolVersion}, {"command", echo_}}; }

    void emit(Json doc, const std::string& text) const {
        if (json()) out_ << doc.dump(2) << "\n";
        else out_ << text;
    }

    int error(const std::string& kind, const std::string& message, int code, std::ostream& err,
              std::optional<std::size_t> offset = std::nullopt) const {
        if (json()) {
            Json doc = header();
            doc["error"] = {{"kind", kind}, {"message", message}};
            if (offset) doc["error"]["offset"] = *offset;
            doc["exit_code"] = code;
            out_ << doc.dump(2) << "\n";
        }
        err << "error: " << message << "\n";
        return code;
    }

    CheckOptions options() const {
        CheckOptions o;
        o.search.budget = st_.budget;
        o.search.jobs = st_.jobs;
        o.search.samples = st_.samples;
        o.search.seed = st_.seed;
        o.max_ring_size = st_.max_size;
        return o;
    }

    int check() const {
        const Property p = require_property(st_.property);
        const RingExpr e = parse_expr(st_.expr);
        const std::string name = print_expr(e);
        const RingRef r = evaluate(e);
        const RingAnalysis a = analyze(r);
        detail::Stopwatch clock;
        PropertyVerdict v;
        if (!st_.bivariate.empty()) {
            if (p != Property::Almost) throw PreconditionError("--bivariate applies to the almost property only");
            const auto [dx, dy] = parse_bivariate(st_.bivariate);
            v = check_almost_bivariate(a, dx, dy, options());
        } else if (st_.laurent) {
            if (p != Property::Almost) throw PreconditionError("--laurent applies to the almost property only");
            v = check_almost_laurent(a, *st_.laurent, options());
        } else {
            v = ringlab::check(a, p, st_.max_deg, options());
        }
        const int code = exit_code_for(v);
        Json doc = header();
        doc["ring"] = ring_summary_json(name, *r);
        doc["verdict"] = verdict_json(*r, v);
        if (v.witness) doc["verdict"]["witness"]["revalidated"] = validate_witness(*r, *v.witness);
        if (v.bivariate_witness)
            doc["verdict"]["bivariate_witness"]["revalidated"] = validate_witness(*r, *v.bivariate_witness);
        doc["exit_code"] = code;
        doc["elapsed_ms"] = clock.ms();
        emit(doc, ring_line(name, *r) + verdict_text(*r, v));
        return code;
    }

    int radical() const {
        const RingExpr e = parse_expr(st_.expr);
        const std::string name = print_expr(e);
        const RingRef r = evaluate(e);
        detail::Stopwatch clock;
        const RadicalReport rep = radical_report(*r, st_.prime_cap);
        const int code = rep.oracles_agree() && rep.chain_holds() ? kExitHolds : kExitRefuted;
        Json doc = header();
        doc["ring"] = ring_summary_json(name, *r);
        doc["radicals"] = radical_json(*r, rep);
        doc["exit_code"] = code;
        doc["elapsed_ms"] = clock.ms();
        emit(doc, ring_line(name, *r) + radical_text(*r, rep));
        return code;
    }

    int witness() const {
        const Property from = require_property(st_.from), to = require_property(st_.to);
        const RingExpr e = parse_expr(st_.expr);
        const std::string name = print_expr(e);
        const RingRef r = evaluate(e);
        const RingAnalysis a = analyze(r);
        detail::Stopwatch clock;
        const auto w = find_separating_witness(a, st_.max_deg, from, to, options());
        const int code = w ? kExitRefuted : kExitHolds;
        Json doc = header();
        doc["ring"] = ring_summary_json(name, *r);
        doc["from"] = property_name(from);
        doc["to"] = property_name(to);
        doc["max_deg"] = st_.max_deg;
        doc["witness"] = w ? witness_json(*r, *w) : Json(nullptr);
        if (w) doc["witness"]["revalidated"] = validate_witness(*r, *w);
        doc["exit_code"] = code;
        doc["elapsed_ms"] = clock.ms();
        std::string text = ring_line(name, *r);
        if (w) {
            PropertyVerdict shown;
            shown.property = to;
            shown.kind = PropertyVerdict::Kind::Refuted;
            shown.bounds = {Bounds::Shape::Univariate, st_.max_deg, 0, 0};
            shown.witness = w;
            text += std::string("separating witness: refutes ") + std::string(property_name(to)) + ", not " +
                    std::string(property_name(from)) + "\n" + verdict_text(*r, shown);
        } else {
            text += "no separating witness up to degree " + std::to_string(st_.max_deg) + "\n";
        }
        emit(doc, text);
        return code;
    }

    int verify() const {
        SuiteConfig cfg;
        if (!st_.corpus_path.empty()) cfg.corpus = read_corpus_file(st_.corpus_path);
        cfg.max_deg = st_.max_deg;
        cfg.budget = st_.budget;
        cfg.jobs = st_.jobs;
        cfg.prime_oracle_cap = st_.prime_cap;
        cfg.max_search_size = st_.max_size;
        cfg.stretch = st_.stretch;
        if (!st_.bivariate.empty()) std::tie(cfg.bivariate_dx, cfg.bivariate_dy) = parse_bivariate(st_.bivariate);
        if (st_.laurent) cfg.laurent_window = *st_.laurent;
        const SuiteReport rep = run_suite(cfg);
        const int code = rep.passed() ? kExitHolds : kExitRefuted;
        Json doc = header();
        doc["suite"] = suite_json(rep);
        doc["exit_code"] = code;
        emit(doc, suite_text(rep, st_.verbose));
        return code;
    }

    int export_table() const {
        const RingExpr e = parse_expr(st_.expr);
        const RingRef r = evaluate(e);
        const std::string doc = export_ring(*r);
        if (st_.out_path.empty()) {
            out_ << doc;
            return kExitHolds;
        }
        std::ofstream f(st_.out_path, std::ios::binary);
        if (!f) throw StructuralError("cannot write '" + st_.out_path + "'");
        f << doc;
        Json summary = header();
        summary["ring"] = ring_summary_json(print_expr(e), *r);
        summary["out"] = st_.out_path;
        summary["exit_code"] = 0;
        emit(summary, ring_line(print_expr(e), *r) + "written to " + st_.out_path + "\n");
        return kExitHolds;
    }

    int describe() const {
        const RingExpr e = parse_expr(st_.expr);
        const std::string name = print_expr(e);
        const RingRef r = evaluate(e);
        const RingTable& t = *r;
        Json elems = Json::array();
        std::string text = ring_line(name, t) + "zero = " + std::to_string(t.zero()) + ", one = " +
                           std::to_string(t.one()) + "\nindex  label  flags\n";
        for (Elem x = 0; x < t.size(); ++x) {
            std::vector<std::string> flags;
            if (is_unit(t, x)) flags.push_back("unit");
            if (is_idempotent(t, x)) flags.push_back("idempotent");
            if (is_central(t, x)) flags.push_back("central");
            if (is_nilpotent_element(t, x)) flags.push_back("nilpotent");
            elems.push_back({{"index", x}, {"label", t.label(x)}, {"flags", flags}});
            std::string line = std::to_string(x);
            line.resize(std::max<std::size_t>(line.size(), 5), ' ');
            line += "  " + t.label(x);
            std::string joined;
            for (const auto& f : flags) joined += (joined.empty() ? "" : ",") + f;
            text += line + "  " + joined + "\n";
        }
        Json doc = header();
        doc["ring"] = ring_summary_json(name, t);
        doc["zero"] = t.zero();
        doc["one"] = t.one();
        doc["elements"] = elems;
        doc["exit_code"] = 0;
        emit(doc, text);
        return kExitHolds;
    }

private:
    static std::string ring_line(const std::string& name, const RingTable& r) {
        return "ring: " + name + "  size " + std::to_string(r.size()) + "  digest " + table_digest(r) + "\n";
    }

    const CliState& st_;
    std::string echo_;
    std::ostream& out_;
};

}  // namespace detail

inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    detail::CliState st;
    CLI::App app{"ringlab: finite rings, radicals and Armendariz-type properties", "ringlab"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", st.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_search = [&](CLI::App* c) {
        c->add_option("--max-deg", st.max_deg, "degree bound D (default 2)");
        c->add_option("--budget", st.budget, "search node budget");
        c->add_option("--jobs", st.jobs, "worker threads")->check(CLI::PositiveNumber);
        c->add_option("--max-size", st.max_size, "largest ring the polynomial search accepts");
    };

    auto* check = app.add_subcommand("check", "decide a property at bounded degree");
    check->add_option("property", st.property, "armendariz|weak|almost|nil|semicommutative|reduced|2primal")
        ->required();
    check->add_option("expr", st.expr, "ring expression")->required();
    add_search(check);
    add_format(check);
    check->add_option("--bivariate", st.bivariate, "search R[x][y] with bounds Dx,Dy (almost only)");
    check->add_option("--laurent", st.laurent, "search R[x, x^-1] with exponents in -W..W (almost only)");
    check->add_option("--samples", st.samples, "random f candidates instead of exhaustive search");
    check->add_option("--seed", st.seed, "seed for --samples");

    auto* radical = app.add_subcommand("radical", "nil(R), N(R), P(R) and oracle agreement");
    radical->add_option("expr", st.expr, "ring expression")->required();
    radical->add_option("--prime-cap", st.prime_cap, "largest ring for the prime-intersection oracle");
    add_format(radical);

    auto* witness = app.add_subcommand("witness", "pair refuting <to> but not <from>");
    witness->add_option("from", st.from, "weaker property")->required();
    witness->add_option("to", st.to, "stronger property")->required();
    witness->add_option("expr", st.expr, "ring expression")->required();
    add_search(witness);
    add_format(witness);

    auto* verify = app.add_subcommand("verify-paper", "run every claim check over a corpus");
    verify->add_option("--corpus", st.corpus_path, "file with one ring expression per line");
    add_search(verify);
    add_format(verify);
    verify->add_option("--bivariate", st.bivariate, "R[x][y] bounds Dx,Dy");
    verify->add_option("--laurent", st.laurent, "Laurent window W");
    verify->add_option("--prime-cap", st.prime_cap, "largest ring for the prime-intersection oracle");
    verify->add_flag("--stretch", st.stretch, "include the slow Armendariz search on CD(4, Z/2)");
    verify->add_flag("--verbose", st.verbose, "list every check in the text table");

    auto* exp = app.add_subcommand("export", "write a ring's tables as JSON");
    exp->add_option("expr", st.expr, "ring expression")->required();
    exp->add_option("--out", st.out_path, "output path (stdout when omitted)");
    add_format(exp);

    auto* describe = app.add_subcommand("describe", "list element indices and labels");
    describe->add_option("expr", st.expr, "ring expression")->required();
    add_format(describe);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    std::string echo;
    for (int k = 1; k < argc; ++k) echo += (k > 1 ? " " : "") + std::string(argv[k]);
    const detail::Command cmd(st, echo, out);
    try {
        if (*check) return cmd.check();
        if (*radical) return cmd.radical();
        if (*witness) return cmd.witness();
        if (*verify) return cmd.verify();
        if (*exp) return cmd.export_table();
        if (*describe) return cmd.describe();
    } catch (const ParseError& e) {
        return cmd.error("parse", e.what(), kExitUsage, err, e.offset());
    } catch (const BudgetExceeded& e) {
        return cmd.error("budget", e.what(), kExitBudget, err);
    } catch (const CapExceeded& e) {
        return cmd.error("cap", e.what(), kExitBudget, err);
    } catch (const StructuralError& e) {
        return cmd.error("structural", e.what(), kExitUsage, err);
    } catch (const PreconditionError& e) {
        return cmd.error("precondition", e.what(), kExitUsage, err);
    } catch (const Error& e) {
        return cmd.error("internal", e.what(), kExitUsage, err);
    }
    return kExitUsage;
}

}  // namespace ringlab
