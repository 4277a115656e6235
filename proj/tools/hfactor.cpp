// Command-line front end.
//
// Exit codes: 0 accepted/realized/verified/exists, 1 rejected/nonexistent/
// verification failed, 2 usage or parse error, 3 internal invariant
// violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hfactor/checker.hpp"
#include "hfactor/core.hpp"
#include "hfactor/factorize.hpp"
#include "hfactor/io.hpp"
#include "hfactor/oracle.hpp"
#include "hfactor/realizer.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hfactor::io::ParseError("cannot read file: " + path, 0);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// SEQ is inline text or "@path".
hfactor::DegreeSequence load_sequence(const std::string& arg, int h) {
    std::string text = (!arg.empty() && arg[0] == '@') ? slurp(arg.substr(1)) : arg;
    return hfactor::DegreeSequence{hfactor::io::parse_sequence(text), h};
}

json verdict_json(const hfactor::Verdict& v) {
    json j;
    j["accepted"] = v.accepted;
    if (v.failure) j["failure"] = hfactor::failure_name(*v.failure);
    if (v.k) j["k"] = *v.k;
    if (v.lhs) j["lhs"] = *v.lhs;
    if (v.rhs) j["rhs"] = *v.rhs;
    return j;
}

int enumeration_cap() {
    if (const char* env = std::getenv("HFACTOR_NMAX")) {
        int cap = std::atoi(env);
        if (cap > 0) return cap;
    }
    return hfactor::oracle::kDefaultCap;
}

int cmd_check(const hfactor::DegreeSequence& seq) {
    auto v = hfactor::checker::check_h_realizable(seq);
    std::cout << verdict_json(v).dump() << "\n";
    return v.accepted ? 0 : 1;
}

int cmd_realize(const hfactor::DegreeSequence& seq, const std::string& format,
                const std::string& trace_path, bool audit) {
    hfactor::realizer::EngineOptions opt;
    opt.audit = audit;
    opt.trace = !trace_path.empty();
    hfactor::realizer::EngineReport report;
    try {
        report = hfactor::realizer::realize(seq, opt);
    } catch (const hfactor::realizer::Unrealizable& e) {
        std::cout << verdict_json(e.verdict).dump() << "\n";
        return 1;
    }
    hfactor::FactorShape shape(seq.h, seq.n());
    auto fmt = format == "dot" ? hfactor::io::GraphFormat::dot : hfactor::io::GraphFormat::edgelist;
    std::cout << hfactor::io::emit_graph(report.graph, shape, fmt);
    if (opt.trace) {
        std::ofstream out(trace_path, std::ios::binary);
        hfactor::Subrealization replay = hfactor::realizer::make_subrealization_unchecked(seq);
        std::int64_t seq_no = 0;
        for (const auto& m : report.log) {
            hfactor::realizer::apply_move(replay, m);
            out << hfactor::realizer::trace_line(++seq_no, m, replay) << "\n";
        }
    }
    return 0;
}

int cmd_verify(const hfactor::DegreeSequence& seq, const std::string& graph_path) {
    auto rg = hfactor::io::read_edgelist(slurp(graph_path));
    if (rg.h != seq.h) throw hfactor::io::ParseError("graph h does not match --h", 1);
    hfactor::FactorShape shape(seq.h, seq.n());
    auto rep = hfactor::verify_realization(rg.graph, seq, shape);
    json j;
    j["pass"] = rep.pass();
    j["degrees_match"] = rep.degrees_match;
    j["spanning"] = rep.spanning;
    j["simple"] = rep.simple;
    std::cout << j.dump() << "\n";
    return rep.pass() ? 0 : 1;
}

int cmd_oracle(const std::string& seq_arg, int h, bool sweep, int nmax, int /*jobs*/) {
    const int cap = enumeration_cap();
    if (sweep) {
        auto report = hfactor::oracle::sweep_equivalence({h}, nmax, std::max(cap, nmax));
        std::cout << report.to_text();
        return report.disagreement_count() == 0 ? 0 : 1;
    }
    auto seq = load_sequence(seq_arg, h);
    bool exists = hfactor::oracle::decide_exists(seq, cap);
    json j;
    j["exists"] = exists;
    std::cout << j.dump() << "\n";
    return exists ? 0 : 1;
}

int cmd_matchings(const hfactor::DegreeSequence& seq) {
    hfactor::realizer::EngineReport report;
    try {
        report = hfactor::realizer::realize(seq, {});
    } catch (const hfactor::realizer::Unrealizable& e) {
        std::cout << verdict_json(e.verdict).dump() << "\n";
        return 1;
    }
    hfactor::FactorShape shape(seq.h, seq.n());
    auto matchings = hfactor::factorize::extract_matchings(report.graph, shape);
    std::cout << hfactor::io::emit_matchings(matchings);
    return 0;
}

int cmd_gen(int h, int n, std::uint64_t seed) {
    auto seq = hfactor::oracle::gen_sequence(n, h, seed);
    for (int i = 1; i <= seq.n(); ++i) std::cout << (i > 1 ? "," : "") << seq.at(i);
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique-factor degree sequence realizability"};
    // keep -h free for the clique-order option on every subcommand
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    int h = 0;
    std::string seq_arg, format = "edgelist", trace_path, graph_path;
    bool audit = false, sweep = false;
    int nmax = 6, jobs = 1, gen_n = 0;
    std::uint64_t seed = 0;

    auto* check = app.add_subcommand("check", "decide realizability");
    check->add_option("--h", h, "clique order minus one")->required();
    check->add_option("seq", seq_arg, "degree sequence (inline or @file)")->required();

    auto* realize = app.add_subcommand("realize", "construct a realization");
    realize->add_option("--h", h)->required();
    realize->add_option("seq", seq_arg)->required();
    realize->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dot"}));
    realize->add_option("--trace", trace_path, "write one line per move to PATH");
    realize->add_flag("--audit", audit, "re-check engine invariants per move");

    auto* verify = app.add_subcommand("verify", "verify a graph against a sequence");
    verify->add_option("--h", h)->required();
    verify->add_option("seq", seq_arg)->required();
    verify->add_option("--graph", graph_path, "edge-list file")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force existence");
    oracle->add_option("--h", h)->required();
    oracle->add_option("seq", seq_arg);
    oracle->add_flag("--sweep", sweep, "exhaustive checker-vs-oracle sweep");
    oracle->add_option("--nmax", nmax, "sweep size cap");
    oracle->add_option("--jobs", jobs, "worker count for sweeps");

    auto* matchings = app.add_subcommand("matchings", "extract disjoint perfect matchings");
    matchings->add_option("--h", h)->required();
    matchings->add_option("seq", seq_arg)->required();

    auto* gen = app.add_subcommand("gen", "generate an accepted sequence");
    gen->add_option("--h", h)->required();
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--seed", seed)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(load_sequence(seq_arg, h));
        if (realize->parsed()) return cmd_realize(load_sequence(seq_arg, h), format, trace_path, audit);
        if (verify->parsed()) return cmd_verify(load_sequence(seq_arg, h), graph_path);
        if (oracle->parsed()) {
            if (!sweep && seq_arg.empty()) {
                std::cerr << "oracle: need a sequence or --sweep\n";
                return 2;
            }
            return cmd_oracle(seq_arg, h, sweep, nmax, jobs);
        }
        if (matchings->parsed()) return cmd_matchings(load_sequence(seq_arg, h));
        if (gen->parsed()) return cmd_gen(h, gen_n, seed);
    } catch (const hfactor::io::ParseError& e) {
        std::cerr << "parse error at token " << e.token_index << ": " << e.what() << "\n";
        return 2;
    } catch (const hfactor::oracle::CapExceeded& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const hfactor::factorize::UnsupportedEvenH& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const hfactor::oracle::RetryBudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const hfactor::ContractViolation& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
