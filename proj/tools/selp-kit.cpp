#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "selp/decompose.hpp"
#include "selp/error.hpp"
#include "selp/graphs.hpp"
#include "selp/oracle.hpp"
#include "selp/parse.hpp"
#include "selp/pipeline.hpp"
#include "selp/qbf.hpp"
#include "selp/reduction.hpp"
#include "selp/witness.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw selp::Error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

selp::Dialect to_dialect(const std::string& name) {
    return name == "km" ? selp::Dialect::Km : selp::Dialect::Not;
}

selp::BssMode to_bss(const std::string& name) {
    return name == "td" ? selp::BssMode::TdGuided : selp::BssMode::Naive;
}

int max_rule_width(const selp::NonGroundProgram& p) {
    int w = -1;
    for (const auto& r : p.rules)
        w = std::max(w, selp::td_minfill(selp::rule_graph(r).graph, 0).width());
    return w;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"solve epistemic logic programs by translation to plain ASP"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string dialect = "not";
    std::string engine = "reduce";
    std::string bss = "naive";
    unsigned td_seed = 0;
    bool enumerate = false;
    bool no_decompose = false;
    int max_atoms = 20;
    int max_elits = 16;
    long max_ground_rules = 2'000'000;
    long max_ground_atoms = 100'000;

    auto* solve = app.add_subcommand("solve", "decide consistency, optionally listing world views");
    solve->add_option("input", input, "program file, - for stdin");
    solve->add_option("--dialect", dialect, "input dialect")
        ->check(CLI::IsMember({"not", "km"}))->capture_default_str();
    solve->add_option("--engine", engine, "solving route")
        ->check(CLI::IsMember({"reduce", "oracle"}))->capture_default_str();
    solve->add_flag("--enumerate", enumerate, "print every world view");
    solve->add_option("--bss", bss, "subset-test layout of the translation")
        ->check(CLI::IsMember({"naive", "td"}))->capture_default_str();
    solve->add_option("--td-seed", td_seed, "tie-break seed for bag decompositions");
    solve->add_flag("--no-decompose", no_decompose, "skip the rule-splitting pass");
    solve->add_option("--max-atoms", max_atoms, "exhaustive engine atom cap")
        ->capture_default_str();
    solve->add_option("--max-elits", max_elits, "exhaustive engine epistemic literal cap")
        ->capture_default_str();
    solve->add_option("--max-ground-rules", max_ground_rules, "grounder rule budget")
        ->capture_default_str();
    solve->add_option("--max-ground-atoms", max_ground_atoms, "grounder atom budget")
        ->capture_default_str();

    bool do_decompose = false;
    bool no_show = false;
    auto* reduce_cmd = app.add_subcommand("reduce", "print the ASP translation of a program");
    reduce_cmd->add_option("input", input, "program file, - for stdin");
    reduce_cmd->add_option("--dialect", dialect, "input dialect")
        ->check(CLI::IsMember({"not", "km"}))->capture_default_str();
    reduce_cmd->add_option("--bss", bss, "subset-test layout")
        ->check(CLI::IsMember({"naive", "td"}))->capture_default_str();
    reduce_cmd->add_option("--td-seed", td_seed, "tie-break seed for bag decompositions");
    reduce_cmd->add_flag("--decompose", do_decompose, "split long rules along bag decompositions");
    reduce_cmd->add_flag("--no-show", no_show, "omit #show directives");

    bool as_json = false;
    auto* group = app.add_subcommand("group", "group solver witnesses into world views");
    group->add_option("input", input, "witness JSON file, - for stdin");
    group->add_flag("--json", as_json, "emit JSON instead of text");

    bool split_random = false;
    unsigned qbf_seed = 1;
    auto* qbf = app.add_subcommand("qbf2elp", "encode an exists-forall-exists QBF as a program");
    qbf->add_option("input", input, "QDIMACS file, - for stdin");
    qbf->add_flag("--split-random", split_random, "reassign variables to random blocks first");
    qbf->add_option("--seed", qbf_seed, "seed for --split-random")->capture_default_str();
    qbf->add_option("--dialect", dialect, "output dialect")
        ->check(CLI::IsMember({"not", "km"}))->capture_default_str();

    auto* stats = app.add_subcommand("stats", "report sizes and widths of a program and its translations");
    stats->add_option("input", input, "program file, - for stdin");
    stats->add_option("--dialect", dialect, "input dialect")
        ->check(CLI::IsMember({"not", "km"}))->capture_default_str();

    std::string to = "not";
    auto* convert = app.add_subcommand("convert", "re-render a program in another dialect");
    convert->add_option("input", input, "program file, - for stdin");
    convert->add_option("--dialect", dialect, "input dialect")
        ->check(CLI::IsMember({"not", "km"}))->capture_default_str();
    convert->add_option("--to", to, "output dialect")
        ->required()->check(CLI::IsMember({"not", "km"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed()) {
            auto p = selp::parse_easp(slurp(input), to_dialect(dialect));
            bool consistent = false;
            std::string views_text;
            if (engine == "oracle") {
                selp::OracleLimits limits{max_atoms, max_elits};
                if (enumerate) {
                    auto views = selp::enumerate_world_views(p, limits);
                    consistent = !views.empty();
                    views_text = selp::format_world_views(p, views);
                } else {
                    consistent = selp::is_consistent(p, limits);
                }
            } else {
                selp::PipelineOptions opt;
                opt.bss = to_bss(bss);
                opt.td_seed = td_seed;
                opt.decompose = !no_decompose;
                opt.budget = selp::Budget{max_ground_rules, max_ground_atoms};
                if (enumerate) {
                    auto views = selp::world_views_via_reduction(p, opt);
                    consistent = !views.empty();
                    views_text = selp::format_world_views(p, views);
                } else {
                    consistent = selp::consistent_via_reduction(p, opt);
                }
            }
            std::cout << (consistent ? "consistent" : "inconsistent") << "\n" << views_text;
            return consistent ? 10 : 20;
        }
        if (reduce_cmd->parsed()) {
            auto p = selp::parse_easp(slurp(input), to_dialect(dialect));
            selp::ReductionOptions opt;
            opt.bss = to_bss(bss);
            opt.td_seed = td_seed;
            opt.emit_projection = !no_show;
            auto reduced = selp::reduce(p, opt);
            if (do_decompose) reduced = selp::decompose_program(reduced);
            std::cout << selp::render_asp(reduced);
            return 0;
        }
        if (group->parsed()) {
            auto grouped = selp::group_witnesses(selp::parse_witness_json(slurp(input)));
            if (as_json) {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& g : grouped.groups) {
                    nlohmann::json item;
                    item["guess"] = g.guess_atoms;
                    item["answer_sets"] = g.answer_sets;
                    out.push_back(std::move(item));
                }
                std::cout << out.dump(2) << "\n";
            } else {
                for (size_t i = 0; i < grouped.groups.size(); ++i) {
                    const auto& g = grouped.groups[i];
                    std::cout << "world view " << i + 1 << "\n  guess: {";
                    for (size_t k = 0; k < g.guess_atoms.size(); ++k)
                        std::cout << (k == 0 ? " " : ", ") << g.guess_atoms[k];
                    std::cout << " }\n";
                    for (const auto& s : g.answer_sets) {
                        std::cout << "  answer set: {";
                        for (size_t k = 0; k < s.size(); ++k)
                            std::cout << (k == 0 ? " " : ", ") << s[k];
                        std::cout << " }\n";
                    }
                }
            }
            return 0;
        }
        if (qbf->parsed()) {
            auto q = selp::parse_qdimacs_eae(slurp(input));
            if (split_random) q = selp::split_blocks_random(q, qbf_seed);
            q = selp::extend(selp::normalize_3cnf(q));
            auto p = selp::qbf_to_elp(q, false);
            std::cout << selp::render_elp(p, to_dialect(dialect));
            return 0;
        }
        if (stats->parsed()) {
            auto p = selp::parse_easp(slurp(input), to_dialect(dialect));
            std::cout << "atoms: " << p.atoms.size() << "\n"
                      << "rules: " << p.rules.size() << "\n"
                      << "epistemic literals: " << elitof(p).size() << "\n"
                      << "primal width: "
                      << selp::td_minfill(selp::primal_graph(p), 0).width() << "\n";
            for (auto mode : {selp::BssMode::Naive, selp::BssMode::TdGuided}) {
                selp::ReductionOptions opt;
                opt.bss = mode;
                auto reduced = selp::reduce(p, opt);
                std::cout << (mode == selp::BssMode::Naive ? "naive" : "bag-guided")
                          << " translation:\n"
                          << "  rules: " << reduced.rules.size() << "\n"
                          << "  atom occurrences: " << selp::emitted_atom_count(reduced) << "\n"
                          << "  max predicate arity: " << selp::max_predicate_arity(reduced) << "\n"
                          << "  max rule width: " << max_rule_width(reduced) << "\n";
            }
            return 0;
        }
        if (convert->parsed()) {
            auto p = selp::parse_easp(slurp(input), to_dialect(dialect));
            std::cout << selp::render_elp(p, to_dialect(to));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
