#include "selp/pipeline.hpp"

#include <algorithm>
#include <map>

#include "selp/decompose.hpp"
#include "selp/error.hpp"
#include "selp/solve.hpp"

namespace selp {

GroupedWorldViews group_witnesses(const WitnessSet& ws) {
    std::map<std::vector<std::string>, std::vector<std::vector<std::string>>> buckets;
    for (const auto& w : ws.witnesses) {
        std::vector<std::string> guess;
        std::vector<std::string> members;
        for (const auto& atom : w) {
            auto view = parse_ground_atom(atom);
            if (view.pred == "g" && view.args.size() == 2) {
                guess.push_back(atom);
            } else if (view.pred == "v_check1" && view.args.size() == 2 &&
                       view.args[1] == "1") {
                members.push_back(view.args[0]);
            }
        }
        std::sort(guess.begin(), guess.end());
        std::sort(members.begin(), members.end());
        buckets[std::move(guess)].push_back(std::move(members));
    }
    GroupedWorldViews out;
    for (auto& [guess, sets] : buckets) {
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        out.groups.push_back(WitnessGroup{guess, std::move(sets)});
    }
    return out;
}

namespace {

GroundProgram reduced_ground(const ElpProgram& p, const PipelineOptions& opt,
                             bool with_projection) {
    ReductionOptions ropt;
    ropt.bss = opt.bss;
    ropt.td_seed = opt.td_seed;
    ropt.emit_projection = with_projection;
    NonGroundProgram reduced = reduce(p, ropt);
    if (opt.decompose) reduced = decompose_program(reduced);
    return ground(reduced, opt.budget);
}

} // namespace

std::vector<WorldView> world_views_via_reduction(const ElpProgram& p,
                                                 const PipelineOptions& opt,
                                                 long limit) {
    GroundProgram g = reduced_ground(p, opt, true);
    WitnessSet ws;
    ws.witnesses = project_answer_sets(g);
    auto grouped = group_witnesses(ws);

    auto elits = elitof(p);
    std::map<std::string, int> elit_index;
    for (size_t k = 0; k < elits.size(); ++k)
        elit_index[render(lit_const(p, elits[k].inner))] = static_cast<int>(k);

    std::vector<std::pair<uint32_t, WorldView>> keyed;
    for (const auto& grp : grouped.groups) {
        uint32_t mask = 0;
        std::vector<bool> seen(elits.size(), false);
        for (const auto& atom : grp.guess_atoms) {
            auto view = parse_ground_atom(atom);
            auto it = elit_index.find(view.args[0]);
            if (it == elit_index.end())
                throw Error("guess atom " + atom + " names no epistemic literal");
            if (seen[it->second])
                throw Error("guess atom " + atom + " appears with both values");
            seen[it->second] = true;
            if (view.args[1] == "1") mask |= 1u << it->second;
        }
        for (size_t k = 0; k < elits.size(); ++k)
            if (!seen[k])
                throw Error("witness lacks a guess atom for an epistemic literal");

        WorldView wv;
        for (size_t k = 0; k < elits.size(); ++k)
            if (mask & (1u << k)) wv.guess.chosen.push_back(elits[k]);
        for (const auto& names : grp.answer_sets) {
            Interpretation interp;
            for (const auto& name : names) {
                AtomIdx a = p.atoms.find(name);
                if (a == 0) throw Error("witness atom " + name + " is not in the program");
                interp.push_back(a);
            }
            std::sort(interp.begin(), interp.end());
            wv.answer_sets.push_back(std::move(interp));
        }
        std::sort(wv.answer_sets.begin(), wv.answer_sets.end());
        keyed.emplace_back(mask, std::move(wv));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<WorldView> out;
    for (auto& [mask, wv] : keyed) {
        out.push_back(std::move(wv));
        if (limit >= 0 && static_cast<long>(out.size()) >= limit) break;
    }
    return out;
}

bool consistent_via_reduction(const ElpProgram& p, const PipelineOptions& opt) {
    return has_answer_set(reduced_ground(p, opt, false));
}

std::string format_world_views(const ElpProgram& p, const std::vector<WorldView>& views) {
    std::string out;
    for (size_t i = 0; i < views.size(); ++i) {
        out += "world view " + std::to_string(i + 1) + "\n";
        out += "  guess: {";
        const auto& chosen = views[i].guess.chosen;
        for (size_t k = 0; k < chosen.size(); ++k) {
            out += k == 0 ? " " : ", ";
            out += "$not$ ";
            if (chosen[k].inner.negated) out += "not ";
            out += p.atoms.name(chosen[k].inner.atom);
        }
        out += " }\n";
        for (const auto& set : views[i].answer_sets) {
            out += "  answer set: {";
            for (size_t k = 0; k < set.size(); ++k) {
                out += k == 0 ? " " : ", ";
                out += p.atoms.name(set[k]);
            }
            out += " }\n";
        }
    }
    return out;
}

}  // namespace selp
