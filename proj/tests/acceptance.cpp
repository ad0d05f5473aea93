// End-to-end acceptance checks.  Each check prints exactly one PASS/FAIL
// line; the process exits nonzero when any of them fails.  Time limits and
// numeric tolerances are pinned here on purpose.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "selp/decompose.hpp"
#include "selp/graphs.hpp"
#include "selp/ground.hpp"
#include "selp/oracle.hpp"
#include "selp/parse.hpp"
#include "selp/pipeline.hpp"
#include "selp/qbf.hpp"
#include "selp/reduction.hpp"
#include "selp/solve.hpp"
#include "selp/witness.hpp"
#include "testutil.hpp"

using namespace selp;

namespace {

bool all_ok = true;

void report(const char* name, bool ok, double secs, const std::string& detail) {
    std::printf("%s  %-28s %6.2fs  %s\n", ok ? "PASS" : "FAIL", name, secs,
                detail.c_str());
    if (!ok) all_ok = false;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool same_atoms(const AtomTable& a, const AtomTable& b) {
    if (a.size() != b.size()) return false;
    for (int i = 1; i <= a.size(); ++i)
        if (a.name(i) != b.name(i)) return false;
    return true;
}

// --------------------------------------------------------------------------
// 1. The bundled two-rule program has exactly the two expected world views,
//    by exhaustive search and through the full translation route.

void check_dual_engine() {
    testutil::Stopwatch sw;
    ElpProgram p = parse_easp_not(read_file(std::string(FIXTURE_DIR) + "/example2.easp"));
    // atoms: p=1 q=2; epistemic literals in first-occurrence order: q then p
    std::vector<WorldView> expected = {
        WorldView{Guess{{Elit{{2, false}}}}, {{1}}},
        WorldView{Guess{{Elit{{1, false}}}}, {{2}}},
    };
    auto exhaustive = enumerate_world_views(p);
    auto routed = world_views_via_reduction(p);
    double secs = sw.seconds();
    bool ok = exhaustive == expected && routed == expected && secs < 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "views=%zu/%zu expected=2 limit=1s",
                  exhaustive.size(), routed.size());
    report("dual-engine-views", ok, secs, buf);
}

// --------------------------------------------------------------------------
// 2. Consistency and world views agree between the exhaustive solver and the
//    translation route, over a systematic two-atom family plus 500 random
//    programs.

const std::vector<std::string> kForms = {
    "", "%", "not %", "$not$ %", "not $not$ %", "$not$ not %", "not $not$ not %"};

std::string apply_form(const std::string& form, const std::string& atom) {
    std::string out;
    for (char c : form)
        if (c == '%') out += atom;
        else out += c;
    return out;
}

std::vector<std::string> template_family() {
    std::vector<std::string> out;
    const std::vector<std::string> guards = {"a", "not a", "$not$ a",
                                             "b", "not b", "$not$ b"};
    for (const auto& f1 : kForms) {
        std::string r1 = f1.empty() ? "a.\n" : "a :- " + apply_form(f1, "b") + ".\n";
        for (int r2_idx = -1; r2_idx < static_cast<int>(kForms.size()); ++r2_idx) {
            std::string r2;
            if (r2_idx >= 0) {
                const std::string& f2 = kForms[r2_idx];
                r2 = f2.empty() ? "b.\n" : "b :- " + apply_form(f2, "a") + ".\n";
            }
            for (int g_idx = -1; g_idx < static_cast<int>(guards.size()); ++g_idx) {
                std::string text = r1 + r2;
                if (g_idx >= 0) {
                    if (r2.empty() && guards[g_idx].find('b') != std::string::npos)
                        continue; // no atom b in the program
                    text += ":- " + guards[g_idx] + ".\n";
                }
                out.push_back(text);
            }
        }
    }
    const std::vector<std::string> unary = {"a", "not a", "$not$ a",
                                            "not $not$ a", "$not$ not a",
                                            "not $not$ not a"};
    for (const auto& f1 : kForms) {
        std::string r1 = f1.empty() ? "a.\n" : "a :- " + apply_form(f1, "a") + ".\n";
        for (int g_idx = -1; g_idx < static_cast<int>(unary.size()); ++g_idx) {
            std::string text = r1;
            if (g_idx >= 0) text += ":- " + unary[g_idx] + ".\n";
            out.push_back(text);
        }
    }
    return out;
}

int differential_one(const ElpProgram& p, int& mismatches) {
    auto oracle = enumerate_world_views(p);
    if (has_answer_set(ground(reduce(p))) != !oracle.empty()) ++mismatches;
    if (world_views_via_reduction(p) != oracle) ++mismatches;
    return oracle.empty() ? 0 : 1;
}

void check_differential() {
    testutil::Stopwatch sw;
    int mismatches = 0, consistent = 0, total = 0;
    for (const auto& text : template_family()) {
        consistent += differential_one(parse_easp_not(text), mismatches);
        ++total;
    }
    std::mt19937 rng(20001);
    for (int round = 0; round < 500; ++round) {
        consistent += differential_one(testutil::random_elp(rng), mismatches);
        ++total;
    }
    double secs = sw.seconds();
    bool ok = mismatches == 0 && secs < 600.0;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "programs=%d consistent=%d mismatches=%d limit=600s", total,
                  consistent, mismatches);
    report("differential-consistency", ok, secs, buf);
}

// --------------------------------------------------------------------------
// 3. Output size of the translation grows linearly in e*n on chain programs,
//    and every emitted predicate keeps arity at most 3.

void check_linear_size() {
    testutil::Stopwatch sw;
    std::vector<std::vector<double>> rows;
    std::vector<double> y;
    int arity_max = 0;
    for (int n = 4; n <= 24; ++n) {
        for (int e = 1; e <= 4; ++e) {
            ElpProgram p = testutil::chain_elp(n, e);
            double ea = static_cast<double>(elitof(p).size());
            NonGroundProgram red = reduce(p);
            rows.push_back({ea * n, static_cast<double>(n), ea, 1.0});
            y.push_back(static_cast<double>(emitted_atom_count(red)));
            arity_max = std::max(arity_max, max_predicate_arity(red));
        }
    }
    auto fit = testutil::fit_linear(rows, y);
    std::vector<std::vector<double>> rows1;
    for (auto& r : rows) rows1.push_back({r[0], 1.0});
    double single_r2 = testutil::fit_linear(rows1, y).r2;
    double secs = sw.seconds();
    bool ok = fit.r2 >= 0.99 && fit.beta[0] > 0 && arity_max <= 3 && secs < 60.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "R2=%.4f en-coef=%.2f en-only-R2=%.4f arity=%d limit=60s",
                  fit.r2, fit.beta[0], single_r2, arity_max);
    report("linear-size-bounded-arity", ok, secs, buf);
}

// --------------------------------------------------------------------------
// 4. On path programs whose label order hides the path, decomposition-guided
//    subset chains keep rule widths flat while the index-order chains grow.

int max_rule_width(const NonGroundProgram& p) {
    int w = -1;
    for (const auto& r : p.rules)
        w = std::max(w, td_minfill(rule_graph(r).graph, 0).width());
    return w;
}

void check_width_advantage() {
    testutil::Stopwatch sw;
    std::vector<int> naive_w, td_w, primal_w;
    for (int n : {10, 20, 30, 40, 50}) {
        ElpProgram p = testutil::labeled_path_elp(n, 2);
        primal_w.push_back(td_minfill(primal_graph(p), 0).width());
        ReductionOptions naive_opt, td_opt;
        td_opt.bss = BssMode::TdGuided;
        naive_w.push_back(max_rule_width(reduce(p, naive_opt)));
        td_w.push_back(max_rule_width(reduce(p, td_opt)));
    }
    bool flat = true, bounded = true, growing = true;
    for (size_t i = 0; i < td_w.size(); ++i) {
        if (td_w[i] != td_w[0]) flat = false;
        if (td_w[i] > primal_w[i] + 4) bounded = false;
        if (i > 0 && naive_w[i] < naive_w[i - 1]) growing = false;
    }
    bool gap = naive_w.back() - td_w.back() >= 5;
    double secs = sw.seconds();
    bool ok = flat && bounded && growing && gap && secs < 120.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "td=%d..%d naive=%d..%d primal=%d..%d gap=%d limit=120s",
                  td_w.front(), td_w.back(), naive_w.front(), naive_w.back(),
                  primal_w.front(), primal_w.back(), naive_w.back() - td_w.back());
    report("td-width-advantage", ok, secs, buf);
}

// --------------------------------------------------------------------------
// 5. Splitting a rule along its variable graph preserves answer sets modulo
//    the tmp_* interface predicates, on random safe rules and on every rule
//    of the translated two-rule program.

std::set<std::vector<std::string>> visible_sets(const GroundProgram& g) {
    std::set<std::vector<std::string>> out;
    for (const auto& m : answer_sets(g)) {
        std::vector<std::string> v;
        for (int id : m) {
            const std::string& n = g.atom_names[id];
            if (n.rfind("tmp_", 0) != 0) v.push_back(n);
        }
        std::sort(v.begin(), v.end());
        out.insert(std::move(v));
    }
    return out;
}

void check_rule_split() {
    testutil::Stopwatch sw;
    int bad = 0;
    std::mt19937 rng(50001);
    for (int round = 0; round < 200; ++round) {
        testutil::SafeRuleCase c = testutil::random_safe_rule_case(rng);
        NonGroundProgram base, split;
        base.rules = c.facts;
        split.rules = c.facts;
        base.rules.push_back(c.rule);
        for (auto& piece : decompose_rule(c.rule, 1)) split.rules.push_back(piece);
        if (visible_sets(ground(base)) != visible_sets(ground(split))) ++bad;
    }
    ElpProgram p = parse_easp_not(read_file(std::string(FIXTURE_DIR) + "/example2.easp"));
    NonGroundProgram red = reduce(p);
    auto base_sets = visible_sets(ground(red));
    int rules_checked = 0;
    for (size_t i = 0; i < red.rules.size(); ++i) {
        NonGroundProgram variant;
        variant.show = red.show;
        for (size_t j = 0; j < red.rules.size(); ++j) {
            if (j == i) {
                for (auto& piece : decompose_rule(red.rules[j], static_cast<int>(j) + 1))
                    variant.rules.push_back(piece);
            } else {
                variant.rules.push_back(red.rules[j]);
            }
        }
        if (visible_sets(ground(variant)) != base_sets) ++bad;
        ++rules_checked;
    }
    double secs = sw.seconds();
    bool ok = bad == 0 && secs < 300.0;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "random-rules=200 translated-rules=%d disagreements=%d limit=300s",
                  rules_checked, bad);
    report("rule-split-equivalence", ok, secs, buf);
}

// --------------------------------------------------------------------------
// 6. The min-fill decomposer produces valid tree decompositions, width 1 on
//    trees and k-1 on complete graphs.

void check_tree_decomposition() {
    testutil::Stopwatch sw;
    int bad = 0;
    std::mt19937 rng(60001);
    for (int round = 0; round < 100; ++round) {
        int n = 2 + static_cast<int>(rng() % 29);
        UGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 4 == 0) g.add_edge(u, v);
        TreeDecomposition td = td_minfill(g, round % 3 == 0 ? 0 : rng());
        if (!td_validate(g, td).empty()) ++bad;
    }
    for (int round = 0; round < 30; ++round) {
        int n = 2 + static_cast<int>(rng() % 29);
        UGraph g(n);
        for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
        TreeDecomposition td = td_minfill(g, 0);
        if (!td_validate(g, td).empty() || td.width() != 1) ++bad;
    }
    for (int k : {3, 4, 5}) {
        UGraph g(k);
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
        TreeDecomposition td = td_minfill(g, 0);
        if (!td_validate(g, td).empty() || td.width() != k - 1) ++bad;
    }
    double secs = sw.seconds();
    bool ok = bad == 0 && secs < 30.0;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "graphs=100 trees=30 cliques=3 failures=%d limit=30s", bad);
    report("tree-decomposition-validity", ok, secs, buf);
}

// --------------------------------------------------------------------------
// 7. Formula validity carries over: a quantified formula is valid exactly
//    when its translated epistemic program is consistent, and the clause
//    extension neither changes validity nor breaks restrictedness.

void check_qbf_correspondence() {
    testutil::Stopwatch sw;
    int mismatches = 0, valid_count = 0;
    std::mt19937 rng(70001);
    for (int round = 0; round < 200; ++round) {
        Qbf3 q = testutil::random_qbf3(rng);
        bool want = qbf_validity_bruteforce(q);
        Qbf3 ext = extend(q);
        if (!is_restricted(ext)) ++mismatches;
        if (qbf_validity_bruteforce(ext) != want) ++mismatches;
        ElpProgram elp = qbf_to_elp(extend(normalize_3cnf(q)));
        if (is_consistent(elp) != want) ++mismatches;
        if (want) ++valid_count;
    }
    double secs = sw.seconds();
    bool ok = mismatches == 0 && secs < 600.0;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "formulas=200 valid=%d mismatches=%d limit=600s", valid_count,
                  mismatches);
    report("qbf-correspondence", ok, secs, buf);
}

// --------------------------------------------------------------------------
// 8. Rendering and parsing are inverse in both dialects, and the modal
//    operators match their epistemic-negation spellings.

void check_round_trip() {
    testutil::Stopwatch sw;
    int bad = 0;
    std::mt19937 rng(80001);
    for (int round = 0; round < 50; ++round) {
        // The corpus entry is the rendered text; parsing it once fixes the
        // atom numbering to first-occurrence order.
        std::string t_not =
            render_elp(testutil::random_elp(rng), Dialect::Not);
        ElpProgram p = parse_easp_not(t_not);
        ElpProgram pn = parse_easp_not(render_elp(p, Dialect::Not));
        if (pn.rules != p.rules || !same_atoms(pn.atoms, p.atoms) ||
            render_elp(p, Dialect::Not) != t_not)
            ++bad;
        std::string t_km = render_elp(p, Dialect::Km);
        ElpProgram pk = parse_easp_km(t_km);
        if (pk.rules != p.rules || !same_atoms(pk.atoms, p.atoms) ||
            render_elp(pk, Dialect::Km) != t_km)
            ++bad;
    }
    const std::vector<std::pair<std::string, std::string>> identities = {
        {"h :- K$ a.\n", "h :- not $not$ a.\n"},
        {"h :- M$ a.\n", "h :- $not$ not a.\n"},
        {"h :- not K$ a.\n", "h :- $not$ a.\n"},
        {"h :- not M$ a.\n", "h :- not $not$ not a.\n"},
    };
    for (const auto& [km, nt] : identities) {
        ElpProgram a = parse_easp_km(km);
        ElpProgram b = parse_easp_not(nt);
        if (a.rules != b.rules || !same_atoms(a.atoms, b.atoms)) ++bad;
        if (render_elp(b, Dialect::Km) != km) ++bad;
    }
    double secs = sw.seconds();
    bool ok = bad == 0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "programs=50 identities=4 failures=%d", bad);
    report("dialect-round-trip", ok, secs, buf);
}

// --------------------------------------------------------------------------
// 9. The checked-in solver output fixture groups into exactly the expected
//    world views.

void check_witness_fixture() {
    testutil::Stopwatch sw;
    WitnessSet ws = parse_witness_json(
        read_file(std::string(FIXTURE_DIR) + "/example2_clasp.json"));
    GroupedWorldViews g = group_witnesses(ws);
    bool ok = g.groups.size() == 2;
    if (ok) {
        ok = g.groups[0].guess_atoms ==
                 std::vector<std::string>{"g(p,0)", "g(q,1)"} &&
             g.groups[0].answer_sets ==
                 std::vector<std::vector<std::string>>{{"p"}} &&
             g.groups[1].guess_atoms ==
                 std::vector<std::string>{"g(p,1)", "g(q,0)"} &&
             g.groups[1].answer_sets ==
                 std::vector<std::vector<std::string>>{{"q"}};
    }
    double secs = sw.seconds();
    char buf[128];
    std::snprintf(buf, sizeof buf, "witnesses=%zu groups=%zu expected=2",
                  ws.witnesses.size(), g.groups.size());
    report("witness-grouping-fixture", ok, secs, buf);
}

} // namespace

int main() {
    check_dual_engine();
    check_differential();
    check_linear_size();
    check_width_advantage();
    check_rule_split();
    check_tree_decomposition();
    check_qbf_correspondence();
    check_round_trip();
    check_witness_fixture();
    std::printf("%s\n", all_ok ? "ALL CHECKS PASSED" : "CHECKS FAILED");
    return all_ok ? 0 : 1;
}
