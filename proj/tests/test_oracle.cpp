#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "selp/oracle.hpp"
#include "selp/parse.hpp"
#include "testutil.hpp"

using namespace selp;

namespace {

ElpProgram two_cycle() {
    return parse_easp_not("p :- $not$ q.\nq :- $not$ p.\n");
}

} // namespace

TEST_CASE("reduct rewrites each epistemic form by guess membership") {
    ElpProgram p;
    p.atoms.add("a");
    p.rules.push_back({{}, {BodyElement::elit({1, false})}});        // $not$ a
    p.rules.push_back({{}, {BodyElement::elit({1, true})}});         // $not$ not a
    p.rules.push_back({{}, {BodyElement::elit({1, false}, true)}});  // not $not$ a
    p.rules.push_back({{}, {BodyElement::elit({1, true}, true)}});   // not $not$ not a

    Guess none;
    auto r0 = epistemic_reduct(p, none);
    CHECK(r0[0].neg == 1);  // -> not a
    CHECK(r0[1].dneg == 1); // -> not not a
    CHECK(r0[2].dneg == 1);
    CHECK(r0[3].tneg == 1);
    for (const auto& r : r0) CHECK_FALSE(r.always_satisfied);

    Guess all;
    all.chosen = {Elit{{1, false}}, Elit{{1, true}}};
    auto r1 = epistemic_reduct(p, all);
    CHECK(r1[0].neg == 0); // element dropped entirely
    CHECK((r1[0].pos | r1[0].dneg | r1[0].tneg) == 0);
    CHECK(r1[1].dneg == 0);
    CHECK(r1[2].always_satisfied);
    CHECK(r1[3].always_satisfied);
}

TEST_CASE("plain literals keep their polarity in the reduct") {
    ElpProgram p;
    p.atoms.add("a");
    p.atoms.add("b");
    p.atoms.add("c");
    p.rules.push_back({{1}, {BodyElement::literal({2, false}),
                             BodyElement::literal({3, true})}});
    auto r = epistemic_reduct(p, Guess{});
    CHECK(r[0].head == 1u);
    CHECK(r[0].pos == 2u);
    CHECK(r[0].neg == 4u);
}

TEST_CASE("two-level satisfaction") {
    ReductRule r;
    r.head = 0b001;
    r.pos = 0b010;
    r.neg = 0b100;
    // head at the candidate, positive body at the candidate, negative at the model
    CHECK(sat_two_level(r, 0b000, 0b001));
    CHECK_FALSE(sat_two_level(r, 0b000, 0b010));
    CHECK(sat_two_level(r, 0b000, 0b000)); // pos unsatisfied
    CHECK(sat_two_level(r, 0b100, 0b010)); // neg hit at the model level

    ReductRule dn;
    dn.dneg = 0b001;
    CHECK(sat_two_level(dn, 0b001, 0b000)); // not not a wants a at the candidate
    CHECK_FALSE(sat_two_level(dn, 0b000, 0b001));

    ReductRule tn;
    tn.tneg = 0b001;
    CHECK(sat_two_level(tn, 0b001, 0b001)); // three negations look at the model
    CHECK_FALSE(sat_two_level(tn, 0b000, 0b000));

    ReductRule always;
    always.always_satisfied = true;
    CHECK(sat_two_level(always, 0, 0));
}

TEST_CASE("reduct answer sets coincide with stable semantics on plain programs") {
    ElpProgram p;
    p.atoms.add("a");
    p.atoms.add("b");
    p.rules.push_back({{1}, {BodyElement::literal({2, true})}});
    p.rules.push_back({{2}, {BodyElement::literal({1, true})}});
    auto sets = answer_sets_of_reduct(epistemic_reduct(p, Guess{}), 2);
    CHECK(sets == std::vector<uint32_t>{0b01, 0b10});

    ElpProgram odd;
    odd.atoms.add("a");
    odd.rules.push_back({{1}, {BodyElement::literal({1, true})}});
    auto odd_p = normalize_duplicates(odd);
    CHECK(answer_sets_of_reduct(epistemic_reduct(odd_p, Guess{}), odd_p.atoms.size())
              .empty());

    ElpProgram disj;
    disj.atoms.add("a");
    disj.atoms.add("b");
    disj.rules.push_back({{1, 2}, {}});
    CHECK(answer_sets_of_reduct(epistemic_reduct(disj, Guess{}), 2) ==
          std::vector<uint32_t>{0b01, 0b10});
}

TEST_CASE("world views of the two-atom cycle") {
    auto p = two_cycle();
    auto views = enumerate_world_views(p);
    REQUIRE(views.size() == 2);
    CHECK(views[0].guess.chosen == std::vector<Elit>{Elit{{2, false}}});
    CHECK(views[0].answer_sets == std::vector<Interpretation>{{1}});
    CHECK(views[1].guess.chosen == std::vector<Elit>{Elit{{1, false}}});
    CHECK(views[1].answer_sets == std::vector<Interpretation>{{2}});
    CHECK(is_consistent(p));
}

TEST_CASE("candidate conditions") {
    auto p = two_cycle();
    std::vector<Interpretation> sets;
    CHECK_FALSE(is_candidate_world_view(p, Guess{}));
    Guess both;
    both.chosen = {Elit{{2, false}}, Elit{{1, false}}};
    CHECK_FALSE(is_candidate_world_view(p, both));
    Guess q_only;
    q_only.chosen = {Elit{{2, false}}};
    REQUIRE(is_candidate_world_view(p, q_only, &sets));
    CHECK(sets == std::vector<Interpretation>{{1}});
}

TEST_CASE("constraint on missing knowledge keeps the fact") {
    auto p = parse_easp_not("a.\n:- $not$ a.\n");
    auto views = enumerate_world_views(p);
    REQUIRE(views.size() == 1);
    CHECK(views[0].guess.chosen.empty());
    CHECK(views[0].answer_sets == std::vector<Interpretation>{{1}});
}

TEST_CASE("self-defeating knowledge is inconsistent") {
    CHECK(enumerate_world_views(parse_easp_not("a :- $not$ a.\n")).empty());
    CHECK_FALSE(is_consistent(parse_easp_not("a :- $not$ a.\n")));
}

TEST_CASE("enumeration limit stops after the first view") {
    auto views = enumerate_world_views(two_cycle(), OracleLimits{}, 1);
    REQUIRE(views.size() == 1);
    CHECK(views[0].guess.chosen == std::vector<Elit>{Elit{{2, false}}});
}

TEST_CASE("size caps reject oversized inputs") {
    ElpProgram big;
    for (int i = 0; i < 21; ++i) {
        AtomIdx a = big.atoms.add("a" + std::to_string(i));
        big.rules.push_back({{a}, {}});
    }
    CHECK_THROWS_AS(enumerate_world_views(big), Error);
    OracleLimits wide;
    wide.max_atoms = 25;
    auto views = enumerate_world_views(big, wide);
    REQUIRE(views.size() == 1);
    CHECK(views[0].answer_sets.size() == 1);
    CHECK(views[0].answer_sets[0].size() == 21);

    OracleLimits tight;
    tight.max_elits = 1;
    auto p = two_cycle();
    CHECK_THROWS_AS(enumerate_world_views(p, tight), Error);
}

TEST_CASE("agrees with the definition-level check on random programs") {
    std::mt19937 rng(97);
    for (int round = 0; round < 300; ++round) {
        auto p = testutil::random_elp(rng);
        REQUIRE(validate(p).empty());
        auto got = enumerate_world_views(p);
        auto want = testutil::brute_world_views(p);
        CAPTURE(round);
        CAPTURE(render_elp(p, Dialect::Not));
        CHECK(got == want);
        CHECK(is_consistent(p) == !want.empty());
    }
}
