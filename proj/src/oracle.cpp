#include "selp/oracle.hpp"

#include <algorithm>

namespace selp {

namespace {

uint32_t bit(AtomIdx a) { return 1u << (a - 1); }

// Truth of a literal in the model given by mask m.
bool literal_true(const Literal& l, uint32_t m) {
    bool in = (m & bit(l.atom)) != 0;
    return l.negated ? !in : in;
}

Interpretation mask_to_interp(uint32_t m, int atom_count) {
    Interpretation out;
    for (AtomIdx a = 1; a <= atom_count; ++a) {
        if (m & bit(a)) out.push_back(a);
    }
    return out;
}

} // namespace

std::vector<ReductRule> epistemic_reduct(const ElpProgram& p, const Guess& phi) {
    std::vector<ReductRule> out;
    out.reserve(p.rules.size());
    for (const ElpRule& r : p.rules) {
        ReductRule rr;
        for (AtomIdx h : r.head) rr.head |= bit(h);
        for (const BodyElement& e : r.body) {
            uint32_t b = bit(e.atom());
            if (!e.epistemic) {
                (e.lit.negated ? rr.neg : rr.pos) |= b;
                continue;
            }
            bool in_phi = phi.contains(Elit{e.lit});
            if (!e.outer_negated) {
                if (in_phi) continue; // element replaced by truth
                // eneg l -> not l
                (e.lit.negated ? rr.dneg : rr.neg) |= b;
            } else {
                if (in_phi) {
                    rr.always_satisfied = true; // element replaced by falsity
                    continue;
                }
                // not eneg l -> not not l
                (e.lit.negated ? rr.tneg : rr.dneg) |= b;
            }
        }
        out.push_back(rr);
    }
    return out;
}

bool sat_two_level(const ReductRule& r, uint32_t m, uint32_t n) {
    if (r.always_satisfied) return true;
    if (r.head & n) return true;
    if (r.pos & ~n) return true;  // some positive atom missing from n
    if (r.neg & m) return true;   // some negated atom holds in m
    if (r.dneg & ~n) return true;
    if (r.tneg & m) return true;
    return false;
}

std::vector<uint32_t> answer_sets_of_reduct(const std::vector<ReductRule>& rules,
                                            int atom_count) {
    std::vector<uint32_t> out;
    uint32_t end = 1u << atom_count;
    for (uint32_t m = 0; m < end; ++m) {
        bool model = true;
        for (const ReductRule& r : rules) {
            if (!sat_two_level(r, m, m)) {
                model = false;
                break;
            }
        }
        if (!model) continue;
        bool minimal = true;
        if (m != 0) {
            for (uint32_t sub = (m - 1) & m;; sub = (sub - 1) & m) {
                bool sat_all = true;
                for (const ReductRule& r : rules) {
                    if (!sat_two_level(r, m, sub)) {
                        sat_all = false;
                        break;
                    }
                }
                if (sat_all) {
                    minimal = false;
                    break;
                }
                if (sub == 0) break;
            }
        }
        if (minimal) out.push_back(m);
    }
    return out;
}

bool is_candidate_world_view(const ElpProgram& p, const Guess& phi,
                             std::vector<Interpretation>* answer_sets_out) {
    int n = p.atoms.size();
    auto rules = epistemic_reduct(p, phi);
    auto sets = answer_sets_of_reduct(rules, n);
    if (sets.empty()) return false;
    for (const Elit& e : elitof(p)) {
        if (phi.contains(e)) {
            // some answer set must falsify the inner literal
            bool witnessed = false;
            for (uint32_t m : sets) {
                if (!literal_true(e.inner, m)) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) return false;
        } else {
            // the inner literal must hold in every answer set
            for (uint32_t m : sets) {
                if (!literal_true(e.inner, m)) return false;
            }
        }
    }
    if (answer_sets_out) {
        answer_sets_out->clear();
        for (uint32_t m : sets) answer_sets_out->push_back(mask_to_interp(m, n));
        std::sort(answer_sets_out->begin(), answer_sets_out->end());
    }
    return true;
}

std::vector<WorldView> enumerate_world_views(const ElpProgram& p,
                                             const OracleLimits& limits,
                                             long limit) {
    int n = p.atoms.size();
    auto elits = elitof(p);
    int e = static_cast<int>(elits.size());
    if (n > limits.max_atoms || n > 31)
        throw Error("too many atoms for exhaustive solving (" +
                    std::to_string(n) + ")");
    if (e > limits.max_elits || e > 31)
        throw Error("too many epistemic literals for exhaustive solving (" +
                    std::to_string(e) + ")");

    std::vector<WorldView> out;
    uint32_t end = 1u << e;
    for (uint32_t mask = 0; mask < end; ++mask) {
        Guess phi;
        for (int k = 0; k < e; ++k) {
            if (mask & (1u << k)) phi.chosen.push_back(elits[k]);
        }
        std::vector<Interpretation> sets;
        if (is_candidate_world_view(p, phi, &sets)) {
            out.push_back(WorldView{std::move(phi), std::move(sets)});
            if (limit >= 0 && static_cast<long>(out.size()) >= limit) break;
        }
    }
    return out;
}

bool is_consistent(const ElpProgram& p, const OracleLimits& limits) {
    return !enumerate_world_views(p, limits, 1).empty();
}

} // namespace selp
