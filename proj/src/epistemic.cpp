#include "elpeq/epistemic.hpp"

#include <algorithm>

namespace elpeq {

bool inner_holds(Interpretation i, const EpistemicLiteral& e) {
    return e.inner_negated ? !i.contains(e.atom) : i.contains(e.atom);
}

bool compatible(const std::vector<Interpretation>& m, Guess phi,
                const std::vector<EpistemicLiteral>& eliterals) {
    const std::uint64_t domain =
        eliterals.size() >= 64 ? ~0ull : (1ull << eliterals.size()) - 1;
    if (phi.bits & ~domain)
        throw std::invalid_argument("compatible: guess mentions literals outside the domain");
    if (m.empty()) return false;
    for (ElitId e = 0; e < eliterals.size(); ++e) {
        if (phi.contains(e)) {
            bool witnessed = false;
            for (const auto& i : m)
                if (!inner_holds(i, eliterals[e])) {
                    witnessed = true;
                    break;
                }
            if (!witnessed) return false;
        } else {
            for (const auto& i : m)
                if (!inner_holds(i, eliterals[e])) return false;
        }
    }
    return true;
}

Guess guess_of(const std::vector<Interpretation>& m,
               const std::vector<EpistemicLiteral>& eliterals) {
    if (m.empty()) throw std::invalid_argument("guess_of: empty interpretation set");
    Guess phi;
    for (ElitId e = 0; e < eliterals.size(); ++e)
        for (const auto& i : m)
            if (!inner_holds(i, eliterals[e])) {
                phi.bits |= 1ull << e;
                break;
            }
    return phi;
}

AspProgram epistemic_reduct(const Elp& p, Guess phi) {
    const auto&         elits = p.eliterals();
    const std::uint64_t domain = elits.size() >= 64 ? ~0ull : (1ull << elits.size()) - 1;
    if (phi.bits & ~domain)
        throw std::invalid_argument("epistemic_reduct: guess outside the program's domain");

    std::vector<AspRule> rules;
    for (const auto& r : p.rules()) {
        AspRule out;
        out.head = r.head;
        out.body_top = r.body_top;
        for (const auto& l : r.body_lits) {
            if (l.negated)
                out.neg_body.push_back({l.atom, false});
            else
                out.pos_body.push_back(l.atom);
        }
        bool dropped = false;
        for (ElitId e : r.body_epi_pos) {
            if (phi.contains(e)) {
                ++out.body_top; // guessed literal becomes a "true" token
            } else {
                const auto& el = elits[e];
                // enot l -> not l
                out.neg_body.push_back({el.atom, el.inner_negated});
            }
        }
        for (ElitId e : r.body_epi_neg) {
            if (phi.contains(e)) {
                // "not true" can never hold: the rule disappears.
                dropped = true;
                break;
            }
            const auto& el = elits[e];
            // not enot a -> not not a;  not enot not a -> not not not a = not a
            out.neg_body.push_back({el.atom, !el.inner_negated});
        }
        if (dropped) continue;
        out.normalize();
        rules.push_back(std::move(out));
    }
    return AspProgram(p.atoms(), std::move(rules));
}

std::optional<WorldViewSet> cwv_for_guess(const Elp& p, Guess phi, const Limits& limits) {
    auto m = answer_sets(epistemic_reduct(p, phi), limits);
    if (!compatible(m, phi, p.eliterals())) return std::nullopt;
    return WorldViewSet{phi, std::move(m), ViewKind::cwv};
}

CwvSolver::CwvSolver(const Elp& p, const Limits& limits) {
    check_atom_guard(p.atoms().size(), limits, "candidate_world_views");
    check_eliteral_guard(p.eliterals().size(), limits, "candidate_world_views");
    eliterals_ = p.eliterals();
    n_atoms_ = static_cast<std::uint32_t>(p.atoms().size());
    guess_order_ = subsets_in_canonical_order(static_cast<std::uint32_t>(eliterals_.size()));
    reducts_.resize(guess_order_.size());
    for (std::uint64_t g : guess_order_)
        reducts_[g] = detail::compile(epistemic_reduct(p, Guess{g}));
}

std::vector<WorldViewSet> CwvSolver::cwvs(Interpretation facts) const {
    std::vector<WorldViewSet> result;
    for (std::uint64_t g : guess_order_) {
        auto m = detail::answer_sets_masks(reducts_[g], n_atoms_, facts.bits);
        if (compatible(m, Guess{g}, eliterals_))
            result.push_back({Guess{g}, std::move(m), ViewKind::cwv});
    }
    return result;
}

std::vector<WorldViewSet> CwvSolver::wvs(Interpretation facts) const {
    auto                      cwvs_all = cwvs(facts);
    std::vector<WorldViewSet> result;
    for (const auto& c : cwvs_all) {
        bool maximal = true;
        for (const auto& other : cwvs_all)
            if (c.guess.proper_subset_of(other.guess)) {
                maximal = false;
                break;
            }
        if (maximal) result.push_back({c.guess, c.views, ViewKind::wv});
    }
    return result;
}

bool CwvSolver::has_cwv(Interpretation facts) const {
    for (std::uint64_t g : guess_order_) {
        auto m = detail::answer_sets_masks(reducts_[g], n_atoms_, facts.bits);
        if (compatible(m, Guess{g}, eliterals_)) return true;
    }
    return false;
}

std::vector<WorldViewSet> candidate_world_views(const Elp& p, const Limits& limits) {
    return CwvSolver(p, limits).cwvs({});
}

std::vector<WorldViewSet> candidate_world_views_with_facts(const Elp& p, Interpretation facts,
                                                           const Limits& limits) {
    return CwvSolver(p, limits).cwvs(facts);
}

std::vector<WorldViewSet> world_views(const Elp& p, const Limits& limits) {
    return CwvSolver(p, limits).wvs({});
}

Elp add_facts(const Elp& p, Interpretation facts) {
    std::vector<ElpRule> rules = p.rules();
    for (AtomId a = 0; a < p.atoms().size(); ++a) {
        if (!facts.contains(a)) continue;
        ElpRule fact;
        fact.head = {a};
        if (std::find(rules.begin(), rules.end(), fact) == rules.end())
            rules.push_back(std::move(fact));
    }
    return Elp(p.atoms(), p.eliterals(), std::move(rules));
}

AspProgram add_facts(const AspProgram& p, Interpretation facts) {
    std::vector<AspRule> rules = p.rules();
    for (AtomId a = 0; a < p.atoms().size(); ++a) {
        if (!facts.contains(a)) continue;
        AspRule fact;
        fact.head = {a};
        if (std::find(rules.begin(), rules.end(), fact) == rules.end())
            rules.push_back(std::move(fact));
    }
    return AspProgram(p.atoms(), std::move(rules));
}

} // namespace elpeq
