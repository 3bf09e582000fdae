#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "elpeq/asp.hpp"
#include "elpeq/common.hpp"
#include "elpeq/syntax.hpp"

namespace elpeq {

// A subset of the program's epistemic-literal domain E, one bit per ElitId.
struct Guess {
    std::uint64_t bits = 0;

    bool contains(ElitId e) const { return (bits >> e) & 1u; }
    int  cardinality() const { return std::popcount(bits); }
    bool subset_of(Guess other) const { return (bits & ~other.bits) == 0; }
    bool proper_subset_of(Guess other) const { return bits != other.bits && subset_of(other); }

    bool operator==(const Guess&) const = default;

    static int compare(Guess a, Guess b) {
        if (a.bits == b.bits) return 0;
        int ca = a.cardinality(), cb = b.cardinality();
        if (ca != cb) return ca < cb ? -1 : 1;
        std::uint64_t diff = a.bits ^ b.bits;
        std::uint64_t low = diff & -diff;
        return (a.bits & low) ? -1 : 1;
    }
};

// A candidate world view or world view: the answer sets of the epistemic
// reduct under `guess`, compatible with that guess. `views` is nonempty and
// canonically sorted; `guess` always equals guess_of(views, E).
struct WorldViewSet {
    Guess                       guess;
    std::vector<Interpretation> views;
    ViewKind                    kind = ViewKind::cwv;

    bool operator==(const WorldViewSet&) const = default;
};

// Truth of the literal under an epistemic literal: I |= l for e = "enot l".
bool inner_holds(Interpretation i, const EpistemicLiteral& e);

// The three compatibility conditions tying a set of interpretations to a
// guess over the domain `eliterals`: nonempty; every guessed "enot l" has a
// witness I with I |/= l; every unguessed "enot l" has l true in all I.
// Throws std::invalid_argument if phi mentions literals outside the domain.
bool compatible(const std::vector<Interpretation>& m, Guess phi,
                const std::vector<EpistemicLiteral>& eliterals);

// The unique guess a nonempty set of interpretations can be compatible with:
// { enot l in E : some I has I |/= l }. Throws std::invalid_argument on empty m.
Guess guess_of(const std::vector<Interpretation>& m,
               const std::vector<EpistemicLiteral>& eliterals);

// Replaces guessed epistemic literals by "true" and turns the remaining
// epistemic negations into default negation. A negated occurrence of a
// guessed literal makes the body unsatisfiable, so the rule is dropped.
// Triple negation collapses: enot not a under "not" becomes "not a".
AspProgram epistemic_reduct(const Elp& p, Guess phi);

std::optional<WorldViewSet> cwv_for_guess(const Elp& p, Guess phi, const Limits& limits = {});

// All candidate world views, in (cardinality, lexicographic) guess order.
std::vector<WorldViewSet> candidate_world_views(const Elp& p, const Limits& limits = {});

// Candidate world views whose guess is subset-maximal among CWV guesses.
std::vector<WorldViewSet> world_views(const Elp& p, const Limits& limits = {});

// Same as candidate_world_views(add_facts(p, facts), ...): the epistemic
// reduct distributes over unions with fact sets.
std::vector<WorldViewSet> candidate_world_views_with_facts(const Elp& p, Interpretation facts,
                                                           const Limits& limits = {});

// p extended with one fact per atom in `facts` (set union on rules).
Elp add_facts(const Elp& p, Interpretation facts);
AspProgram add_facts(const AspProgram& p, Interpretation facts);

// Precompiles the epistemic reduct of every guess so repeated fact-set
// queries (uniform-equivalence scans, UE-function tables) skip the per-call
// reduct construction. cwvs(facts) equals
// candidate_world_views_with_facts(p, facts).
class CwvSolver {
public:
    CwvSolver(const Elp& p, const Limits& limits = {});

    std::vector<WorldViewSet> cwvs(Interpretation facts) const;
    std::vector<WorldViewSet> wvs(Interpretation facts) const;
    std::vector<WorldViewSet> views(Interpretation facts, ViewKind kind) const {
        return kind == ViewKind::cwv ? cwvs(facts) : wvs(facts);
    }
    bool has_cwv(Interpretation facts) const;

private:
    std::vector<EpistemicLiteral>                 eliterals_;
    std::uint32_t                                 n_atoms_ = 0;
    std::vector<std::uint64_t>                    guess_order_;
    std::vector<std::vector<detail::MaskRule>>    reducts_; // indexed by guess bits
};

} // namespace elpeq
