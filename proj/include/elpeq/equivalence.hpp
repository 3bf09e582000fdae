#pragma once

#include <optional>
#include <vector>

#include "elpeq/common.hpp"
#include "elpeq/epistemic.hpp"

namespace elpeq {

// One view: the interpretation set of a candidate world view, canonically
// sorted. Equivalence comparisons use these sets alone; the guess is
// recoverable via guess_of.
using ViewSet = std::vector<Interpretation>;

bool viewset_less(const ViewSet& a, const ViewSet& b);

// Counterexample to an equivalence claim: the smallest separating fact set
// under (cardinality, lexicographic) order, with the view collections of both
// extended programs. `guess` is set when the comparison is guess-resolved
// (UE-function route).
struct Witness {
    Interpretation       facts;
    std::optional<Guess> guess;
    std::vector<ViewSet> left;
    std::vector<ViewSet> right;
};

struct Verdict {
    bool                   equivalent = false;
    std::optional<Witness> witness;
};

// The kind-k views of p u D, as sorted interpretation-set collections.
std::vector<ViewSet> views_with_facts(const Elp& p, Interpretation facts, ViewKind kind,
                                      const Limits& limits = {});

// Views coincide for the empty fact set. Inputs must be aligned.
Verdict ordinary_equivalent(const Elp& p1, const Elp& p2, ViewKind kind,
                            const Limits& limits = {});

// Views coincide for every fact set D over the shared universe; the scan runs
// in (|D|, lex) order and stops at the first counterexample. `jobs` > 1
// evaluates fact sets in parallel blocks; the reported witness is unchanged.
Verdict uniformly_equivalent(const Elp& p1, const Elp& p2, ViewKind kind,
                             const Limits& limits = {}, unsigned jobs = 1);

// Sparse map (guess, fact set) -> view. Entries are exactly the pairs whose
// reduct answer sets form a kind-k view of p u D w.r.t. the guess; everything
// absent maps to the empty set.
struct UeEntry {
    Guess          guess;
    Interpretation facts;
    ViewSet        view;
    bool operator==(const UeEntry&) const = default;
};

struct UeTable {
    std::vector<UeEntry> entries; // sorted by (guess, facts), both canonical
    bool operator==(const UeTable&) const = default;
};

UeTable ue_function(const Elp& p, ViewKind kind, const Limits& limits = {});

// Streams (guess, fact set) cells of both UE-functions without materializing
// the tables; the witness carries the first disagreeing cell.
Verdict ue_functions_coincide(const Elp& p1, const Elp& p2, ViewKind kind,
                              const Limits& limits = {});

} // namespace elpeq
