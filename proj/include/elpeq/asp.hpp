#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "elpeq/common.hpp"
#include "elpeq/syntax.hpp"

namespace elpeq {

// A set of atoms over a fixed universe, one bit per atom id; universes are
// limited to Limits::kHardCap atoms. Comparisons are canonical: by
// cardinality, then by the sorted id sequence.
struct Interpretation {
    std::uint64_t bits = 0;

    bool contains(AtomId a) const { return (bits >> a) & 1u; }
    int  cardinality() const { return std::popcount(bits); }
    bool subset_of(Interpretation other) const { return (bits & ~other.bits) == 0; }
    bool proper_subset_of(Interpretation other) const {
        return bits != other.bits && subset_of(other);
    }

    bool operator==(const Interpretation&) const = default;

    // (cardinality, lexicographic over ascending atom ids)
    static int compare(Interpretation a, Interpretation b) {
        if (a.bits == b.bits) return 0;
        int ca = a.cardinality(), cb = b.cardinality();
        if (ca != cb) return ca < cb ? -1 : 1;
        std::uint64_t diff = a.bits ^ b.bits;
        std::uint64_t low = diff & -diff;
        return (a.bits & low) ? -1 : 1;
    }
};

inline bool interp_less(Interpretation a, Interpretation b) {
    return Interpretation::compare(a, b) < 0;
}

// SE-model: a pair (X, Y) with X subset of Y.
struct SePair {
    Interpretation x;
    Interpretation y;
    bool operator==(const SePair&) const = default;
};

inline bool sepair_less(const SePair& a, const SePair& b) {
    if (int c = Interpretation::compare(a.y, b.y)) return c < 0;
    return Interpretation::compare(a.x, b.x) < 0;
}

bool holds(Interpretation i, const Literal& l);
bool holds(Interpretation i, const NegBodyEntry& e);
bool body_satisfied(Interpretation i, const AspRule& r);
bool is_model(Interpretation i, const AspRule& r);
bool is_model(Interpretation i, const AspProgram& p);

// Keeps a rule iff i satisfies each of its negated body entries, then strips
// negation and "true" tokens; the result is negation-free.
AspProgram gl_reduct(const AspProgram& p, Interpretation i);

std::vector<Interpretation> answer_sets(const AspProgram& p, const Limits& limits = {});

// Answer sets of p extended with the atoms of `facts` as facts. Same result
// as materializing the union, but candidates are restricted to supersets of
// the fact set.
std::vector<Interpretation> answer_sets_with_facts(const AspProgram& p, Interpretation facts,
                                                   const Limits& limits = {});

std::vector<SePair> se_models(const AspProgram& p, const Limits& limits = {});
std::vector<SePair> ue_models(const AspProgram& p, const Limits& limits = {});

struct AspUniformVerdict {
    bool equivalent = false;
    // Present when not equivalent: a UE-model of exactly one program ...
    std::optional<SePair> ue_witness;
    bool                  ue_witness_in_first = false;
    // ... and, cross-validated by direct search, the smallest fact set on
    // which the answer sets differ, with both answer-set collections.
    std::optional<Interpretation> fact_witness;
    std::vector<Interpretation>   left_answer_sets;
    std::vector<Interpretation>   right_answer_sets;
};

// Uniform equivalence of epistemic-free programs via UE-model equality.
// Requires a shared universe.
AspUniformVerdict asp_uniform_equivalent(const AspProgram& p1, const AspProgram& p2,
                                         const Limits& limits = {});

// Enumerates the subsets of {0,..,n-1} in (cardinality, lexicographic) order.
// Used for fact-set scans and guess scans; n must be <= 62.
std::vector<std::uint64_t> subsets_in_canonical_order(std::uint32_t n);

namespace detail {

// Bit-compiled rule: the body holds iff pos is contained in I, req_out misses
// I, and req_in is contained in I.
struct MaskRule {
    std::uint64_t head = 0;
    std::uint64_t pos = 0;
    std::uint64_t req_out = 0; // atoms under single negation
    std::uint64_t req_in = 0;  // atoms under double negation
};

std::vector<MaskRule> compile(const AspProgram& p);
std::vector<Interpretation> answer_sets_masks(const std::vector<MaskRule>& rules,
                                              std::uint32_t n_atoms, std::uint64_t facts);

} // namespace detail

} // namespace elpeq
