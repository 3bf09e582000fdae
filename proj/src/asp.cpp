#include "elpeq/asp.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace elpeq {

Limits Limits::from_env() {
    Limits l;
    if (const char* s = std::getenv("ELPEQ_MAX_ATOMS")) l.max_atoms = std::strtoul(s, nullptr, 10);
    if (const char* s = std::getenv("ELPEQ_MAX_ELITERALS"))
        l.max_eliterals = std::strtoul(s, nullptr, 10);
    return l;
}

void check_atom_guard(std::size_t n, const Limits& limits, const char* op) {
    if (n > Limits::kHardCap)
        throw GuardError(std::string(op) + ": universe of " + std::to_string(n) +
                         " atoms exceeds the bit-vector cap of " +
                         std::to_string(Limits::kHardCap));
    if (!limits.force && n > limits.max_atoms)
        throw GuardError(std::string(op) + ": universe of " + std::to_string(n) +
                         " atoms exceeds the guard of " + std::to_string(limits.max_atoms) +
                         " (about 2^" + std::to_string(n) +
                         " interpretations to scan); raise the guard or pass force");
}

void check_eliteral_guard(std::size_t n, const Limits& limits, const char* op) {
    if (n > Limits::kHardCap)
        throw GuardError(std::string(op) + ": domain of " + std::to_string(n) +
                         " epistemic literals exceeds the bit-vector cap of " +
                         std::to_string(Limits::kHardCap));
    if (!limits.force && n > limits.max_eliterals)
        throw GuardError(std::string(op) + ": domain of " + std::to_string(n) +
                         " epistemic literals exceeds the guard of " +
                         std::to_string(limits.max_eliterals) + " (about 2^" + std::to_string(n) +
                         " guesses to scan); raise the guard or pass force");
}

bool holds(Interpretation i, const Literal& l) {
    return l.negated ? !i.contains(l.atom) : i.contains(l.atom);
}

bool holds(Interpretation i, const NegBodyEntry& e) {
    // not a: a absent;  not not a: a present
    return e.inner_negated ? i.contains(e.atom) : !i.contains(e.atom);
}

bool body_satisfied(Interpretation i, const AspRule& r) {
    for (AtomId a : r.pos_body)
        if (!i.contains(a)) return false;
    for (const auto& e : r.neg_body)
        if (!holds(i, e)) return false;
    return true; // "true" tokens hold in every interpretation
}

bool is_model(Interpretation i, const AspRule& r) {
    if (!body_satisfied(i, r)) return true;
    for (AtomId a : r.head)
        if (i.contains(a)) return true;
    return false;
}

bool is_model(Interpretation i, const AspProgram& p) {
    for (const auto& r : p.rules())
        if (!is_model(i, r)) return false;
    return true;
}

AspProgram gl_reduct(const AspProgram& p, Interpretation i) {
    if (p.atoms().size() > Limits::kHardCap)
        throw GuardError("gl_reduct: universe exceeds the bit-vector cap of " +
                         std::to_string(Limits::kHardCap));
    std::vector<AspRule> rules;
    for (const auto& r : p.rules()) {
        bool keep = true;
        for (const auto& e : r.neg_body)
            if (!holds(i, e)) {
                keep = false;
                break;
            }
        if (!keep) continue;
        AspRule out;
        out.head = r.head;
        out.pos_body = r.pos_body;
        rules.push_back(std::move(out));
    }
    return AspProgram(p.atoms(), std::move(rules));
}

namespace detail {

std::vector<MaskRule> compile(const AspProgram& p) {
    std::vector<MaskRule> out;
    out.reserve(p.rules().size());
    for (const auto& r : p.rules()) {
        MaskRule m;
        for (AtomId a : r.head) m.head |= 1ull << a;
        for (AtomId a : r.pos_body) m.pos |= 1ull << a;
        for (const auto& e : r.neg_body)
            (e.inner_negated ? m.req_in : m.req_out) |= 1ull << e.atom;
        out.push_back(m);
    }
    return out;
}

} // namespace detail

namespace {

using detail::MaskRule;

bool mask_is_model(std::uint64_t i, const std::vector<MaskRule>& rules) {
    for (const auto& r : rules) {
        bool body = (r.pos & ~i) == 0 && (r.req_out & i) == 0 && (r.req_in & ~i) == 0;
        if (body && (r.head & i) == 0) return false;
    }
    return true;
}

// Whether `sub` models the GL-reduct of the compiled program w.r.t. `cand`.
bool models_reduct(std::uint64_t sub, std::uint64_t cand, const std::vector<MaskRule>& rules) {
    for (const auto& r : rules) {
        if ((r.req_out & cand) != 0 || (r.req_in & ~cand) != 0) continue; // rule deleted
        if ((r.pos & ~sub) == 0 && (r.head & sub) == 0) return false;
    }
    return true;
}

bool is_stable(std::uint64_t cand, std::uint64_t facts, const std::vector<MaskRule>& rules) {
    // proper subsets of cand containing facts
    std::uint64_t free = cand & ~facts;
    for (std::uint64_t s = (free - 1) & free;; s = (s - 1) & free) {
        if (models_reduct(s | facts, cand, rules)) return false;
        if (s == 0) break;
    }
    return true;
}

} // namespace

namespace detail {

std::vector<Interpretation> answer_sets_masks(const std::vector<MaskRule>& rules,
                                              std::uint32_t n, std::uint64_t facts) {
    std::vector<Interpretation> result;
    const std::uint64_t free_mask = ((n ? (1ull << n) - 1 : 0)) & ~facts;
    // Enumerate supersets of `facts` via submasks of the free atoms.
    std::uint64_t t = 0;
    while (true) {
        std::uint64_t cand = t | facts;
        if (mask_is_model(cand, rules)) {
            if (cand == facts || is_stable(cand, facts, rules)) result.push_back({cand});
        }
        if (t == free_mask) break;
        t = (t - free_mask) & free_mask;
    }
    std::sort(result.begin(), result.end(), interp_less);
    return result;
}

} // namespace detail

std::vector<Interpretation> answer_sets(const AspProgram& p, const Limits& limits) {
    check_atom_guard(p.atoms().size(), limits, "answer_sets");
    return detail::answer_sets_masks(detail::compile(p),
                                     static_cast<std::uint32_t>(p.atoms().size()), 0);
}

std::vector<Interpretation> answer_sets_with_facts(const AspProgram& p, Interpretation facts,
                                                   const Limits& limits) {
    check_atom_guard(p.atoms().size(), limits, "answer_sets");
    return detail::answer_sets_masks(detail::compile(p),
                                     static_cast<std::uint32_t>(p.atoms().size()), facts.bits);
}

std::vector<SePair> se_models(const AspProgram& p, const Limits& limits) {
    check_atom_guard(p.atoms().size(), limits, "se_models");
    const std::uint32_t n = static_cast<std::uint32_t>(p.atoms().size());
    const auto          rules = detail::compile(p);
    std::vector<SePair> result;
    const std::uint64_t full = n ? (1ull << n) - 1 : 0;
    for (std::uint64_t y = 0;; ++y) {
        if (mask_is_model(y, rules)) {
            // X over subsets of Y against the reduct w.r.t. Y.
            for (std::uint64_t x = y;; x = (x - 1) & y) {
                if (models_reduct(x, y, rules)) result.push_back({{x}, {y}});
                if (x == 0) break;
            }
        }
        if (y == full) break;
    }
    std::sort(result.begin(), result.end(), sepair_less);
    return result;
}

std::vector<SePair> ue_models(const AspProgram& p, const Limits& limits) {
    auto                se = se_models(p, limits);
    std::vector<SePair> result;
    for (const auto& s : se) {
        if (s.x == s.y) {
            result.push_back(s);
            continue;
        }
        bool maximal = true;
        for (const auto& t : se) {
            if (t.y == s.y && s.x.proper_subset_of(t.x) && t.x.proper_subset_of(t.y)) {
                maximal = false;
                break;
            }
        }
        if (maximal) result.push_back(s);
    }
    return result;
}

std::vector<std::uint64_t> subsets_in_canonical_order(std::uint32_t n) {
    // Materialized, so cap well below the representation limit: a scan of
    // 2^28 fact sets is already far outside desk scale.
    if (n > 28)
        throw GuardError("a canonical scan over 2^" + std::to_string(n) +
                         " subsets is not tractable (cap 2^28)");
    std::vector<std::uint64_t> out;
    out.reserve(1ull << n);
    out.push_back(0);
    for (std::uint32_t k = 1; k <= n; ++k) {
        // k-combinations of {0..n-1} in lexicographic order of id sequences
        std::vector<std::uint32_t> idx(k);
        for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::uint64_t m = 0;
            for (std::uint32_t i : idx) m |= 1ull << i;
            out.push_back(m);
            std::int32_t i = static_cast<std::int32_t>(k) - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (std::uint32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

AspUniformVerdict asp_uniform_equivalent(const AspProgram& p1, const AspProgram& p2,
                                         const Limits& limits) {
    if (p1.atoms() != p2.atoms())
        throw std::invalid_argument("asp_uniform_equivalent: programs must share a universe");
    AspUniformVerdict v;
    auto              ue1 = ue_models(p1, limits);
    auto              ue2 = ue_models(p2, limits);
    if (ue1 == ue2) {
        v.equivalent = true;
        return v;
    }
    v.equivalent = false;
    for (const auto& s : ue1)
        if (!std::binary_search(ue2.begin(), ue2.end(), s, sepair_less)) {
            v.ue_witness = s;
            v.ue_witness_in_first = true;
            break;
        }
    if (!v.ue_witness) {
        for (const auto& s : ue2)
            if (!std::binary_search(ue1.begin(), ue1.end(), s, sepair_less)) {
                v.ue_witness = s;
                v.ue_witness_in_first = false;
                break;
            }
    }
    // Cross-validation: the smallest fact set on which the answer sets differ.
    for (std::uint64_t d : subsets_in_canonical_order(static_cast<std::uint32_t>(p1.atoms().size()))) {
        auto a1 = answer_sets_with_facts(p1, {d}, limits);
        auto a2 = answer_sets_with_facts(p2, {d}, limits);
        if (a1 != a2) {
            v.fact_witness = Interpretation{d};
            v.left_answer_sets = std::move(a1);
            v.right_answer_sets = std::move(a2);
            break;
        }
    }
    return v;
}

} // namespace elpeq
