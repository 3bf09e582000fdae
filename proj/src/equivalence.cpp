#include "elpeq/equivalence.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace elpeq {

namespace {

void require_aligned(const Elp& p1, const Elp& p2, const char* op) {
    if (p1.atoms() != p2.atoms() || p1.eliterals() != p2.eliterals())
        throw std::invalid_argument(std::string(op) +
                                    ": programs must be aligned (same atoms and eliterals)");
}

std::vector<ViewSet> extract_views(std::vector<WorldViewSet>&& wvs) {
    std::vector<ViewSet> out;
    out.reserve(wvs.size());
    for (auto& w : wvs) out.push_back(std::move(w.views));
    std::sort(out.begin(), out.end(), viewset_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

bool viewset_less(const ViewSet& a, const ViewSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), interp_less);
}

std::vector<ViewSet> views_with_facts(const Elp& p, Interpretation facts, ViewKind kind,
                                      const Limits& limits) {
    return extract_views(CwvSolver(p, limits).views(facts, kind));
}

Verdict ordinary_equivalent(const Elp& p1, const Elp& p2, ViewKind kind, const Limits& limits) {
    require_aligned(p1, p2, "ordinary_equivalent");
    auto left = views_with_facts(p1, {}, kind, limits);
    auto right = views_with_facts(p2, {}, kind, limits);
    if (left == right) return {true, std::nullopt};
    return {false, Witness{{}, std::nullopt, std::move(left), std::move(right)}};
}

Verdict uniformly_equivalent(const Elp& p1, const Elp& p2, ViewKind kind, const Limits& limits,
                             unsigned jobs) {
    require_aligned(p1, p2, "uniformly_equivalent");
    const CwvSolver s1(p1, limits);
    const CwvSolver s2(p2, limits);

    const auto order = subsets_in_canonical_order(static_cast<std::uint32_t>(p1.atoms().size()));
    auto check_one = [&](std::uint64_t d) -> std::optional<Witness> {
        Interpretation facts{d};
        auto           left = extract_views(s1.views(facts, kind));
        auto           right = extract_views(s2.views(facts, kind));
        if (left == right) return std::nullopt;
        return Witness{facts, std::nullopt, std::move(left), std::move(right)};
    };

    if (jobs <= 1) {
        for (std::uint64_t d : order)
            if (auto w = check_one(d)) return {false, std::move(w)};
        return {true, std::nullopt};
    }

    // Ordered blocks: results are inspected in fact-set order, so the
    // reported witness does not depend on the degree of parallelism.
    const std::size_t block = std::max<std::size_t>(std::size_t{jobs} * 4, 16);
    for (std::size_t base = 0; base < order.size(); base += block) {
        std::size_t end = std::min(order.size(), base + block);
        std::vector<std::future<std::optional<Witness>>> futs;
        futs.reserve(end - base);
        for (std::size_t i = base; i < end; ++i)
            futs.push_back(std::async(std::launch::async, check_one, order[i]));
        std::optional<Witness> found;
        for (auto& f : futs) {
            auto w = f.get();
            if (w && !found) found = std::move(w);
        }
        if (found) return {false, std::move(found)};
    }
    return {true, std::nullopt};
}

UeTable ue_function(const Elp& p, ViewKind kind, const Limits& limits) {
    const CwvSolver solver(p, limits);
    UeTable         table;
    for (std::uint64_t d : subsets_in_canonical_order(static_cast<std::uint32_t>(p.atoms().size()))) {
        for (auto& w : solver.views({d}, kind))
            table.entries.push_back({w.guess, {d}, std::move(w.views)});
    }
    std::sort(table.entries.begin(), table.entries.end(), [](const UeEntry& a, const UeEntry& b) {
        if (int c = Guess::compare(a.guess, b.guess)) return c < 0;
        return Interpretation::compare(a.facts, b.facts) < 0;
    });
    return table;
}

Verdict ue_functions_coincide(const Elp& p1, const Elp& p2, ViewKind kind, const Limits& limits) {
    require_aligned(p1, p2, "ue_functions_coincide");
    const CwvSolver s1(p1, limits);
    const CwvSolver s2(p2, limits);

    const auto guesses =
        subsets_in_canonical_order(static_cast<std::uint32_t>(p1.eliterals().size()));
    for (std::uint64_t d : subsets_in_canonical_order(static_cast<std::uint32_t>(p1.atoms().size()))) {
        auto left = s1.views({d}, kind);
        auto right = s2.views({d}, kind);
        for (std::uint64_t g : guesses) {
            const ViewSet* lv = nullptr;
            const ViewSet* rv = nullptr;
            for (const auto& w : left)
                if (w.guess.bits == g) lv = &w.views;
            for (const auto& w : right)
                if (w.guess.bits == g) rv = &w.views;
            bool agree = (lv == nullptr && rv == nullptr) || (lv && rv && *lv == *rv);
            if (!agree) {
                Witness w;
                w.facts = {d};
                w.guess = Guess{g};
                if (lv) w.left.push_back(*lv);
                if (rv) w.right.push_back(*rv);
                return {false, std::move(w)};
            }
        }
    }
    return {true, std::nullopt};
}

} // namespace elpeq
