// Acceptance suite: one check per release criterion, one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <future>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "elpeq/asp.hpp"
#include "elpeq/epistemic.hpp"
#include "elpeq/equivalence.hpp"
#include "elpeq/json_io.hpp"
#include "elpeq/qbf.hpp"
#include "elpeq/syntax.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace elpeq;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool        pass;
    std::string detail;
};

Interpretation interp(std::initializer_list<AtomId> atoms) {
    Interpretation i;
    for (auto a : atoms) i.bits |= 1ull << a;
    return i;
}

std::string show(Interpretation i, const std::vector<std::string>& atoms) {
    std::string out = "{";
    bool        first = true;
    for (AtomId a = 0; a < atoms.size(); ++a)
        if (i.contains(a)) {
            if (!first) out += ",";
            out += atoms[a];
            first = false;
        }
    return out + "}";
}

std::string show_views(const std::vector<ViewSet>& v, const std::vector<std::string>& atoms) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += "{";
        for (std::size_t k = 0; k < v[i].size(); ++k) {
            if (k) out += ",";
            out += show(v[i][k], atoms);
        }
        out += "}";
    }
    return out + "}";
}

// --- criterion 1: Example-2 golden -----------------------------------------

Outcome criterion1() {
    Elp  p = parse_elp("p1 :- not enot not p.");
    auto cwvs = candidate_world_views(p);
    auto wvs = world_views(p);
    bool pass = cwvs.size() == 1 && wvs.size() == 1 && cwvs[0].guess == Guess{0} &&
                cwvs[0].views == std::vector<Interpretation>{interp({0})} &&
                wvs[0].guess == cwvs[0].guess && wvs[0].views == cwvs[0].views;
    return {pass, "one CWV = one WV = {{p1}} with the empty guess"};
}

// --- criterion 2: Example-3 golden -----------------------------------------

Outcome criterion2() {
    Elp pi1 = parse_elp("p :- enot p.");
    Elp pi2 = parse_elp("#eliterals {enot p}. p :- not p.");

    AspProgram reduct = epistemic_reduct(pi1, Guess{1});
    bool       reduct_ok = reduct.rules().size() == 1 && reduct.rules()[0].body_top == 1 &&
                     reduct.rules()[0].pos_body.empty() && reduct.rules()[0].neg_body.empty() &&
                     reduct.rules()[0].head == std::vector<AtomId>{0};
    auto as = answer_sets(reduct);
    bool as_ok = as == std::vector<Interpretation>{interp({0})};
    bool incompatible = !compatible(as, Guess{1}, pi1.eliterals());

    bool none1 = candidate_world_views(pi1).empty();
    bool none2 = candidate_world_views(pi2).empty();

    auto [a1, a2] = align(pi1, pi2);
    bool uniform = uniformly_equivalent(a1, a2, ViewKind::cwv).equivalent;

    bool pass = reduct_ok && as_ok && incompatible && none1 && none2 && uniform;
    std::ostringstream d;
    d << "reduct {p :- true} ok=" << reduct_ok << ", answer sets {{p}} ok=" << as_ok
      << ", compatibility fails=" << incompatible << ", no CWVs=" << (none1 && none2)
      << ", uniformly cwv-equivalent=" << uniform;
    return {pass, d.str()};
}

// --- criterion 3: Example-4 golden -----------------------------------------

Outcome criterion3() {
    Elp g = parse_elp("#atoms {p1, p}. #eliterals {enot p, enot not p}. p1 :- not enot not p.");
    Elp s = parse_elp("#atoms {p1, p}. #eliterals {enot p, enot not p}. p1 :- enot p.");

    bool pass = true;
    std::string note;
    for (ViewKind k : {ViewKind::cwv, ViewKind::wv}) {
        UeTable tg = ue_function(g, k);
        UeTable ts = ue_function(s, k);
        std::string bg = ue_table_to_json(tg, g).dump();
        std::string bs = ue_table_to_json(ts, s).dump();
        if (tg.entries.size() != 4 || bg != bs) pass = false;
    }
    bool ucwv = uniformly_equivalent(g, s, ViewKind::cwv).equivalent;
    bool uwv = uniformly_equivalent(g, s, ViewKind::wv).equivalent;
    pass = pass && ucwv && uwv;
    return {pass, "byte-identical 4-entry UE-tables for both kinds; uniformly cwv- and "
                  "wv-equivalent"};
}

// --- criterion 4: Proposition-1 golden -------------------------------------

Outcome criterion4() {
    Elp pi1 = parse_elp(
        "#atoms {a, b, c, d}.\n"
        "a | b :- enot not a, enot not b.\n"
        "a :- b. b :- a.\n"
        "c :- d, not a, not b. d :- c, not a, not b.\n"
        "c | d :- not a, not b.\n");
    Elp pi2 = parse_elp(
        "#atoms {a, b, c, d}.\n"
        "a | b :- enot not a, enot not b.\n"
        "a :- b. b :- a.\n"
        "c :- d, not a, not b. d :- c, not a, not b.\n"
        "c :- not d, not a, not b. d :- not c, not a, not b.\n");

    bool uwv = uniformly_equivalent(pi1, pi2, ViewKind::wv).equivalent;
    auto vcwv = uniformly_equivalent(pi1, pi2, ViewKind::cwv);

    bool separated = !vcwv.equivalent;
    bool witness_ok = false;
    if (separated && vcwv.witness) {
        const auto& w = *vcwv.witness;
        std::vector<ViewSet> left_only, right_only;
        for (const auto& v : w.left)
            if (std::find(w.right.begin(), w.right.end(), v) == w.right.end())
                left_only.push_back(v);
        for (const auto& v : w.right)
            if (std::find(w.left.begin(), w.left.end(), v) == w.left.end())
                right_only.push_back(v);
        witness_ok = w.facts.bits == 0 &&
                     left_only == std::vector<ViewSet>{{interp({0, 1, 2, 3})}} &&
                     right_only.empty();
    }

    std::ostringstream d;
    d << "uniformly wv-equivalent=" << uwv << "; cwv-separated=" << separated;
    if (separated && vcwv.witness)
        d << " at D=" << show(vcwv.witness->facts, pi1.atoms());
    if (!separated)
        d << " (exhaustive 16-fact-set scan finds the pair cwv-equivalent; the ledger "
             "documents why the printed pair cannot separate under the stated semantics)";
    return {uwv && separated && witness_ok, d.str()};
}

// --- criterion 5: E-empty bridge -------------------------------------------

Outcome criterion5() {
    gen::Rng rng(501);
    int      violations = 0;
    int      equivalent_pairs = 0;
    const int pairs = 500;
    for (int i = 0; i < pairs; ++i) {
        Elp e1 = gen::random_elp(rng, 5, 0, 6);
        Elp e2 = gen::random_partner(rng, e1, 6);
        AspProgram a1 = to_asp_program(e1);
        AspProgram a2 = to_asp_program(e2);
        bool asp = asp_uniform_equivalent(a1, a2).equivalent;
        bool ucwv = uniformly_equivalent(e1, e2, ViewKind::cwv).equivalent;
        bool uwv = uniformly_equivalent(e1, e2, ViewKind::wv).equivalent;
        if (asp != ucwv || ucwv != uwv) ++violations;
        if (asp) ++equivalent_pairs;
    }
    std::ostringstream d;
    d << pairs << " pairs, " << equivalent_pairs << " equivalent, " << violations
      << " verdict disagreements";
    return {violations == 0, d.str()};
}

// --- criterion 6: UE-function route agreement -------------------------------

Outcome criterion6() {
    gen::Rng rng(601);
    int      violations = 0;
    const int pairs = 200;
    for (int i = 0; i < pairs; ++i) {
        Elp e1 = gen::random_elp(rng, 4, 3, 5);
        Elp e2 = gen::random_partner(rng, e1, 5);
        for (ViewKind k : {ViewKind::cwv, ViewKind::wv}) {
            bool scan = uniformly_equivalent(e1, e2, k).equivalent;
            bool table = ue_functions_coincide(e1, e2, k).equivalent;
            if (scan != table) ++violations;
        }
    }
    std::ostringstream d;
    d << pairs << " pairs x 2 kinds, " << violations << " route disagreements";
    return {violations == 0, d.str()};
}

// --- criterion 7: hierarchy ---------------------------------------------

Outcome criterion7() {
    gen::Rng rng(601); // same corpus as criterion 6
    int      violations = 0;
    int      uwv_not_ucwv = 0;
    int      owv_not_uwv = 0;
    const int pairs = 200;
    for (int i = 0; i < pairs; ++i) {
        Elp  e1 = gen::random_elp(rng, 4, 3, 5);
        Elp  e2 = gen::random_partner(rng, e1, 5);
        bool ucwv = uniformly_equivalent(e1, e2, ViewKind::cwv).equivalent;
        bool uwv = uniformly_equivalent(e1, e2, ViewKind::wv).equivalent;
        bool ocwv = ordinary_equivalent(e1, e2, ViewKind::cwv).equivalent;
        bool owv = ordinary_equivalent(e1, e2, ViewKind::wv).equivalent;
        if (ucwv && !uwv) ++violations;
        if (uwv && !owv) ++violations;
        if (ucwv && !ocwv) ++violations;
        if (uwv && !ucwv) ++uwv_not_ucwv;
        if (owv && !uwv) ++owv_not_uwv;
    }

    // Strictness of uniform vs ordinary, certified by a fixed pair.
    auto [f1, f2] = align(parse_elp("#atoms {p, q}. p."), parse_elp("#atoms {p, q}. p :- not q."));
    bool ord_strict = ordinary_equivalent(f1, f2, ViewKind::wv).equivalent &&
                      !uniformly_equivalent(f1, f2, ViewKind::wv).equivalent;

    // Strictness of uniform cwv- vs wv-equivalence, certified by the stored
    // disjunctive pair.
    Elp pi1 = parse_elp(
        "#atoms {a, b, c, d}.\n"
        "a | b :- enot not a, enot not b.\n"
        "a :- b. b :- a.\n"
        "c :- d, not a, not b. d :- c, not a, not b.\n"
        "c | d :- not a, not b.\n");
    Elp pi2 = parse_elp(
        "#atoms {a, b, c, d}.\n"
        "a | b :- enot not a, enot not b.\n"
        "a :- b. b :- a.\n"
        "c :- d, not a, not b. d :- c, not a, not b.\n"
        "c :- not d, not a, not b. d :- not c, not a, not b.\n");
    bool pair_certifies = uniformly_equivalent(pi1, pi2, ViewKind::wv).equivalent &&
                          !uniformly_equivalent(pi1, pi2, ViewKind::cwv).equivalent;

    // Wider informational sweep for a wv-but-not-cwv uniformly equivalent
    // pair; implication violations here would count against the criterion too.
    gen::Rng  rng2(701);
    int       wide_separating = 0;
    const int wide = 2000;
    for (int i = 0; i < wide; ++i) {
        Elp  e1 = gen::random_elp(rng2, 5, 3, 6);
        Elp  e2 = gen::random_partner(rng2, e1, 6);
        bool ucwv = uniformly_equivalent(e1, e2, ViewKind::cwv).equivalent;
        bool uwv = uniformly_equivalent(e1, e2, ViewKind::wv).equivalent;
        if (ucwv && !uwv) ++violations;
        if (uwv && !ucwv) ++wide_separating;
    }

    // The strictness itself is real: a minimal search-found pair separates the
    // two uniform notions (one rule each, one extra epistemic guard).
    Elp m1 = parse_elp(
        "#atoms {p, q, t}.\n#eliterals {enot not p, enot not q}.\n"
        "p | q :- t, enot not p.\n");
    Elp m2 = parse_elp(
        "#atoms {p, q, t}.\n#eliterals {enot not p, enot not q}.\n"
        "p | q :- t, enot not q, enot not p.\n");
    bool found_pair_certifies = uniformly_equivalent(m1, m2, ViewKind::wv).equivalent &&
                                !uniformly_equivalent(m1, m2, ViewKind::cwv).equivalent;

    std::ostringstream d;
    d << pairs << " pairs, " << violations << " implication violations; ordinary-vs-uniform "
      << "strictness certified=" << ord_strict << " (corpus: " << owv_not_uwv
      << " separating pairs); uniform cwv-vs-wv strictness certified by stored pair="
      << pair_certifies << " (corpus: " << uwv_not_ucwv << " of " << pairs << ", wider sweep: "
      << wide_separating << " of " << wide << "; search-found one-rule pair certifies="
      << found_pair_certifies << ")";
    return {violations == 0 && ord_strict && pair_certifies, d.str()};
}

// --- criterion 8: hardness-reduction round trip ------------------------------

struct QbfOutcome {
    int  instances = 0;
    int  cwv_mismatches = 0;
    int  uniform_mismatches = 0;
    int  wv_cwv_mismatches = 0;
    long max_uniform_ms = 0;
};

Qbf3 make_size1(const std::vector<std::array<int, 3>>& clauses) {
    Qbf3 q;
    q.x_vars = {1};
    q.y_vars = {2};
    q.z_vars = {3};
    for (const auto& c : clauses) {
        std::array<QbfLiteral, 3> lits;
        for (int i = 0; i < 3; ++i) lits[i] = QbfLiteral{c[i] / 2 + 1, c[i] % 2 == 1};
        q.clauses.push_back(lits);
    }
    return q;
}

QbfOutcome run_qbf_batch(const std::vector<Qbf3>& batch, bool uniform_check) {
    QbfOutcome out;
    Limits     lim;
    for (const auto& q : batch) {
        ++out.instances;
        bool truth = eval_qbf3(q, 12, true);
        auto [pi1, pi2] = reduce_qbf(q);
        CwvSolver s1(pi1, lim);
        if (s1.has_cwv({}) != truth) ++out.cwv_mismatches;
        if (uniform_check) {
            auto t0 = Clock::now();
            bool eq = uniformly_equivalent(pi1, pi2, ViewKind::cwv, lim).equivalent;
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                          .count();
            out.max_uniform_ms = std::max<long>(out.max_uniform_ms, ms);
            if (eq != !truth) ++out.uniform_mismatches;

            // world views equal candidate world views for both programs
            CwvSolver s2(pi2, lim);
            for (const CwvSolver* s : {&s1, &s2}) {
                auto cwvs = s->cwvs({});
                auto wvs = s->wvs({});
                bool same = cwvs.size() == wvs.size();
                for (std::size_t i = 0; same && i < cwvs.size(); ++i)
                    same = cwvs[i].guess == wvs[i].guess && cwvs[i].views == wvs[i].views;
                if (!same) ++out.wv_cwv_mismatches;
            }
        }
    }
    return out;
}

Outcome criterion8() {
    // All distinct clauses over {x, -x, y, -y, z, -z} seen as <=3-literal
    // support sets, realized as padded triples.
    std::vector<std::array<int, 3>> clause_pool;
    for (int a = 0; a < 6; ++a) {
        clause_pool.push_back({a, a, a});
        for (int b = a + 1; b < 6; ++b) {
            clause_pool.push_back({a, b, b});
            for (int c = b + 1; c < 6; ++c) clause_pool.push_back({a, b, c});
        }
    }
    const int n = static_cast<int>(clause_pool.size()); // 41

    // Nonempty clause sets only: with zero clauses the two generated programs
    // coincide syntactically (the second program's sat fact stems from the
    // clause rules), so the equivalence half of the property degenerates. The
    // zero-clause case is still covered by the existence check in the unit
    // suite.
    std::vector<Qbf3> accepted;
    auto consider = [&](const std::vector<std::array<int, 3>>& clauses) {
        Qbf3 q = make_size1(clauses);
        if (check_y_top_assumption(q, 12, true)) accepted.push_back(std::move(q));
    };
    for (int i = 0; i < n; ++i) {
        consider({clause_pool[i]});
        for (int j = i + 1; j < n; ++j) {
            consider({clause_pool[i], clause_pool[j]});
            for (int k = j + 1; k < n; ++k)
                consider({clause_pool[i], clause_pool[j], clause_pool[k]});
        }
    }

    // Random accepted size-2 instances, checked for CWV existence only.
    gen::Rng          rng(801);
    std::vector<Qbf3> spot;
    while (spot.size() < 50) {
        Qbf3 q;
        q.x_vars = {1, 2};
        q.y_vars = {3, 4};
        q.z_vars = {5, 6};
        std::uniform_int_distribution<int> nclauses(1, 5);
        std::uniform_int_distribution<int> lit(0, 11);
        int                                m = nclauses(rng);
        for (int c = 0; c < m; ++c) {
            std::array<QbfLiteral, 3> lits;
            for (int i = 0; i < 3; ++i) {
                int code = lit(rng);
                lits[i] = QbfLiteral{code / 2 + 1, code % 2 == 1};
            }
            q.clauses.push_back(lits);
        }
        if (check_y_top_assumption(q, 12, true)) spot.push_back(std::move(q));
    }

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    auto     run_parallel = [&](const std::vector<Qbf3>& all, bool uniform) {
        std::vector<std::future<QbfOutcome>> futs;
        std::size_t                          chunk = (all.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t lo = std::min(all.size(), w * chunk);
            std::size_t hi = std::min(all.size(), lo + chunk);
            if (lo >= hi) break;
            std::vector<Qbf3> part(all.begin() + lo, all.begin() + hi);
            futs.push_back(std::async(std::launch::async, run_qbf_batch, std::move(part), uniform));
        }
        QbfOutcome total;
        for (auto& f : futs) {
            QbfOutcome o = f.get();
            total.instances += o.instances;
            total.cwv_mismatches += o.cwv_mismatches;
            total.uniform_mismatches += o.uniform_mismatches;
            total.wv_cwv_mismatches += o.wv_cwv_mismatches;
            total.max_uniform_ms = std::max(total.max_uniform_ms, o.max_uniform_ms);
        }
        return total;
    };

    QbfOutcome exhaustive = run_parallel(accepted, /*uniform_check=*/true);
    QbfOutcome sampled = run_parallel(spot, /*uniform_check=*/false);

    bool pass = exhaustive.cwv_mismatches == 0 && exhaustive.uniform_mismatches == 0 &&
                exhaustive.wv_cwv_mismatches == 0 && sampled.cwv_mismatches == 0 &&
                exhaustive.max_uniform_ms < 60000;
    std::ostringstream d;
    d << exhaustive.instances << " exhaustive size-1 instances (cwv-existence + uniform + "
      << "wv=cwv), " << sampled.instances << " random size-2 instances (cwv-existence); "
      << "mismatches: " << exhaustive.cwv_mismatches + sampled.cwv_mismatches << " existence, "
      << exhaustive.uniform_mismatches << " uniform, " << exhaustive.wv_cwv_mismatches
      << " wv=cwv; slowest uniform check " << exhaustive.max_uniform_ms << " ms";
    return {pass, d.str()};
}

// --- criterion 9: answer-set and UE-model oracles ----------------------------

Outcome criterion9() {
    gen::Rng rng(901);
    int      as_mismatches = 0;
    const int programs = 1000;
    for (int i = 0; i < programs; ++i) {
        AspProgram p = gen::random_asp(rng, 5, 6, true);
        if (answer_sets(p) != oracle::to_interps(oracle::answer_sets(p))) ++as_mismatches;
    }

    int ue_mismatches = 0;
    const int pairs = 300;
    for (int i = 0; i < pairs; ++i) {
        AspProgram p1 = gen::random_asp(rng, 5, 5, true);
        AspProgram p2 = gen::random_asp_partner(rng, p1, 5, true);
        bool via_ue = ue_models(p1) == ue_models(p2);
        bool via_facts = true;
        for (std::uint64_t d = 0; d < (1ull << p1.atoms().size()); ++d) {
            if (answer_sets_with_facts(p1, {d}) != answer_sets_with_facts(p2, {d})) {
                via_facts = false;
                break;
            }
        }
        if (via_ue != via_facts) ++ue_mismatches;
    }
    std::ostringstream d;
    d << programs << " programs vs the subset-enumeration oracle (" << as_mismatches
      << " mismatches); " << pairs << " pairs UE-models vs exhaustive fact-set search ("
      << ue_mismatches << " mismatches)";
    return {as_mismatches == 0 && ue_mismatches == 0, d.str()};
}

} // namespace

int main() {
    struct Entry {
        int         id;
        const char* title;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {1, "closed-world rule: single world view {{p1}}", criterion1},
        {2, "defeater rule pair: reduct, compatibility, uniform equivalence", criterion2},
        {3, "two CWA formulations: identical UE-tables, uniformly equivalent", criterion3},
        {4, "disjunctive pair: wv-equivalent but cwv-separated at D={}", criterion4},
        {5, "epistemic-free bridge: three uniform verdicts agree", criterion5},
        {6, "fact-scan route agrees with the UE-function route", criterion6},
        {7, "equivalence hierarchy: implications and strictness", criterion7},
        {8, "hardness reduction round-trips against the QBF oracle", criterion8},
        {9, "answer sets and UE-models against independent oracles", criterion9},
    };

    int failures = 0;
    for (const auto& e : entries) {
        auto    t0 = Clock::now();
        Outcome o = e.fn();
        auto    ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        if (!o.pass) ++failures;
        std::printf("[%s] criterion %d: %s (%lld ms)\n    %s\n", o.pass ? "PASS" : "FAIL", e.id,
                    e.title, static_cast<long long>(ms), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures;
}
