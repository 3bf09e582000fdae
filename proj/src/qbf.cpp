#include "elpeq/qbf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace elpeq {

namespace {

[[noreturn]] void qbf_fail(const std::string& msg, int line) {
    throw ParseError(msg, line, 1);
}

void check_var_guard(const Qbf3& q, std::uint32_t max_vars, bool force, const char* op) {
    if (!force && q.var_count() > max_vars)
        throw GuardError(std::string(op) + ": " + std::to_string(q.var_count()) +
                         " variables exceed the guard of " + std::to_string(max_vars) +
                         " (about 2^" + std::to_string(q.var_count()) +
                         " assignments to scan); raise the guard or pass force");
    if (q.var_count() > 30)
        throw GuardError(std::string(op) + ": more than 30 variables is not supported");
}

} // namespace

Qbf3 parse_qbf3(std::string_view text) {
    Qbf3              q;
    std::istringstream in{std::string(text)};
    std::string        linebuf;
    int                lineno = 0;
    bool               seen_header = false;
    int                prefix_stage = 0; // 0: expect e, 1: expect a, 2: expect e, 3: clauses
    long               declared_clauses = -1;

    auto read_block = [&](std::istringstream& ls, std::vector<int>& vars, int line) {
        int v;
        while (ls >> v) {
            if (v == 0) return;
            if (v < 0) qbf_fail("negative variable in quantifier block", line);
            vars.push_back(v);
        }
        qbf_fail("quantifier block not terminated by 0", line);
    };

    while (std::getline(in, linebuf)) {
        ++lineno;
        std::istringstream ls(linebuf);
        std::string        first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            std::string fmt;
            long        nv = 0, nc = 0;
            if (!(ls >> fmt >> nv >> nc) || fmt != "cnf")
                qbf_fail("malformed header, expected 'p cnf <vars> <clauses>'", lineno);
            seen_header = true;
            declared_clauses = nc;
            continue;
        }
        if (!seen_header) qbf_fail("input must start with a 'p cnf' header", lineno);
        if (first == "e" || first == "a") {
            if (prefix_stage == 0 && first == "e") {
                read_block(ls, q.x_vars, lineno);
                prefix_stage = 1;
            } else if (prefix_stage == 1 && first == "a") {
                read_block(ls, q.y_vars, lineno);
                prefix_stage = 2;
            } else if (prefix_stage == 2 && first == "e") {
                read_block(ls, q.z_vars, lineno);
                prefix_stage = 3;
            } else {
                qbf_fail("prefix must be exactly one 'e' block, one 'a' block, one 'e' block",
                         lineno);
            }
            continue;
        }
        // clause line
        if (prefix_stage != 3)
            qbf_fail("clause before the complete e/a/e prefix", lineno);
        std::istringstream cs(linebuf);
        std::vector<int>   lits;
        int                v;
        bool               terminated = false;
        while (cs >> v) {
            if (v == 0) {
                terminated = true;
                break;
            }
            lits.push_back(v);
        }
        if (!terminated) qbf_fail("clause not terminated by 0", lineno);
        if (lits.size() != 3)
            qbf_fail("clause has " + std::to_string(lits.size()) + " literals, expected 3",
                     lineno);
        std::array<QbfLiteral, 3> clause;
        for (int i = 0; i < 3; ++i)
            clause[i] = QbfLiteral{std::abs(lits[i]), lits[i] < 0};
        q.clauses.push_back(clause);
    }
    if (!seen_header) qbf_fail("empty input, expected a 'p cnf' header", lineno ? lineno : 1);
    if (prefix_stage != 3)
        qbf_fail("prefix must be exactly one 'e' block, one 'a' block, one 'e' block",
                 lineno ? lineno : 1);

    std::map<int, int> seen; // var -> block
    auto declare = [&](const std::vector<int>& vars, int block, const char* name) {
        for (int v : vars) {
            if (!seen.emplace(v, block).second)
                throw std::invalid_argument("variable " + std::to_string(v) +
                                            " quantified twice (" + name + " block)");
        }
    };
    declare(q.x_vars, 0, "first");
    declare(q.y_vars, 1, "second");
    declare(q.z_vars, 2, "third");
    for (const auto& c : q.clauses)
        for (const auto& l : c)
            if (!seen.count(l.var))
                throw std::invalid_argument("unquantified variable " + std::to_string(l.var) +
                                            " in a clause");
    (void)declared_clauses; // header counts are informational
    return q;
}

namespace {

struct VarIndex {
    std::map<int, std::size_t> pos; // variable -> bit position, X then Y then Z
    std::size_t                nx = 0, ny = 0, nz = 0;
};

VarIndex index_vars(const Qbf3& q) {
    VarIndex vi;
    std::size_t at = 0;
    for (int v : q.x_vars) vi.pos[v] = at++;
    for (int v : q.y_vars) vi.pos[v] = at++;
    for (int v : q.z_vars) vi.pos[v] = at++;
    vi.nx = q.x_vars.size();
    vi.ny = q.y_vars.size();
    vi.nz = q.z_vars.size();
    return vi;
}

bool matrix_true(const Qbf3& q, const VarIndex& vi, std::uint64_t assignment) {
    for (const auto& c : q.clauses) {
        bool sat = false;
        for (const auto& l : c) {
            bool val = (assignment >> vi.pos.at(l.var)) & 1u;
            if (val != l.negated) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

} // namespace

bool eval_qbf3(const Qbf3& q, std::uint32_t max_vars, bool force) {
    check_var_guard(q, max_vars, force, "eval_qbf3");
    const VarIndex vi = index_vars(q);
    for (std::uint64_t x = 0; x < (1ull << vi.nx); ++x) {
        bool all_y = true;
        for (std::uint64_t y = 0; y < (1ull << vi.ny) && all_y; ++y) {
            bool some_z = false;
            for (std::uint64_t z = 0; z < (1ull << vi.nz); ++z) {
                std::uint64_t assignment = x | (y << vi.nx) | (z << (vi.nx + vi.ny));
                if (matrix_true(q, vi, assignment)) {
                    some_z = true;
                    break;
                }
            }
            if (!some_z) all_y = false;
        }
        if (all_y) return true;
    }
    return false;
}

bool check_y_top_assumption(const Qbf3& q, std::uint32_t max_vars, bool force) {
    check_var_guard(q, max_vars, force, "check_y_top_assumption");
    const VarIndex      vi = index_vars(q);
    const std::uint64_t y_all = ((1ull << vi.ny) - 1) << vi.nx;
    for (std::uint64_t x = 0; x < (1ull << vi.nx); ++x)
        for (std::uint64_t z = 0; z < (1ull << vi.nz); ++z)
            if (matrix_true(q, vi, x | y_all | (z << (vi.nx + vi.ny)))) return true;
    return false;
}

std::pair<Elp, Elp> reduce_qbf(const Qbf3& q, bool allow_unchecked, std::uint32_t max_vars,
                               bool force) {
    if (!allow_unchecked && !check_y_top_assumption(q, max_vars, force))
        throw std::invalid_argument(
            "formula is unsatisfiable with every universal variable set to true; the "
            "construction requires this side condition (pass allow_unchecked to override)");

    // Atoms: v<i>, nv<i> per variable in prefix order, then sat and fls.
    std::vector<std::string>   atoms;
    std::map<int, AtomId>      pos_atom, neg_atom;
    auto add_var = [&](int v) {
        pos_atom[v] = static_cast<AtomId>(atoms.size());
        atoms.push_back("v" + std::to_string(v));
        neg_atom[v] = static_cast<AtomId>(atoms.size());
        atoms.push_back("nv" + std::to_string(v));
    };
    for (int v : q.x_vars) add_var(v);
    for (int v : q.y_vars) add_var(v);
    for (int v : q.z_vars) add_var(v);
    const AtomId sat_atom = static_cast<AtomId>(atoms.size());
    atoms.push_back("sat");
    const AtomId fls_atom = static_cast<AtomId>(atoms.size());
    atoms.push_back("fls");

    std::vector<EpistemicLiteral> elits;
    auto elit = [&](AtomId a, bool inner_neg) -> ElitId {
        EpistemicLiteral e{a, inner_neg};
        for (ElitId i = 0; i < elits.size(); ++i)
            if (elits[i] == e) return i;
        elits.push_back(e);
        return static_cast<ElitId>(elits.size() - 1);
    };

    std::vector<ElpRule> shared_head, shared_tail;
    for (int x : q.x_vars) {
        ElpRule r1; // v <- enot nv
        r1.head = {pos_atom[x]};
        r1.body_epi_pos = {elit(neg_atom[x], false)};
        shared_head.push_back(r1);
        ElpRule r2; // nv <- enot v
        r2.head = {neg_atom[x]};
        r2.body_epi_pos = {elit(pos_atom[x], false)};
        shared_head.push_back(r2);
    }
    for (int y : q.y_vars) {
        ElpRule r3; // v <- not nv
        r3.head = {pos_atom[y]};
        r3.body_lits = {{neg_atom[y], true}};
        shared_head.push_back(r3);
        ElpRule r4; // nv <- not v
        r4.head = {neg_atom[y]};
        r4.body_lits = {{pos_atom[y], true}};
        shared_head.push_back(r4);
        ElpRule r5; // :- not enot v
        r5.body_epi_neg = {elit(pos_atom[y], false)};
        shared_head.push_back(r5);
        ElpRule r6; // :- not enot nv
        r6.body_epi_neg = {elit(neg_atom[y], false)};
        shared_head.push_back(r6);
    }
    for (int z : q.z_vars) {
        ElpRule r7; // v | nv
        r7.head = {pos_atom[z], neg_atom[z]};
        shared_head.push_back(r7);
        ElpRule r8; // v <- sat
        r8.head = {pos_atom[z]};
        r8.body_lits = {{sat_atom, false}};
        shared_head.push_back(r8);
        ElpRule r9; // nv <- sat
        r9.head = {neg_atom[z]};
        r9.body_lits = {{sat_atom, false}};
        shared_head.push_back(r9);
    }
    {
        ElpRule r11; // fls <- enot fls, enot not sat
        r11.head = {fls_atom};
        r11.body_epi_pos = {elit(fls_atom, false), elit(sat_atom, true)};
        shared_tail.push_back(r11);
        ElpRule r12; // :- not enot fls
        r12.body_epi_neg = {elit(fls_atom, false)};
        shared_tail.push_back(r12);
    }

    // Clause rules: sat <- l1*, l2*, l3*. For pi1 a literal maps to its
    // complementary atom (v -> nv, -v -> v); for pi2 every literal is a
    // "true" token, so sat is a fact.
    std::vector<ElpRule> rules1 = shared_head, rules2 = shared_head;
    for (const auto& c : q.clauses) {
        ElpRule c1, c2;
        c1.head = {sat_atom};
        c2.head = {sat_atom};
        for (const auto& l : c) {
            AtomId mapped = l.negated ? pos_atom[l.var] : neg_atom[l.var];
            c1.body_lits.push_back({mapped, false});
        }
        c2.body_top = 3;
        rules1.push_back(std::move(c1));
        rules2.push_back(std::move(c2));
    }
    for (const auto& r : shared_tail) {
        rules1.push_back(r);
        rules2.push_back(r);
    }

    Elp pi1(atoms, elits, std::move(rules1));
    Elp pi2(std::move(atoms), std::move(elits), std::move(rules2));
    return {std::move(pi1), std::move(pi2)};
}

} // namespace elpeq
