#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "elpeq/common.hpp"
#include "elpeq/syntax.hpp"

namespace elpeq {

struct QbfLiteral {
    int  var = 0; // variable number as written in the input
    bool negated = false;
    bool operator==(const QbfLiteral&) const = default;
};

// An exists-forall-exists prefix formula over clauses of exactly three
// literals (duplicated literals act as padding).
struct Qbf3 {
    std::vector<int> x_vars;
    std::vector<int> y_vars;
    std::vector<int> z_vars;
    std::vector<std::array<QbfLiteral, 3>> clauses;

    std::size_t var_count() const { return x_vars.size() + y_vars.size() + z_vars.size(); }
};

// QDIMACS-style input: "p cnf <vars> <clauses>", prefix lines "e .. 0",
// "a .. 0", "e .. 0" in that order, then clause lines of three nonzero
// integers terminated by 0. "c" lines are comments.
Qbf3 parse_qbf3(std::string_view text);

// Exact truth value by exhaustive exists-forall-exists recursion.
bool eval_qbf3(const Qbf3& q, std::uint32_t max_vars = 12, bool force = false);

// Whether the matrix is satisfiable once every universal variable is fixed to
// true: the side condition the hardness construction relies on.
bool check_y_top_assumption(const Qbf3& q, std::uint32_t max_vars = 12, bool force = false);

// The hardness construction: two ELPs over atoms {v<i>, nv<i>} + {sat, fls}
// such that pi1 has a candidate world view iff the formula is true, and the
// pair is uniformly equivalent iff it is false. pi2 differs from pi1 only in
// the clause rules, whose bodies become "true" tokens. Rejects instances
// failing the y-top assumption unless `allow_unchecked`.
std::pair<Elp, Elp> reduce_qbf(const Qbf3& q, bool allow_unchecked = false,
                               std::uint32_t max_vars = 12, bool force = false);

} // namespace elpeq
