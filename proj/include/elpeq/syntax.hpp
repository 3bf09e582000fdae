#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "elpeq/common.hpp"

namespace elpeq {

using AtomId = std::uint32_t;
using ElitId = std::uint32_t;

// Lexical or grammatical error, with 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A literal: an atom or its default negation.
struct Literal {
    AtomId atom = 0;
    bool   negated = false;
    auto operator<=>(const Literal&) const = default;
};

// A negated body entry "not l", covering "not a" and "not not a".
// Triple negation never reaches this type: "not not not a" collapses to
// "not a" wherever it would arise (epistemic reduct).
struct NegBodyEntry {
    AtomId atom = 0;
    bool   inner_negated = false; // false: not a;  true: not not a
    auto operator<=>(const NegBodyEntry&) const = default;
};

// An epistemic literal "enot l" with l = a or not a.
struct EpistemicLiteral {
    AtomId atom = 0;
    bool   inner_negated = false; // false: enot a;  true: enot not a
    auto operator<=>(const EpistemicLiteral&) const = default;
};

// Rule of an epistemic program. Body parts are kept sorted and duplicate-free;
// an empty head denotes a constraint.
struct ElpRule {
    std::vector<AtomId>  head;
    std::vector<Literal> body_lits;
    std::vector<ElitId>  body_epi_pos; // indices into the program's E
    std::vector<ElitId>  body_epi_neg; // occurrences under default negation
    std::uint32_t        body_top = 0; // number of "true" tokens

    void normalize();
    bool operator==(const ElpRule&) const = default;
};

// Rule of an epistemic-free program; doubly negated body atoms are allowed.
struct AspRule {
    std::vector<AtomId>       head;
    std::vector<AtomId>       pos_body;
    std::vector<NegBodyEntry> neg_body;
    std::uint32_t             body_top = 0;

    void normalize();
    bool operator==(const AspRule&) const = default;
};

// Epistemic-free program: a universe of named atoms plus rules over it.
class AspProgram {
public:
    AspProgram() = default;
    AspProgram(std::vector<std::string> atoms, std::vector<AspRule> rules);

    const std::vector<std::string>& atoms() const { return atoms_; }
    const std::vector<AspRule>&     rules() const { return rules_; }
    const std::string&              atom_name(AtomId id) const { return atoms_.at(id); }
    std::optional<AtomId>           find_atom(std::string_view name) const;

    bool operator==(const AspProgram&) const = default;

private:
    std::vector<std::string> atoms_;
    std::vector<AspRule>     rules_;
};

// Epistemic program (A, E, R). E may strictly contain the epistemic literals
// occurring in the rules; it never misses one.
class Elp {
public:
    Elp() = default;
    Elp(std::vector<std::string> atoms, std::vector<EpistemicLiteral> eliterals,
        std::vector<ElpRule> rules);

    const std::vector<std::string>&      atoms() const { return atoms_; }
    const std::vector<EpistemicLiteral>& eliterals() const { return eliterals_; }
    const std::vector<ElpRule>&          rules() const { return rules_; }
    const std::string&                   atom_name(AtomId id) const { return atoms_.at(id); }
    std::optional<AtomId>                find_atom(std::string_view name) const;
    std::optional<ElitId>                find_eliteral(const EpistemicLiteral& e) const;

    // Rendered form of an epistemic literal, e.g. "enot p" / "enot not p".
    std::string eliteral_name(ElitId id) const;

    bool operator==(const Elp&) const = default;

private:
    std::vector<std::string>      atoms_;
    std::vector<EpistemicLiteral> eliterals_;
    std::vector<ElpRule>          rules_;
};

enum class ParseMode { elp, asp };

Elp        parse_elp(std::string_view text);
AspProgram parse_asp(std::string_view text);
std::variant<Elp, AspProgram> parse_program(std::string_view text, ParseMode mode);

struct RenderOptions {
    // Emit #atoms/#eliterals even when the rule text already determines them.
    bool force_directives = false;
};

std::string render(const Elp& program, const RenderOptions& opts = {});
std::string render(const AspProgram& program, const RenderOptions& opts = {});

// (A1 u A2, E1 u E2, R1 u R2); rules are deduplicated as a set, ids reassigned
// over the merged universe.
Elp union_elps(const Elp& p1, const Elp& p2);

// Rewrites both programs over the shared universe A1 u A2 and domain E1 u E2.
// Rule lists are unchanged. Equivalence operations require aligned inputs.
std::pair<Elp, Elp> align(const Elp& p1, const Elp& p2);

// Conversion for programs without epistemic parts; throws std::invalid_argument
// if some rule mentions an epistemic literal.
AspProgram to_asp_program(const Elp& program);

} // namespace elpeq
