#include "elpeq/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace elpeq {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool is_reserved(std::string_view w) {
    return w == "not" || w == "enot" || w == "true";
}

} // namespace

void ElpRule::normalize() {
    sort_unique(head);
    sort_unique(body_lits);
    sort_unique(body_epi_pos);
    sort_unique(body_epi_neg);
}

void AspRule::normalize() {
    sort_unique(head);
    sort_unique(pos_body);
    sort_unique(neg_body);
}

AspProgram::AspProgram(std::vector<std::string> atoms, std::vector<AspRule> rules)
    : atoms_(std::move(atoms)), rules_(std::move(rules)) {
    std::set<std::string_view> seen;
    for (const auto& a : atoms_) {
        if (!seen.insert(a).second)
            throw std::invalid_argument("duplicate atom in universe: " + a);
    }
    for (auto& r : rules_) {
        r.normalize();
        for (AtomId a : r.head)
            if (a >= atoms_.size()) throw std::invalid_argument("atom id out of range");
        for (AtomId a : r.pos_body)
            if (a >= atoms_.size()) throw std::invalid_argument("atom id out of range");
        for (const auto& e : r.neg_body)
            if (e.atom >= atoms_.size()) throw std::invalid_argument("atom id out of range");
    }
}

std::optional<AtomId> AspProgram::find_atom(std::string_view name) const {
    for (AtomId i = 0; i < atoms_.size(); ++i)
        if (atoms_[i] == name) return i;
    return std::nullopt;
}

Elp::Elp(std::vector<std::string> atoms, std::vector<EpistemicLiteral> eliterals,
         std::vector<ElpRule> rules)
    : atoms_(std::move(atoms)), eliterals_(std::move(eliterals)), rules_(std::move(rules)) {
    std::set<std::string_view> seen;
    for (const auto& a : atoms_) {
        if (!seen.insert(a).second)
            throw std::invalid_argument("duplicate atom in universe: " + a);
    }
    std::set<EpistemicLiteral> eseen;
    for (const auto& e : eliterals_) {
        if (e.atom >= atoms_.size()) throw std::invalid_argument("eliteral atom out of range");
        if (!eseen.insert(e).second)
            throw std::invalid_argument("duplicate epistemic literal in domain");
    }
    for (auto& r : rules_) {
        r.normalize();
        for (AtomId a : r.head)
            if (a >= atoms_.size()) throw std::invalid_argument("atom id out of range");
        for (const auto& l : r.body_lits)
            if (l.atom >= atoms_.size()) throw std::invalid_argument("atom id out of range");
        for (ElitId e : r.body_epi_pos)
            if (e >= eliterals_.size()) throw std::invalid_argument("eliteral id out of range");
        for (ElitId e : r.body_epi_neg)
            if (e >= eliterals_.size()) throw std::invalid_argument("eliteral id out of range");
    }
}

std::optional<AtomId> Elp::find_atom(std::string_view name) const {
    for (AtomId i = 0; i < atoms_.size(); ++i)
        if (atoms_[i] == name) return i;
    return std::nullopt;
}

std::optional<ElitId> Elp::find_eliteral(const EpistemicLiteral& e) const {
    for (ElitId i = 0; i < eliterals_.size(); ++i)
        if (eliterals_[i] == e) return i;
    return std::nullopt;
}

std::string Elp::eliteral_name(ElitId id) const {
    const auto& e = eliterals_.at(id);
    std::string s = "enot ";
    if (e.inner_negated) s += "not ";
    s += atoms_.at(e.atom);
    return s;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum Kind { Ident, Punct, End } kind = End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token        next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_ws();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_ = Token{Token::End, "", line_, col_};
            return;
        }
        char c = text_[pos_];
        if (c == '-' || c == '~') {
            throw ParseError(std::string("unexpected '") + c +
                                 "': strong negation is not supported; simulate it with a "
                                 "fresh atom and a constraint excluding both",
                             line_, col_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                bump();
            tok_ = Token{Token::Ident, std::string(text_.substr(start, pos_ - start)), tok_.line,
                         tok_.col};
            return;
        }
        if (c == '#') {
            std::size_t start = pos_;
            bump();
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
                bump();
            tok_ = Token{Token::Ident, std::string(text_.substr(start, pos_ - start)), tok_.line,
                         tok_.col};
            return;
        }
        if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            bump();
            bump();
            tok_ = Token{Token::Punct, ":-", tok_.line, tok_.col};
            return;
        }
        if (c == '.' || c == ',' || c == '|' || c == '{' || c == '}') {
            bump();
            tok_ = Token{Token::Punct, std::string(1, c), tok_.line, tok_.col};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t      pos_ = 0;
    int              line_ = 1, col_ = 1;
    Token            tok_;
};

class Parser {
public:
    Parser(std::string_view text, ParseMode mode) : lex_(text), mode_(mode) {}

    std::variant<Elp, AspProgram> run() {
        while (lex_.peek().kind != Token::End) statement();
        if (mode_ == ParseMode::elp)
            return Elp(std::move(atoms_), std::move(elits_), std::move(elp_rules_));
        return AspProgram(std::move(atoms_), std::move(asp_rules_));
    }

private:
    [[noreturn]] void fail(const std::string& msg, const Token& t) {
        throw ParseError(msg, t.line, t.col);
    }

    Token expect_punct(const std::string& p) {
        Token t = lex_.next();
        if (t.kind != Token::Punct || t.text != p)
            fail("expected '" + p + "', got '" + (t.kind == Token::End ? "end of input" : t.text) +
                     "'",
                 t);
        return t;
    }

    bool peek_is(const std::string& text) const {
        return lex_.peek().kind != Token::End && lex_.peek().text == text;
    }

    AtomId atom_ref(const Token& t, bool declared) {
        if (t.kind != Token::Ident || t.text.empty() || t.text[0] == '#')
            fail("expected atom name, got '" + t.text + "'", t);
        if (is_reserved(t.text)) fail("reserved word '" + t.text + "' cannot name an atom", t);
        if (!std::islower(static_cast<unsigned char>(t.text[0])))
            fail("atom names start with a lowercase letter: '" + t.text + "'", t);
        auto it = atom_index_.find(t.text);
        if (it != atom_index_.end()) {
            if (declared && declared_atoms_.count(it->second))
                fail("duplicate atom declaration '" + t.text + "'", t);
            if (declared) declared_atoms_.insert(it->second);
            return it->second;
        }
        AtomId id = static_cast<AtomId>(atoms_.size());
        atoms_.push_back(t.text);
        atom_index_.emplace(t.text, id);
        if (declared) declared_atoms_.insert(id);
        return id;
    }

    ElitId elit_ref(const EpistemicLiteral& e, const Token& at, bool declared) {
        for (ElitId i = 0; i < elits_.size(); ++i)
            if (elits_[i] == e) {
                if (declared && declared_elits_.count(i))
                    fail("duplicate epistemic literal declaration", at);
                if (declared) declared_elits_.insert(i);
                return i;
            }
        elits_.push_back(e);
        if (declared) declared_elits_.insert(static_cast<ElitId>(elits_.size() - 1));
        return static_cast<ElitId>(elits_.size() - 1);
    }

    void statement() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Ident && t.text == "#atoms") {
            lex_.next();
            directive_atoms();
            return;
        }
        if (t.kind == Token::Ident && t.text == "#eliterals") {
            lex_.next();
            directive_eliterals(t);
            return;
        }
        if (t.kind == Token::Ident && t.text[0] == '#')
            fail("unknown directive '" + t.text + "'", t);
        rule();
    }

    void directive_atoms() {
        expect_punct("{");
        if (!peek_is("}")) {
            atom_ref(lex_.next(), /*declared=*/true);
            while (peek_is(",")) {
                lex_.next();
                atom_ref(lex_.next(), /*declared=*/true);
            }
        }
        expect_punct("}");
        expect_punct(".");
    }

    void directive_eliterals(const Token& at) {
        if (mode_ == ParseMode::asp) fail("#eliterals is not allowed in asp mode", at);
        expect_punct("{");
        if (!peek_is("}")) {
            elit_decl();
            while (peek_is(",")) {
                lex_.next();
                elit_decl();
            }
        }
        expect_punct("}");
        expect_punct(".");
    }

    void elit_decl() {
        Token t = lex_.next();
        if (t.kind != Token::Ident || t.text != "enot")
            fail("epistemic literal must start with 'enot'", t);
        EpistemicLiteral e;
        if (peek_is("not")) {
            lex_.next();
            e.inner_negated = true;
        }
        e.atom = atom_ref(lex_.next(), false);
        elit_ref(e, t, /*declared=*/true);
    }

    void rule() {
        ElpRule er;
        AspRule ar;
        Token   first = lex_.peek();
        bool    have_head = first.kind == Token::Ident && first.text != "not" &&
                         first.text != "enot" && first.text != "true";
        if (have_head) {
            er.head.push_back(atom_ref(lex_.next(), false));
            while (peek_is("|")) {
                lex_.next();
                er.head.push_back(atom_ref(lex_.next(), false));
            }
        }
        if (peek_is(":-")) {
            lex_.next();
            body_elem(er, ar);
            while (peek_is(",")) {
                lex_.next();
                body_elem(er, ar);
            }
        } else if (!have_head) {
            fail("expected a rule or directive, got '" + first.text + "'", first);
        }
        expect_punct(".");
        if (mode_ == ParseMode::elp) {
            elp_rules_.push_back(std::move(er));
        } else {
            ar.head = std::move(er.head);
            asp_rules_.push_back(std::move(ar));
        }
    }

    void body_elem(ElpRule& er, AspRule& ar) {
        Token t = lex_.next();
        if (t.kind != Token::Ident) fail("expected body element, got '" + t.text + "'", t);
        if (t.text == "true") {
            ++er.body_top;
            ++ar.body_top;
            return;
        }
        if (t.text == "enot") {
            epi_elem(t, /*outer_negated=*/false, er);
            return;
        }
        if (t.text == "not") {
            Token u = lex_.next();
            if (u.kind != Token::Ident) fail("expected atom, 'not' or 'enot' after 'not'", u);
            if (u.text == "enot") {
                epi_elem(t, /*outer_negated=*/true, er);
                return;
            }
            if (u.text == "not") {
                Token v = lex_.next();
                if (v.kind != Token::Ident || v.text == "not" || v.text == "enot")
                    fail("expected atom after 'not not'", v);
                if (mode_ == ParseMode::elp)
                    fail("'not not' on a plain atom is only allowed in asp mode", t);
                ar.neg_body.push_back({atom_ref(v, false), true});
                return;
            }
            AtomId a = atom_ref(u, false);
            if (mode_ == ParseMode::elp)
                er.body_lits.push_back({a, true});
            else
                ar.neg_body.push_back({a, false});
            return;
        }
        AtomId a = atom_ref(t, false);
        if (mode_ == ParseMode::elp)
            er.body_lits.push_back({a, false});
        else
            ar.pos_body.push_back(a);
    }

    void epi_elem(const Token& at, bool outer_negated, ElpRule& er) {
        if (mode_ == ParseMode::asp)
            fail("epistemic negation 'enot' is not allowed in asp mode", at);
        EpistemicLiteral e;
        if (peek_is("not")) {
            lex_.next();
            e.inner_negated = true;
        }
        Token t = lex_.next();
        if (t.kind != Token::Ident || t.text == "not" || t.text == "enot")
            fail("expected atom inside epistemic literal", t);
        e.atom = atom_ref(t, false);
        ElitId id = elit_ref(e, at, false);
        if (outer_negated)
            er.body_epi_neg.push_back(id);
        else
            er.body_epi_pos.push_back(id);
    }

    Lexer                          lex_;
    ParseMode                      mode_;
    std::vector<std::string>       atoms_;
    std::map<std::string, AtomId>  atom_index_;
    std::set<AtomId>               declared_atoms_;
    std::vector<EpistemicLiteral>  elits_;
    std::set<ElitId>               declared_elits_;
    std::vector<ElpRule>           elp_rules_;
    std::vector<AspRule>           asp_rules_;
};

} // namespace

std::variant<Elp, AspProgram> parse_program(std::string_view text, ParseMode mode) {
    return Parser(text, mode).run();
}

Elp parse_elp(std::string_view text) {
    return std::get<Elp>(parse_program(text, ParseMode::elp));
}

AspProgram parse_asp(std::string_view text) {
    return std::get<AspProgram>(parse_program(text, ParseMode::asp));
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

void render_head(std::ostringstream& out, const std::vector<AtomId>& head,
                 const std::vector<std::string>& atoms) {
    for (std::size_t i = 0; i < head.size(); ++i) {
        if (i) out << " | ";
        out << atoms[head[i]];
    }
}

struct OccurringElp {
    std::vector<AtomId> atoms; // first-occurrence order over rendered rules
    std::vector<ElitId> elits;
};

void note_atom(std::vector<AtomId>& order, std::vector<bool>& seen, AtomId a) {
    if (!seen[a]) {
        seen[a] = true;
        order.push_back(a);
    }
}

} // namespace

std::string render(const Elp& p, const RenderOptions& opts) {
    const auto& atoms = p.atoms();
    const auto& elits = p.eliterals();

    // What a re-parse of the rule text alone would reconstruct.
    std::vector<AtomId> occ_atoms;
    std::vector<ElitId> occ_elits;
    std::vector<bool>   atom_seen(atoms.size(), false);
    std::vector<bool>   elit_seen(elits.size(), false);
    auto                note_elit = [&](ElitId e) {
        if (!elit_seen[e]) {
            elit_seen[e] = true;
            occ_elits.push_back(e);
            note_atom(occ_atoms, atom_seen, elits[e].atom);
        }
    };
    // first-occurrence order as a reparse of the printed rules would see it
    for (const auto& r : p.rules()) {
        for (AtomId a : r.head) note_atom(occ_atoms, atom_seen, a);
        for (const auto& l : r.body_lits)
            if (!l.negated) note_atom(occ_atoms, atom_seen, l.atom);
        for (const auto& l : r.body_lits)
            if (l.negated) note_atom(occ_atoms, atom_seen, l.atom);
        for (ElitId e : r.body_epi_pos) note_elit(e);
        for (ElitId e : r.body_epi_neg) note_elit(e);
    }

    std::vector<AtomId> universe_order(atoms.size());
    for (AtomId i = 0; i < atoms.size(); ++i) universe_order[i] = i;
    std::vector<ElitId> domain_order(elits.size());
    for (ElitId i = 0; i < elits.size(); ++i) domain_order[i] = i;

    bool emit_elits = opts.force_directives || occ_elits != domain_order;
    // A reparse reads any #eliterals directive before the rules, so its atoms
    // come first in the reconstructed universe.
    std::vector<AtomId> reparse_atoms;
    if (emit_elits) {
        std::vector<bool> seen(atoms.size(), false);
        for (const auto& e : elits) note_atom(reparse_atoms, seen, e.atom);
        for (AtomId a : occ_atoms) note_atom(reparse_atoms, seen, a);
    } else {
        reparse_atoms = occ_atoms;
    }
    bool emit_atoms = opts.force_directives || reparse_atoms != universe_order;

    std::ostringstream out;
    if (emit_atoms) {
        out << "#atoms {";
        for (AtomId i = 0; i < atoms.size(); ++i) out << (i ? ", " : "") << atoms[i];
        out << "}.\n";
    }
    if (emit_elits) {
        out << "#eliterals {";
        for (ElitId i = 0; i < elits.size(); ++i) out << (i ? ", " : "") << p.eliteral_name(i);
        out << "}.\n";
    }
    for (const auto& r : p.rules()) {
        render_head(out, r.head, atoms);
        bool has_body = r.body_top || !r.body_lits.empty() || !r.body_epi_pos.empty() ||
                        !r.body_epi_neg.empty();
        if (has_body) {
            out << (r.head.empty() ? ":- " : " :- ");
            bool first = true;
            auto sep = [&] {
                if (!first) out << ", ";
                first = false;
            };
            for (std::uint32_t i = 0; i < r.body_top; ++i) {
                sep();
                out << "true";
            }
            for (const auto& l : r.body_lits)
                if (!l.negated) {
                    sep();
                    out << atoms[l.atom];
                }
            for (const auto& l : r.body_lits)
                if (l.negated) {
                    sep();
                    out << "not " << atoms[l.atom];
                }
            for (ElitId e : r.body_epi_pos) {
                sep();
                out << p.eliteral_name(e);
            }
            for (ElitId e : r.body_epi_neg) {
                sep();
                out << "not " << p.eliteral_name(e);
            }
        }
        out << ".\n";
    }
    return out.str();
}

std::string render(const AspProgram& p, const RenderOptions& opts) {
    const auto& atoms = p.atoms();

    std::vector<AtomId> occ_atoms;
    std::vector<bool>   atom_seen(atoms.size(), false);
    for (const auto& r : p.rules()) {
        for (AtomId a : r.head) note_atom(occ_atoms, atom_seen, a);
        for (AtomId a : r.pos_body) note_atom(occ_atoms, atom_seen, a);
        for (const auto& e : r.neg_body)
            if (!e.inner_negated) note_atom(occ_atoms, atom_seen, e.atom);
        for (const auto& e : r.neg_body)
            if (e.inner_negated) note_atom(occ_atoms, atom_seen, e.atom);
    }
    std::vector<AtomId> universe_order(atoms.size());
    for (AtomId i = 0; i < atoms.size(); ++i) universe_order[i] = i;

    std::ostringstream out;
    if (opts.force_directives || occ_atoms != universe_order) {
        out << "#atoms {";
        for (AtomId i = 0; i < atoms.size(); ++i) out << (i ? ", " : "") << atoms[i];
        out << "}.\n";
    }
    for (const auto& r : p.rules()) {
        render_head(out, r.head, atoms);
        bool has_body = r.body_top || !r.pos_body.empty() || !r.neg_body.empty();
        if (has_body) {
            out << (r.head.empty() ? ":- " : " :- ");
            bool first = true;
            auto sep = [&] {
                if (!first) out << ", ";
                first = false;
            };
            for (std::uint32_t i = 0; i < r.body_top; ++i) {
                sep();
                out << "true";
            }
            for (AtomId a : r.pos_body) {
                sep();
                out << atoms[a];
            }
            for (const auto& e : r.neg_body)
                if (!e.inner_negated) {
                    sep();
                    out << "not " << atoms[e.atom];
                }
            for (const auto& e : r.neg_body)
                if (e.inner_negated) {
                    sep();
                    out << "not not " << atoms[e.atom];
                }
        }
        out << ".\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Union, alignment, conversion
// ---------------------------------------------------------------------------

namespace {

// Index remapping of p's atoms/eliterals into a merged vocabulary.
struct Remap {
    std::vector<AtomId> atom;
    std::vector<ElitId> elit;
};

Remap build_remap(const Elp& p, std::vector<std::string>& atoms,
                  std::vector<EpistemicLiteral>& elits) {
    Remap m;
    m.atom.reserve(p.atoms().size());
    for (const auto& name : p.atoms()) {
        auto it = std::find(atoms.begin(), atoms.end(), name);
        if (it == atoms.end()) {
            atoms.push_back(name);
            m.atom.push_back(static_cast<AtomId>(atoms.size() - 1));
        } else {
            m.atom.push_back(static_cast<AtomId>(it - atoms.begin()));
        }
    }
    m.elit.reserve(p.eliterals().size());
    for (const auto& e : p.eliterals()) {
        EpistemicLiteral mapped{m.atom[e.atom], e.inner_negated};
        auto             it = std::find(elits.begin(), elits.end(), mapped);
        if (it == elits.end()) {
            elits.push_back(mapped);
            m.elit.push_back(static_cast<ElitId>(elits.size() - 1));
        } else {
            m.elit.push_back(static_cast<ElitId>(it - elits.begin()));
        }
    }
    return m;
}

ElpRule remap_rule(const ElpRule& r, const Remap& m) {
    ElpRule out;
    out.body_top = r.body_top;
    for (AtomId a : r.head) out.head.push_back(m.atom[a]);
    for (const auto& l : r.body_lits) out.body_lits.push_back({m.atom[l.atom], l.negated});
    for (ElitId e : r.body_epi_pos) out.body_epi_pos.push_back(m.elit[e]);
    for (ElitId e : r.body_epi_neg) out.body_epi_neg.push_back(m.elit[e]);
    out.normalize();
    return out;
}

} // namespace

Elp union_elps(const Elp& p1, const Elp& p2) {
    std::vector<std::string>      atoms;
    std::vector<EpistemicLiteral> elits;
    Remap                         m1 = build_remap(p1, atoms, elits);
    Remap                         m2 = build_remap(p2, atoms, elits);

    std::vector<ElpRule> rules;
    auto add = [&](const ElpRule& r, const Remap& m) {
        ElpRule mapped = remap_rule(r, m);
        if (std::find(rules.begin(), rules.end(), mapped) == rules.end())
            rules.push_back(std::move(mapped));
    };
    for (const auto& r : p1.rules()) add(r, m1);
    for (const auto& r : p2.rules()) add(r, m2);
    return Elp(std::move(atoms), std::move(elits), std::move(rules));
}

std::pair<Elp, Elp> align(const Elp& p1, const Elp& p2) {
    std::vector<std::string>      atoms;
    std::vector<EpistemicLiteral> elits;
    Remap                         m1 = build_remap(p1, atoms, elits);
    Remap                         m2 = build_remap(p2, atoms, elits);

    std::vector<ElpRule> r1, r2;
    for (const auto& r : p1.rules()) r1.push_back(remap_rule(r, m1));
    for (const auto& r : p2.rules()) r2.push_back(remap_rule(r, m2));
    Elp a1(atoms, elits, std::move(r1));
    Elp a2(std::move(atoms), std::move(elits), std::move(r2));
    return {std::move(a1), std::move(a2)};
}

AspProgram to_asp_program(const Elp& p) {
    std::vector<AspRule> rules;
    rules.reserve(p.rules().size());
    for (const auto& r : p.rules()) {
        if (!r.body_epi_pos.empty() || !r.body_epi_neg.empty())
            throw std::invalid_argument("program mentions epistemic literals");
        AspRule ar;
        ar.head = r.head;
        ar.body_top = r.body_top;
        for (const auto& l : r.body_lits) {
            if (l.negated)
                ar.neg_body.push_back({l.atom, false});
            else
                ar.pos_body.push_back(l.atom);
        }
        ar.normalize();
        rules.push_back(std::move(ar));
    }
    return AspProgram(p.atoms(), std::move(rules));
}

} // namespace elpeq
