#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "elpeq/asp.hpp"
#include "elpeq/epistemic.hpp"
#include "elpeq/equivalence.hpp"
#include "elpeq/json_io.hpp"
#include "elpeq/qbf.hpp"
#include "elpeq/syntax.hpp"

namespace {

// Exit codes: 0 positive/equivalent, 1 not equivalent, 2 usage/parse/guard
// error, 3 no solution.
constexpr int kOk = 0;
constexpr int kNotEquivalent = 1;
constexpr int kError = 2;
constexpr int kNoSolution = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonOpts {
    unsigned    max_atoms;
    unsigned    max_eliterals;
    bool        force = false;
    std::string format = "text";
    unsigned    jobs = 1;

    CommonOpts() {
        auto env = elpeq::Limits::from_env();
        max_atoms = env.max_atoms;
        max_eliterals = env.max_eliterals;
    }
    elpeq::Limits limits() const { return {max_atoms, max_eliterals, force}; }
    bool          json() const { return format != "text"; }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--max-atoms", o.max_atoms, "Atom guard for exhaustive scans")
        ->capture_default_str();
    cmd->add_option("--max-eliterals", o.max_eliterals, "Epistemic-literal guard")
        ->capture_default_str();
    cmd->add_flag("--force", o.force, "Override the guards (bit-vector cap still applies)");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "json-like"}))
        ->capture_default_str();
    cmd->add_option("--jobs", o.jobs, "Parallelism for fact-set scans")->capture_default_str();
}

std::string interp_text(elpeq::Interpretation i, const std::vector<std::string>& atoms) {
    std::string out = "{";
    bool        first = true;
    for (elpeq::AtomId a = 0; a < atoms.size(); ++a)
        if (i.contains(a)) {
            if (!first) out += ", ";
            out += atoms[a];
            first = false;
        }
    return out + "}";
}

std::string views_text(const std::vector<elpeq::Interpretation>& m,
                       const std::vector<std::string>& atoms) {
    std::string out = "{";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ", ";
        out += interp_text(m[i], atoms);
    }
    return out + "}";
}

std::string guess_text(elpeq::Guess g, const elpeq::Elp& p) {
    std::string out = "{";
    bool        first = true;
    for (elpeq::ElitId e = 0; e < p.eliterals().size(); ++e)
        if (g.contains(e)) {
            if (!first) out += ", ";
            out += p.eliteral_name(e);
            first = false;
        }
    return out + "}";
}

int cmd_solve(const std::string& file, const std::string& mode, const CommonOpts& o) {
    auto limits = o.limits();
    if (mode == "asp") {
        auto p = elpeq::parse_asp(slurp(file));
        auto as = elpeq::answer_sets(p, limits);
        if (o.json()) {
            elpeq::Json out;
            out["answer_sets"] = elpeq::interpretations_to_json(as, p.atoms());
            std::cout << out.dump(2) << "\n";
        } else {
            if (as.empty()) std::cout << "no answer sets\n";
            for (const auto& m : as) std::cout << interp_text(m, p.atoms()) << "\n";
        }
        return as.empty() ? kNoSolution : kOk;
    }
    auto p = elpeq::parse_elp(slurp(file));
    auto cwvs = elpeq::candidate_world_views(p, limits);
    auto wvs = elpeq::world_views(p, limits);
    if (o.json()) {
        elpeq::Json out;
        out["cwvs"] = elpeq::world_views_to_json(cwvs, p);
        out["wvs"] = elpeq::world_views_to_json(wvs, p);
        std::cout << out.dump(2) << "\n";
    } else {
        if (cwvs.empty()) std::cout << "no candidate world views\n";
        for (const auto& w : cwvs)
            std::cout << "cwv guess=" << guess_text(w.guess, p) << " views="
                      << views_text(w.views, p.atoms()) << "\n";
        for (const auto& w : wvs)
            std::cout << "wv  guess=" << guess_text(w.guess, p) << " views="
                      << views_text(w.views, p.atoms()) << "\n";
    }
    return cwvs.empty() ? kNoSolution : kOk;
}

int cmd_equiv(const std::string& file1, const std::string& file2, const std::string& notion,
              const CommonOpts& o) {
    auto limits = o.limits();
    if (notion == "asp-uniform") {
        auto        p1 = elpeq::parse_asp(slurp(file1));
        auto        p2 = elpeq::parse_asp(slurp(file2));
        // Shared universe: union of both, in first-program-then-second order.
        std::vector<std::string> atoms = p1.atoms();
        for (const auto& a : p2.atoms())
            if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(a);
        auto remap = [&](const elpeq::AspProgram& p) {
            std::vector<elpeq::AspRule> rules = p.rules();
            std::vector<elpeq::AtomId>  map(p.atoms().size());
            for (elpeq::AtomId i = 0; i < p.atoms().size(); ++i)
                map[i] = static_cast<elpeq::AtomId>(
                    std::find(atoms.begin(), atoms.end(), p.atoms()[i]) - atoms.begin());
            for (auto& r : rules) {
                for (auto& a : r.head) a = map[a];
                for (auto& a : r.pos_body) a = map[a];
                for (auto& e : r.neg_body) e.atom = map[e.atom];
                r.normalize();
            }
            return elpeq::AspProgram(atoms, std::move(rules));
        };
        auto a1 = remap(p1);
        auto a2 = remap(p2);
        auto v = elpeq::asp_uniform_equivalent(a1, a2, limits);
        if (o.json()) {
            std::cout << elpeq::asp_verdict_to_json(v, a1).dump(2) << "\n";
        } else if (v.equivalent) {
            std::cout << "uniformly equivalent (same UE-models)\n";
        } else {
            std::cout << "not uniformly equivalent\n";
            if (v.ue_witness)
                std::cout << "  UE-model only in the " << (v.ue_witness_in_first ? "first" : "second")
                          << " program: (" << interp_text(v.ue_witness->x, a1.atoms()) << ", "
                          << interp_text(v.ue_witness->y, a1.atoms()) << ")\n";
            if (v.fact_witness) {
                std::cout << "  witness facts D = " << interp_text(*v.fact_witness, a1.atoms())
                          << "\n  answer sets left:  " << views_text(v.left_answer_sets, a1.atoms())
                          << "\n  answer sets right: " << views_text(v.right_answer_sets, a1.atoms())
                          << "\n";
            }
        }
        return v.equivalent ? kOk : kNotEquivalent;
    }

    elpeq::ViewKind kind =
        (notion == "ordinary-cwv" || notion == "uniform-cwv") ? elpeq::ViewKind::cwv
                                                              : elpeq::ViewKind::wv;
    bool uniform = notion == "uniform-cwv" || notion == "uniform-wv";
    auto parsed1 = elpeq::parse_elp(slurp(file1));
    auto parsed2 = elpeq::parse_elp(slurp(file2));
    auto [p1, p2] = elpeq::align(parsed1, parsed2);
    elpeq::Verdict v = uniform ? elpeq::uniformly_equivalent(p1, p2, kind, limits, o.jobs)
                               : elpeq::ordinary_equivalent(p1, p2, kind, limits);
    if (o.json()) {
        std::cout << elpeq::verdict_to_json(v, p1).dump(2) << "\n";
    } else if (v.equivalent) {
        std::cout << (uniform ? "uniformly " : "") << "equivalent (" << to_string(kind) << ")\n";
    } else {
        std::cout << "not " << (uniform ? "uniformly " : "") << "equivalent (" << to_string(kind)
                  << ")\n  witness facts D = " << interp_text(v.witness->facts, p1.atoms()) << "\n";
        std::cout << "  left views:\n";
        for (const auto& vs : v.witness->left)
            std::cout << "    " << views_text(vs, p1.atoms()) << "\n";
        if (v.witness->left.empty()) std::cout << "    (none)\n";
        std::cout << "  right views:\n";
        for (const auto& vs : v.witness->right)
            std::cout << "    " << views_text(vs, p1.atoms()) << "\n";
        if (v.witness->right.empty()) std::cout << "    (none)\n";
    }
    return v.equivalent ? kOk : kNotEquivalent;
}

int cmd_uef(const std::string& file, const std::string& kind_name,
            const std::string& diff_file, const CommonOpts& o) {
    auto limits = o.limits();
    auto kind = kind_name == "wv" ? elpeq::ViewKind::wv : elpeq::ViewKind::cwv;
    auto parsed = elpeq::parse_elp(slurp(file));
    if (!diff_file.empty()) {
        auto parsed2 = elpeq::parse_elp(slurp(diff_file));
        auto [p1, p2] = elpeq::align(parsed, parsed2);
        auto v = elpeq::ue_functions_coincide(p1, p2, kind, limits);
        if (o.json()) {
            std::cout << elpeq::verdict_to_json(v, p1).dump(2) << "\n";
        } else if (v.equivalent) {
            std::cout << "coincide\n";
        } else {
            std::cout << "differ at guess=" << guess_text(*v.witness->guess, p1)
                      << " facts=" << interp_text(v.witness->facts, p1.atoms()) << "\n";
            std::cout << "  left:  "
                      << (v.witness->left.empty() ? "{}" : views_text(v.witness->left[0], p1.atoms()))
                      << "\n  right: "
                      << (v.witness->right.empty() ? "{}"
                                                   : views_text(v.witness->right[0], p1.atoms()))
                      << "\n";
        }
        return v.equivalent ? kOk : kNotEquivalent;
    }
    auto table = elpeq::ue_function(parsed, kind, limits);
    if (o.json()) {
        std::cout << elpeq::ue_table_to_json(table, parsed).dump(2) << "\n";
    } else {
        if (table.entries.empty()) std::cout << "empty table\n";
        for (const auto& e : table.entries)
            std::cout << "(" << guess_text(e.guess, parsed) << ", "
                      << interp_text(e.facts, parsed.atoms()) << ") -> "
                      << views_text(e.view, parsed.atoms()) << "\n";
    }
    return kOk;
}

int cmd_qbf(const std::string& file, const std::string& out_dir, bool eval, bool verify,
            bool allow_unchecked, const CommonOpts& o) {
    auto q = elpeq::parse_qbf3(slurp(file));
    if (eval) {
        std::cout << (elpeq::eval_qbf3(q, 12, o.force) ? "true" : "false") << "\n";
        return kOk;
    }
    auto [pi1, pi2] = elpeq::reduce_qbf(q, allow_unchecked, 12, o.force);
    std::filesystem::create_directories(out_dir);
    {
        std::ofstream f1(std::filesystem::path(out_dir) / "pi1.elp");
        f1 << elpeq::render(pi1);
        std::ofstream f2(std::filesystem::path(out_dir) / "pi2.elp");
        f2 << elpeq::render(pi2);
    }
    std::cout << "wrote pi1.elp and pi2.elp to " << out_dir << "\n";
    if (verify) {
        bool truth = elpeq::eval_qbf3(q, 12, o.force);
        auto limits = o.limits();
        bool has_cwv = !elpeq::candidate_world_views(pi1, limits).empty();
        bool pass = has_cwv == truth;
        std::cout << "CWV exists for pi1: " << (has_cwv ? "yes" : "no")
                  << "; matches oracle: " << (pass ? "pass" : "FAIL") << "\n";
        if (!pass) return kError;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"elpeq: an exact workbench for ground epistemic logic programs"};
    app.require_subcommand(1);

    CommonOpts  o;
    std::string file, file2, mode = "elp", notion, kind = "cwv", diff_file, out_dir = ".";
    bool        eval = false, verify = false, allow_unchecked = false;

    auto* solve = app.add_subcommand("solve", "Answer sets (asp) or world views (elp)");
    solve->add_option("file", file, "Program file")->required();
    solve->add_option("--mode", mode, "Input language")->check(CLI::IsMember({"elp", "asp"}));
    add_common(solve, o);

    auto* equiv = app.add_subcommand("equiv", "Decide program equivalence with a witness");
    equiv->add_option("file1", file, "First program")->required();
    equiv->add_option("file2", file2, "Second program")->required();
    equiv->add_option("--notion", notion, "Equivalence notion")
        ->required()
        ->check(CLI::IsMember(
            {"ordinary-cwv", "ordinary-wv", "uniform-cwv", "uniform-wv", "asp-uniform"}));
    add_common(equiv, o);

    auto* uef = app.add_subcommand("uef", "Print or diff the sparse UE-function table");
    uef->add_option("file", file, "Program file")->required();
    uef->add_option("--kind", kind, "View kind")->check(CLI::IsMember({"cwv", "wv"}));
    uef->add_option("--diff", diff_file, "Second program to compare against");
    add_common(uef, o);

    auto* qbf = app.add_subcommand("qbf", "Generate the hardness-reduction program pair");
    qbf->add_option("file", file, "QDIMACS input")->required();
    qbf->add_option("--out-dir", out_dir, "Where to write pi1.elp / pi2.elp")
        ->capture_default_str();
    qbf->add_flag("--eval", eval, "Print the brute-force truth value and exit");
    qbf->add_flag("--verify", verify, "Check CWV existence of pi1 against the oracle");
    qbf->add_flag("--allow-unchecked", allow_unchecked,
                  "Accept instances failing the universal-block side condition");
    add_common(qbf, o);

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return cmd_solve(file, mode, o);
        if (equiv->parsed()) return cmd_equiv(file, file2, notion, o);
        if (uef->parsed()) return cmd_uef(file, kind, diff_file, o);
        if (qbf->parsed()) return cmd_qbf(file, out_dir, eval, verify, allow_unchecked, o);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kError : kOk;
    } catch (const elpeq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kError;
    } catch (const elpeq::GuardError& e) {
        std::cerr << "guard error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
