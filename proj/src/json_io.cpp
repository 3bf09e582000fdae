#include "elpeq/json_io.hpp"

namespace elpeq {

Json interpretation_to_json(Interpretation i, const std::vector<std::string>& atoms) {
    Json out = Json::array();
    for (AtomId a = 0; a < atoms.size(); ++a)
        if (i.contains(a)) out.push_back(atoms[a]);
    return out;
}

Json interpretations_to_json(const std::vector<Interpretation>& m,
                             const std::vector<std::string>& atoms) {
    Json out = Json::array();
    for (const auto& i : m) out.push_back(interpretation_to_json(i, atoms));
    return out;
}

Json guess_to_json(Guess phi, const Elp& p) {
    Json out = Json::array();
    for (ElitId e = 0; e < p.eliterals().size(); ++e)
        if (phi.contains(e)) out.push_back(p.eliteral_name(e));
    return out;
}

Json world_view_to_json(const WorldViewSet& wv, const Elp& p) {
    Json out;
    out["guess"] = guess_to_json(wv.guess, p);
    out["interpretations"] = interpretations_to_json(wv.views, p.atoms());
    out["kind"] = to_string(wv.kind);
    return out;
}

Json world_views_to_json(const std::vector<WorldViewSet>& wvs, const Elp& p) {
    Json out = Json::array();
    for (const auto& w : wvs) out.push_back(world_view_to_json(w, p));
    return out;
}

Json verdict_to_json(const Verdict& v, const Elp& p) {
    Json out;
    out["equivalent"] = v.equivalent;
    if (v.witness) {
        Json w;
        w["facts"] = interpretation_to_json(v.witness->facts, p.atoms());
        w["guess"] = v.witness->guess ? guess_to_json(*v.witness->guess, p) : Json(nullptr);
        Json left = Json::array();
        for (const auto& vs : v.witness->left) left.push_back(interpretations_to_json(vs, p.atoms()));
        Json right = Json::array();
        for (const auto& vs : v.witness->right)
            right.push_back(interpretations_to_json(vs, p.atoms()));
        w["left"] = std::move(left);
        w["right"] = std::move(right);
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Json ue_table_to_json(const UeTable& t, const Elp& p) {
    Json out = Json::array();
    for (const auto& e : t.entries) {
        Json entry;
        entry["guess"] = guess_to_json(e.guess, p);
        entry["facts"] = interpretation_to_json(e.facts, p.atoms());
        entry["view"] = interpretations_to_json(e.view, p.atoms());
        out.push_back(std::move(entry));
    }
    return out;
}

Json se_pair_to_json(const SePair& s, const std::vector<std::string>& atoms) {
    Json out;
    out["x"] = interpretation_to_json(s.x, atoms);
    out["y"] = interpretation_to_json(s.y, atoms);
    return out;
}

Json asp_verdict_to_json(const AspUniformVerdict& v, const AspProgram& p) {
    Json out;
    out["equivalent"] = v.equivalent;
    if (v.ue_witness) {
        out["ue_witness"] = se_pair_to_json(*v.ue_witness, p.atoms());
        out["ue_witness_in"] = v.ue_witness_in_first ? "first" : "second";
    }
    if (v.fact_witness) {
        Json w;
        w["facts"] = interpretation_to_json(*v.fact_witness, p.atoms());
        w["left"] = interpretations_to_json(v.left_answer_sets, p.atoms());
        w["right"] = interpretations_to_json(v.right_answer_sets, p.atoms());
        out["witness"] = std::move(w);
    }
    return out;
}

} // namespace elpeq
