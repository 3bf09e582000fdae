#pragma once

#include <json.hpp>

#include "elpeq/asp.hpp"
#include "elpeq/epistemic.hpp"
#include "elpeq/equivalence.hpp"
#include "elpeq/syntax.hpp"

namespace elpeq {

using Json = nlohmann::ordered_json;

// Atom names of an interpretation in universe order.
Json interpretation_to_json(Interpretation i, const std::vector<std::string>& atoms);
Json interpretations_to_json(const std::vector<Interpretation>& m,
                             const std::vector<std::string>& atoms);

Json guess_to_json(Guess phi, const Elp& p);
Json world_view_to_json(const WorldViewSet& wv, const Elp& p);
Json world_views_to_json(const std::vector<WorldViewSet>& wvs, const Elp& p);

Json verdict_to_json(const Verdict& v, const Elp& p);
Json ue_table_to_json(const UeTable& t, const Elp& p);
Json asp_verdict_to_json(const AspUniformVerdict& v, const AspProgram& p);
Json se_pair_to_json(const SePair& s, const std::vector<std::string>& atoms);

} // namespace elpeq
