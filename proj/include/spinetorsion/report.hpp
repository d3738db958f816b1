#pragma once

// JSON run reports shared by the command line tool and the Python module.
// Every report is deterministic given its inputs; timing is added by callers.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "spinetorsion/spine.hpp"
#include "spinetorsion/torsion.hpp"

namespace spinetorsion {

using json = nlohmann::ordered_json;

json validate_report(const BranchedSpine& spine);
json summary_report(const BranchedSpine& spine);
json branchings_report(const BranchedSpine& spine);

/// Positive move at `face` (all variants, or only `variant`), or the negative
/// move at `edge`. Exactly one of face and edge is set.
json move_report(const BranchedSpine& spine, std::optional<int> face, std::optional<int> variant,
                 std::optional<int> edge);
/// Replays a move log and reports the final spine.
json replay_report(const BranchedSpine& spine, const std::string& log);
json walk_report(const BranchedSpine& spine, int steps, std::uint64_t seed, bool h_null_only, int max_tets);
json hcheck_report(const BranchedSpine& spine, int face, int variant);
json torsion_report(const BranchedSpine& spine, const RepSpec& rep, bool sign_refined, bool auto_basis);
json euler_report(const BranchedSpine& spine);
json census_report(int tets, bool with_spines);
json invariance_report(const BranchedSpine& spine, int steps, std::uint64_t seed, const RepSpec& rep, int max_tets);

/// {"code": ..., "message": ...} for a library error.
json error_report(const SpineError& e);

}  // namespace spinetorsion
