#include "spinetorsion/report.hpp"

#include "spinetorsion/census.hpp"
#include "spinetorsion/euler.hpp"
#include "spinetorsion/invariance.hpp"
#include "spinetorsion/io.hpp"
#include "spinetorsion/moves.hpp"
#include "spinetorsion/spider.hpp"

namespace spinetorsion {

namespace {

json integer(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json integers(const std::vector<mpz_class>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer(x));
  return out;
}

json h1_json(const AbelianGroup& h1) {
  return {{"free_rank", h1.free_rank}, {"torsion", integers(h1.torsion)}};
}

json record_json(const MoveRecord& r) {
  json j{{"direction", r.positive ? "+" : "-"}, {"site", r.site}};
  if (r.positive) j["variant"] = r.variant;
  return j;
}

json move_json(const MoveInstance& m) {
  const HCycleReport h = h_cycle_check(m);
  return {{"move", record_json(m.record())},
          {"log", serialize_move_log({m.record()})},
          {"tets_after", m.after.num_tets()},
          {"h_null", h.is_null},
          {"spine", serialize_spine(m.after)}};
}

json hcycle_json(const HCycleReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"simplex", row.simplex},
                    {"epsilon", row.epsilon},
                    {"end0", std::string(1, row.end0)},
                    {"end1", std::string(1, row.end1)},
                    {"boundary", row.boundary}});
  json total = json::object();
  for (const auto& [k, v] : r.total) total[std::string(1, k)] = v;
  return {{"rows", rows},
          {"total", total},
          {"null", r.is_null},
          {"h_class", {{"free", integers(r.h_free)}, {"torsion", integers(r.h_torsion)}}}};
}

}  // namespace

json error_report(const SpineError& e) {
  return {{"error", {{"code", std::string(error_name(e.code()))}, {"message", e.what()}}}};
}

json validate_report(const BranchedSpine& spine) {
  return {{"valid", true}, {"tets", spine.num_tets()}, {"edges", spine.num_edges()}, {"faces", spine.num_faces()}};
}

json summary_report(const BranchedSpine& spine) {
  const CellComplexX x = build_complex(spine);
  const GroupData g = presentation(x, spine);
  const auto chi = euler_characteristics(spine);
  const auto bd = boundary_components(spine);
  json comps = json::array();
  for (const auto& c : bd.components)
    comps.push_back({{"vertex_class", c.vertex_class}, {"euler_characteristic", c.euler_characteristic}, {"genus", c.genus}});
  const auto betti = rational_betti(x);
  return {{"V", spine.num_tets()},
          {"E", spine.num_edges()},
          {"chi_spine", chi.spine},
          {"chi_complex", chi.complex},
          {"H1", h1_json(g.h1)},
          {"betti", betti},
          {"boundary_components", comps},
          {"rigid", is_rigid(spine)},
          {"canonical_form", canonical_form(spine)}};
}

json branchings_report(const BranchedSpine& spine) {
  const auto all = enumerate_branchings(spine.valid());
  json list = json::array();
  for (const auto& br : all) {
    BranchedSpine other(spine.valid(), br);
    json bits = json::array();
    for (bool b : br) bits.push_back(b ? 1 : 0);
    list.push_back({{"edge_agrees", bits}, {"current", br == spine.branching()}, {"spine", serialize_spine(other)}});
  }
  return {{"count", all.size()}, {"branchings", list}};
}

json move_report(const BranchedSpine& spine, std::optional<int> face, std::optional<int> variant,
                 std::optional<int> edge) {
  json moves = json::array();
  if (edge) {
    moves.push_back(move_json(apply_negative(spine, *edge)));
  } else {
    const int f = face.value_or(0);
    if (f < 0 || f >= spine.num_faces())
      throw SpineError(ErrorCode::InvalidArgument, "face " + std::to_string(f) + " out of range");
    auto all = apply_positive(spine, f);
    if (all.empty()) throw SpineError(ErrorCode::NotApplicable, "no branched 2-3 move at face " + std::to_string(f));
    bool found = false;
    for (const auto& m : all)
      if (!variant || m.variant == *variant) {
        moves.push_back(move_json(m));
        found = true;
      }
    if (!found)
      throw SpineError(ErrorCode::NotApplicable,
                       "variant " + std::to_string(*variant) + " is not a branching at face " + std::to_string(f));
  }
  return {{"moves", moves}};
}

json replay_report(const BranchedSpine& spine, const std::string& log) {
  BranchedSpine cur = spine;
  json tets = json::array();
  for (const auto& rec : parse_move_log(log)) {
    cur = apply_record(cur, rec).after;
    tets.push_back(cur.num_tets());
  }
  return {{"tets", tets}, {"spine", serialize_spine(cur)}};
}

json walk_report(const BranchedSpine& spine, int steps, std::uint64_t seed, bool h_null_only, int max_tets) {
  const auto walk = random_walk(spine, steps, seed, h_null_only, max_tets);
  std::vector<MoveRecord> log;
  json tets = json::array();
  json nulls = json::array();
  for (const auto& m : walk) {
    log.push_back(m.record());
    tets.push_back(m.after.num_tets());
    nulls.push_back(h_cycle_check(m).is_null);
  }
  return {{"steps", steps},
          {"seed", seed},
          {"h_null_only", h_null_only},
          {"log", serialize_move_log(log)},
          {"tets", tets},
          {"h_null", nulls},
          {"spine", serialize_spine(walk.empty() ? spine : walk.back().after)}};
}

json hcheck_report(const BranchedSpine& spine, int face, int variant) {
  for (const auto& m : apply_positive(spine, face))
    if (m.variant == variant) {
      json j = hcycle_json(h_cycle_check(m));
      j["move"] = record_json(m.record());
      json letters = json::object();
      const char* names[] = {"P", "Q", "R", "X", "Y"};
      for (int v = 0; v < 5; ++v) letters[names[v]] = std::string(1, m.bipyramid.letters[v]);
      j["letters"] = letters;
      return j;
    }
  throw SpineError(ErrorCode::NotApplicable,
                   "variant " + std::to_string(variant) + " is not a branching at face " + std::to_string(face));
}

json torsion_report(const BranchedSpine& spine, const RepSpec& rep, bool sign_refined, bool auto_basis) {
  const TorsionReport r = compute_torsion(spine, rep, sign_refined, auto_basis);
  return {{"representation", r.representation},
          {"field", r.field},
          {"value", r.value},
          {"sign_fixed", r.sign_fixed},
          {"acyclic", r.acyclic},
          {"surjective", r.surjective},
          {"homology_basis", r.homology_basis},
          {"twisted_betti", r.twisted_betti},
          {"chi_spine", r.chi_spine}};
}

json euler_report(const BranchedSpine& spine) {
  const EulerData d = euler_data(spine);
  const CellComplexX x = build_complex(spine);
  const GroupData g = presentation(x, spine);
  return {{"H1", h1_json(g.h1)},
          {"chain", d.chain},
          {"chain_class", {{"free", integers(d.chain_free)}, {"torsion", integers(d.chain_torsion)}}},
          {"tangency", d.maw.tangency},
          {"cochain", d.maw.value},
          {"cochain_class", {{"free", integers(d.cochain_free)}, {"torsion", integers(d.cochain_torsion)}}}};
}

json census_report(int tets, bool with_spines) {
  if (tets < 1) throw SpineError(ErrorCode::InvalidArgument, "census needs at least one tetrahedron");
  const auto all = census(tets);
  json list = json::array();
  int rigid = 0;
  for (const auto& sp : all) {
    const bool r = is_rigid(sp);
    rigid += r;
    if (!with_spines) continue;
    json genera = json::array();
    int spheres = 0;
    for (const auto& c : boundary_components(sp).components) {
      genera.push_back(c.genus);
      spheres += c.genus == 0;
    }
    list.push_back(
        {{"rigid", r}, {"boundary_genera", genera}, {"boundary_spheres", spheres}, {"spine", serialize_spine(sp)}});
  }
  json j{{"tets", tets}, {"count", all.size()}, {"rigid", rigid}};
  if (with_spines) j["spines"] = list;
  return j;
}

json invariance_report(const BranchedSpine& spine, int steps, std::uint64_t seed, const RepSpec& rep, int max_tets) {
  const auto walk = random_walk(spine, steps, seed, true, max_tets);
  const InvarianceReport r = invariance_suite(spine, walk, rep);
  json list = json::array();
  for (const auto& s : r.steps) {
    json j{{"move", record_json(s.move)},
           {"value", s.value},
           {"acyclic", s.acyclic},
           {"equal_up_to_sign", s.equal_up_to_sign},
           {"chi_spine", s.chi_spine}};
    if (s.sign_refined_checked) {
      j["sign_refined"] = s.sign_refined;
      j["sign_refined_equal"] = s.sign_refined_equal;
    }
    if (!s.note.empty()) j["note"] = s.note;
    list.push_back(j);
  }
  std::vector<MoveRecord> log;
  for (const auto& m : walk) log.push_back(m.record());
  return {{"representation", r.representation},
          {"field", r.field},
          {"seed", seed},
          {"log", serialize_move_log(log)},
          {"initial", {{"value", r.initial_value},
                       {"sign_refined", r.initial_sign_refined},
                       {"acyclic", r.initial_acyclic},
                       {"chi_spine", r.initial_chi_spine}}},
          {"steps", list},
          {"all_equal", r.all_equal},
          {"first_violation", r.first_violation},
          {"sign_refined_checked", r.sign_refined_checked},
          {"sign_refined_all_equal", r.sign_refined_all_equal},
          {"transport_failures", r.transport_failures}};
}

}  // namespace spinetorsion
