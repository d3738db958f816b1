#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracles/brute_spines.hpp"
#include "spinetorsion/census.hpp"
#include "spinetorsion/io.hpp"

using namespace spinetorsion;

namespace {

ErrorCode error_of(const std::string& text) {
  try {
    read_spine(text);
  } catch (const SpineError& e) {
    return e.code();
  }
  FAIL("expected a validation error");
  return ErrorCode::InvalidArgument;
}

std::vector<int> sorted_component_counts(const std::vector<BranchedSpine>& spines) {
  std::vector<int> counts;
  for (const auto& sp : spines) counts.push_back(static_cast<int>(boundary_components(sp).components.size()));
  std::sort(counts.begin(), counts.end());
  return counts;
}

}  // namespace

TEST_CASE("one-tetrahedron census has four spines with boundary counts 1,1,2,2") {
  auto spines = census(1);
  REQUIRE(spines.size() == 4);
  CHECK(sorted_component_counts(spines) == std::vector<int>{1, 1, 2, 2});
  for (const auto& sp : spines) {
    for (const auto& c : boundary_components(sp).components) CHECK(c.genus == 0);
  }
}

TEST_CASE("census output is pairwise non-isomorphic by exhaustive relabelling") {
  for (int n : {1, 2}) {
    auto spines = census(n);
    for (std::size_t i = 0; i < spines.size(); ++i)
      for (std::size_t j = i + 1; j < spines.size(); ++j)
        CHECK_FALSE(oracle::brute_isomorphic(spines[i], spines[j]));
  }
}

TEST_CASE("census covers every branched spine found by brute force over all gluings") {
  for (int n : {1, 2}) {
    std::set<std::vector<int>> census_forms;
    for (const auto& sp : census(n)) census_forms.insert(canonical_form(sp));
    std::set<std::vector<int>> brute_forms;
    long valid_triangulations = 0;
    oracle::for_each_triangulation(n, [&](const Triangulation& tri) {
      std::optional<ValidTriangulation> vt;
      try {
        vt.emplace(tri, std::nullopt);
      } catch (const SpineError&) {
        return;
      }
      ++valid_triangulations;
      auto fast = enumerate_branchings(*vt);
      auto brute = oracle::brute_branchings(*vt);
      CHECK(fast == brute);
      for (const auto& br : brute) {
        for (int sign : {1, -1}) {
          std::vector<int> orient = vt->orientation();
          for (int& o : orient) o *= sign;
          BranchedSpine sp(ValidTriangulation(tri, orient), br);
          brute_forms.insert(canonical_form(sp));
        }
      }
    });
    CHECK(valid_triangulations > 0);
    CHECK(brute_forms == census_forms);
  }
}

TEST_CASE("canonical form is invariant under random relabelling") {
  std::mt19937_64 rng(7);
  auto perms = oracle::all_perms();
  for (int n : {2, 3}) {
    auto spines = census(n);
    for (std::size_t i = 0; i < spines.size(); i += 3) {
      std::vector<int> tmap(n);
      std::iota(tmap.begin(), tmap.end(), 0);
      std::shuffle(tmap.begin(), tmap.end(), rng);
      std::vector<Perm4> corner(n);
      for (auto& p : corner) p = perms[rng() % 24];
      auto other = oracle::relabel(spines[i], tmap, corner);
      CHECK(canonical_form(other) == canonical_form(spines[i]));
      if (n == 2) CHECK(oracle::brute_isomorphic(other, spines[i]));
    }
  }
}

TEST_CASE("structural invariants hold on the census") {
  for (int n : {1, 2, 3}) {
    for (const auto& sp : census(n)) {
      CHECK(sp.num_faces() == 2 * sp.num_tets());
      for (int t = 0; t < sp.num_tets(); ++t) {
        auto ts = sink_source_tet(sp, t);
        for (int v = 0; v < 4; ++v) {
          if (v == ts.source) continue;
          CHECK(sp.edge_points(t, ts.source, v));
        }
        for (int v = 0; v < 4; ++v) {
          if (v == ts.sink) continue;
          CHECK(sp.edge_points(t, v, ts.sink));
        }
        for (int f = 0; f < 4; ++f) {
          if (f == ts.sink) continue;
          CHECK(sink_source_face(sp, t, f).sink == ts.sink);
        }
      }
      auto chi = euler_characteristics(sp);
      CHECK(chi.spine == sp.num_edges() - sp.num_tets());
      CHECK(chi.complex == 1 - sp.num_edges() + sp.num_faces() - sp.num_tets());
      CHECK(boundary_components(sp).total_euler_characteristic() == 2 * (1 - chi.complex));
    }
  }
}

TEST_CASE("branchings are closed under global reversal") {
  for (const auto& sp : census(2)) {
    auto all = enumerate_branchings(sp.valid());
    std::set<Branching> set(all.begin(), all.end());
    for (const auto& br : all) {
      Branching rev = br;
      rev.flip();
      CHECK(set.count(rev) == 1);
    }
  }
}

TEST_CASE("a two-tetrahedron spine with a single torus boundary exists") {
  int found = 0;
  for (const auto& sp : census(2)) {
    auto rep = boundary_components(sp);
    if (rep.components.size() == 1 && rep.components[0].euler_characteristic == 0) {
      CHECK(rep.components[0].genus == 1);
      ++found;
    }
  }
  CHECK(found > 0);
}

TEST_CASE("face source and sink") {
  // One tetrahedron, faces 0<->1 and 2<->3 glued order-preservingly.
  auto sp = read_spine(
      "branched-spine 1\ntets 1\nglue 0.0 -> 0.1 : 023\nglue 0.2 -> 0.3 : 012\n"
      "branching 0:01 0:02 0:23\n");
  auto s = sink_source_face(sp, 0, 3);
  CHECK(s.source == 0);
  CHECK(s.sink == 2);
  CHECK(sink_source_tet(sp, 0).sink == 3);
}

TEST_CASE("validation errors") {
  SUBCASE("cyclic triangle") {
    // 0->1, 1->3 but 3->0 makes face 2 cyclic.
    CHECK(error_of("branched-spine 1\ntets 1\nglue 0.0 -> 0.3 : 012\nglue 0.1 -> 0.2 : 013\n"
                   "branching 0:01 0:30\n") == ErrorCode::CyclicTriangle);
  }
  SUBCASE("face glued to itself") {
    CHECK(error_of("branched-spine 1\ntets 1\nglue 0.0 -> 0.0 : 123\nglue 0.2 -> 0.3 : 012\n"
                   "branching 0:01\n") == ErrorCode::UnpairedFace);
  }
  SUBCASE("unglued face") {
    CHECK(error_of("branched-spine 1\ntets 1\nglue 0.2 -> 0.3 : 012\nbranching 0:01\n") ==
          ErrorCode::UnpairedFace);
  }
  SUBCASE("disconnected") {
    CHECK(error_of("branched-spine 1\ntets 2\nglue 0.0 -> 0.1 : 023\nglue 0.2 -> 0.3 : 012\n"
                   "glue 1.0 -> 1.1 : 023\nglue 1.2 -> 1.3 : 012\nbranching 0:01\n") ==
          ErrorCode::Disconnected);
  }
  SUBCASE("non-orientable") {
    // Orientation-preserving self-gluing of faces 0 and 2.
    CHECK(error_of("branched-spine 1\ntets 1\nglue 0.0 -> 0.2 : 013\nglue 0.1 -> 0.3 : 012\n"
                   "branching 0:01\n") == ErrorCode::NonOrientable);
  }
  SUBCASE("wrong orientation bits") {
    CHECK(error_of("branched-spine 1\ntets 2\nglue 0.0 -> 1.0 : 123\nglue 0.1 -> 1.1 : 023\n"
                   "glue 0.2 -> 1.2 : 013\nglue 0.3 -> 1.3 : 012\nbranching 0:01\norient ++\n") ==
          ErrorCode::NonOrientable);
  }
  SUBCASE("missing edge direction") {
    CHECK(error_of("branched-spine 1\ntets 1\nglue 0.0 -> 0.1 : 023\nglue 0.2 -> 0.3 : 012\n"
                   "branching 0:01 0:02\n") == ErrorCode::MalformedBranching);
  }
  SUBCASE("syntax") {
    CHECK(error_of("branched-spine 1\ntets 1\nglue 0.0 -> 0.1 : 0x3\n") == ErrorCode::Syntax);
  }
}

TEST_CASE("doubled tetrahedron has four sphere boundary components") {
  auto raw = parse_spine_text(
      "branched-spine 1\ntets 2\nglue 0.0 -> 1.0 : 123\nglue 0.1 -> 1.1 : 023\n"
      "glue 0.2 -> 1.2 : 013\nglue 0.3 -> 1.3 : 012\nbranching 0:01 0:02 0:03 0:12 0:13 0:23\n"
      "orient +-\n");
  auto sp = validate(raw);
  CHECK(sp.num_edges() == 6);
  CHECK(boundary_components(sp).components.size() == 4);
}

TEST_CASE("some one-tetrahedron gluings are rejected as non-standard") {
  std::map<ErrorCode, int> seen;
  oracle::for_each_triangulation(1, [&](const Triangulation& tri) {
    try {
      ValidTriangulation vt(tri, std::nullopt);
    } catch (const SpineError& e) {
      ++seen[e.code()];
    }
  });
  CHECK(seen[ErrorCode::NonStandardDual] > 0);
  CHECK(seen[ErrorCode::NonOrientable] > 0);
}
