#include <doctest.h>

#include <optional>
#include <set>

#include "spinetorsion/census.hpp"
#include "spinetorsion/io.hpp"
#include "spinetorsion/moves.hpp"

using namespace spinetorsion;

namespace {

// Two tetrahedra (a,b,e,d) and (b,e,c,d) over the vertex order
// a < b < e < c < d, all gluings order preserving.
BranchedSpine sliding_spine() {
  auto raw = parse_spine_text(
      "branched-spine 1\ntets 2\n"
      "glue 0.0 -> 1.2 : 013\n"
      "glue 0.1 -> 1.1 : 023\n"
      "glue 0.2 -> 0.3 : 012\n"
      "glue 1.0 -> 1.3 : 012\n"
      "branching 0:01\n");
  Triangulation tri = build_triangulation(raw);
  ValidTriangulation vt(tri, std::nullopt);
  return spine_from_ranks(tri, vt.orientation(), {{0, 1, 2, 3}, {0, 1, 2, 3}});
}

int shared_face(const BranchedSpine& sp) {
  for (int f = 0; f < sp.num_faces(); ++f) {
    auto s = sp.skeleton().faces[f];
    if (s[0].tet != s[1].tet) return f;
  }
  return -1;
}

std::vector<BranchedSpine> corpus() {
  std::vector<BranchedSpine> v;
  for (int n = 1; n <= 2; ++n)
    for (auto& s : census(n)) v.push_back(s);
  auto three = census(3);
  for (std::size_t i = 0; i < three.size(); i += 20) v.push_back(three[i]);
  return v;
}

int central_edge(const MoveInstance& m) {
  const auto& b = m.bipyramid;
  return m.three_side().edge_class(b.three_tets[0], b.three_labels[0][kX], b.three_labels[0][kY]);
}

int equatorial_face(const MoveInstance& m) {
  const auto& b = m.bipyramid;
  return m.two_side().face_class(b.two_tets[0], b.two_labels[0][kX]);
}

}  // namespace

TEST_CASE("sliding move example reproduces the golden h-table") {
  BranchedSpine sp = sliding_spine();
  const int f = shared_face(sp);
  REQUIRE(f >= 0);
  auto moves = apply_positive(sp, f);
  const MoveInstance* chosen = nullptr;
  for (const auto& m : moves) {
    // the apex of the first tetrahedron is vertex a
    const auto& b = m.bipyramid;
    const int apex = b.two_tets[0] == 0 ? kX : kY;
    if (b.letters[apex] == 'a') chosen = &m;
  }
  REQUIRE(chosen != nullptr);
  const auto& L = chosen->bipyramid.letters;
  std::string letters(L.begin(), L.end());
  std::sort(letters.begin(), letters.end());
  CHECK(letters == "abcde");

  HCycleReport r = h_cycle_check(*chosen);
  REQUIRE(r.rows.size() == 21);
  const std::vector<std::string> names{"v",   "va",  "vb",  "vc",  "vd",   "ve",   "vab",  "vad",  "vae",  "vcb", "vcd",
                                       "vce", "vbe", "ved", "vdb", "vabe", "vaed", "vadb", "vcbe", "vced", "vcdb"};
  const std::string end1 = "ccccdccdccdccddcddcdd";
  for (int i = 0; i < 21; ++i) {
    CAPTURE(names[i]);
    CHECK(r.rows[i].simplex == names[i]);
    CHECK(r.rows[i].epsilon == (names[i].size() % 2 == 1 ? 1 : -1));
    CHECK(r.rows[i].end0 == 'd');
    CHECK(r.rows[i].end1 == end1[i]);
  }
  CHECK(r.rows[0].boundary == "d-c");
  CHECK(r.rows[7].boundary == "0");
  CHECK(r.rows[1].boundary == "c-d");
  CHECK(r.is_null);
  CHECK(r.total.empty());
}

TEST_CASE("positive moves validate and invert") {
  int moves = 0, doubles = 0;
  for (const auto& sp : corpus()) {
    for (int f = 0; f < sp.num_faces(); ++f) {
      std::vector<MoveInstance> ms;
      try {
        ms = apply_positive(sp, f);
      } catch (const SpineError& e) {
        CHECK(e.code() == ErrorCode::SelfAdjacentFace);
        continue;
      }
      if (ms.size() == 2) ++doubles;
      for (const auto& m : ms) {
        ++moves;
        CHECK(m.after.num_tets() == sp.num_tets() + 1);
        // full validation of the serialized result
        CHECK(isomorphic(read_spine(serialize_spine(m.after)), m.after));
        CHECK(!is_rigid(m.after));
        MoveInstance back = apply_negative(m.after, central_edge(m));
        CHECK(isomorphic(back.after, sp));
        CHECK(h_cycle_check(m).rows.size() == 21);
        CHECK(serialize_spine(apply_record(sp, m.record()).after) == serialize_spine(m.after));
      }
    }
  }
  CHECK(moves > 50);
  CHECK(doubles > 0);
}

TEST_CASE("negative moves invert through the matching positive move") {
  int count = 0;
  for (const auto& sp : corpus()) {
    for (int e = 0; e < sp.num_edges(); ++e) {
      std::optional<MoveInstance> m;
      try {
        m = apply_negative(sp, e);
      } catch (const SpineError& err) {
        CHECK(err.code() == ErrorCode::NotApplicable);
        if (sp.skeleton().edges[e].size() != 3) CHECK(std::string(err.what()).find("valence") != std::string::npos);
        continue;
      }
      ++count;
      bool found = false;
      for (const auto& p : apply_positive(m->after, equatorial_face(*m)))
        if (isomorphic(p.after, sp)) found = true;
      CHECK(found);
    }
  }
  CHECK(count > 0);
}

TEST_CASE("valence four edge is not a 3-2 site") {
  bool seen = false;
  for (const auto& sp : corpus())
    for (int e = 0; e < sp.num_edges(); ++e)
      if (sp.skeleton().edges[e].size() == 4) {
        CHECK_THROWS_WITH_AS(apply_negative(sp, e), doctest::Contains("valence"), SpineError);
        seen = true;
      }
  CHECK(seen);
}

TEST_CASE("valence three edge with a repeated tetrahedron is not a 3-2 site") {
  int seen = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& sp : census(n))
      for (int e = 0; e < sp.num_edges(); ++e) {
        const auto& inst = sp.skeleton().edges[e];
        if (inst.size() != 3) continue;
        std::set<int> tets{inst[0].tet, inst[1].tet, inst[2].tet};
        if (tets.size() == 3) continue;
        CHECK_THROWS_WITH_AS(apply_negative(sp, e), doctest::Contains("not distinct"), SpineError);
        ++seen;
      }
  CHECK(seen > 0);
}

TEST_CASE("one-vertex spines are rigid and rigid spines have an even number of vertices") {
  for (const auto& sp : census(1)) {
    CHECK(is_rigid(sp));
    CHECK_THROWS_AS(random_walk(sp, 3, 7, false), SpineError);
  }
  for (int n = 2; n <= 3; ++n)
    for (const auto& sp : census(n))
      if (is_rigid(sp)) CHECK(sp.num_tets() % 2 == 0);
}

TEST_CASE("a face between distinct tetrahedra always admits a branched 2-3 move") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& sp : census(n))
      for (int f = 0; f < sp.num_faces(); ++f) {
        const auto sides = sp.skeleton().faces[f];
        if (sides[0].tet == sides[1].tet) {
          CHECK_THROWS_AS(apply_positive(sp, f), SpineError);
          continue;
        }
        CHECK(!apply_positive(sp, f).empty());
      }
}

TEST_CASE("walks are deterministic and respect the filter") {
  const auto two = census(2);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const BranchedSpine& sp = two[seed * 7 % two.size()];
    if (is_rigid(sp)) continue;
    auto a = random_walk(sp, 10, seed, true);
    auto b = random_walk(sp, 10, seed, true);
    REQUIRE(a.size() == 10);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].record().site == b[i].record().site);
      CHECK(a[i].record().variant == b[i].record().variant);
      CHECK(a[i].record().positive == b[i].record().positive);
      CHECK(h_cycle_check(a[i]).is_null);
      CHECK(a[i].after.num_tets() <= 6);
    }
    BranchedSpine cur = sp;
    for (const auto& m : a) cur = apply_record(cur, m.record()).after;
    CHECK(serialize_spine(cur) == serialize_spine(a.back().after));
  }
}

TEST_CASE("a move whose sinks agree on both sides has a zero table") {
  for (const auto& sp : corpus())
    for (int f = 0; f < sp.num_faces(); ++f) {
      try {
        for (const auto& m : apply_positive(sp, f)) {
          auto r = h_cycle_check(m);
          bool all_zero = true;
          for (const auto& row : r.rows) {
            if (row.end0 == row.end1) CHECK(row.boundary == "0");
            else all_zero = false;
          }
          if (all_zero) CHECK(r.is_null);
          std::set<char> ends;
          for (const auto& row : r.rows) ends.insert(row.end0), ends.insert(row.end1);
          for (char c : ends) CHECK(std::string("abcde").find(c) != std::string::npos);
        }
      } catch (const SpineError&) {
      }
    }
}
