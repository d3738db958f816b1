#include <doctest.h>

#include "spinetorsion/census.hpp"
#include "spinetorsion/invariance.hpp"

using namespace spinetorsion;

namespace {

std::vector<BranchedSpine> corpus() {
  std::vector<BranchedSpine> v;
  for (auto& s : census(2)) v.push_back(s);
  auto three = census(3);
  for (std::size_t i = 0; i < three.size(); i += 25) v.push_back(three[i]);
  return v;
}

std::vector<MoveInstance> all_moves(const BranchedSpine& sp) {
  std::vector<MoveInstance> out;
  for (int f = 0; f < sp.num_faces(); ++f) {
    try {
      for (auto& m : apply_positive(sp, f)) out.push_back(std::move(m));
    } catch (const SpineError&) {
    }
  }
  for (int e = 0; e < sp.num_edges(); ++e) {
    try {
      out.push_back(apply_negative(sp, e));
    } catch (const SpineError&) {
    }
  }
  return out;
}

template <class F>
void check_chain_map(const MoveInstance& m, const Representation& rep) {
  const BranchedSpine& s2 = m.two_side();
  const BranchedSpine& s3 = m.three_side();
  auto c = cell_correspondence(m);
  CellComplexX x2 = build_complex(s2), x3 = build_complex(s3);
  GroupData g2 = presentation(x2, s2), g3 = presentation(x3, s3);
  SpiderAnchors a2 = spider_anchors(s2, x2, g2), a3 = spider_anchors(s3, x3, g3);
  const BranchedSpine& before = m.before;
  std::vector<F> img = generator_images<F>(rep, before.num_edges());
  std::vector<F> next = transport_images(m, c, img);
  const auto& i2 = m.positive ? img : next;
  const auto& i3 = m.positive ? next : img;
  auto tc2 = twisted_complex<F>(s2, a2, i2), tc3 = twisted_complex<F>(s3, a3, i3);
  CHECK_NOTHROW(chain_map(m, c, a2, i2, tc2, tc3));
  // the image of the whole bipyramid is the sum of the 3-side with unit coefficients up to sign
  auto map = chain_map(m, c, a2, i2, tc2, tc3);
  CHECK(map.f[3](m.bipyramid.three_tets[0], m.bipyramid.two_tets[1]) != F(0));
  CHECK(homology_dims(tc2) == homology_dims(tc3));
}

}  // namespace

TEST_CASE("move chain maps commute with the twisted boundaries") {
  int n = 0;
  for (const auto& sp : corpus()) {
    CellComplexX x = build_complex(sp);
    GroupData g = presentation(x, sp);
    for (const auto& m : all_moves(sp)) {
      check_chain_map<Rational>(m, trivial_representation(g));
      check_chain_map<RatFunc>(m, free_abelian_representation(g));
      check_chain_map<Cyclotomic>(m, cyclic_representation(g, 5));
      ++n;
    }
  }
  CHECK(n > 100);
}

TEST_CASE("empty walk is trivially invariant") {
  auto sp = census(2)[3];
  auto r = invariance_suite(sp, {}, RepSpec::parse("free-abelian"));
  CHECK(r.steps.empty());
  CHECK(r.all_equal);
  CHECK(r.first_violation == -1);
}

TEST_CASE("one h-null move keeps the cyclic torsion") {
  int tried = 0;
  for (const auto& sp : census(2)) {
    for (const auto& m : all_moves(sp)) {
      if (!h_cycle_check(m).is_null) continue;
      auto r = invariance_suite(sp, {m}, RepSpec::parse("cyclic:5"));
      REQUIRE(r.steps.size() == 1);
      CAPTURE(r.initial_value);
      CAPTURE(r.steps[0].value);
      CHECK(r.all_equal);
      CHECK(r.transport_failures == 0);
      CHECK(r.steps[0].sign_refined_checked);
      CHECK(r.steps[0].sign_refined_equal);
      ++tried;
    }
  }
  CHECK(tried > 10);
}

TEST_CASE("ten step filtered walks keep the free-abelian torsion") {
  auto two = census(2);
  int walks = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto& sp = two[(seed * 5) % two.size()];
    if (is_rigid(sp)) continue;
    std::vector<MoveInstance> walk;
    try {
      walk = random_walk(sp, 10, seed, true);
    } catch (const SpineError& e) {
      CHECK(e.code() == ErrorCode::Stuck);
      continue;
    }
    auto r = invariance_suite(sp, walk, RepSpec::parse("free-abelian"));
    CHECK(r.all_equal);
    CHECK(r.transport_failures == 0);
    CHECK(r.sign_refined_checked == 10);
    CHECK(r.sign_refined_all_equal);
    ++walks;
  }
  CHECK(walks > 3);
}
