#include <doctest.h>

#include "oracles/cofactor.hpp"
#include "oracles/geometry.hpp"
#include "spinetorsion/census.hpp"
#include "spinetorsion/io.hpp"
#include "spinetorsion/spider.hpp"

using namespace spinetorsion;

namespace {

const std::vector<BranchedSpine>& small_census() {
  static const std::vector<BranchedSpine> all = [] {
    std::vector<BranchedSpine> v;
    for (int n = 1; n <= 3; ++n)
      for (auto& s : census(n)) v.push_back(s);
    return v;
  }();
  return all;
}

template <class F>
bool complex_closes(const TwistedComplex<F>& tc) {
  return (tc.d1 * tc.d2).is_zero() && (tc.d2 * tc.d3).is_zero();
}

template <class F>
void check_representation(const BranchedSpine& sp, const SpiderAnchors& an, const Representation& rep) {
  auto tc = twisted_complex(sp, an, generator_images<F>(rep, sp.num_edges()));
  CHECK(complex_closes(tc));
}

}  // namespace

TEST_CASE("integral boundaries agree with the coordinate model") {
  for (const auto& sp : small_census()) {
    CellComplexX x = build_complex(sp);
    auto g3 = oracle::geometric_d3(sp);
    auto g2 = oracle::geometric_d2(sp);
    for (int f = 0; f < x.faces; ++f)
      for (int t = 0; t < x.tets; ++t) CHECK(x.d3[f][t] == g3[f][t]);
    for (int e = 0; e < x.edges; ++e)
      for (int f = 0; f < x.faces; ++f) CHECK(x.d2[e][f] == g2[e][f]);
    IntMatrix dd = int_mul(x.d2, x.d3, x.faces);
    for (const auto& row : dd)
      for (const auto& v : row) CHECK(v == 0);
  }
}

TEST_CASE("homology of X matches determinantal divisors and Euler characteristic") {
  for (const auto& sp : small_census()) {
    CellComplexX x = build_complex(sp);
    GroupData g = presentation(x, sp);
    auto dd = oracle::determinantal_divisors(x.d2, x.edges, x.faces);
    int rk = 0;
    while (rk < static_cast<int>(dd.size()) && dd[rk] != 0) ++rk;
    CHECK(g.h1.free_rank == x.edges - rk);
    std::vector<mpz_class> torsion;
    for (int k = 0; k < rk; ++k) {
      mpz_class d = k == 0 ? dd[0] : mpz_class(dd[k] / dd[k - 1]);
      if (d > 1) torsion.push_back(d);
    }
    CHECK(g.h1.torsion == torsion);
    auto b = rational_betti(x);
    CHECK(b[0] == 1);
    CHECK(b[1] == g.h1.free_rank);
    CHECK(b[0] - b[1] + b[2] - b[3] == euler_characteristics(sp).complex);
    // Relators vanish in H1.
    for (int f = 0; f < x.faces; ++f) {
      auto [fc, tc] = h1_class(g, abelianize(g.relators[f], g.generators));
      for (const auto& v : fc) CHECK(v == 0);
      for (const auto& v : tc) CHECK(v == 0);
    }
  }
}

TEST_CASE("anchors are consistent and the spider boundary counts 1 - chi(X)") {
  for (const auto& sp : small_census()) {
    CellComplexX x = build_complex(sp);
    GroupData g = presentation(x, sp);
    SpiderAnchors an = spider_anchors(sp, x, g);
    CHECK(an.vertex.empty());
    for (const auto& w : an.edges) CHECK(w.empty());
    for (const auto& w : an.faces) CHECK(w.empty());
    for (const auto& w : an.tets) CHECK(w.empty());
    CHECK(an.spider_boundary_coefficient() == 1 - euler_characteristics(sp).complex);
    for (int t = 0; t < x.tets; ++t) {
      CHECK(reduce_tet_path(sp, g, t, {0, 1, 2, 3}) == std::vector<int>{0, 3});
      CHECK(an.tet_corners[t][3].empty());
    }
  }
}

TEST_CASE("twisted complexes are chain complexes") {
  for (const auto& sp : small_census()) {
    CellComplexX x = build_complex(sp);
    GroupData g = presentation(x, sp);
    SpiderAnchors an = spider_anchors(sp, x, g);
    auto triv = twisted_complex(sp, an, generator_images<Rational>(trivial_representation(g), x.edges));
    CHECK(triv.d1 == to_field<Rational>(x.d1, 1, x.edges));
    CHECK(triv.d2 == to_field<Rational>(x.d2, x.edges, x.faces));
    CHECK(triv.d3 == to_field<Rational>(x.d3, x.faces, x.tets));
    check_representation<RatFunc>(sp, an, free_abelian_representation(g));
    for (int n : {2, 3, 5}) check_representation<Cyclotomic>(sp, an, cyclic_representation(g, n));
  }
}

TEST_CASE("cyclic characters must kill the relators") {
  int tested = 0;
  for (const auto& sp : small_census()) {
    CellComplexX x = build_complex(sp);
    GroupData g = presentation(x, sp);
    std::vector<long> ones(g.generators, 1), zeros(g.generators, 0);
    CHECK_THROWS_AS(cyclic_representation(g, 3, ones), SpineError);
    try {
      cyclic_representation(g, 3, ones);
    } catch (const SpineError& e) {
      CHECK(e.code() == ErrorCode::RelatorNotKilled);
    }
    CHECK_NOTHROW(cyclic_representation(g, 3, zeros));
    CHECK_THROWS_AS(cyclic_representation(g, 3, std::vector<long>{1}), SpineError);
    // The automatic character passes the same check.
    auto rep = cyclic_representation(g, 4);
    CHECK_NOTHROW(cyclic_representation(g, 4, rep.powers));
    ++tested;
  }
  CHECK(tested == 850);
}

TEST_CASE("automatic cyclic character is surjective when H1 allows it") {
  for (const auto& sp : small_census()) {
    CellComplexX x = build_complex(sp);
    GroupData g = presentation(x, sp);
    for (int n : {2, 3, 6}) {
      auto rep = cyclic_representation(g, n);
      bool possible = g.h1.free_rank > 0;
      for (const auto& d : g.h1.torsion) possible = possible || mpz_divisible_p(d.get_mpz_t(), mpz_class(n).get_mpz_t());
      if (possible) CHECK(rep.surjective);
      long gg = n;
      for (long p : rep.powers) gg = std::gcd(gg, p);
      CHECK(rep.surjective == (gg == 1));
    }
  }
}

TEST_CASE("word utilities") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(inverse({1, -2}) == Word{2, -1});
  CHECK(word_string({1, -3}) == "g0 g2^-1");
  CHECK(abelianize({1, 1, -2}, 2) == std::vector<long>{2, -1});
}
