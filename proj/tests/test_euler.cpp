#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "oracles/brute_spines.hpp"
#include "spinetorsion/census.hpp"
#include "spinetorsion/euler.hpp"

using namespace spinetorsion;

namespace {

std::vector<BranchedSpine> corpus() {
  std::vector<BranchedSpine> v;
  for (int n = 1; n <= 3; ++n)
    for (auto& s : census(n)) v.push_back(s);
  return v;
}

// Simple paths from rank `from` to rank `to` in the complete graph on `k` corners.
std::vector<std::vector<int>> simple_paths(int k, int from, int to) {
  std::vector<std::vector<int>> out;
  std::vector<int> path{from};
  std::function<void()> rec = [&] {
    if (path.back() == to) {
      out.push_back(path);
      return;
    }
    for (int v = 0; v < k; ++v)
      if (std::find(path.begin(), path.end(), v) == path.end()) {
        path.push_back(v);
        rec();
        path.pop_back();
      }
  };
  rec();
  return out;
}

}  // namespace

TEST_CASE("source to sink paths agree in H1 for every face and tetrahedron") {
  const auto face_paths = simple_paths(3, 0, 2);
  const auto tet_paths = simple_paths(4, 0, 3);
  REQUIRE(face_paths.size() == 2);
  REQUIRE(tet_paths.size() == 5);
  for (const auto& sp : corpus()) {
    CellComplexX x = build_complex(sp);
    GroupData g = presentation(x, sp);
    for (int f = 0; f < sp.num_faces(); ++f) {
      auto a = face_path_chain(sp, f, face_paths[0]), b = face_path_chain(sp, f, face_paths[1]);
      CHECK(h1_class(g, a) == h1_class(g, b));
      // the difference is plus or minus a boundary column
      bool plus = true, minus = true;
      for (int e = 0; e < sp.num_edges(); ++e) {
        plus = plus && a[e] - b[e] == x.d2[e][f];
        minus = minus && a[e] - b[e] == -x.d2[e][f];
      }
      CHECK((plus || minus));
    }
    for (int t = 0; t < sp.num_tets(); ++t) {
      auto ref = h1_class(g, tet_path_chain(sp, t, tet_paths[0]));
      for (const auto& p : tet_paths) CHECK(h1_class(g, tet_path_chain(sp, t, p)) == ref);
    }
  }
}

TEST_CASE("euler chain contributions per cell") {
  for (const auto& sp : census(2)) {
    std::vector<long> expect(sp.num_edges(), 1);
    for (int f = 0; f < sp.num_faces(); ++f) {
      auto c = face_path_chain(sp, f, {0, 2});
      for (int e = 0; e < sp.num_edges(); ++e) expect[e] -= c[e];
    }
    for (int t = 0; t < sp.num_tets(); ++t) {
      auto c = tet_path_chain(sp, t, {0, 3});
      for (int e = 0; e < sp.num_edges(); ++e) expect[e] += c[e];
    }
    CHECK(euler_chain(sp) == expect);
  }
}

TEST_CASE("tangency counts are even and the maw cochain matches the euler chain") {
  int nonzero = 0;
  for (const auto& sp : corpus()) {
    auto d = euler_data(sp);
    int total = 0;
    for (std::size_t r = 0; r < d.maw.tangency.size(); ++r) {
      CHECK(d.maw.tangency[r] % 2 == 0);
      CHECK(d.maw.value[r] == 1 - d.maw.tangency[r] / 2);
      total += d.maw.tangency[r];
    }
    CHECK(total == 2 * sp.num_tets());
    CHECK(d.cochain_free == d.chain_free);
    CHECK(d.cochain_torsion == d.chain_torsion);
    bool nz = false;
    for (const auto& v : d.chain_free) nz = nz || v != 0;
    for (const auto& v : d.chain_torsion) nz = nz || v != 0;
    nonzero += nz;
  }
  CHECK(nonzero > 0);
}

TEST_CASE("trivial H1 gives the zero class") {
  int seen = 0;
  for (const auto& sp : corpus()) {
    CellComplexX x = build_complex(sp);
    GroupData g = presentation(x, sp);
    if (g.h1.free_rank != 0 || !g.h1.torsion.empty()) continue;
    auto [fc, tc] = euler_chain_class(sp, x, g);
    CHECK(fc.empty());
    CHECK(tc.empty());
    ++seen;
  }
  CHECK(seen > 0);
}

TEST_CASE("euler chain class is equivariant under relabelling") {
  std::mt19937_64 rng(11);
  auto perms = oracle::all_perms();
  auto spines = census(3);
  for (std::size_t i = 0; i < spines.size(); i += 9) {
    const auto& sp = spines[i];
    const int n = sp.num_tets();
    std::vector<int> tmap(n);
    std::iota(tmap.begin(), tmap.end(), 0);
    std::shuffle(tmap.begin(), tmap.end(), rng);
    std::vector<Perm4> corner(n);
    for (auto& p : corner) p = perms[rng() % 24];
    auto other = oracle::relabel(sp, tmap, corner);
    CellComplexX x = build_complex(other);
    GroupData g = presentation(x, other);
    std::vector<long> moved(other.num_edges(), 0);
    const auto chain = euler_chain(sp);
    for (int e = 0; e < sp.num_edges(); ++e) {
      const auto& in = sp.skeleton().edges[e][0];
      moved[other.edge_class(tmap[in.tet], corner[in.tet][in.a], corner[in.tet][in.b])] += chain[e];
    }
    CHECK(euler_chain_class(other, x, g) == h1_class(g, moved));
  }
}
