#include "spinetorsion/spider.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace spinetorsion {

namespace {

bool is_rotation(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::equal(a.begin(), a.end() - k, b.begin() + k) && std::equal(a.end() - k, a.end(), b.begin())) return true;
  return a.empty();
}

}  // namespace

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& l : r) l = -l;
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return free_reduce(r);
}

Word free_reduce(const Word& w) {
  Word r;
  for (int l : w) {
    if (!r.empty() && r.back() == -l) r.pop_back();
    else r.push_back(l);
  }
  return r;
}

std::vector<long> abelianize(const Word& w, int generators) {
  std::vector<long> v(generators, 0);
  for (int l : w) v[std::abs(l) - 1] += l > 0 ? 1 : -1;
  return v;
}

std::string word_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int l : w) {
    if (!out.empty()) out += " ";
    out += "g" + std::to_string(std::abs(l) - 1);
    if (l < 0) out += "^-1";
  }
  return out;
}

CellComplexX build_complex(const BranchedSpine& spine) {
  CellComplexX x;
  x.edges = spine.num_edges();
  x.faces = spine.num_faces();
  x.tets = spine.num_tets();
  x.d1 = int_zero(1, x.edges);
  x.d2 = int_zero(x.edges, x.faces);
  x.d3 = int_zero(x.faces, x.tets);
  for (int f = 0; f < x.faces; ++f) {
    auto [e01, e12, e02] = spine.face_edges(f);
    x.d2[e01][f] += 1;
    x.d2[e12][f] += 1;
    x.d2[e02][f] -= 1;
  }
  for (int t = 0; t < x.tets; ++t) {
    const int s = spine.ranked_orientation(t);
    for (int i = 0; i < 4; ++i) {
      const int f = spine.face_class(t, spine.vertex_of_rank(t, i));
      x.d3[f][t] += (i % 2 == 0) ? s : -s;
    }
  }
  return x;
}

std::array<int, 4> rational_betti(const CellComplexX& x) {
  const int r1 = smith_normal_form(x.d1, 1, x.edges).rank;
  const int r2 = smith_normal_form(x.d2, x.edges, x.faces).rank;
  const int r3 = smith_normal_form(x.d3, x.faces, x.tets).rank;
  return {1 - r1, x.edges - r1 - r2, x.faces - r2 - r3, x.tets - r3};
}

GroupData presentation(const CellComplexX& x, const BranchedSpine& spine) {
  GroupData g;
  g.generators = x.edges;
  for (int f = 0; f < x.faces; ++f) {
    auto [e01, e12, e02] = spine.face_edges(f);
    g.relators.push_back({e01 + 1, e12 + 1, -(e02 + 1)});
  }
  g.smith = smith_normal_form(x.d2, x.edges, x.faces);
  g.h1 = cokernel(x.d2, x.edges, x.faces);
  for (int i = 0; i < g.smith.rank; ++i)
    if (g.smith.diagonal[i] > 1) g.torsion_rows.push_back(i);
  for (int e = 0; e < x.edges; ++e) {
    std::vector<long> chain(x.edges, 0);
    chain[e] = 1;
    auto [fc, tc] = h1_class(g, chain);
    g.free_coords.push_back(std::move(fc));
    g.torsion_coords.push_back(std::move(tc));
  }
  return g;
}

std::pair<std::vector<mpz_class>, std::vector<mpz_class>> h1_class(const GroupData& g,
                                                                   const std::vector<long>& chain) {
  const int n = g.generators;
  if (static_cast<int>(chain.size()) != n)
    throw SpineError(ErrorCode::InvalidArgument, "chain length does not match the generators");
  auto row = [&](int i) {
    mpz_class acc = 0;
    for (int e = 0; e < n; ++e)
      if (chain[e] != 0) acc += g.smith.u[i][e] * chain[e];
    return acc;
  };
  std::vector<mpz_class> free, tors;
  for (int i = g.smith.rank; i < n; ++i) free.push_back(row(i));
  for (int i : g.torsion_rows) {
    mpz_class d = g.smith.diagonal[i], r = row(i) % d;
    if (r < 0) r += d;
    tors.push_back(r);
  }
  return {free, tors};
}

int SpiderAnchors::spider_boundary_coefficient() const {
  return epsilon[1] * num_edges + epsilon[2] * num_faces + epsilon[3] * num_tets;
}

Word tet_path_word(const BranchedSpine& spine, int tet, const std::vector<int>& ranks) {
  Word w;
  for (std::size_t k = 0; k + 1 < ranks.size(); ++k) {
    if (ranks[k] >= ranks[k + 1]) throw SpineError(ErrorCode::InvalidArgument, "path ranks must increase");
    w.push_back(spine.edge_class(tet, spine.vertex_of_rank(tet, ranks[k]), spine.vertex_of_rank(tet, ranks[k + 1])) + 1);
  }
  return w;
}

std::vector<int> reduce_tet_path(const BranchedSpine& spine, const GroupData& g, int tet,
                                 std::vector<int> ranks) {
  while (ranks.size() > 2) {
    const int x = ranks[0], y = ranks[1], z = ranks[2];
    const int opposite = 6 - x - y - z;
    const int f = spine.face_class(tet, spine.vertex_of_rank(tet, opposite));
    Word here = {tet_path_word(spine, tet, {x, y})[0], tet_path_word(spine, tet, {y, z})[0],
                 -tet_path_word(spine, tet, {x, z})[0]};
    if (here != g.relators[f])
      throw SpineError(ErrorCode::InconsistentAnchor,
                       "tetrahedron " + std::to_string(tet) + " reads relator " + word_string(here) +
                           " on face class " + std::to_string(f) + ", expected " + word_string(g.relators[f]));
    ranks.erase(ranks.begin() + 1);
  }
  return ranks;
}

SpiderAnchors spider_anchors(const BranchedSpine& spine, const CellComplexX& x, const GroupData& g) {
  SpiderAnchors a;
  a.num_edges = x.edges;
  a.num_faces = x.faces;
  a.num_tets = x.tets;
  a.edges.assign(x.edges, {});
  a.faces.assign(x.faces, {});
  a.tets.assign(x.tets, {});
  for (int f = 0; f < x.faces; ++f) {
    auto [e01, e12, e02] = spine.face_edges(f);
    a.face_corners.push_back({Word{-(e02 + 1)}, Word{-(e12 + 1)}, Word{}});
    // Going round the face from the source corner must read the relator.
    Word loop = a.face_corners[f][1];
    loop.push_back(-(e01 + 1));
    for (int l : inverse(a.face_corners[f][0])) loop.push_back(l);
    if (!is_rotation(inverse(loop), g.relators[f]))
      throw SpineError(ErrorCode::InconsistentAnchor, "face class " + std::to_string(f) + " corners disagree");
  }
  for (int t = 0; t < x.tets; ++t) {
    std::array<Word, 4> corners;
    for (int k = 0; k < 3; ++k) corners[k] = inverse(tet_path_word(spine, t, {k, 3}));
    a.tet_corners.push_back(corners);
    for (int mask = 0; mask < 8; ++mask)
      for (int start = 0; start < 3; ++start) {
        std::vector<int> path{start};
        for (int k = start + 1; k < 3; ++k)
          if (mask & (1 << k)) path.push_back(k);
        path.push_back(3);
        auto reduced = reduce_tet_path(spine, g, t, path);
        if (reduced != std::vector<int>{start, 3})
          throw SpineError(ErrorCode::InconsistentAnchor, "tetrahedron " + std::to_string(t) + " path did not reduce");
      }
  }
  return a;
}

std::string Representation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Trivial:
      os << "trivial";
      break;
    case Kind::FreeAbelian:
      os << "free-abelian(rank=" << variables << ")";
      break;
    case Kind::Cyclic: {
      os << "cyclic(n=" << order << "; chi=";
      for (std::size_t e = 0; e < powers.size(); ++e) os << (e ? "," : "") << powers[e];
      os << ")";
      break;
    }
  }
  return os.str();
}

Representation trivial_representation(const GroupData& g) {
  Representation r;
  r.powers.assign(g.generators, 0);
  r.surjective = g.h1.free_rank == 0 && g.h1.torsion.empty();
  return r;
}

Representation free_abelian_representation(const GroupData& g) {
  Representation r;
  r.kind = Representation::Kind::FreeAbelian;
  r.variables = g.h1.free_rank;
  for (const auto& c : g.free_coords) {
    std::vector<int> ex;
    for (const auto& v : c) ex.push_back(static_cast<int>(v.get_si()));
    r.exponents.push_back(ex);
  }
  r.surjective = g.h1.torsion.empty();
  return r;
}

Representation cyclic_representation(const GroupData& g, int n, const std::optional<std::vector<long>>& character) {
  if (n < 1) throw SpineError(ErrorCode::InvalidArgument, "cyclic order must be positive");
  Representation r;
  r.kind = Representation::Kind::Cyclic;
  r.order = n;
  auto mod = [n](long v) { return ((v % n) + n) % n; };
  if (character) {
    if (static_cast<int>(character->size()) != g.generators)
      throw SpineError(ErrorCode::InvalidArgument, "character needs " + std::to_string(g.generators) + " values");
    for (long k : *character) r.powers.push_back(mod(k));
    for (std::size_t f = 0; f < g.relators.size(); ++f) {
      auto ab = abelianize(g.relators[f], g.generators);
      long s = 0;
      for (int e = 0; e < g.generators; ++e) s = mod(s + mod(ab[e]) * r.powers[e]);
      if (s != 0)
        throw SpineError(ErrorCode::RelatorNotKilled,
                         "relator of face class " + std::to_string(f) + " maps to z^" + std::to_string(s));
    }
    long gg = n;
    for (long p : r.powers) gg = std::gcd(gg, p);
    r.surjective = gg == 1;
    return r;
  }
  if (g.h1.free_rank >= 1) {
    for (const auto& c : g.free_coords) r.powers.push_back(mod(mpz_class(c[0] % n).get_si()));
    r.surjective = true;
    return r;
  }
  int best = -1;
  long best_gcd = 0;
  for (std::size_t i = 0; i < g.torsion_rows.size(); ++i) {
    mpz_class d = g.smith.diagonal[g.torsion_rows[i]];
    long gd = mpz_class(gcd(d, mpz_class(n))).get_si();
    if (gd > best_gcd) {
      best_gcd = gd;
      best = static_cast<int>(i);
    }
  }
  if (best < 0) {
    r.powers.assign(g.generators, 0);
    r.surjective = n == 1;
    return r;
  }
  const long scale = n / best_gcd;
  for (const auto& c : g.torsion_coords) r.powers.push_back(mod(mpz_class(c[best] % n).get_si() * scale));
  r.surjective = best_gcd == n;
  return r;
}

}  // namespace spinetorsion
