#pragma once

// Torsion of based twisted chain complexes over a field, its sign-refined
// version, and the one-variable Alexander cross-check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spinetorsion/spider.hpp"
#include "spinetorsion/upoly.hpp"

namespace spinetorsion {

/// Ordered bases of H_0..H_3, each vector a cycle in cell coordinates.
template <class F>
struct HomologyBases {
  std::array<std::vector<std::vector<F>>, 4> basis;
};

template <class F>
std::array<int, 4> homology_dims(const TwistedComplex<F>& tc) {
  std::array<int, 5> r{0, rank(tc.d1), rank(tc.d2), rank(tc.d3), 0};
  std::array<int, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = tc.dim(i) - r[i] - r[i + 1];
  return b;
}

template <class F>
bool is_acyclic(const TwistedComplex<F>& tc) {
  auto b = homology_dims(tc);
  return std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
}

/// Boundary D_i : C_i -> C_{i-1} for i = 1..3, and D_0 = D_4 = 0 with the
/// right shapes.
template <class F>
Matrix<F> boundary_or_zero(const TwistedComplex<F>& tc, int i) {
  if (i >= 1 && i <= 3) return tc.boundary(i);
  if (i == 0) return Matrix<F>(0, tc.dim(0));
  return Matrix<F>(tc.dim(3), 0);
}

/// Kernel vectors (echelon nullspace order) greedily completed against the
/// image of the next boundary.
template <class F>
HomologyBases<F> default_homology_bases(const TwistedComplex<F>& tc) {
  HomologyBases<F> h;
  for (int i = 0; i < 4; ++i) {
    const Matrix<F> di = boundary_or_zero(tc, i), up = boundary_or_zero(tc, i + 1);
    const Matrix<F> z = i == 0 ? Matrix<F>::identity(tc.dim(0)) : nullspace(di);
    Matrix<F> all = hstack<F>({up, z}, tc.dim(i));
    std::vector<int> order(all.cols());
    for (int j = 0; j < all.cols(); ++j) order[j] = j;
    for (int c : independent_columns(all, order))
      if (c >= up.cols()) h.basis[i].push_back(all.col(c));
  }
  return h;
}

/// tau_0 = prod_i det[ D_{i+1} b_{i+1} | h_i | b_i ]^{(-1)^i} for the cell
/// basis in its current order. A nonzero seed randomizes the choice of the
/// b_i and the elimination pivots.
template <class F>
F torsion0(const TwistedComplex<F>& tc, const HomologyBases<F>* h, std::uint64_t seed = 0) {
  const auto dims = homology_dims(tc);
  const bool acyclic = std::all_of(dims.begin(), dims.end(), [](int x) { return x == 0; });
  if (!acyclic && !h)
    throw SpineError(ErrorCode::NotAcyclicNoBasis, "twisted homology is nonzero and no homology basis was given");
  std::mt19937_64 rng(seed);
  std::array<std::vector<int>, 5> b;
  for (int i = 1; i <= 3; ++i) {
    std::vector<int> order(tc.dim(i));
    for (int j = 0; j < tc.dim(i); ++j) order[j] = j;
    if (seed) std::shuffle(order.begin(), order.end(), rng);
    b[i] = independent_columns(tc.boundary(i), order);
  }
  F result(1);
  for (int i = 0; i < 4; ++i) {
    const int n = tc.dim(i);
    const int hn = h ? static_cast<int>(h->basis[i].size()) : 0;
    if (hn != dims[i])
      throw SpineError(ErrorCode::BasisRankMismatch, "degree " + std::to_string(i) + " needs " +
                                                         std::to_string(dims[i]) + " homology vectors, got " +
                                                         std::to_string(hn));
    Matrix<F> m(n, n);
    int col = 0;
    if (i < 3)
      for (int c : b[i + 1]) {
        for (int r = 0; r < n; ++r) m(r, col) = tc.boundary(i + 1)(r, c);
        ++col;
      }
    for (int k = 0; k < hn; ++k) {
      const auto& v = h->basis[i][k];
      if (static_cast<int>(v.size()) != n)
        throw SpineError(ErrorCode::BasisRankMismatch, "homology vector of wrong length in degree " + std::to_string(i));
      for (int r = 0; r < n; ++r) m(r, col) = v[r];
      ++col;
    }
    for (int c : b[i]) m(c, col++) = F(1);
    if (col != n) throw SpineError(ErrorCode::BasisRankMismatch, "degree " + std::to_string(i) + " basis has wrong size");
    F d = det(m, seed ? rng() | 1 : 0);
    if (d.is_zero())
      throw SpineError(ErrorCode::BasisRankMismatch,
                       "homology vectors in degree " + std::to_string(i) + " do not form a basis of homology");
    result = (i % 2 == 0) ? result * d : result / d;
  }
  return result;
}

/// Turaev's parity N = sum_i alpha_i beta_i mod 2, alpha_i and beta_i the
/// partial sums of chain ranks and Betti numbers up to degree i.
inline int turaev_parity(const std::array<int, 4>& dims, const std::array<int, 4>& betti) {
  int alpha = 0, beta = 0, n = 0;
  for (int i = 0; i < 4; ++i) {
    alpha += dims[i];
    beta += betti[i];
    n += alpha * beta;
  }
  return n % 2;
}

/// Sign-refined torsion: sgn((-1)^N(R) a) * (-1)^N(phi) tau_0, with a the
/// torsion of the rational untwisted complex in the same cell order and
/// homology bases `o`, each parity taken from its own complex.
template <class F>
F sign_refined_torsion0(const TwistedComplex<F>& tc, const HomologyBases<F>* h,
                        const TwistedComplex<Rational>& untwisted, const HomologyBases<Rational>& o,
                        std::uint64_t seed = 0) {
  Rational a = torsion0(untwisted, &o, seed);
  F t = torsion0(tc, h, seed);
  const std::array<int, 4> dims{untwisted.dim(0), untwisted.dim(1), untwisted.dim(2), untwisted.dim(3)};
  const int parity = turaev_parity(dims, homology_dims(untwisted)) + turaev_parity(dims, homology_dims(tc));
  const int sign = (a.sign() > 0 ? 1 : -1) * (parity % 2 ? -1 : 1);
  return sign > 0 ? t : -t;
}

/// Representation request as accepted by the command line.
struct RepSpec {
  enum class Kind { Trivial, FreeAbelian, Cyclic };
  Kind kind = Kind::Trivial;
  int order = 0;
  std::optional<std::vector<long>> character;  // cyclic only; absent = automatic

  /// "trivial", "free-abelian", "cyclic:N" or "cyclic:N:k0,k1,...".
  static RepSpec parse(const std::string& text);
  std::string to_string() const;
};

struct TorsionReport {
  std::string representation;  // resolved representation
  std::string field;           // "Q", "Q(t1,...,tr)", "Q(z_n)"
  std::string value;
  bool sign_fixed = false;
  bool acyclic = false;
  bool surjective = false;
  std::string homology_basis;  // "none" or "auto"
  std::array<int, 4> twisted_betti{};
  int chi_spine = 0;
};

/// Full pipeline: complex, presentation, representation, torsion. Throws
/// NotAcyclicNoBasis for a non-acyclic complex unless `auto_basis`.
TorsionReport compute_torsion(const BranchedSpine& spine, const RepSpec& rep, bool sign_refined, bool auto_basis,
                              std::uint64_t seed = 0);

/// Builds the representation named by `rep` for the given group data.
Representation make_representation(const GroupData& g, const RepSpec& rep);

/// Generator of the first elementary ideal of the presentation under the
/// character g -> t^{k_g}, via Fox derivatives. Normalized up to c*t^k.
/// Zero when there are no relators.
UPoly fox_alexander(const GroupData& g, const std::vector<long>& character);

/// Order of the degree-1 homology of the twisted complex under
/// g -> t^{k_g}, over Q[t, 1/t]. Normalized up to c*t^k.
UPoly twisted_h1_order(const BranchedSpine& spine, const SpiderAnchors& anchors, const std::vector<long>& character);

/// The surjection H1 -> Z given by the first free coordinate.
std::vector<long> first_free_character(const GroupData& g);

}  // namespace spinetorsion
