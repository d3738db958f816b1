#pragma once

// Euler chain of the combing and the maw cochain c_P.

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "spinetorsion/spider.hpp"

namespace spinetorsion {

/// Signed edge chain of a path through the given ranks of tetrahedron t;
/// steps against the branching count -1.
std::vector<long> tet_path_chain(const BranchedSpine& spine, int tet, const std::vector<int>& ranks);

/// Same for a path through the ranked corners (0, 1, 2) of face class f.
std::vector<long> face_path_chain(const BranchedSpine& spine, int face_class, const std::vector<int>& ranks);

/// Integer 1-chain sum_c eps(c) (alpha+_c - alpha-_c): every edge once, minus
/// the long edge of every face, plus the source-sink edge of every tetrahedron.
std::vector<long> euler_chain(const BranchedSpine& spine);

/// H1 coordinates (free, torsion) of the Euler chain.
std::pair<std::vector<mpz_class>, std::vector<mpz_class>> euler_chain_class(const BranchedSpine& spine,
                                                                            const CellComplexX& x,
                                                                            const GroupData& g);

struct MawCochain {
  // Per region (edge class): tangency count n(R) and c_P(R) = 1 - n(R)/2.
  std::vector<int> tangency;
  std::vector<int> value;
};

/// At each spine vertex the field is tangent to the regions dual to the
/// edges (v0 v2) and (v1 v3) of the tetrahedron, in branching order.
MawCochain maw_cochain(const BranchedSpine& spine);

struct EulerData {
  std::vector<long> chain;
  std::vector<mpz_class> chain_free, chain_torsion;
  MawCochain maw;
  // H1 class of the 1-chain sum_R c_P(R) R
  std::vector<mpz_class> cochain_free, cochain_torsion;
};

EulerData euler_data(const BranchedSpine& spine);

}  // namespace spinetorsion
