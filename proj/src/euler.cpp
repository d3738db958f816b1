#include "spinetorsion/euler.hpp"

namespace spinetorsion {

namespace {

void add_step(std::vector<long>& chain, int cls, bool forward) { chain[cls] += forward ? 1 : -1; }

}  // namespace

std::vector<long> tet_path_chain(const BranchedSpine& spine, int tet, const std::vector<int>& ranks) {
  std::vector<long> chain(spine.num_edges(), 0);
  for (std::size_t k = 0; k + 1 < ranks.size(); ++k) {
    const int a = spine.vertex_of_rank(tet, ranks[k]), b = spine.vertex_of_rank(tet, ranks[k + 1]);
    add_step(chain, spine.edge_class(tet, a, b), ranks[k] < ranks[k + 1]);
  }
  return chain;
}

std::vector<long> face_path_chain(const BranchedSpine& spine, int face_class, const std::vector<int>& ranks) {
  const auto [e01, e12, e02] = spine.face_edges(face_class);
  const int by_pair[3][3] = {{-1, e01, e02}, {e01, -1, e12}, {e02, e12, -1}};
  std::vector<long> chain(spine.num_edges(), 0);
  for (std::size_t k = 0; k + 1 < ranks.size(); ++k)
    add_step(chain, by_pair[ranks[k]][ranks[k + 1]], ranks[k] < ranks[k + 1]);
  return chain;
}

std::vector<long> euler_chain(const BranchedSpine& spine) {
  std::vector<long> chain(spine.num_edges(), 1);
  for (int f = 0; f < spine.num_faces(); ++f) chain[spine.face_edges(f)[2]] -= 1;
  for (int t = 0; t < spine.num_tets(); ++t)
    chain[spine.edge_class(t, spine.vertex_of_rank(t, 0), spine.vertex_of_rank(t, 3))] += 1;
  return chain;
}

std::pair<std::vector<mpz_class>, std::vector<mpz_class>> euler_chain_class(const BranchedSpine& spine,
                                                                            const CellComplexX& x,
                                                                            const GroupData& g) {
  if (x.edges != spine.num_edges()) throw SpineError(ErrorCode::InvalidArgument, "complex does not match the spine");
  return h1_class(g, euler_chain(spine));
}

MawCochain maw_cochain(const BranchedSpine& spine) {
  MawCochain m;
  m.tangency.assign(spine.num_edges(), 0);
  for (int t = 0; t < spine.num_tets(); ++t)
    for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 3}})
      ++m.tangency[spine.edge_class(t, spine.vertex_of_rank(t, i), spine.vertex_of_rank(t, j))];
  for (int n : m.tangency) m.value.push_back(1 - n / 2);
  return m;
}

EulerData euler_data(const BranchedSpine& spine) {
  const CellComplexX x = build_complex(spine);
  const GroupData g = presentation(x, spine);
  EulerData d;
  d.chain = euler_chain(spine);
  std::tie(d.chain_free, d.chain_torsion) = h1_class(g, d.chain);
  d.maw = maw_cochain(spine);
  std::vector<long> dual(d.maw.value.begin(), d.maw.value.end());
  std::tie(d.cochain_free, d.cochain_torsion) = h1_class(g, dual);
  return d;
}

}  // namespace spinetorsion
