#include "spinetorsion/census.hpp"

#include <functional>
#include <map>

namespace spinetorsion {

namespace {

// Gluing of face i to face j that preserves the corner order, with corners
// labelled by branching rank.
Perm4 order_preserving(int i, int j) {
  auto from = face_corners(i);
  auto to = face_corners(j);
  std::array<int, 4> img{};
  for (int k = 0; k < 3; ++k) img[from[k]] = to[k];
  img[i] = j;
  return Perm4(img[0], img[1], img[2], img[3]);
}

}  // namespace

// Every branched triangulation is isomorphic to one whose corner labels are
// the branching ranks; all gluings are then order preserving and the
// branching is "lower label to higher label".
std::vector<BranchedSpine> census(int tets) {
  if (tets <= 0) throw SpineError(ErrorCode::InvalidArgument, "census needs a positive size");
  const int slots = 4 * tets;
  std::map<std::vector<int>, BranchedSpine> found;
  std::vector<int> orient(tets), partner(slots, -1);
  std::vector<std::array<int, 4>> ranks(tets, {0, 1, 2, 3});

  auto emit = [&]() {
    std::vector<std::array<Gluing, 4>> table(tets);
    for (int s = 0; s < slots; ++s) {
      int t = s / 4, f = s % 4, u = partner[s] / 4, g = partner[s] % 4;
      table[t][f] = Gluing{u, g, order_preserving(f, g)};
    }
    try {
      BranchedSpine sp = spine_from_ranks(Triangulation(std::move(table)), orient, ranks);
      auto key = canonical_form(sp);
      found.try_emplace(std::move(key), std::move(sp));
    } catch (const SpineError&) {
    }
  };

  std::function<void(int)> match = [&](int from) {
    int s = from;
    while (s < slots && partner[s] >= 0) ++s;
    if (s == slots) {
      emit();
      return;
    }
    for (int r = s + 1; r < slots; ++r) {
      if (partner[r] >= 0) continue;
      int i = s % 4, j = r % 4;
      int want = ((i + j) % 2 == 0) ? -1 : 1;
      if (orient[s / 4] * orient[r / 4] != want) continue;
      partner[s] = r;
      partner[r] = s;
      match(s + 1);
      partner[s] = partner[r] = -1;
    }
  };

  for (int mask = 0; mask < (1 << tets); ++mask) {
    for (int t = 0; t < tets; ++t) orient[t] = (mask >> t & 1) ? -1 : 1;
    match(0);
  }

  std::vector<BranchedSpine> out;
  out.reserve(found.size());
  for (auto& [key, sp] : found) out.push_back(std::move(sp));
  return out;
}

}  // namespace spinetorsion
