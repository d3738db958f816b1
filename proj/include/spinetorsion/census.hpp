#pragma once

#include <vector>

#include "spinetorsion/spine.hpp"

namespace spinetorsion {

/// All branched spines with `tets` vertices up to isomorphism, sorted by
/// canonical form.
std::vector<BranchedSpine> census(int tets);

}  // namespace spinetorsion
