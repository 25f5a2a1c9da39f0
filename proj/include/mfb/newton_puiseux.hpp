#pragma once

#include "mfb/branch.hpp"

namespace mfb {

struct ExpandResult {
    FieldPtr field;           // final common field of all branches
    FieldEmbedding embedding; // input field -> final field
    BranchSet branches;
};

// Split a square-free d with d(0,0) = 0 into its irreducible branch
// parametrizations at the origin (Newton polygon recursion, exact root
// adjunction, fields flattened to simple extensions as they grow).
ExpandResult expand(const BivarPoly& d, const FieldPtr& field, long min_order);

} // namespace mfb
