#pragma once

#include <vector>

#include "ramanujan/permutation.hpp"
#include "ramanujan/plane_tree.hpp"

namespace ramanujan::bijections {

using trees::Label;
using trees::PlaneTree;

// At every vertex, permutes the subtrees so that the pattern of the child
// labels equals the pattern of the children's beta values before the
// move.  Elder status becomes really-elder status.
PlaneTree phi(const PlaneTree& tree);
// Inverse of phi: after it, the beta pattern equals the former label
// pattern.
PlaneTree phi_inv(const PlaneTree& tree);

// Removes j and splices its children into i's list where j stood.
// Throws TreeError unless j is a child of i.
PlaneTree contract(const PlaneTree& tree, Label i, Label j);

// Equal after forgetting the order of i's children.
bool i_equivalent(const PlaneTree& a, const PlaneTree& b, Label i);
// Both contain the edge (i,j) and the contractions are i-equivalent.
bool ij_equivalent(const PlaneTree& a, const PlaneTree& b, Label i, Label j);

// All trees obtained by reordering the children of i (deg(i)! of them).
std::vector<PlaneTree> i_class(const PlaneTree& tree, Label i);
// All trees (i,j)-equivalent to `tree`: every order of i's children in
// the contraction, with j reinserted owning any contiguous run of them.
std::vector<PlaneTree> ij_class(const PlaneTree& tree, Label i, Label j);

// T rooted at a with b below the root child a_t: the root's children
// right of a_t trade places with b's children, then labels a and b swap.
// The result is rooted at b; root_swap(root_swap(T, a, b), b, a) == T.
// Throws TreeError unless T is rooted at a and contains b.
PlaneTree root_swap(const PlaneTree& tree, Label a, Label b);
inline PlaneTree root_swap12(const PlaneTree& tree) { return root_swap(tree, 1, 2); }

}  // namespace ramanujan::bijections
