#pragma once

#include <utility>
#include <vector>

#include "mdmat/tensor.hpp"

namespace mdmat {

/// A set of axis positions selected for contraction or projection.
/// Positions are 1-based, strictly increasing and refer to the ORIGINAL axis
/// numbering of the tensor; consecutive reductions renumber surviving axes
/// only once, after all sets are applied.
struct AxisSet {
    std::vector<int> positions;

    AxisSet() = default;
    explicit AxisSet(std::vector<int> pos);
};

/// Outer product: (d1+d2)-dimensional C with c_{ab} = a_a * b_b.
/// Both factors must be cubical of the same order.
Tensor outer(const Tensor& a, const Tensor& b);

/// Kronecker product of two d-dimensional matrices of orders n1 and n2:
/// d-dimensional of order n1*n2 with c_g = a_a * b_b where
/// g_i = (a_i - 1) * n2 + b_i.
Tensor kronecker(const Tensor& a, const Tensor& b);

/// Contraction: for each set, sums entries over the synchronized run of the
/// set's axes (the main diagonal of those planes). Sets must be pairwise
/// disjoint; within one set all axes need equal extents.
Tensor contract(const Tensor& a, const std::vector<AxisSet>& sets);
Tensor contract(const Tensor& a, const AxisSet& s);

/// Projection: sums entries over all combinations of the removed axes.
/// Sets must be pairwise disjoint; extents within a set may differ.
Tensor project(const Tensor& a, const std::vector<AxisSet>& sets);
Tensor project(const Tensor& a, const AxisSet& s);

/// (i,j)-dot product: the (i, d1+j)-contraction of the outer product, i.e.
/// axis i of A is summed against axis j of B.
Tensor dot_ij(const Tensor& a, int i, const Tensor& b, int j);

/// The default dot product: (d1, 1)-dot.
Tensor dot(const Tensor& a, const Tensor& b);

/// S-dot product of two or more factors: one contraction synchronizing the
/// marked axis of every factor over the shared order.
Tensor s_dot(const std::vector<std::pair<Tensor, int>>& factors);

/// Circle product: the (d1-1)-fold dot of A against copies of B,
/// c_{i,b2,...,bd1} = sum_{j2..jd1} a_{i,j2,...,jd1} * b_{j2 b2} *...* b_{jd1 bd1}.
/// Axes 2..d1 of A must match B's first-axis extent; either factor may be a
/// rectangular 2-dimensional matrix (as row-selection matrices in coverings
/// are), in which case the result is rectangular as well.
Tensor circle(const Tensor& a, const Tensor& b);

} // namespace mdmat
