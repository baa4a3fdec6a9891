#pragma once

#include <cstdint>
#include <vector>

#include "mdmat/tensor.hpp"

namespace mdmat {

/// A diagonal: n indices that pairwise differ in every coordinate, kept in
/// canonical form (sorted by first component, which then runs 1..n).
struct Diagonal {
    std::vector<Index> indices;

    bool operator==(const Diagonal&) const = default;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Number of diagonals of a d-dimensional matrix of order n: (n!)^(d-1).
BigInt diagonal_space(int n, int d);

/// Exact permanent: sum over all diagonals of the entry product. Uses
/// support-pruned backtracking over the hyperplanes of the first axis,
/// maintaining per-axis used-value sets and skipping zero entries.
/// `threads` > 1 partitions the first hyperplane's choices across workers;
/// exact rational addition makes the result schedule-independent.
Rational permanent(const Tensor& a, int threads = 1);

/// Independent cross-validation route: literal enumeration of all (d-1)-tuples
/// of permutations, no pruning. Refuses with BudgetError when the diagonal
/// space exceeds `budget`.
Rational permanent_oracle(const Tensor& a, std::uint64_t budget = kDefaultOracleBudget);

/// True iff some diagonal has all entries > 0 (requires a nonnegative matrix).
bool has_positive_diagonal(const Tensor& a);

/// Diagonals whose entry product is nonzero (or all-positive when
/// `positive_only`), in lexicographic order, at most `limit` of them.
std::vector<Diagonal> list_diagonals(const Tensor& a, bool positive_only, std::size_t limit);

/// The (d1+d2-1)-dimensional matrix C with c_{i,a,b} = a_{i,a} * b_{sigma(i),b};
/// its permanent equals per(A) * per(B).
Tensor reduced_outer(const Tensor& a, const Tensor& b, const std::vector<int>& sigma);

} // namespace mdmat
