#pragma once

#include <vector>

#include "mdmat/ops.hpp"
#include "mdmat/tensor.hpp"

namespace mdmat {

/// d-dimensional array of order n over symbols 1..n in which every line
/// contains all n symbols. Cells are stored like tensor entries (last axis
/// fastest).
struct LatinHypercube {
    int d = 0;
    int n = 0;
    std::vector<int> cells;

    int at(const Index& idx) const { return cells[shape_offset(shape(), idx)]; }
    Shape shape() const { return Shape::cube(d, n); }

    bool operator==(const LatinHypercube&) const = default;
};

/// Validates the line property and builds the hypercube.
LatinHypercube make_latin(int d, int n, std::vector<int> cells);

/// A d-ary quasigroup of order n, carried by its Cayley table.
struct Quasigroup {
    LatinHypercube table;

    int arity() const { return table.d; }
    int order() const { return table.n; }
    int apply(const Index& args) const { return table.at(args); }

    bool operator==(const Quasigroup&) const = default;
};

/// t-(n, k, lambda) orthogonal array: lambda*n^t rows of length k over 1..n
/// such that in every t columns each t-tuple appears exactly lambda times.
struct OrthogonalArray {
    int t = 0;
    int n = 0;
    int k = 0;
    int lambda = 0;
    std::vector<std::vector<int>> rows;

    bool operator==(const OrthogonalArray&) const = default;
};

/// Validates row count, row length and symbol ranges (the counting property
/// itself is checked by oa_to_tensor).
OrthogonalArray make_oa(int t, int n, int k, int lambda, std::vector<std::vector<int>> rows);

/// The (d+1)-dimensional permutation M(Q): entry at (a, s) is 1 iff the cell
/// of Q at a holds symbol s. The symbol axis is last.
Tensor latin_to_tensor(const LatinHypercube& q);

/// Inverse of latin_to_tensor; the input must be a (0,1) polystochastic
/// matrix (a multidimensional permutation).
LatinHypercube tensor_to_latin(const Tensor& m);

/// The (d+1)-dimensional permutation of the quasigroup graph
/// {(x0, x1, ..., xd) : f(x1..xd) = x0}; the symbol axis is FIRST, which is
/// the orientation under which composition corresponds to the dot product.
Tensor qg_to_tensor(const Quasigroup& f);

/// Number of transversals: diagonals of Q whose symbols are pairwise
/// distinct. Equals the permanent of latin_to_tensor(q).
BigInt transversal_count(const LatinHypercube& q);

/// Cayley table of the iterated group Z_n: cell at a holds
/// ((a_1 + ... + a_d) mod n), shifted to symbols 1..n.
LatinHypercube iterated_group_hypercube(int n, int d);

/// The k-dimensional order-n matrix of row counts. Validates that the array
/// satisfies the orthogonal-array counting property, which is equivalent to
/// (1/lambda) * M being (k-t)-stochastic.
Tensor oa_to_tensor(const OrthogonalArray& r);

/// Inverse codec: lambda * m must be a nonnegative integer matrix; emits rows
/// in lexicographic order.
OrthogonalArray tensor_to_oa(const Tensor& m, int t, int lambda);

/// Rows (a, q_a) of the hypercube as a d-(n, d+1, 1) orthogonal array.
OrthogonalArray latin_to_oa(const LatinHypercube& q);

/// Composition f * g: substitutes g into the last argument slot of f,
/// giving a (d1+d2-1)-ary quasigroup of the same order.
Quasigroup qg_compose(const Quasigroup& f, const Quasigroup& g);

/// Direct product: acts coordinatewise on the product set with the pairing
/// (x, y) -> (x-1)*n2 + y, giving a d-ary quasigroup of order n1*n2.
Quasigroup qg_direct_product(const Quasigroup& f, const Quasigroup& g);

} // namespace mdmat
