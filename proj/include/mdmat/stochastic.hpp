#pragma once

#include <optional>
#include <set>
#include <string>

#include "mdmat/ops.hpp"
#include "mdmat/tensor.hpp"

namespace mdmat {

/// True iff every k-dimensional plane of the cubical nonnegative matrix sums
/// to exactly 1. Throws ValidationError on negative entries (stochasticity is
/// undefined there).
bool is_k_stochastic(const Tensor& a, int k);

struct StochasticityReport {
    std::set<int> degrees; // every k with is_k_stochastic(a, k)
    bool nonnegative = false;

    bool polystochastic() const { return degrees.count(1) > 0; }
};

/// Degrees for all k in 1..d. Negative entries yield an empty degree set and
/// nonnegative = false rather than an error.
StochasticityReport stochasticity_report(const Tensor& a);

enum class ProductKind { Outer, Kronecker, Contraction, Projection, Dot, Circle };

ProductKind product_kind_from_name(const std::string& name);
const char* product_kind_name(ProductKind k);

/// Predicted stochasticity degree r and normalization scale for the product
/// of a k1-stochastic d1-dimensional matrix of order n1 with a k2-stochastic
/// d2-dimensional matrix of order n2 (contraction/projection use only the
/// first triple plus the removed-set size ell). scale * product is exactly
/// r-stochastic whenever `applicable`.
struct ProductStochasticityPrediction {
    ProductKind kind = ProductKind::Outer;
    int r = 0;
    Rational scale = 1;
    bool applicable = false;
    std::string reason; // set when not applicable
};

ProductStochasticityPrediction predicted_product_stochasticity(ProductKind kind, int d1, int k1,
                                                               int n1, int d2, int k2, int n2,
                                                               int ell);

struct Eigenpair {
    Rational lambda;
    Tensor v; // 1-dimensional, length n
};

/// True iff A o v = lambda * (I o v) holds entrywise exactly.
bool verify_eigenpair(const Tensor& a, const Eigenpair& pair);

/// Rectangular (0,1) row-selection matrix: every row has exactly one 1.
struct CoveringWitness {
    Tensor P;

    explicit CoveringWitness(Tensor p); // validates
    int rows() const { return P.extent(1); }
    int cols() const { return P.extent(2); }
};

/// The (n1*n2) x n1 witness with p_{i,j} = 1 iff j = ceil(i / n2).
CoveringWitness standard_covering_P(int n1, int n2);

/// True iff A o P = P o B exactly (A of order rows(P), B of order cols(P)).
bool check_covering(const Tensor& a, const Tensor& b, const CoveringWitness& p);

/// The unique scalar c with (c * U) o P = P o B, if one exists.
std::optional<Rational> solve_covering_scale(const Tensor& u, const Tensor& b,
                                             const CoveringWitness& p);

/// One of the two explicit covering constructions: a scaled Kronecker product
/// that covers A through the standard witness. `derived_scale` is the constant
/// that actually satisfies the covering identity; `stated_scale` is the
/// commonly quoted one, kept for reporting.
struct CoveringConstruction {
    Tensor covering;
    CoveringWitness witness;
    Rational derived_scale;
    Rational stated_scale;
};

/// covering = derived_scale * (A (x) J_{n2}^d).
CoveringConstruction covering_by_uniform(const Tensor& a, int n2);
/// covering = derived_scale * (A (x) I) with I the d-dimensional identity of order n2.
CoveringConstruction covering_by_identity(const Tensor& a, int n2);

} // namespace mdmat
