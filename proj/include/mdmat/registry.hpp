#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mdmat/combinatorics.hpp"
#include "mdmat/permanent.hpp"
#include "mdmat/stochastic.hpp"

namespace mdmat {

/// Optional knobs a check may consume; unset fields fall back to per-check
/// defaults derived from the inputs.
struct CheckParams {
    std::vector<AxisSet> sets; // first set is S, second is T where used
    std::optional<int> i, j;   // dot axes
    std::optional<Rational> lambda;
    std::vector<int> sigma;
    std::optional<int> n, d, ell, t;
    std::uint64_t budget = kDefaultOracleBudget;
    int threads = 1;
};

using CheckInput = std::variant<Tensor, LatinHypercube, OrthogonalArray>;

struct CheckOutcome {
    bool holds = false;
    std::string detail;
};

/// One verifiable statement: an algebraic identity, a stochasticity law,
/// a permanent bound, or a fixed counterexample. `run` evaluates it exactly
/// on the given inputs; malformed or inapplicable inputs raise
/// ValidationError instead of reporting a violation.
struct CheckDef {
    const char* name;
    const char* summary;
    const char* usage;
    int min_inputs;
    int max_inputs;
    std::function<CheckOutcome(const std::vector<CheckInput>&, const CheckParams&)> run;
};

const std::vector<CheckDef>& check_registry();
const CheckDef* find_check(const std::string& name);
CheckOutcome run_check(const std::string& name, const std::vector<CheckInput>& inputs,
                       const CheckParams& params = {});

// Built-in witness matrices used by the fixed counterexample checks.

/// 3-dimensional (0,1) matrix of order 3 with permanent 2 whose Kronecker
/// square has permanent 40 < 64.
Tensor kron_upper_witness();
/// All-ones 3-dimensional matrix of order 2 (permanent 4).
Tensor kron_zero_witness_a();
/// 3-dimensional (0,1) matrix of order 2 with a 1 exactly where the index sum
/// is even; permanent 0, yet its Kronecker product with the all-ones matrix
/// has permanent 64.
Tensor kron_zero_witness_b();
/// (0,1) matrix with ones exactly on the first hyperplane of the first
/// direction; permanent 0, projections and contractions positive.
Tensor hyperplane_indicator(int d, int n);
/// (0,1) matrix with ones exactly on the diagonal (i, i+1, ..., i+1) mod n;
/// permanent 1, contractions through axis 1 all zero.
Tensor shifted_diagonal(int d, int n);
/// n x n matrix whose first column is all ones (permanent 0 for n >= 2).
Tensor column_ones(int n);
/// n x n matrix whose first row is all ones (permanent 0 for n >= 2).
Tensor row_ones(int n);
/// n x n matrix with a single 1 at (i, j); 2-stochastic.
Tensor unit_at(int n, int i, int j);

} // namespace mdmat
