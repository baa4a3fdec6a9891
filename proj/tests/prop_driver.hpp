#pragma once

// Generates random conforming inputs for the registry checks, so the same
// identity can be exercised by the unit tests (few rounds) and the acceptance
// suite (many rounds) from one place.

#include <functional>
#include <utility>

#include "mdmat/registry.hpp"
#include "testutil.hpp"

namespace mdmat::test {

struct RandomCheck {
    std::string name;
    std::function<std::pair<std::vector<CheckInput>, CheckParams>(Rng&)> gen;
};

inline std::pair<std::vector<CheckInput>, CheckParams> no_params(std::vector<CheckInput> in) {
    return {std::move(in), CheckParams{}};
}

// Disjoint random axis sets inside {1..d}.
inline std::pair<AxisSet, AxisSet> rnd_disjoint_sets(Rng& rng, int d) {
    std::vector<int> axes = rnd_perm(rng, d);
    int s1 = rnd_int(rng, 1, std::min(2, d - 1));
    int s2 = rnd_int(rng, 1, std::min(2, d - s1));
    std::vector<int> a(axes.begin(), axes.begin() + s1);
    std::vector<int> b(axes.begin() + s1, axes.begin() + s1 + s2);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return {AxisSet(a), AxisSet(b)};
}

inline AxisSet rnd_set(Rng& rng, int d, int max_size) {
    std::vector<int> axes = rnd_perm(rng, d);
    int sz = rnd_int(rng, 1, std::min(max_size, d));
    std::vector<int> a(axes.begin(), axes.begin() + sz);
    std::sort(a.begin(), a.end());
    return AxisSet(a);
}

inline const std::vector<RandomCheck>& algebra_checks() {
    static const std::vector<RandomCheck> table = {
        {"outer-assoc",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             return no_params({rnd_cubical(rng, rnd_int(rng, 1, 2), n),
                               rnd_cubical(rng, rnd_int(rng, 1, 2), n),
                               rnd_cubical(rng, rnd_int(rng, 1, 2), n)});
         }},
        {"outer-commute",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             return no_params({rnd_cubical(rng, rnd_int(rng, 1, 3), n),
                               rnd_cubical(rng, rnd_int(rng, 1, 2), n)});
         }},
        {"outer-add",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3), d = rnd_int(rng, 1, 2);
             return no_params({rnd_cubical(rng, d, n), rnd_cubical(rng, d, n),
                               rnd_cubical(rng, rnd_int(rng, 1, 2), n)});
         }},
        {"outer-scalar",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             return no_params({rnd_cubical(rng, rnd_int(rng, 1, 2), n),
                               rnd_cubical(rng, rnd_int(rng, 1, 2), n)});
         }},
        {"kron-assoc",
         [](Rng& rng) {
             int d = rnd_int(rng, 1, 2);
             return no_params({rnd_cubical(rng, d, 2), rnd_cubical(rng, d, 2),
                               rnd_cubical(rng, d, rnd_int(rng, 2, 3))});
         }},
        {"kron-commute",
         [](Rng& rng) {
             int d = rnd_int(rng, 1, 3);
             return no_params(
                 {rnd_cubical(rng, d, rnd_int(rng, 2, 3)), rnd_cubical(rng, d, 2)});
         }},
        {"kron-add",
         [](Rng& rng) {
             int d = rnd_int(rng, 1, 3);
             int n1 = rnd_int(rng, 2, 3);
             return no_params({rnd_cubical(rng, d, n1), rnd_cubical(rng, d, n1),
                               rnd_cubical(rng, d, 2)});
         }},
        {"kron-scalar",
         [](Rng& rng) {
             int d = rnd_int(rng, 1, 3);
             return no_params(
                 {rnd_cubical(rng, d, rnd_int(rng, 2, 3)), rnd_cubical(rng, d, 2)});
         }},
        {"contract-commute",
         [](Rng& rng) {
             int d = rnd_int(rng, 3, 4);
             CheckParams p;
             auto [s, t] = rnd_disjoint_sets(rng, d);
             p.sets = {s, t};
             return std::pair{std::vector<CheckInput>{rnd_cubical(rng, d, rnd_int(rng, 2, 3))},
                              p};
         }},
        {"contract-add",
         [](Rng& rng) {
             int d = rnd_int(rng, 2, 4), n = rnd_int(rng, 2, 3);
             CheckParams p;
             p.sets = {rnd_set(rng, d, 2)};
             return std::pair{
                 std::vector<CheckInput>{rnd_cubical(rng, d, n), rnd_cubical(rng, d, n)}, p};
         }},
        {"contract-scalar",
         [](Rng& rng) {
             int d = rnd_int(rng, 2, 4);
             CheckParams p;
             p.sets = {rnd_set(rng, d, 2)};
             return std::pair{
                 std::vector<CheckInput>{rnd_cubical(rng, d, rnd_int(rng, 2, 3))}, p};
         }},
        {"project-commute",
         [](Rng& rng) {
             int d = rnd_int(rng, 3, 4);
             std::vector<int> extents;
             for (int a = 0; a < d; ++a)
                 extents.push_back(rnd_int(rng, 1, 3));
             CheckParams p;
             auto [s, t] = rnd_disjoint_sets(rng, d);
             p.sets = {s, t};
             return std::pair{std::vector<CheckInput>{rnd_tensor(rng, Shape(extents))}, p};
         }},
        {"project-add",
         [](Rng& rng) {
             int d = rnd_int(rng, 2, 4), n = rnd_int(rng, 2, 3);
             CheckParams p;
             p.sets = {rnd_set(rng, d, 2)};
             return std::pair{
                 std::vector<CheckInput>{rnd_cubical(rng, d, n), rnd_cubical(rng, d, n)}, p};
         }},
        {"project-scalar",
         [](Rng& rng) {
             int d = rnd_int(rng, 2, 4);
             CheckParams p;
             p.sets = {rnd_set(rng, d, 2)};
             return std::pair{
                 std::vector<CheckInput>{rnd_cubical(rng, d, rnd_int(rng, 2, 3))}, p};
         }},
        {"single-axis-same",
         [](Rng& rng) {
             int d = rnd_int(rng, 1, 4);
             CheckParams p;
             p.ell = rnd_int(rng, 1, d);
             return std::pair{
                 std::vector<CheckInput>{rnd_cubical(rng, d, rnd_int(rng, 2, 3))}, p};
         }},
        {"unfold-contract",
         [](Rng& rng) {
             CheckParams p;
             p.ell = rnd_int(rng, 1, 2);
             return std::pair{std::vector<CheckInput>{rnd_cubical(rng, rnd_int(rng, 1, 3),
                                                                  rnd_int(rng, 2, 3))},
                              p};
         }},
        {"unfold-project",
         [](Rng& rng) {
             CheckParams p;
             p.ell = rnd_int(rng, 1, 2);
             return std::pair{std::vector<CheckInput>{rnd_cubical(rng, rnd_int(rng, 1, 3),
                                                                  rnd_int(rng, 2, 3))},
                              p};
         }},
        {"dot-assoc",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             return no_params({rnd_cubical(rng, rnd_int(rng, 1, 3), n),
                               rnd_cubical(rng, rnd_int(rng, 2, 3), n),
                               rnd_cubical(rng, rnd_int(rng, 1, 3), n)});
         }},
        {"dot-add",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3), d = rnd_int(rng, 1, 3);
             return no_params({rnd_cubical(rng, d, n), rnd_cubical(rng, d, n),
                               rnd_cubical(rng, d, n)});
         }},
        {"dot-scalar",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             return no_params({rnd_cubical(rng, rnd_int(rng, 1, 3), n),
                               rnd_cubical(rng, rnd_int(rng, 1, 3), n)});
         }},
        {"dot-identity",
         [](Rng& rng) {
             return no_params(
                 {rnd_cubical(rng, rnd_int(rng, 1, 4), rnd_int(rng, 2, 3))});
         }},
        {"sdot-pair",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             Tensor a = rnd_cubical(rng, rnd_int(rng, 1, 3), n);
             Tensor b = rnd_cubical(rng, rnd_int(rng, 1, 3), n);
             CheckParams p;
             p.i = rnd_int(rng, 1, a.dim());
             p.j = rnd_int(rng, 1, b.dim());
             return std::pair{std::vector<CheckInput>{a, b}, p};
         }},
        {"sdot-chain",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             return no_params({rnd_cubical(rng, rnd_int(rng, 1, 2), n),
                               rnd_cubical(rng, 2, n),
                               rnd_cubical(rng, rnd_int(rng, 1, 2), n)});
         }},
        {"circle-assoc",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             int d1 = rnd_int(rng, 1, 3), d2 = rnd_int(rng, 1, 2), d3 = rnd_int(rng, 1, 2);
             if ((d1 - 1) * (d2 - 1) * (d3 - 1) > 4)
                 d1 = 2;
             return no_params({rnd_cubical(rng, d1, n), rnd_cubical(rng, d2, n),
                               rnd_cubical(rng, d3, n)});
         }},
        {"circle-add-left",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3), d1 = rnd_int(rng, 1, 3);
             return no_params({rnd_cubical(rng, d1, n), rnd_cubical(rng, d1, n),
                               rnd_cubical(rng, rnd_int(rng, 1, 2), n)});
         }},
        {"circle-add-right",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3), d2 = rnd_int(rng, 1, 3);
             return no_params({rnd_cubical(rng, 2, n), rnd_cubical(rng, d2, n),
                               rnd_cubical(rng, d2, n)});
         }},
        {"circle-scalar",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             return no_params({rnd_cubical(rng, rnd_int(rng, 1, 3), n),
                               rnd_cubical(rng, rnd_int(rng, 1, 2), n)});
         }},
        {"mixed-outer-kron",
         [](Rng& rng) {
             int d1 = rnd_int(rng, 1, 2), d2 = rnd_int(rng, 1, 2);
             int n1 = rnd_int(rng, 2, 3), n2 = 2;
             return no_params({rnd_cubical(rng, d1, n1), rnd_cubical(rng, d2, n1),
                               rnd_cubical(rng, d1, n2), rnd_cubical(rng, d2, n2)});
         }},
        {"mixed-contract-outer",
         [](Rng& rng) {
             int d = rnd_int(rng, 2, 3), n = rnd_int(rng, 2, 3);
             CheckParams p;
             p.sets = {rnd_set(rng, d, d - 1)}; // keep at least one surviving axis
             return std::pair{std::vector<CheckInput>{rnd_cubical(rng, d, n),
                                                      rnd_cubical(rng, rnd_int(rng, 1, 2), n)},
                              p};
         }},
        {"mixed-project-outer",
         [](Rng& rng) {
             int d = rnd_int(rng, 2, 3), n = rnd_int(rng, 2, 3);
             CheckParams p;
             p.sets = {rnd_set(rng, d, d - 1)};
             return std::pair{std::vector<CheckInput>{rnd_cubical(rng, d, n),
                                                      rnd_cubical(rng, rnd_int(rng, 1, 2), n)},
                              p};
         }},
        {"mixed-dot-outer",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             // keep d1 + d2 >= 3 so the dot result still has an axis
             Tensor a = rnd_cubical(rng, rnd_int(rng, 1, 2), n);
             Tensor b = rnd_cubical(rng, a.dim() == 1 ? 2 : rnd_int(rng, 1, 2), n);
             Tensor c = rnd_cubical(rng, rnd_int(rng, 1, 2), n);
             CheckParams p;
             p.i = rnd_int(rng, 1, a.dim());
             p.j = rnd_int(rng, 1, b.dim());
             return std::pair{std::vector<CheckInput>{a, b, c}, p};
         }},
        {"mixed-contract-kron",
         [](Rng& rng) {
             int d = rnd_int(rng, 2, 3);
             CheckParams p;
             p.sets = {rnd_set(rng, d, d - 1)};
             return std::pair{std::vector<CheckInput>{rnd_cubical(rng, d, rnd_int(rng, 2, 3)),
                                                      rnd_cubical(rng, d, 2)},
                              p};
         }},
        {"mixed-project-kron",
         [](Rng& rng) {
             int d = rnd_int(rng, 2, 3);
             CheckParams p;
             p.sets = {rnd_set(rng, d, d - 1)};
             return std::pair{std::vector<CheckInput>{rnd_cubical(rng, d, rnd_int(rng, 2, 3)),
                                                      rnd_cubical(rng, d, 2)},
                              p};
         }},
        {"mixed-dot-kron",
         [](Rng& rng) {
             int d1 = rnd_int(rng, 1, 2);
             int d2 = d1 == 1 ? 2 : rnd_int(rng, 1, 2); // dot result keeps an axis
             int n1 = rnd_int(rng, 2, 3), n2 = 2;
             return no_params({rnd_cubical(rng, d1, n1), rnd_cubical(rng, d1, n2),
                               rnd_cubical(rng, d2, n1), rnd_cubical(rng, d2, n2)});
         }},
        {"mixed-project-contract",
         [](Rng& rng) {
             int d = rnd_int(rng, 3, 4);
             CheckParams p;
             auto [s, t] = rnd_disjoint_sets(rng, d);
             p.sets = {s, t};
             return std::pair{std::vector<CheckInput>{rnd_cubical(rng, d, rnd_int(rng, 2, 3))},
                              p};
         }},
        {"mixed-contract-dot",
         [](Rng& rng) {
             int d = rnd_int(rng, 3, 4), n = rnd_int(rng, 2, 3);
             CheckParams p;
             p.sets = {rnd_set(rng, d - 1, 2)}; // stays clear of the dot axis d
             return std::pair{std::vector<CheckInput>{rnd_cubical(rng, d, n),
                                                      rnd_cubical(rng, rnd_int(rng, 1, 2), n)},
                              p};
         }},
        {"mixed-project-dot",
         [](Rng& rng) {
             int d = rnd_int(rng, 3, 4), n = rnd_int(rng, 2, 3);
             CheckParams p;
             p.sets = {rnd_set(rng, d - 1, 2)};
             return std::pair{std::vector<CheckInput>{rnd_cubical(rng, d, n),
                                                      rnd_cubical(rng, rnd_int(rng, 1, 2), n)},
                              p};
         }},
        {"plane-by-contraction",
         [](Rng& rng) {
             int d = rnd_int(rng, 2, 4);
             std::vector<int> extents;
             for (int a = 0; a < d; ++a)
                 extents.push_back(rnd_int(rng, 2, 3));
             CheckParams p;
             p.sets = {rnd_set(rng, d, d - 1)};
             return std::pair{std::vector<CheckInput>{rnd_tensor(rng, Shape(extents))}, p};
         }},
    };
    return table;
}

inline const std::vector<RandomCheck>& stochastic_checks() {
    static const std::vector<RandomCheck> table = {
        {"stoch-outer",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             int d1 = rnd_int(rng, 2, 3), d2 = rnd_int(rng, 2, 3);
             return no_params({rnd_k_stochastic(rng, d1, n, rnd_int(rng, 1, d1)),
                               rnd_k_stochastic(rng, d2, n, rnd_int(rng, 1, d2))});
         }},
        {"stoch-kron",
         [](Rng& rng) {
             int d = rnd_int(rng, 2, 3);
             int n1 = rnd_int(rng, 2, 3), n2 = rnd_int(rng, 2, 3);
             return no_params({rnd_k_stochastic(rng, d, n1, rnd_int(rng, 1, d)),
                               rnd_k_stochastic(rng, d, n2, rnd_int(rng, 1, d))});
         }},
        {"stoch-contract",
         [](Rng& rng) {
             int d = 4, n = rnd_int(rng, 2, 3);
             CheckParams p;
             p.sets = {rnd_set(rng, d, 2)};
             return std::pair{
                 std::vector<CheckInput>{rnd_k_stochastic(rng, d, n, rnd_int(rng, 1, 2))}, p};
         }},
        {"stoch-project",
         [](Rng& rng) {
             int d = rnd_int(rng, 3, 4), n = rnd_int(rng, 2, 3);
             CheckParams p;
             p.sets = {rnd_set(rng, d, d - 1)};
             return std::pair{
                 std::vector<CheckInput>{rnd_k_stochastic(rng, d, n, rnd_int(rng, 1, d))}, p};
         }},
        {"stoch-dot",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             // polystochastic pairs plus degree pairs reaching the general branch
             if (rnd_int(rng, 0, 1) == 0)
                 return no_params({rnd_k_stochastic(rng, 4, n, 2),
                                   rnd_k_stochastic(rng, 3, n, 1)});
             return no_params({rnd_polystochastic(rng, rnd_int(rng, 2, 3), n),
                               rnd_polystochastic(rng, rnd_int(rng, 2, 3), n)});
         }},
        {"stoch-circle",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             return no_params({rnd_polystochastic(rng, rnd_int(rng, 2, 3), n),
                               rnd_polystochastic(rng, rnd_int(rng, 2, 2), n)});
         }},
        {"dot-uniform",
         [](Rng& rng) {
             CheckParams p;
             p.t = rnd_int(rng, 1, 3);
             return std::pair{std::vector<CheckInput>{rnd_polystochastic(
                                  rng, rnd_int(rng, 2, 3), rnd_int(rng, 2, 3))},
                              p};
         }},
        {"circle-uniform",
         [](Rng& rng) {
             CheckParams p;
             p.t = rnd_int(rng, 1, 2);
             return std::pair{std::vector<CheckInput>{rnd_polystochastic(
                                  rng, rnd_int(rng, 2, 3), rnd_int(rng, 2, 3))},
                              p};
         }},
        {"eigen-ones",
         [](Rng& rng) {
             int d = rnd_int(rng, 2, 4);
             return no_params(
                 {rnd_k_stochastic(rng, d, rnd_int(rng, 2, 3), d - 1)});
         }},
        {"covering-uniform",
         [](Rng& rng) {
             CheckParams p;
             p.n = rnd_int(rng, 2, 3);
             return std::pair{std::vector<CheckInput>{rnd_cubical(rng, rnd_int(rng, 1, 3),
                                                                  rnd_int(rng, 2, 3))},
                              p};
         }},
        {"covering-identity",
         [](Rng& rng) {
             CheckParams p;
             p.n = rnd_int(rng, 2, 3);
             return std::pair{std::vector<CheckInput>{rnd_cubical(rng, rnd_int(rng, 1, 3),
                                                                  rnd_int(rng, 2, 3))},
                              p};
         }},
    };
    return table;
}

inline const std::vector<RandomCheck>& permanent_checks() {
    static const std::vector<RandomCheck> table = {
        {"per-outer",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             return no_params({rnd_cubical(rng, rnd_int(rng, 1, 3), n),
                               rnd_cubical(rng, rnd_int(rng, 1, 3), n)});
         }},
        {"per-reduced-outer",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             Tensor a = rnd_cubical(rng, rnd_int(rng, 1, 3), n);
             Tensor b = rnd_cubical(rng, rnd_int(rng, 1, 3), n);
             CheckParams p;
             p.sigma = rnd_perm(rng, n);
             return std::pair{std::vector<CheckInput>{a, b}, p};
         }},
        {"per-oracle-agree",
         [](Rng& rng) {
             return no_params(
                 {rnd_cubical(rng, rnd_int(rng, 1, 4), rnd_int(rng, 2, 3))});
         }},
        {"per-dot-bound",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             // d1 + d2 >= 3: the dot of two vectors is a scalar with no permanent
             Tensor a = rnd_cubical(rng, rnd_int(rng, 1, 3), n, true);
             Tensor b = rnd_cubical(rng, a.dim() == 1 ? rnd_int(rng, 2, 3) : rnd_int(rng, 1, 3),
                                    n, true);
             return no_params({a, b});
         }},
        {"per-circle-bound",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 3);
             return no_params({rnd_cubical(rng, rnd_int(rng, 1, 3), n, true),
                               rnd_cubical(rng, rnd_int(rng, 1, 3), n, true)});
         }},
        {"per-kron-bound",
         [](Rng& rng) {
             // The bound's diagonal count needs positive diagonal products
             // >= 1, so the instances are nonnegative integer matrices.
             int d = rnd_int(rng, 1, 3);
             int n1 = 2, n2 = rnd_int(rng, 1, 2);
             return no_params({rnd_integer_tensor(rng, Shape::cube(d, n1), 0, 3),
                               rnd_integer_tensor(rng, Shape::cube(d, n2), 0, 3)});
         }},
        {"per-project-bound",
         [](Rng& rng) {
             int d = rnd_int(rng, 2, 4);
             CheckParams p;
             p.sets = {rnd_set(rng, d, d - 1)};
             return std::pair{
                 std::vector<CheckInput>{rnd_cubical(rng, d, rnd_int(rng, 2, 3), true)}, p};
         }},
        {"per-equivalence-invariant",
         [](Rng& rng) {
             int d = rnd_int(rng, 1, 4);
             CheckParams p;
             p.sigma = rnd_perm(rng, d);
             return std::pair{
                 std::vector<CheckInput>{rnd_cubical(rng, d, rnd_int(rng, 2, 3))}, p};
         }},
    };
    return table;
}

inline const std::vector<RandomCheck>& quasigroup_checks() {
    static const std::vector<RandomCheck> table = {
        {"qg-compose-dot",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 4);
             return no_params({rnd_latin(rng, n), rnd_latin(rng, n)});
         }},
        {"qg-dirprod-kron",
         [](Rng& rng) {
             return no_params({rnd_latin(rng, 2), rnd_latin(rng, rnd_int(rng, 2, 3))});
         }},
        {"transversal-compose-bound",
         [](Rng& rng) {
             int n = rnd_int(rng, 2, 4);
             return no_params({rnd_latin(rng, n), rnd_latin(rng, n)});
         }},
        {"latin-roundtrip",
         [](Rng& rng) {
             return no_params({rnd_latin(rng, rnd_int(rng, 2, 4), rnd_int(rng, 2, 3))});
         }},
        {"latin-oa-roundtrip",
         [](Rng& rng) {
             return no_params({rnd_latin(rng, rnd_int(rng, 2, 4))});
         }},
        {"oa-stochastic",
         [](Rng& rng) {
             return no_params({latin_to_oa(rnd_latin(rng, rnd_int(rng, 2, 3)))});
         }},
    };
    return table;
}

inline void drive_checks(const std::vector<RandomCheck>& checks, int rounds, std::uint64_t seed,
                         const std::function<void(const std::string&, const CheckOutcome&)>& on) {
    for (const RandomCheck& rc : checks) {
        Rng rng(seed ^ std::hash<std::string>{}(rc.name));
        for (int round = 0; round < rounds; ++round) {
            auto [inputs, params] = rc.gen(rng);
            on(rc.name, run_check(rc.name, inputs, params));
        }
    }
}

} // namespace mdmat::test
