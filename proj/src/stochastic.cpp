#include "mdmat/stochastic.hpp"

#include <algorithm>

namespace mdmat {

namespace {

// Enumerates all subsets of {1..d} of size m via a sorted selector vector.
bool next_combination(std::vector<int>& comb, int d) {
    int m = static_cast<int>(comb.size());
    for (int i = m - 1; i >= 0; --i) {
        if (comb[static_cast<std::size_t>(i)] < d - (m - 1 - i)) {
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < m; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

bool is_k_stochastic(const Tensor& a, int k) {
    const int d = a.dim();
    const int n = a.order(); // validates cubical, d >= 1
    (void)n;
    if (k < 1 || k > d)
        throw ValidationError("stochasticity degree must be in 1..d");
    if (!a.nonnegative())
        throw ValidationError("stochasticity is defined for nonnegative matrices");
    const int m = d - k; // number of fixed axes
    std::vector<int> fixed_axes(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        fixed_axes[static_cast<std::size_t>(i)] = i + 1;
    const Rational one = 1;
    do {
        PlaneSpec spec;
        for (int axis : fixed_axes)
            spec.fixed[axis] = 1;
        std::vector<int> vals(static_cast<std::size_t>(m), 1);
        for (;;) {
            for (int i = 0; i < m; ++i)
                spec.fixed[fixed_axes[static_cast<std::size_t>(i)]] = vals[static_cast<std::size_t>(i)];
            Tensor plane = extract_plane(a, spec);
            Rational sum = 0;
            for (const Rational& v : plane.entries())
                sum += v;
            if (sum != one)
                return false;
            int i = m - 1;
            while (i >= 0 && vals[static_cast<std::size_t>(i)] ==
                                 a.extent(fixed_axes[static_cast<std::size_t>(i)])) {
                vals[static_cast<std::size_t>(i)] = 1;
                --i;
            }
            if (i < 0)
                break;
            ++vals[static_cast<std::size_t>(i)];
        }
    } while (m > 0 && next_combination(fixed_axes, d));
    return true;
}

StochasticityReport stochasticity_report(const Tensor& a) {
    StochasticityReport rep;
    rep.nonnegative = a.nonnegative();
    if (!rep.nonnegative || a.dim() == 0 || !a.cubical())
        return rep;
    for (int k = 1; k <= a.dim(); ++k)
        if (is_k_stochastic(a, k))
            rep.degrees.insert(k);
    return rep;
}

ProductKind product_kind_from_name(const std::string& name) {
    if (name == "outer") return ProductKind::Outer;
    if (name == "kronecker" || name == "kron") return ProductKind::Kronecker;
    if (name == "contraction" || name == "contract") return ProductKind::Contraction;
    if (name == "projection" || name == "project") return ProductKind::Projection;
    if (name == "dot") return ProductKind::Dot;
    if (name == "circle") return ProductKind::Circle;
    throw ValidationError("unknown product kind '" + name + "'");
}

const char* product_kind_name(ProductKind k) {
    switch (k) {
    case ProductKind::Outer: return "outer";
    case ProductKind::Kronecker: return "kronecker";
    case ProductKind::Contraction: return "contraction";
    case ProductKind::Projection: return "projection";
    case ProductKind::Dot: return "dot";
    case ProductKind::Circle: return "circle";
    }
    return "?";
}

namespace {

ProductStochasticityPrediction not_applicable(ProductKind kind, std::string reason) {
    ProductStochasticityPrediction p;
    p.kind = kind;
    p.applicable = false;
    p.reason = std::move(reason);
    return p;
}

ProductStochasticityPrediction applicable(ProductKind kind, int r, Rational scale) {
    ProductStochasticityPrediction p;
    p.kind = kind;
    p.r = r;
    p.scale = std::move(scale);
    p.applicable = true;
    return p;
}

void require_degrees(int d, int k, const char* which) {
    if (d < 1 || k < 1 || k > d)
        throw ValidationError(std::string(which) + ": need 1 <= k <= d");
}

} // namespace

ProductStochasticityPrediction predicted_product_stochasticity(ProductKind kind, int d1, int k1,
                                                               int n1, int d2, int k2, int n2,
                                                               int ell) {
    switch (kind) {
    case ProductKind::Outer: {
        require_degrees(d1, k1, "outer");
        require_degrees(d2, k2, "outer");
        if (n1 != n2)
            return not_applicable(kind, "outer product needs equal orders");
        int r = std::max(d1 + k2, d2 + k1);
        return applicable(kind, r, pow(Rational(n1), k1 + k2 - r));
    }
    case ProductKind::Kronecker: {
        require_degrees(d1, k1, "kronecker");
        require_degrees(d2, k2, "kronecker");
        if (d1 != d2)
            return not_applicable(kind, "kronecker product needs equal dimensions");
        int r = std::max(k1, k2);
        return applicable(kind, r, pow(Rational(n1), k1 - r) * pow(Rational(n2), k2 - r));
    }
    case ProductKind::Contraction: {
        require_degrees(d1, k1, "contraction");
        if (ell < 1 || ell > d1)
            return not_applicable(kind, "set size out of range");
        if (k1 + ell > d1)
            return not_applicable(kind, "needs k + ell <= d");
        return applicable(kind, k1, Rational(1, n1));
    }
    case ProductKind::Projection: {
        require_degrees(d1, k1, "projection");
        if (ell < 1 || ell > d1)
            return not_applicable(kind, "set size out of range");
        if (d1 - ell < 1)
            return not_applicable(kind, "projection removes every axis");
        if (k1 > ell)
            return applicable(kind, k1 - ell, 1);
        // P_S(A) = n^{ell-k+1} J_n^{d-ell}, so it rescales to polystochastic.
        return applicable(kind, 1, pow(Rational(n1), k1 - ell - 1));
    }
    case ProductKind::Dot: {
        require_degrees(d1, k1, "dot");
        require_degrees(d2, k2, "dot");
        if (n1 != n2)
            return not_applicable(kind, "dot product needs equal orders");
        if (k1 == 1 && k2 == 1) {
            if (d1 + d2 - 2 < 1)
                return not_applicable(kind, "dot of two vectors is a scalar");
            return applicable(kind, 1, 1);
        }
        int r = std::max(k1 + d2, k2 + d1);
        if (r > d1 + d2 - 2)
            return not_applicable(kind, "needs max{k1+d2, k2+d1} <= d1+d2-2");
        return applicable(kind, r, pow(Rational(n1), k1 + k2 - r - 1));
    }
    case ProductKind::Circle: {
        require_degrees(d1, k1, "circle");
        require_degrees(d2, k2, "circle");
        if (n1 != n2)
            return not_applicable(kind, "circle product needs equal orders");
        if (k1 == 1 && k2 == 1) {
            if ((d1 - 1) * (d2 - 1) + 1 < 1)
                return not_applicable(kind, "degenerate circle product");
            return applicable(kind, 1, 1);
        }
        return not_applicable(kind, "circle degree is only pinned for polystochastic factors");
    }
    }
    throw ValidationError("unknown product kind");
}

bool verify_eigenpair(const Tensor& a, const Eigenpair& pair) {
    const int d = a.dim();
    const int n = a.order();
    if (pair.v.dim() != 1 || pair.v.extent(1) != n)
        throw ValidationError("eigenvector must be 1-dimensional of the matrix order");
    Tensor lhs = circle(a, pair.v);
    Tensor rhs = scale(pair.lambda, circle(identity_diag(d, n), pair.v));
    return lhs == rhs;
}

CoveringWitness::CoveringWitness(Tensor p) : P(std::move(p)) {
    if (P.dim() != 2)
        throw ValidationError("covering witness must be 2-dimensional");
    if (!P.zero_one())
        throw ValidationError("covering witness must be a (0,1)-matrix");
    for (int i = 1; i <= P.extent(1); ++i) {
        int ones = 0;
        for (int j = 1; j <= P.extent(2); ++j)
            if (!P.at({i, j}).is_zero())
                ++ones;
        if (ones != 1)
            throw ValidationError("every row of a covering witness must contain exactly one 1");
    }
}

CoveringWitness standard_covering_P(int n1, int n2) {
    if (n1 < 1 || n2 < 1)
        throw ValidationError("covering witness needs n1, n2 >= 1");
    Tensor p = Tensor::zeros(Shape({n1 * n2, n1}));
    for (int i = 1; i <= n1 * n2; ++i)
        p.at({i, (i + n2 - 1) / n2}) = 1;
    return CoveringWitness(std::move(p));
}

bool check_covering(const Tensor& a, const Tensor& b, const CoveringWitness& p) {
    if (a.dim() < 1 || !a.cubical() || b.dim() < 1 || !b.cubical())
        throw ValidationError("covering relates cubical matrices");
    if (a.order() != p.rows() || b.order() != p.cols())
        throw ValidationError("covering witness extents must be order(A) x order(B)");
    if (b.order() > a.order())
        throw ValidationError("covering requires order(B) <= order(A)");
    return circle(a, p.P) == circle(p.P, b);
}

std::optional<Rational> solve_covering_scale(const Tensor& u, const Tensor& b,
                                             const CoveringWitness& p) {
    Tensor lhs = circle(u, p.P);
    Tensor rhs = circle(p.P, b);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (!lhs.flat(i).is_zero()) {
            Rational c = rhs.flat(i) / lhs.flat(i);
            return scale(c, lhs) == rhs ? std::optional<Rational>(c) : std::nullopt;
        }
    }
    return rhs.is_zero() ? std::optional<Rational>(1) : std::nullopt;
}

CoveringConstruction covering_by_uniform(const Tensor& a, int n2) {
    const int d = a.dim();
    const int n1 = a.order();
    Rational derived = pow(Rational(n2), 2 - d);
    Rational stated = pow(Rational(n2), 1 - d);
    Tensor u = kronecker(a, uniform_J(d, n2));
    return CoveringConstruction{scale(derived, u), standard_covering_P(n1, n2), derived, stated};
}

CoveringConstruction covering_by_identity(const Tensor& a, int n2) {
    const int n1 = a.order();
    Rational derived = 1;
    Rational stated = Rational(1, n2);
    Tensor u = kronecker(a, identity_diag(a.dim(), n2));
    return CoveringConstruction{scale(derived, u), standard_covering_P(n1, n2), derived, stated};
}

} // namespace mdmat
