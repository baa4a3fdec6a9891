#include "mdmat/ops.hpp"

#include <algorithm>
#include <string>

namespace mdmat {

AxisSet::AxisSet(std::vector<int> pos) : positions(std::move(pos)) {
    if (positions.empty())
        throw ValidationError("axis set must be nonempty");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 1)
            throw ValidationError("axis set positions must be >= 1");
        if (i > 0 && positions[i] <= positions[i - 1])
            throw ValidationError("axis set positions must be strictly increasing");
    }
}

namespace {

void require_cubical_same_order(const Tensor& a, const Tensor& b, const char* op) {
    if (a.dim() < 1 || b.dim() < 1 || !a.cubical() || !b.cubical())
        throw ValidationError(std::string(op) + " requires cubical factors");
    if (a.order() != b.order())
        throw ValidationError(std::string(op) + " requires factors of the same order");
}

// Flags axes removed by `sets`, validating range and disjointness.
std::vector<int> removed_set_id(const Tensor& a, const std::vector<AxisSet>& sets) {
    std::vector<int> id(static_cast<std::size_t>(a.dim()), -1);
    for (std::size_t s = 0; s < sets.size(); ++s) {
        for (int p : sets[s].positions) {
            if (p < 1 || p > a.dim())
                throw ValidationError("axis set position " + std::to_string(p) +
                                      " out of range 1.." + std::to_string(a.dim()));
            if (id[static_cast<std::size_t>(p - 1)] != -1)
                throw ValidationError("axis sets must be pairwise disjoint");
            id[static_cast<std::size_t>(p - 1)] = static_cast<int>(s);
        }
    }
    return id;
}

std::vector<int> surviving_axes(const Tensor& a, const std::vector<int>& id) {
    std::vector<int> keep;
    for (int axis = 1; axis <= a.dim(); ++axis)
        if (id[static_cast<std::size_t>(axis - 1)] == -1)
            keep.push_back(axis);
    return keep;
}

} // namespace

Tensor outer(const Tensor& a, const Tensor& b) {
    require_cubical_same_order(a, b, "outer product");
    std::vector<int> extents = a.shape().extents;
    extents.insert(extents.end(), b.shape().extents.begin(), b.shape().extents.end());
    std::vector<Rational> out(a.size() * b.size());
    // Concatenated index offsets factor as off_a * size_b + off_b.
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[k++] = a.flat(i) * b.flat(j);
    return Tensor(Shape(extents), std::move(out));
}

Tensor kronecker(const Tensor& a, const Tensor& b) {
    if (a.dim() < 1 || b.dim() < 1 || !a.cubical() || !b.cubical())
        throw ValidationError("kronecker product requires cubical factors");
    if (a.dim() != b.dim())
        throw ValidationError("kronecker product requires factors of equal dimension");
    const int d = a.dim();
    const int n2 = b.order();
    Tensor out = Tensor::zeros(Shape::cube(d, a.order() * n2));
    Index alpha = first_index(a.shape());
    Index gamma(static_cast<std::size_t>(d));
    do {
        Index beta = first_index(b.shape());
        do {
            for (int i = 0; i < d; ++i)
                gamma[static_cast<std::size_t>(i)] =
                    (alpha[static_cast<std::size_t>(i)] - 1) * n2 + beta[static_cast<std::size_t>(i)];
            out.at(gamma) = a.at(alpha) * b.at(beta);
        } while (next_index(b.shape(), beta));
    } while (next_index(a.shape(), alpha));
    return out;
}

Tensor contract(const Tensor& a, const std::vector<AxisSet>& sets) {
    std::vector<int> id = removed_set_id(a, sets);
    std::vector<int> run_extent(sets.size());
    for (std::size_t s = 0; s < sets.size(); ++s) {
        run_extent[s] = a.extent(sets[s].positions.front());
        for (int p : sets[s].positions)
            if (a.extent(p) != run_extent[s])
                throw ValidationError("contraction set mixes axes of different extents");
    }
    std::vector<int> keep = surviving_axes(a, id);
    std::vector<int> out_extents;
    for (int axis : keep)
        out_extents.push_back(a.extent(axis));
    Tensor out = Tensor::zeros(Shape(out_extents));
    Shape runs(run_extent);
    Index oidx = first_index(out.shape());
    Index full(static_cast<std::size_t>(a.dim()));
    std::size_t off = 0;
    do {
        for (std::size_t i = 0; i < keep.size(); ++i)
            full[static_cast<std::size_t>(keep[i] - 1)] = oidx[i];
        Rational acc = 0;
        Index r = first_index(runs);
        do {
            for (std::size_t s = 0; s < sets.size(); ++s)
                for (int p : sets[s].positions)
                    full[static_cast<std::size_t>(p - 1)] = r[s];
            acc += a.at(full);
        } while (next_index(runs, r));
        out.flat(off++) = acc;
    } while (next_index(out.shape(), oidx));
    return out;
}

Tensor contract(const Tensor& a, const AxisSet& s) {
    return contract(a, std::vector<AxisSet>{s});
}

Tensor project(const Tensor& a, const std::vector<AxisSet>& sets) {
    std::vector<int> id = removed_set_id(a, sets);
    std::vector<int> keep = surviving_axes(a, id);
    std::vector<int> removed;
    for (int axis = 1; axis <= a.dim(); ++axis)
        if (id[static_cast<std::size_t>(axis - 1)] != -1)
            removed.push_back(axis);
    std::vector<int> out_extents, sum_extents;
    for (int axis : keep)
        out_extents.push_back(a.extent(axis));
    for (int axis : removed)
        sum_extents.push_back(a.extent(axis));
    Tensor out = Tensor::zeros(Shape(out_extents));
    Shape sums(sum_extents);
    Index oidx = first_index(out.shape());
    Index full(static_cast<std::size_t>(a.dim()));
    std::size_t off = 0;
    do {
        for (std::size_t i = 0; i < keep.size(); ++i)
            full[static_cast<std::size_t>(keep[i] - 1)] = oidx[i];
        Rational acc = 0;
        Index r = first_index(sums);
        do {
            for (std::size_t i = 0; i < removed.size(); ++i)
                full[static_cast<std::size_t>(removed[i] - 1)] = r[i];
            acc += a.at(full);
        } while (next_index(sums, r));
        out.flat(off++) = acc;
    } while (next_index(out.shape(), oidx));
    return out;
}

Tensor project(const Tensor& a, const AxisSet& s) {
    return project(a, std::vector<AxisSet>{s});
}

Tensor dot_ij(const Tensor& a, int i, const Tensor& b, int j) {
    if (a.dim() < 1 || b.dim() < 1)
        throw ValidationError("dot product requires factors of dimension >= 1");
    if (i < 1 || i > a.dim() || j < 1 || j > b.dim())
        throw ValidationError("dot product axis out of range");
    if (a.extent(i) != b.extent(j))
        throw ValidationError("dot product axes have mismatched extents");
    const int n = a.extent(i);
    std::vector<int> out_extents;
    for (int axis = 1; axis <= a.dim(); ++axis)
        if (axis != i)
            out_extents.push_back(a.extent(axis));
    for (int axis = 1; axis <= b.dim(); ++axis)
        if (axis != j)
            out_extents.push_back(b.extent(axis));
    Tensor out = Tensor::zeros(Shape(out_extents));
    Index oidx = first_index(out.shape());
    Index ia(static_cast<std::size_t>(a.dim()));
    Index ib(static_cast<std::size_t>(b.dim()));
    std::size_t off = 0;
    do {
        std::size_t pos = 0;
        for (int axis = 1; axis <= a.dim(); ++axis)
            if (axis != i)
                ia[static_cast<std::size_t>(axis - 1)] = oidx[pos++];
        for (int axis = 1; axis <= b.dim(); ++axis)
            if (axis != j)
                ib[static_cast<std::size_t>(axis - 1)] = oidx[pos++];
        Rational acc = 0;
        for (int t = 1; t <= n; ++t) {
            ia[static_cast<std::size_t>(i - 1)] = t;
            ib[static_cast<std::size_t>(j - 1)] = t;
            acc += a.at(ia) * b.at(ib);
        }
        out.flat(off++) = acc;
    } while (next_index(out.shape(), oidx));
    return out;
}

Tensor dot(const Tensor& a, const Tensor& b) {
    require_cubical_same_order(a, b, "dot product");
    return dot_ij(a, a.dim(), b, 1);
}

Tensor s_dot(const std::vector<std::pair<Tensor, int>>& factors) {
    if (factors.size() < 2)
        throw ValidationError("S-dot product needs at least two factors");
    const Tensor& f0 = factors[0].first;
    if (f0.dim() < 1 || !f0.cubical())
        throw ValidationError("S-dot product requires cubical factors");
    const int n = f0.order();
    std::vector<int> out_extents;
    for (const auto& [t, mark] : factors) {
        if (t.dim() < 1 || !t.cubical() || t.order() != n)
            throw ValidationError("S-dot product requires cubical factors of one order");
        if (mark < 1 || mark > t.dim())
            throw ValidationError("S-dot product marked axis out of range");
        for (int axis = 1; axis <= t.dim(); ++axis)
            if (axis != mark)
                out_extents.push_back(n);
    }
    Tensor out = Tensor::zeros(Shape(out_extents));
    Index oidx = first_index(out.shape());
    std::vector<Index> fidx;
    for (const auto& [t, mark] : factors) {
        (void)mark;
        fidx.emplace_back(static_cast<std::size_t>(t.dim()));
    }
    std::size_t off = 0;
    do {
        std::size_t pos = 0;
        for (std::size_t f = 0; f < factors.size(); ++f)
            for (int axis = 1; axis <= factors[f].first.dim(); ++axis)
                if (axis != factors[f].second)
                    fidx[f][static_cast<std::size_t>(axis - 1)] = oidx[pos++];
        Rational acc = 0;
        for (int t = 1; t <= n; ++t) {
            Rational prod = 1;
            for (std::size_t f = 0; f < factors.size(); ++f) {
                fidx[f][static_cast<std::size_t>(factors[f].second - 1)] = t;
                prod *= factors[f].first.at(fidx[f]);
            }
            acc += prod;
        }
        out.flat(off++) = acc;
    } while (next_index(out.shape(), oidx));
    return out;
}

Tensor circle(const Tensor& a, const Tensor& b) {
    const int d1 = a.dim();
    const int d2 = b.dim();
    if (d1 < 1 || d2 < 1)
        throw ValidationError("circle product requires factors of dimension >= 1");
    const int n = b.extent(1);
    for (int axis = 2; axis <= d1; ++axis)
        if (a.extent(axis) != n)
            throw ValidationError("circle product: axes 2..d1 of the first factor must match "
                                  "the second factor's first extent");
    // Output index: first axis of A, then d1-1 blocks of B's axes 2..d2.
    std::vector<int> out_extents{a.extent(1)};
    for (int rep = 0; rep < d1 - 1; ++rep)
        for (int axis = 2; axis <= d2; ++axis)
            out_extents.push_back(b.extent(axis));
    Tensor out = Tensor::zeros(Shape(out_extents));
    Shape jshape(std::vector<int>(static_cast<std::size_t>(d1 - 1), n));
    Index oidx = first_index(out.shape());
    Index ia(static_cast<std::size_t>(d1));
    Index ib(static_cast<std::size_t>(d2));
    std::size_t off = 0;
    do {
        ia[0] = oidx[0];
        Rational acc = 0;
        Index js = first_index(jshape);
        do {
            Rational prod = 1;
            for (int k = 0; k < d1 - 1; ++k) {
                ia[static_cast<std::size_t>(k + 1)] = js[static_cast<std::size_t>(k)];
                ib[0] = js[static_cast<std::size_t>(k)];
                for (int axis = 2; axis <= d2; ++axis)
                    ib[static_cast<std::size_t>(axis - 1)] =
                        oidx[static_cast<std::size_t>(1 + k * (d2 - 1) + axis - 2)];
                prod *= b.at(ib);
            }
            acc += prod * a.at(ia);
        } while (next_index(jshape, js));
        out.flat(off++) = acc;
    } while (next_index(out.shape(), oidx));
    return out;
}

} // namespace mdmat
