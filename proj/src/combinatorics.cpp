#include "mdmat/combinatorics.hpp"

#include <algorithm>
#include <string>

#include "mdmat/permanent.hpp"
#include "mdmat/stochastic.hpp"

namespace mdmat {

LatinHypercube make_latin(int d, int n, std::vector<int> cells) {
    if (d < 1 || n < 1)
        throw ValidationError("latin hypercube needs d >= 1 and n >= 1");
    LatinHypercube q{d, n, std::move(cells)};
    Shape s = q.shape();
    if (q.cells.size() != s.size())
        throw ValidationError("latin hypercube cell count does not match d and n");
    for (int v : q.cells)
        if (v < 1 || v > n)
            throw ValidationError("latin hypercube symbol out of range 1..n");
    // Line property: along every axis, from every base point, all n symbols.
    for (int axis = 1; axis <= d; ++axis) {
        Index idx = first_index(s);
        do {
            if (idx[static_cast<std::size_t>(axis - 1)] != 1)
                continue;
            std::vector<bool> seen(static_cast<std::size_t>(n), false);
            Index line = idx;
            for (int v = 1; v <= n; ++v) {
                line[static_cast<std::size_t>(axis - 1)] = v;
                int sym = q.at(line);
                if (seen[static_cast<std::size_t>(sym - 1)])
                    throw ValidationError("not a latin hypercube: repeated symbol in a line");
                seen[static_cast<std::size_t>(sym - 1)] = true;
            }
        } while (next_index(s, idx));
    }
    return q;
}

OrthogonalArray make_oa(int t, int n, int k, int lambda, std::vector<std::vector<int>> rows) {
    if (t < 1 || n < 1 || k < 1 || lambda < 1)
        throw ValidationError("orthogonal array parameters must be >= 1");
    if (t > k)
        throw ValidationError("orthogonal array needs t <= k");
    std::size_t expect = static_cast<std::size_t>(lambda);
    for (int i = 0; i < t; ++i)
        expect *= static_cast<std::size_t>(n);
    if (rows.size() != expect)
        throw ValidationError("orthogonal array must have lambda * n^t rows, got " +
                              std::to_string(rows.size()));
    for (const auto& row : rows) {
        if (row.size() != static_cast<std::size_t>(k))
            throw ValidationError("orthogonal array row length must be k");
        for (int v : row)
            if (v < 1 || v > n)
                throw ValidationError("orthogonal array symbol out of range 1..n");
    }
    return OrthogonalArray{t, n, k, lambda, std::move(rows)};
}

Tensor latin_to_tensor(const LatinHypercube& q) {
    Tensor m = Tensor::zeros(Shape::cube(q.d + 1, q.n));
    Index idx = first_index(q.shape());
    do {
        Index full = idx;
        full.push_back(q.at(idx));
        m.at(full) = 1;
    } while (next_index(q.shape(), idx));
    return m;
}

LatinHypercube tensor_to_latin(const Tensor& m) {
    const int dm = m.dim();
    if (dm < 2)
        throw ValidationError("a multidimensional permutation needs dimension >= 2");
    const int n = m.order();
    if (!m.zero_one() || !is_k_stochastic(m, 1))
        throw ValidationError("not a multidimensional permutation: requires a (0,1) "
                              "polystochastic matrix");
    LatinHypercube q;
    q.d = dm - 1;
    q.n = n;
    q.cells.assign(Shape::cube(q.d, n).size(), 0);
    Shape cs = q.shape();
    Index idx = first_index(cs);
    std::size_t off = 0;
    do {
        Index full = idx;
        full.push_back(1);
        for (int s = 1; s <= n; ++s) {
            full.back() = s;
            if (!m.at(full).is_zero()) {
                q.cells[off] = s;
                break;
            }
        }
        ++off;
    } while (next_index(cs, idx));
    return q;
}

Tensor qg_to_tensor(const Quasigroup& f) {
    const int d = f.arity();
    const int n = f.order();
    Tensor m = Tensor::zeros(Shape::cube(d + 1, n));
    Index idx = first_index(f.table.shape());
    do {
        Index full{f.apply(idx)};
        full.insert(full.end(), idx.begin(), idx.end());
        m.at(full) = 1;
    } while (next_index(f.table.shape(), idx));
    return m;
}

BigInt transversal_count(const LatinHypercube& q) {
    Rational per = permanent(latin_to_tensor(q));
    return per.num(); // permanent of a (0,1)-matrix is a nonnegative integer
}

LatinHypercube iterated_group_hypercube(int n, int d) {
    if (n < 1 || d < 2)
        throw ValidationError("iterated group table needs n >= 1 and d >= 2");
    Shape s = Shape::cube(d, n);
    std::vector<int> cells(s.size());
    Index idx = first_index(s);
    std::size_t off = 0;
    do {
        int sum = 0;
        for (int c : idx)
            sum += c - 1;
        cells[off++] = sum % n + 1;
    } while (next_index(s, idx));
    return make_latin(d, n, std::move(cells));
}

Tensor oa_to_tensor(const OrthogonalArray& r) {
    std::size_t total = 1;
    for (int i = 0; i < r.k; ++i) {
        total *= static_cast<std::size_t>(r.n);
        if (total > 16'000'000)
            throw ValidationError("orthogonal array count matrix too large");
    }
    Tensor m = Tensor::zeros(Shape::cube(r.k, r.n));
    for (const auto& row : r.rows) {
        Index idx(row.begin(), row.end());
        m.at(idx) += 1;
    }
    Tensor normalized = scale(Rational(1, r.lambda), m);
    if (r.k == r.t) {
        // Every k-tuple must appear exactly lambda times.
        for (const Rational& v : normalized.entries())
            if (v != Rational(1))
                throw ValidationError("not an orthogonal array: some t-tuple count differs "
                                      "from lambda");
    } else if (!is_k_stochastic(normalized, r.k - r.t)) {
        throw ValidationError("not an orthogonal array: some t-tuple count differs from lambda");
    }
    return m;
}

OrthogonalArray tensor_to_oa(const Tensor& m, int t, int lambda) {
    if (m.dim() < 1 || !m.cubical())
        throw ValidationError("orthogonal array codec needs a cubical matrix");
    if (lambda < 1)
        throw ValidationError("lambda must be >= 1");
    std::vector<std::vector<int>> rows;
    Index idx = first_index(m.shape());
    do {
        Rational count = Rational(lambda) * m.at(idx);
        if (count.is_negative() || !count.is_integer())
            throw ValidationError("lambda * M must be a nonnegative integer matrix");
        long long c = count.num().convert_to<long long>();
        for (long long i = 0; i < c; ++i)
            rows.emplace_back(idx.begin(), idx.end());
    } while (next_index(m.shape(), idx));
    return make_oa(t, m.order(), m.dim(), lambda, std::move(rows));
}

OrthogonalArray latin_to_oa(const LatinHypercube& q) {
    std::vector<std::vector<int>> rows;
    Index idx = first_index(q.shape());
    do {
        std::vector<int> row(idx.begin(), idx.end());
        row.push_back(q.at(idx));
        rows.push_back(std::move(row));
    } while (next_index(q.shape(), idx));
    return make_oa(q.d, q.n, q.d + 1, 1, std::move(rows));
}

Quasigroup qg_compose(const Quasigroup& f, const Quasigroup& g) {
    if (f.order() != g.order())
        throw ValidationError("quasigroup composition needs equal orders");
    const int d1 = f.arity();
    const int d2 = g.arity();
    const int n = f.order();
    Shape s = Shape::cube(d1 + d2 - 1, n);
    std::vector<int> cells(s.size());
    Index idx = first_index(s);
    std::size_t off = 0;
    do {
        Index gargs(idx.begin() + (d1 - 1), idx.end());
        Index fargs(idx.begin(), idx.begin() + (d1 - 1));
        fargs.push_back(g.apply(gargs));
        cells[off++] = f.apply(fargs);
    } while (next_index(s, idx));
    return Quasigroup{make_latin(d1 + d2 - 1, n, std::move(cells))};
}

Quasigroup qg_direct_product(const Quasigroup& f, const Quasigroup& g) {
    if (f.arity() != g.arity())
        throw ValidationError("quasigroup direct product needs equal arities");
    const int d = f.arity();
    const int n1 = f.order();
    const int n2 = g.order();
    Shape s = Shape::cube(d, n1 * n2);
    std::vector<int> cells(s.size());
    Index idx = first_index(s);
    Index xs(static_cast<std::size_t>(d)), ys(static_cast<std::size_t>(d));
    std::size_t off = 0;
    do {
        for (int i = 0; i < d; ++i) {
            xs[static_cast<std::size_t>(i)] = (idx[static_cast<std::size_t>(i)] - 1) / n2 + 1;
            ys[static_cast<std::size_t>(i)] = (idx[static_cast<std::size_t>(i)] - 1) % n2 + 1;
        }
        cells[off++] = (f.apply(xs) - 1) * n2 + g.apply(ys);
    } while (next_index(s, idx));
    return Quasigroup{make_latin(d, n1 * n2, std::move(cells))};
}

} // namespace mdmat
