#include "mdmat/permanent.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace mdmat {

BigInt diagonal_space(int n, int d) {
    if (n < 1 || d < 1)
        throw ValidationError("diagonal space needs n >= 1, d >= 1");
    BigInt f = factorial(n);
    BigInt space = 1;
    for (int i = 1; i < d; ++i)
        space *= f;
    return space;
}

namespace {

struct Slices {
    int n = 0;
    int d = 0;
    // Per first-axis value: the nonzero cells of that hyperplane, as
    // (components of axes 2..d, entry), in lexicographic cell order.
    std::vector<std::vector<std::pair<Index, const Rational*>>> cells;
};

Slices collect_slices(const Tensor& a, bool positive_only) {
    Slices s;
    s.d = a.dim();
    s.n = a.order(); // validates cubical, dim >= 1
    if (s.n > 64)
        throw ValidationError("permanent supports orders up to 64");
    s.cells.resize(static_cast<std::size_t>(s.n));
    Index idx = first_index(a.shape());
    do {
        const Rational& v = a.at(idx);
        bool keep = positive_only ? v > Rational(0) : !v.is_zero();
        if (keep)
            s.cells[static_cast<std::size_t>(idx[0] - 1)].emplace_back(
                Index(idx.begin() + 1, idx.end()), &v);
    } while (next_index(a.shape(), idx));
    return s;
}

// Backtracks over levels i = 1..n; at level i picks a cell of hyperplane i
// whose components are unused on every axis. Visit is called on each complete
// diagonal with the accumulated entry product; it returns false to stop.
template <typename Visit>
bool search(const Slices& s, int level, std::vector<std::uint64_t>& used, Rational& prod,
            std::vector<const Index*>& picked, const Visit& visit) {
    if (level > s.n)
        return visit(picked, prod);
    for (const auto& [rest, value] : s.cells[static_cast<std::size_t>(level - 1)]) {
        bool ok = true;
        for (std::size_t k = 0; k < rest.size(); ++k)
            if (used[k] & (std::uint64_t{1} << (rest[k] - 1))) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        for (std::size_t k = 0; k < rest.size(); ++k)
            used[k] |= std::uint64_t{1} << (rest[k] - 1);
        Rational saved = prod;
        prod *= *value;
        picked[static_cast<std::size_t>(level - 1)] = &rest;
        bool go_on = search(s, level + 1, used, prod, picked, visit);
        prod = saved;
        for (std::size_t k = 0; k < rest.size(); ++k)
            used[k] &= ~(std::uint64_t{1} << (rest[k] - 1));
        if (!go_on)
            return false;
    }
    return true;
}

Rational sum_from_first_cells(const Slices& s, std::size_t begin, std::size_t step) {
    Rational acc = 0;
    std::vector<std::uint64_t> used(static_cast<std::size_t>(s.d - 1), 0);
    std::vector<const Index*> picked(static_cast<std::size_t>(s.n));
    const auto& first = s.cells[0];
    for (std::size_t c = begin; c < first.size(); c += step) {
        const auto& [rest, value] = first[c];
        for (std::size_t k = 0; k < rest.size(); ++k)
            used[k] |= std::uint64_t{1} << (rest[k] - 1);
        Rational prod = *value;
        picked[0] = &rest;
        search(s, 2, used, prod, picked,
               [&](const std::vector<const Index*>&, const Rational& p) {
                   acc += p;
                   return true;
               });
        for (std::size_t k = 0; k < rest.size(); ++k)
            used[k] &= ~(std::uint64_t{1} << (rest[k] - 1));
    }
    return acc;
}

} // namespace

Rational permanent(const Tensor& a, int threads) {
    if (threads < 1)
        throw ValidationError("thread count must be >= 1");
    Slices s = collect_slices(a, false);
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), s.cells[0].size());
    if (workers <= 1)
        return sum_from_first_cells(s, 0, 1);
    std::vector<Rational> parts(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] { parts[w] = sum_from_first_cells(s, w, workers); });
    for (auto& t : pool)
        t.join();
    Rational acc = 0;
    for (const Rational& p : parts)
        acc += p;
    return acc;
}

Rational permanent_oracle(const Tensor& a, std::uint64_t budget) {
    const int d = a.dim();
    const int n = a.order();
    if (diagonal_space(n, d) > budget)
        throw BudgetError("oracle would enumerate " + diagonal_space(n, d).str() +
                          " diagonals, over the budget of " + std::to_string(budget));
    std::vector<std::vector<int>> sigma(static_cast<std::size_t>(d - 1));
    for (auto& s : sigma) {
        s.resize(static_cast<std::size_t>(n));
        std::iota(s.begin(), s.end(), 1);
    }
    Rational acc = 0;
    Index idx(static_cast<std::size_t>(d));
    for (;;) {
        Rational prod = 1;
        for (int i = 1; i <= n; ++i) {
            idx[0] = i;
            for (int k = 1; k < d; ++k)
                idx[static_cast<std::size_t>(k)] = sigma[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)];
            prod *= a.at(idx);
        }
        acc += prod;
        int k = d - 2;
        while (k >= 0 && !std::next_permutation(sigma[static_cast<std::size_t>(k)].begin(),
                                                sigma[static_cast<std::size_t>(k)].end()))
            --k;
        if (k < 0)
            break;
    }
    return acc;
}

bool has_positive_diagonal(const Tensor& a) {
    if (!a.nonnegative())
        throw ValidationError("positive diagonals are defined for nonnegative matrices");
    Slices s = collect_slices(a, true);
    std::vector<std::uint64_t> used(static_cast<std::size_t>(s.d - 1), 0);
    std::vector<const Index*> picked(static_cast<std::size_t>(s.n));
    Rational prod = 1;
    bool found = false;
    search(s, 1, used, prod, picked, [&](const std::vector<const Index*>&, const Rational&) {
        found = true;
        return false;
    });
    return found;
}

std::vector<Diagonal> list_diagonals(const Tensor& a, bool positive_only, std::size_t limit) {
    if (positive_only && !a.nonnegative())
        throw ValidationError("positive diagonals are defined for nonnegative matrices");
    Slices s = collect_slices(a, positive_only);
    std::vector<Diagonal> out;
    if (limit == 0)
        return out;
    std::vector<std::uint64_t> used(static_cast<std::size_t>(s.d - 1), 0);
    std::vector<const Index*> picked(static_cast<std::size_t>(s.n));
    Rational prod = 1;
    search(s, 1, used, prod, picked, [&](const std::vector<const Index*>& cells, const Rational&) {
        Diagonal diag;
        for (int i = 1; i <= s.n; ++i) {
            Index full{i};
            const Index& rest = *cells[static_cast<std::size_t>(i - 1)];
            full.insert(full.end(), rest.begin(), rest.end());
            diag.indices.push_back(std::move(full));
        }
        out.push_back(std::move(diag));
        return out.size() < limit;
    });
    return out;
}

Tensor reduced_outer(const Tensor& a, const Tensor& b, const std::vector<int>& sigma) {
    if (a.dim() < 1 || b.dim() < 1 || !a.cubical() || !b.cubical())
        throw ValidationError("reduced outer product requires cubical factors");
    if (a.order() != b.order())
        throw ValidationError("reduced outer product requires factors of the same order");
    const int n = a.order();
    validate_permutation(sigma, n, "reduced_outer");
    std::vector<int> extents{n};
    for (int axis = 2; axis <= a.dim(); ++axis)
        extents.push_back(n);
    for (int axis = 2; axis <= b.dim(); ++axis)
        extents.push_back(n);
    Tensor out = Tensor::zeros(Shape(extents));
    Index oidx = first_index(out.shape());
    Index ia(static_cast<std::size_t>(a.dim()));
    Index ib(static_cast<std::size_t>(b.dim()));
    std::size_t off = 0;
    do {
        ia[0] = oidx[0];
        ib[0] = sigma[static_cast<std::size_t>(oidx[0] - 1)];
        for (int k = 2; k <= a.dim(); ++k)
            ia[static_cast<std::size_t>(k - 1)] = oidx[static_cast<std::size_t>(k - 1)];
        for (int k = 2; k <= b.dim(); ++k)
            ib[static_cast<std::size_t>(k - 1)] = oidx[static_cast<std::size_t>(a.dim() + k - 2)];
        out.flat(off++) = a.at(ia) * b.at(ib);
    } while (next_index(out.shape(), oidx));
    return out;
}

} // namespace mdmat
