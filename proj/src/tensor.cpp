#include "mdmat/tensor.hpp"

#include <string>

namespace mdmat {

Tensor::Tensor(Shape shape, std::vector<Rational> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (entries_.size() != shape_.size())
        throw ValidationError("entry count " + std::to_string(entries_.size()) +
                              " does not match shape size " + std::to_string(shape_.size()));
}

bool Tensor::nonnegative() const {
    for (const Rational& v : entries_)
        if (v.is_negative())
            return false;
    return true;
}

bool Tensor::zero_one() const {
    for (const Rational& v : entries_)
        if (!v.is_zero() && v != Rational(1))
            return false;
    return true;
}

bool Tensor::is_zero() const {
    for (const Rational& v : entries_)
        if (!v.is_zero())
            return false;
    return true;
}

Tensor build_tensor(Shape shape, std::vector<Rational> entries) {
    return Tensor(std::move(shape), std::move(entries));
}

Tensor transpose(const Tensor& a, const std::vector<int>& perm) {
    const int d = a.dim();
    validate_permutation(perm, d, "transpose");
    std::vector<int> out_extents(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        out_extents[static_cast<std::size_t>(j)] = a.extent(perm[static_cast<std::size_t>(j)]);
    Tensor out = Tensor::zeros(Shape(out_extents));
    Index beta = first_index(out.shape());
    Index alpha(static_cast<std::size_t>(d));
    if (d == 0)
        return a;
    do {
        for (int j = 0; j < d; ++j)
            alpha[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)] - 1)] = beta[static_cast<std::size_t>(j)];
        out.at(beta) = a.at(alpha);
    } while (next_index(out.shape(), beta));
    return out;
}

Tensor permute_hyperplanes(const Tensor& a, int axis, const std::vector<int>& perm) {
    if (axis < 1 || axis > a.dim())
        throw ValidationError("hyperplane axis out of range");
    validate_permutation(perm, a.extent(axis), "permute_hyperplanes");
    Tensor out = Tensor::zeros(a.shape());
    Index idx = first_index(a.shape());
    do {
        Index src = idx;
        src[static_cast<std::size_t>(axis - 1)] = perm[static_cast<std::size_t>(idx[static_cast<std::size_t>(axis - 1)] - 1)];
        out.at(idx) = a.at(src);
    } while (next_index(a.shape(), idx));
    return out;
}

std::vector<int> PlaneSpec::direction(int d) const {
    std::vector<int> dir(static_cast<std::size_t>(d), 0);
    for (auto [axis, value] : fixed) {
        (void)value;
        if (axis < 1 || axis > d)
            throw ValidationError("plane fixes axis out of range");
        dir[static_cast<std::size_t>(axis - 1)] = 1;
    }
    return dir;
}

Tensor extract_plane(const Tensor& a, const PlaneSpec& spec) {
    const int d = a.dim();
    std::vector<int> free_axes;
    for (int axis = 1; axis <= d; ++axis)
        if (!spec.fixed.count(axis))
            free_axes.push_back(axis);
    for (auto [axis, value] : spec.fixed) {
        if (axis < 1 || axis > d)
            throw ValidationError("plane fixes axis out of range");
        if (value < 1 || value > a.extent(axis))
            throw ValidationError("plane fixes axis " + std::to_string(axis) +
                                  " at value out of range");
    }
    std::vector<int> out_extents;
    for (int axis : free_axes)
        out_extents.push_back(a.extent(axis));
    Tensor out = Tensor::zeros(Shape(out_extents));
    Index oidx = first_index(out.shape());
    Index full(static_cast<std::size_t>(d));
    for (auto [axis, value] : spec.fixed)
        full[static_cast<std::size_t>(axis - 1)] = value;
    std::size_t off = 0;
    do {
        for (std::size_t i = 0; i < free_axes.size(); ++i)
            full[static_cast<std::size_t>(free_axes[i] - 1)] = oidx[i];
        out.flat(off++) = a.at(full);
    } while (next_index(out.shape(), oidx));
    return out;
}

Tensor linear_combine(const Rational& c1, const Tensor& a, const Rational& c2, const Tensor& b) {
    if (a.shape() != b.shape())
        throw ValidationError("linear_combine requires equal shapes");
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = c1 * a.flat(i) + c2 * b.flat(i);
    return Tensor(a.shape(), std::move(out));
}

Tensor scale(const Rational& c, const Tensor& a) {
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = c * a.flat(i);
    return Tensor(a.shape(), std::move(out));
}

Tensor operator+(const Tensor& a, const Tensor& b) {
    return linear_combine(1, a, 1, b);
}

Tensor operator-(const Tensor& a, const Tensor& b) {
    return linear_combine(1, a, -1, b);
}

Tensor operator*(const Rational& c, const Tensor& a) {
    return scale(c, a);
}

Tensor uniform_J(int d, int n) {
    if (d < 1 || n < 1)
        throw ValidationError("uniform_J needs d >= 1 and n >= 1");
    Shape s = Shape::cube(d, n);
    return Tensor(s, std::vector<Rational>(s.size(), Rational(1, n)));
}

Tensor identity_diag(int d, int n) {
    if (d < 1 || n < 1)
        throw ValidationError("identity_diag needs d >= 1 and n >= 1");
    Tensor out = Tensor::zeros(Shape::cube(d, n));
    for (int i = 1; i <= n; ++i)
        out.at(Index(static_cast<std::size_t>(d), i)) = 1;
    return out;
}

} // namespace mdmat
