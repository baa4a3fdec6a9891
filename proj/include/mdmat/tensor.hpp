#pragma once

#include <map>
#include <vector>

#include "mdmat/rational.hpp"
#include "mdmat/shape.hpp"

namespace mdmat {

/// Dense multidimensional matrix with exact rational entries, stored flat in
/// lexicographic order with the last axis varying fastest (so a 2-dimensional
/// matrix is row-major). Value semantics: operations return new tensors and
/// never mutate their inputs; tensors are safe to share across threads once
/// built.
class Tensor {
public:
    Tensor() : shape_(), entries_(1) {}
    Tensor(Shape shape, std::vector<Rational> entries);

    static Tensor zeros(const Shape& s) { return Tensor(s, std::vector<Rational>(s.size())); }
    static Tensor scalar(const Rational& v) { return Tensor(Shape{}, {v}); }

    const Shape& shape() const { return shape_; }
    int dim() const { return shape_.dim(); }
    std::size_t size() const { return entries_.size(); }
    int extent(int axis) const { return shape_.extent(axis); }
    bool cubical() const { return shape_.cubical(); }
    int order() const { return shape_.order(); }

    const Rational& at(const Index& idx) const { return entries_[shape_offset(shape_, idx)]; }
    Rational& at(const Index& idx) { return entries_[shape_offset(shape_, idx)]; }
    const Rational& flat(std::size_t off) const { return entries_[off]; }
    Rational& flat(std::size_t off) { return entries_[off]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool nonnegative() const;
    bool zero_one() const;
    bool is_zero() const;

    bool operator==(const Tensor&) const = default;

private:
    Shape shape_;
    std::vector<Rational> entries_;
};

/// Builds a tensor after validating the entry count against the shape.
Tensor build_tensor(Shape shape, std::vector<Rational> entries);

/// Axis permutation: result B satisfies B at (a_{perm(1)},...,a_{perm(d)}) =
/// A at a, i.e. axis j of the result is axis perm(j) of the input.
Tensor transpose(const Tensor& a, const std::vector<int>& perm);

/// Relabels the hyperplanes of one direction: B at idx equals A at idx with
/// the axis component replaced by perm(component).
Tensor permute_hyperplanes(const Tensor& a, int axis, const std::vector<int>& perm);

/// A plane: some axes fixed at given values, the rest free.
struct PlaneSpec {
    std::map<int, int> fixed; // 1-based axis -> fixed component value

    /// (0,1)-vector with 1 exactly at the fixed positions.
    std::vector<int> direction(int d) const;
};

/// The values on a plane as a (d - |fixed|)-dimensional tensor; free axes
/// keep their original relative order.
Tensor extract_plane(const Tensor& a, const PlaneSpec& spec);

/// Entrywise c1*A + c2*B for same-shape tensors.
Tensor linear_combine(const Rational& c1, const Tensor& a, const Rational& c2, const Tensor& b);
Tensor scale(const Rational& c, const Tensor& a);
Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);
Tensor operator*(const Rational& c, const Tensor& a);

/// The d-dimensional matrix of order n whose entries are all 1/n.
Tensor uniform_J(int d, int n);

/// The d-dimensional (0,1) matrix of order n with ones exactly on the main
/// diagonal (i,...,i).
Tensor identity_diag(int d, int n);

} // namespace mdmat
