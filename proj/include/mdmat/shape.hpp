#pragma once

#include <cstddef>
#include <vector>

#include "mdmat/errors.hpp"

namespace mdmat {

/// Index of a single entry; components are 1-based, one per axis.
using Index = std::vector<int>;

Index concat(const Index& a, const Index& b);

/// Per-axis extents. Dimension 0 (no axes) denotes a scalar wrapper with a
/// single entry, produced by contracting or projecting away every axis.
struct Shape {
    std::vector<int> extents;

    Shape() = default;
    explicit Shape(std::vector<int> e);
    static Shape cube(int d, int n);

    int dim() const { return static_cast<int>(extents.size()); }
    std::size_t size() const;
    bool cubical() const;
    /// Common extent of a cubical shape with dim >= 1.
    int order() const;
    int extent(int axis) const; // 1-based axis

    bool operator==(const Shape&) const = default;
};

std::size_t shape_offset(const Shape& s, const Index& idx);
Index index_at(const Shape& s, std::size_t offset);

/// Odometer over all indices of a shape, last axis fastest. `idx` must start
/// at all-ones; returns false once the sweep is complete.
bool next_index(const Shape& s, Index& idx);
Index first_index(const Shape& s);

/// Checks that perm is a bijection of {1..size}; throws ValidationError.
void validate_permutation(const std::vector<int>& perm, int size, const char* what);

} // namespace mdmat
