#include "mdmat/shape.hpp"

#include <string>

namespace mdmat {

Index concat(const Index& a, const Index& b) {
    Index r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Shape::Shape(std::vector<int> e) : extents(std::move(e)) {
    for (int x : extents)
        if (x < 1)
            throw ValidationError("shape extents must be positive");
}

Shape Shape::cube(int d, int n) {
    if (d < 0 || n < 1)
        throw ValidationError("cubical shape needs d >= 0 and n >= 1");
    return Shape(std::vector<int>(d, n));
}

std::size_t Shape::size() const {
    std::size_t p = 1;
    for (int x : extents)
        p *= static_cast<std::size_t>(x);
    return p;
}

bool Shape::cubical() const {
    for (int x : extents)
        if (x != extents[0])
            return false;
    return true;
}

int Shape::order() const {
    if (dim() < 1 || !cubical())
        throw ValidationError("order is defined for cubical shapes of dimension >= 1");
    return extents[0];
}

int Shape::extent(int axis) const {
    if (axis < 1 || axis > dim())
        throw ValidationError("axis " + std::to_string(axis) + " out of range 1.." +
                              std::to_string(dim()));
    return extents[axis - 1];
}

std::size_t shape_offset(const Shape& s, const Index& idx) {
    if (static_cast<int>(idx.size()) != s.dim())
        throw ValidationError("index length " + std::to_string(idx.size()) +
                              " does not match dimension " + std::to_string(s.dim()));
    std::size_t off = 0;
    for (int a = 0; a < s.dim(); ++a) {
        if (idx[a] < 1 || idx[a] > s.extents[a])
            throw ValidationError("index component " + std::to_string(idx[a]) +
                                  " out of range on axis " + std::to_string(a + 1));
        off = off * static_cast<std::size_t>(s.extents[a]) + static_cast<std::size_t>(idx[a] - 1);
    }
    return off;
}

Index index_at(const Shape& s, std::size_t offset) {
    Index idx(s.dim(), 1);
    for (int a = s.dim() - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(offset % static_cast<std::size_t>(s.extents[a])) + 1;
        offset /= static_cast<std::size_t>(s.extents[a]);
    }
    return idx;
}

bool next_index(const Shape& s, Index& idx) {
    for (int a = s.dim() - 1; a >= 0; --a) {
        if (idx[a] < s.extents[a]) {
            ++idx[a];
            return true;
        }
        idx[a] = 1;
    }
    return false;
}

Index first_index(const Shape& s) {
    return Index(s.dim(), 1);
}

void validate_permutation(const std::vector<int>& perm, int size, const char* what) {
    if (static_cast<int>(perm.size()) != size)
        throw ValidationError(std::string(what) + ": permutation has length " +
                              std::to_string(perm.size()) + ", expected " + std::to_string(size));
    std::vector<bool> seen(static_cast<std::size_t>(size), false);
    for (int v : perm) {
        if (v < 1 || v > size || seen[static_cast<std::size_t>(v - 1)])
            throw ValidationError(std::string(what) + ": not a permutation of 1.." +
                                  std::to_string(size));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

} // namespace mdmat
