#pragma once

#include <array>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "tricon/linalg.hpp"

namespace tricon {

/// Kept sizes (s1, s2, s3).
using Shape = std::array<int, 3>;

std::string to_string(const Shape& shape);

/// Exact non-negative rational with 64-bit parts, always reduced.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational make(std::uint64_t num, std::uint64_t den);
    static Rational reciprocal(std::uint64_t den) { return make(1, den); }

    double to_double() const { return double(num) / double(den); }
    std::string to_string() const;
    bool operator==(const Rational&) const = default;
};

/// Exact binomial coefficient; 0 when k < 0 or k > n. Throws RangeError on overflow.
std::uint64_t binomial(int n, int k);

/// Index sets kept on A1, A2, A3; each set strictly increasing.
struct SubspaceSelector {
    std::array<std::vector<int>, 3> keep;

    const std::vector<int>& operator[](Subsystem s) const { return keep[slot(s)]; }
    Shape shape() const
    {
        return {int(keep[0].size()), int(keep[1].size()), int(keep[2].size())};
    }
    Dims sub_dims() const { return {int(keep[0].size()), int(keep[1].size()), int(keep[2].size())}; }

    /// Throws SelectorError unless every set is non-empty, sorted, and in range.
    void validate(const Dims& dims) const;

    /// Flat indices of the kept basis vectors in lexicographic (i, j, k) order.
    std::vector<int> flat_indices(const Dims& dims) const;

    std::string to_string() const;
    bool operator==(const SubspaceSelector&) const = default;

    static SubspaceSelector full(const Dims& dims);
};

/// Lazy, lexicographically ordered sequence of all selectors of a given shape.
/// A1's set varies slowest, A3's fastest.
class SelectorSequence {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = SubspaceSelector;
        using difference_type = std::ptrdiff_t;
        using pointer = const SubspaceSelector*;
        using reference = const SubspaceSelector&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int)
        {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const iterator& other) const { return done_ == other.done_ && (done_ || current_ == other.current_); }

    private:
        friend class SelectorSequence;
        iterator(const Dims& dims, const Shape& shape);

        Dims dims_{};
        SubspaceSelector current_{};
        bool done_ = true;
    };

    SelectorSequence(Dims dims, Shape shape);

    iterator begin() const { return {dims_, shape_}; }
    iterator end() const { return {}; }

    /// C(m, s1) * C(n, s2) * C(l, s3).
    std::uint64_t count() const;
    const Dims& dims() const { return dims_; }
    const Shape& shape() const { return shape_; }

private:
    Dims dims_;
    Shape shape_;
};

/// Throws ShapeError unless 1 <= s_i <= dims_i.
SelectorSequence enumerate_selectors(const Dims& dims, const Shape& shape);

/// Advances a strictly increasing k-subset of [0, n) to its lexicographic successor.
/// Returns false (leaving the subset at the first one) after the last.
bool next_subset(std::vector<int>& subset, int n);

/// Combinatorial prefactor of a tau bound.
struct BoundCoefficient {
    Rational value;
    Shape shape{};
    Dims source_dims{};
};

/// [C(m-2, s-2) C(n-2, s-2) C(l-1, s-1)]^-1 with (m, n, l) the dims sorted ascending.
BoundCoefficient coefficient_sss(const Dims& dims, int s);

/// [C(s-1, lambda-1) C(s-2, mu-2) C(s-2, nu-2)]^-1 for an s x s x s state.
BoundCoefficient coefficient_lmn(int s, const Shape& shape);

/// Dims sorted ascending, the ordering the sss coefficient is stated in.
Dims canonical_dims(const Dims& dims);

} // namespace tricon
