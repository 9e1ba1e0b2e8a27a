#include "tricon/substates.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace tricon {

std::string to_string(const Shape& shape)
{
    return std::to_string(shape[0]) + "x" + std::to_string(shape[1]) + "x" + std::to_string(shape[2]);
}

Rational Rational::make(std::uint64_t num, std::uint64_t den)
{
    if (den == 0) throw RangeError("rational with zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    if (g == 0) return {0, 1};
    return {num / g, den / g};
}

std::string Rational::to_string() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t acc = 1;
    for (int i = 1; i <= k; ++i) {
        // acc * (n - k + i) / i is integral at every step
        const unsigned __int128 next = static_cast<unsigned __int128>(acc) * std::uint64_t(n - k + i) / std::uint64_t(i);
        if (next > std::numeric_limits<std::uint64_t>::max()) throw RangeError("binomial overflow");
        acc = static_cast<std::uint64_t>(next);
    }
    return acc;
}

void SubspaceSelector::validate(const Dims& dims) const
{
    for (Subsystem s : kSubsystems) {
        const auto& set = keep[slot(s)];
        if (set.empty()) throw SelectorError("empty index set on " + std::string(name(s)));
        for (std::size_t q = 0; q < set.size(); ++q) {
            if (set[q] < 0 || set[q] >= dims[s])
                throw SelectorError("index " + std::to_string(set[q]) + " out of range on " + std::string(name(s)));
            if (q > 0 && set[q] <= set[q - 1])
                throw SelectorError("index set on " + std::string(name(s)) + " is not strictly increasing");
        }
    }
}

std::vector<int> SubspaceSelector::flat_indices(const Dims& dims) const
{
    std::vector<int> out;
    out.reserve(keep[0].size() * keep[1].size() * keep[2].size());
    for (int i : keep[0])
        for (int j : keep[1])
            for (int k : keep[2]) out.push_back(flatten({i, j, k}, dims));
    return out;
}

std::string SubspaceSelector::to_string() const
{
    std::string out;
    for (int s = 0; s < 3; ++s) {
        if (s > 0) out += "x";
        out += "{";
        for (std::size_t q = 0; q < keep[s].size(); ++q) {
            if (q > 0) out += ",";
            out += std::to_string(keep[s][q]);
        }
        out += "}";
    }
    return out;
}

SubspaceSelector SubspaceSelector::full(const Dims& dims)
{
    SubspaceSelector sel;
    for (Subsystem s : kSubsystems) {
        sel.keep[slot(s)].resize(dims[s]);
        std::iota(sel.keep[slot(s)].begin(), sel.keep[slot(s)].end(), 0);
    }
    return sel;
}

bool next_subset(std::vector<int>& subset, int n)
{
    const int k = int(subset.size());
    int pos = k - 1;
    while (pos >= 0 && subset[pos] == n - k + pos) --pos;
    if (pos < 0) {
        std::iota(subset.begin(), subset.end(), 0);
        return false;
    }
    ++subset[pos];
    for (int q = pos + 1; q < k; ++q) subset[q] = subset[q - 1] + 1;
    return true;
}

SelectorSequence::iterator::iterator(const Dims& dims, const Shape& shape) : dims_(dims), done_(false)
{
    for (int s = 0; s < 3; ++s) {
        current_.keep[s].resize(shape[s]);
        std::iota(current_.keep[s].begin(), current_.keep[s].end(), 0);
    }
}

SelectorSequence::iterator& SelectorSequence::iterator::operator++()
{
    const std::array<int, 3> extent{dims_.m, dims_.n, dims_.l};
    for (int s = 2; s >= 0; --s)
        if (next_subset(current_.keep[s], extent[s])) return *this;
    done_ = true;
    current_ = {};
    return *this;
}

SelectorSequence::SelectorSequence(Dims dims, Shape shape) : dims_(dims), shape_(shape)
{
    dims_.validate();
    const std::array<int, 3> extent{dims_.m, dims_.n, dims_.l};
    for (int s = 0; s < 3; ++s)
        if (shape_[s] < 1 || shape_[s] > extent[s])
            throw ShapeError("shape " + tricon::to_string(shape_) + " does not fit dims " + dims_.to_string());
}

std::uint64_t SelectorSequence::count() const
{
    return binomial(dims_.m, shape_[0]) * binomial(dims_.n, shape_[1]) * binomial(dims_.l, shape_[2]);
}

SelectorSequence enumerate_selectors(const Dims& dims, const Shape& shape) { return {dims, shape}; }

Dims canonical_dims(const Dims& dims)
{
    std::array<int, 3> d{dims.m, dims.n, dims.l};
    std::sort(d.begin(), d.end());
    return {d[0], d[1], d[2]};
}

BoundCoefficient coefficient_sss(const Dims& dims, int s)
{
    dims.validate();
    const Dims c = canonical_dims(dims);
    if (s < 2 || s > c.m)
        throw RangeError("substate size s=" + std::to_string(s) + " must satisfy 2 <= s <= " + std::to_string(c.m));
    const std::uint64_t den = binomial(c.m - 2, s - 2) * binomial(c.n - 2, s - 2) * binomial(c.l - 1, s - 1);
    return {Rational::reciprocal(den), {s, s, s}, dims};
}

BoundCoefficient coefficient_lmn(int s, const Shape& shape)
{
    const auto [lambda, mu, nu] = shape;
    if (!(1 < lambda && lambda <= mu && mu <= nu && nu <= s))
        throw RangeError("shape " + to_string(shape) + " must satisfy 1 < lambda <= mu <= nu <= " + std::to_string(s));
    const std::uint64_t den = binomial(s - 1, lambda - 1) * binomial(s - 2, mu - 2) * binomial(s - 2, nu - 2);
    return {Rational::reciprocal(den), shape, {s, s, s}};
}

} // namespace tricon
