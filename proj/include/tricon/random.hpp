#pragma once

#include <cstdint>
#include <random>

#include "tricon/linalg.hpp"

namespace tricon {

/// Seeded generator with derived substreams, so that work item k of a
/// parallel job draws the same numbers regardless of scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

    /// Independent stream for (seed, index).
    static Rng stream(std::uint64_t seed, std::uint64_t index)
    {
        return Rng(mix(seed) ^ mix(index + 0x632be59bd9b4e019ULL));
    }

    double normal() { return normal_(engine_); }
    Complex complex_normal() { return {normal(), normal()}; }
    double uniform() { return uniform_(engine_); }
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

    ComplexMatrix gaussian_matrix(int rows, int cols)
    {
        ComplexMatrix g(rows, cols);
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r) g(r, c) = complex_normal();
        return g;
    }

private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Haar-distributed rows x cols isometry (rows >= cols): QR of a complex
/// Gaussian matrix with the phases of R's diagonal absorbed into Q.
inline ComplexMatrix haar_isometry(int rows, int cols, Rng& rng)
{
    if (rows < cols) throw ShapeError("isometry needs rows >= cols");
    const ComplexMatrix g = rng.gaussian_matrix(rows, cols);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
    const ComplexMatrix& r = qr.matrixQR();
    for (int c = 0; c < cols; ++c) {
        const Complex d = r(c, c);
        const double mag = std::abs(d);
        if (mag > 0.0) q.col(c) *= d / mag;
    }
    return q;
}

inline ComplexMatrix haar_unitary(int dim, Rng& rng) { return haar_isometry(dim, dim, rng); }

} // namespace tricon
