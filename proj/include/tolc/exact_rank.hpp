#pragma once

#include <cstdint>
#include <vector>

namespace tolc {

// Dense integer matrix, row-major. Entries stay exact throughout.
struct IntMatrix {
    long rows = 0;
    long cols = 0;
    std::vector<std::int64_t> a;  // rows * cols

    IntMatrix() = default;
    IntMatrix(long r, long c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}

    std::int64_t& at(long i, long j) { return a[static_cast<std::size_t>(i * cols + j)]; }
    std::int64_t at(long i, long j) const { return a[static_cast<std::size_t>(i * cols + j)]; }
};

// Rank over the rationals, computed by fraction-free Gaussian elimination
// (Bareiss) with row and column pivoting. Runs on 64-bit integers with
// overflow checks; restarts on arbitrary-precision integers if a minor
// outgrows the word size, so the result is exact in all cases.
long exact_rank(const IntMatrix& m);

}  // namespace tolc
