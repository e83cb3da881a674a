#include "tolc/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>
#include <utility>

namespace tolc {

namespace {

struct word_overflow {};

// Guarded Bareiss step value: (a*d - b*c) / prev, exact division.
std::int64_t step_i64(std::int64_t a, std::int64_t d, std::int64_t b, std::int64_t c,
                      std::int64_t prev) {
    const __int128 num = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
    const __int128 q = num / prev;  // division is exact for Bareiss minors
    if (q > std::numeric_limits<std::int64_t>::max() ||
        q < std::numeric_limits<std::int64_t>::min())
        throw word_overflow{};
    return static_cast<std::int64_t>(q);
}

template <typename Int>
Int step(const Int& a, const Int& d, const Int& b, const Int& c, const Int& prev) {
    return (a * d - b * c) / prev;
}

template <typename Int, typename Step>
long bareiss_rank(std::vector<std::vector<Int>> m, Step step_fn) {
    const long rows = static_cast<long>(m.size());
    const long cols = rows == 0 ? 0 : static_cast<long>(m[0].size());
    Int prev = 1;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long pr = -1;
        long pc = -1;
        // full pivot search keeps the elimination well-defined on rank-deficient input
        for (long i = r; i < rows && pr < 0; ++i)
            for (long j = c; j < cols; ++j)
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pr)]);
        if (pc != c)
            for (long i = 0; i < rows; ++i)
                std::swap(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)],
                          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)]);
        const Int pivot = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (long i = r + 1; i < rows; ++i) {
            const Int head = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            for (long j = c + 1; j < cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    step_fn(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], pivot,
                            head, m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                            prev);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

}  // namespace

long exact_rank(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    {
        std::vector<std::vector<std::int64_t>> w(static_cast<std::size_t>(m.rows));
        for (long i = 0; i < m.rows; ++i) {
            w[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.cols));
            for (long j = 0; j < m.cols; ++j) w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
        }
        try {
            return bareiss_rank<std::int64_t>(std::move(w), step_i64);
        } catch (const word_overflow&) {
            // fall through to the big-integer pass
        }
    }
    using big = boost::multiprecision::cpp_int;
    std::vector<std::vector<big>> w(static_cast<std::size_t>(m.rows));
    for (long i = 0; i < m.rows; ++i) {
        w[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.cols));
        for (long j = 0; j < m.cols; ++j) w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    }
    return bareiss_rank<big>(std::move(w), step<big>);
}

}  // namespace tolc
