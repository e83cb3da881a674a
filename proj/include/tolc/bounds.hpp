#pragma once

#include <cstdint>
#include <optional>

namespace tolc {

// h(0,d) = d; for t > 0,
// h(t,d) = sum_{s=1..min(t,d)} C(d,s) * (h(t-s,d) + 1)  +  d.
// Memoized exact evaluation; throws on negative input or 64-bit overflow.
std::int64_t h_value(int t, int d);

// Closed forms of the Erdős–Gallai number: η(2,t) = 2t and
// η(r,2) = floor(((r+2)/2)^2). Absent outside those lines.
// Requires r >= 2, t >= 1.
std::optional<std::int64_t> eta_closed(int r, int t);

// Tuza's strict upper bound C(r+t-1, r-1) + C(r+t-2, r-1) (exclusive:
// η(r,t) < tuza_upper(r,t)). Requires r >= 2, t >= 1.
std::int64_t tuza_upper(int r, int t);

// Exact binomial coefficient; throws on 64-bit overflow.
std::int64_t binomial(int n, int k);

}  // namespace tolc
