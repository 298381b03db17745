#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mukai {

using Int = std::int64_t;
using Wide = __int128;

// Input/precondition violations. CLI maps these to exit code 1.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A bounded search ran out of budget. CLI maps these to exit code 2.
// `report` carries a JSON fragment describing the failure.
struct search_exhausted : std::runtime_error {
    std::string report;
    search_exhausted(const std::string& what, std::string rep)
        : std::runtime_error(what), report(std::move(rep)) {}
    explicit search_exhausted(const std::string& what)
        : std::runtime_error(what), report("{}") {}
};

// Bug sentinel: a proved-impossible state was reached. CLI exit code 3.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int checked_int(Wide v, const char* where) {
    if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
        throw invariant_violation(std::string("integer overflow in ") + where);
    return static_cast<Int>(v);
}

inline Int gcd_i(Int a, Int b) { return std::gcd(a, b); }

// floor division, exact for negative operands
inline Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline Int mod_floor(Int a, Int b) { return a - b * floor_div(a, b); }

inline bool is_even(Int a) { return (a & 1) == 0; }

} // namespace mukai
