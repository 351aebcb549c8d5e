#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rchain {

/// Exact integer used for every count and series coefficient.
///
/// All arithmetic on it goes through the checked helpers below, which throw
/// std::overflow_error instead of wrapping.
using Integer = std::int64_t;

inline Integer checked_add(Integer a, Integer b)
{
    Integer out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in addition: " + std::to_string(a) + " + " +
                                  std::to_string(b));
    return out;
}

inline Integer checked_sub(Integer a, Integer b)
{
    Integer out;
    if (__builtin_sub_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in subtraction: " + std::to_string(a) + " - " +
                                  std::to_string(b));
    return out;
}

inline Integer checked_mul(Integer a, Integer b)
{
    Integer out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in multiplication: " + std::to_string(a) + " * " +
                                  std::to_string(b));
    return out;
}

/// Thrown when an argument violates an operation's documented precondition
/// (out-of-range index, non-positive r, input outside a bijection's domain).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require_positive_r(int r, const char* where)
{
    if (r < 1)
        throw ContractError(std::string(where) + ": r must be >= 1, got " + std::to_string(r));
}

} // namespace rchain
