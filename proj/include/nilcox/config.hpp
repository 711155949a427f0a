#pragma once

#include <atomic>
#include <string>

#include "errors.hpp"

namespace nilcox {

// Subsets live in 32-bit masks and packed exponent vectors hold 32 nibbles,
// so no setting may admit more than 32 generators.
inline constexpr int hard_generator_cap = 32;

namespace detail {
inline std::atomic<int>& generator_limit() {
    static std::atomic<int> limit{30};
    return limit;
}
} // namespace detail

inline int max_generators() { return detail::generator_limit().load(); }

inline void set_max_generators(int n) {
    if (n < 0 || n > hard_generator_cap)
        throw InvalidParameter("generator limit must lie in [0, " +
                               std::to_string(hard_generator_cap) + "], got " + std::to_string(n));
    detail::generator_limit().store(n);
}

// The basis of A(T) has 2^n elements; refuse to build algebras past the limit.
inline void check_generator_count(std::size_t n) {
    if (n > static_cast<std::size_t>(max_generators()))
        throw ResourceError("algebra on " + std::to_string(n) +
                            " generators exceeds the configured limit of " +
                            std::to_string(max_generators()));
}

} // namespace nilcox
