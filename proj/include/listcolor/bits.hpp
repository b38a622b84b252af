#pragma once

#include <bit>
#include <cstdint>

namespace listcolor {

template <typename F>
inline void for_each_bit(std::uint64_t m, F && f)
{
    while (m) {
        int b = std::countr_zero(m);
        m &= m - 1;
        f(b);
    }
}

inline constexpr std::uint64_t bit(int i) noexcept { return std::uint64_t{1} << i; }

}
