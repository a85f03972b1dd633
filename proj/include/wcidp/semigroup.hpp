#ifndef WCIDP_SEMIGROUP_HPP
#define WCIDP_SEMIGROUP_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "wcidp/types.hpp"

namespace wcidp {

/// Generators of the numerical semigroup of non-negative integer combinations.
/// One to five positive generators; order is irrelevant and duplicates are allowed.
class GeneratorSet {
public:
    GeneratorSet(std::initializer_list<Int> gens) : GeneratorSet(std::span<const Int>(gens.begin(), gens.size())) {}

    explicit GeneratorSet(std::span<const Int> gens) {
        if (gens.empty() || gens.size() > 5) {
            throw std::invalid_argument("a generator set holds between 1 and 5 generators");
        }
        for (Int g : gens) {
            if (g < 1) {
                throw std::invalid_argument("generators must be positive");
            }
            gens_[size_++] = g;
        }
        std::sort(gens_.begin(), gens_.begin() + size_);
    }

    /// The weights of `w` at the given indices.
    static GeneratorSet of(const WeightSystem& w, IndexSet indices) {
        std::array<Int, 5> buf{};
        std::size_t n = 0;
        for (int i : indices.indices()) {
            buf[n++] = w[i];
        }
        return GeneratorSet(std::span<const Int>(buf.data(), n));
    }

    [[nodiscard]] std::span<const Int> generators() const { return {gens_.data(), size_}; }
    [[nodiscard]] std::size_t size() const { return size_; }

private:
    std::array<Int, 5> gens_{};
    std::size_t size_ = 0;
};

namespace detail {

inline bool contains1(Int g, Int v) { return v >= 0 && v % g == 0; }

// Bounded loop over multiples of the larger generator; remainder tested against the smaller.
inline bool contains2(Int small, Int large, Int v) {
    if (v < 0) {
        return false;
    }
    if (small > large) {
        std::swap(small, large);
    }
    for (Int rest = v; rest >= 0; rest -= large) {
        if (rest % small == 0) {
            return true;
        }
    }
    return false;
}

inline bool contains3(Int g0, Int g1, Int g2, Int v) {
    if (v < 0) {
        return false;
    }
    // g2 is the largest after sorting, so the outer loop is the shortest.
    if (g0 > g1) std::swap(g0, g1);
    if (g1 > g2) std::swap(g1, g2);
    if (g0 > g1) std::swap(g0, g1);
    for (Int rest = v; rest >= 0; rest -= g2) {
        if (contains2(g0, g1, rest)) {
            return true;
        }
    }
    return false;
}

inline bool contains_dp(std::span<const Int> gens, Int v) {
    std::vector<char> reach(static_cast<std::size_t>(v) + 1, 0);
    reach[0] = 1;
    for (Int x = 1; x <= v; ++x) {
        for (Int g : gens) {
            if (g <= x && reach[static_cast<std::size_t>(x - g)]) {
                reach[static_cast<std::size_t>(x)] = 1;
                break;
            }
        }
    }
    return reach[static_cast<std::size_t>(v)] != 0;
}

}  // namespace detail

/// True iff v is a non-negative integer combination of the generators.
inline bool contains(const GeneratorSet& gens, Int v) {
    if (v < 0) {
        return false;
    }
    if (v == 0) {
        return true;
    }
    const auto g = gens.generators();
    switch (g.size()) {
        case 1:
            return detail::contains1(g[0], v);
        case 2:
            return detail::contains2(g[0], g[1], v);
        case 3:
            return detail::contains3(g[0], g[1], g[2], v);
        default:
            if (g[0] == 1) {
                return true;
            }
            return detail::contains_dp(g, v);
    }
}

/// gcd of the weights whose indices are not in `omitted`.
inline Int subset_gcd(const WeightSystem& w, IndexSet omitted) {
    if (omitted.size() < 1 || omitted.size() > 3) {
        throw std::invalid_argument("omitted index set must have 1 to 3 elements, got " + to_string(omitted));
    }
    Int g = 0;
    for (int i = 0; i < kNumWeights; ++i) {
        if (!omitted.contains(i)) {
            g = std::gcd(g, w[i]);
        }
    }
    return g;
}

}  // namespace wcidp

#endif  // WCIDP_SEMIGROUP_HPP
