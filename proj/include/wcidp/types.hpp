#ifndef WCIDP_TYPES_HPP
#define WCIDP_TYPES_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcidp {

using Int = std::int64_t;

inline constexpr int kNumWeights = 5;

/// A subset of the coordinate indices {0,...,4}, stored as a bitmask.
class IndexSet {
public:
    constexpr IndexSet() = default;
    constexpr IndexSet(std::initializer_list<int> indices) {
        for (int i : indices) {
            insert(i);
        }
    }

    static constexpr IndexSet from_mask(std::uint8_t mask) {
        IndexSet s;
        s.mask_ = static_cast<std::uint8_t>(mask & 0x1F);
        return s;
    }
    static constexpr IndexSet all() { return from_mask(0x1F); }

    constexpr void insert(int i) {
        if (i < 0 || i >= kNumWeights) {
            throw std::out_of_range("index " + std::to_string(i) + " outside 0..4");
        }
        mask_ |= static_cast<std::uint8_t>(1U << i);
    }
    [[nodiscard]] constexpr bool contains(int i) const { return (mask_ >> i) & 1U; }
    [[nodiscard]] constexpr int size() const { return std::popcount(mask_); }
    [[nodiscard]] constexpr bool empty() const { return mask_ == 0; }
    [[nodiscard]] constexpr std::uint8_t mask() const { return mask_; }
    [[nodiscard]] constexpr IndexSet complement() const { return from_mask(static_cast<std::uint8_t>(~mask_)); }

    [[nodiscard]] std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < kNumWeights; ++i) {
            if (contains(i)) {
                out.push_back(i);
            }
        }
        return out;
    }

    friend constexpr bool operator==(IndexSet, IndexSet) = default;

private:
    std::uint8_t mask_ = 0;
};

inline std::string to_string(IndexSet s) {
    std::string out = "{";
    bool first = true;
    for (int i : s.indices()) {
        if (!first) {
            out += ",";
        }
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

/// Five positive weights a0 <= a1 <= a2 <= a3 <= a4.
class WeightSystem {
public:
    /// Sorts the input; throws std::invalid_argument on a non-positive weight.
    explicit WeightSystem(std::array<Int, kNumWeights> weights) : a_(weights) {
        for (Int w : a_) {
            if (w <= 0) {
                throw std::invalid_argument("weights must be positive, got " + std::to_string(w));
            }
        }
        std::sort(a_.begin(), a_.end());
    }

    [[nodiscard]] Int operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const std::array<Int, kNumWeights>& values() const { return a_; }
    [[nodiscard]] Int sum() const { return a_[0] + a_[1] + a_[2] + a_[3] + a_[4]; }

    friend auto operator<=>(const WeightSystem&, const WeightSystem&) = default;
    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

private:
    std::array<Int, kNumWeights> a_;
};

/// A weight system with two degrees d1 <= d2, in canonical form.
class Candidate {
public:
    Candidate(WeightSystem weights, Int d1, Int d2) : w_(weights), d1_(d1), d2_(d2) {
        if (d1_ <= 0 || d2_ <= 0) {
            throw std::invalid_argument("degrees must be positive");
        }
        if (d1_ > d2_) {
            std::swap(d1_, d2_);
        }
    }
    Candidate(std::array<Int, kNumWeights> weights, Int d1, Int d2) : Candidate(WeightSystem(weights), d1, d2) {}

    /// Takes (a0,...,a4,d1,d2) in any order within the two groups.
    static Candidate from_seven(const std::array<Int, 7>& v) {
        return Candidate({v[0], v[1], v[2], v[3], v[4]}, v[5], v[6]);
    }

    [[nodiscard]] const WeightSystem& weights() const { return w_; }
    [[nodiscard]] Int a(int i) const { return w_[i]; }
    [[nodiscard]] Int d1() const { return d1_; }
    [[nodiscard]] Int d2() const { return d2_; }

    [[nodiscard]] std::array<Int, 7> to_seven() const {
        return {w_[0], w_[1], w_[2], w_[3], w_[4], d1_, d2_};
    }

    friend auto operator<=>(const Candidate&, const Candidate&) = default;
    friend bool operator==(const Candidate&, const Candidate&) = default;

private:
    WeightSystem w_;
    Int d1_;
    Int d2_;
};

/// "a0,a1,a2,a3,a4,d1,d2"
inline std::string to_csv_row(const Candidate& c) {
    std::string out;
    const auto v = c.to_seven();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(v[i]);
    }
    return out;
}

/// "(a0, a1, a2, a3, a4; d1, d2)"
inline std::string to_string(const Candidate& c) {
    std::string out = "(";
    for (int i = 0; i < kNumWeights; ++i) {
        out += std::to_string(c.a(i));
        out += (i + 1 < kNumWeights) ? ", " : "; ";
    }
    return out + std::to_string(c.d1()) + ", " + std::to_string(c.d2()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Candidate& c) { return os << to_string(c); }

}  // namespace wcidp

#endif  // WCIDP_TYPES_HPP
