#ifndef WCIDP_QUASISMOOTH_HPP
#define WCIDP_QUASISMOOTH_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcidp/semigroup.hpp"
#include "wcidp/types.hpp"

namespace wcidp {

enum class QsLevel { singleton, pair, triple };

inline const char* to_string(QsLevel l) {
    switch (l) {
        case QsLevel::singleton:
            return "singleton";
        case QsLevel::pair:
            return "pair";
        case QsLevel::triple:
            return "triple";
    }
    return "?";
}

struct QsViolation {
    QsLevel level;
    IndexSet indices;
    std::string detail;
};

struct QsReport {
    bool passed = true;
    std::vector<QsViolation> violations;
};

/// Which of the four alternatives of the pair condition hold.
struct PairDisjuncts {
    bool both_degrees = false;       ///< d1, d2 in S
    bool first_degree = false;       ///< d1, d2 - a_e in S for some e
    bool second_degree = false;      ///< d1 - a_e, d2 in S for some e
    bool complementary_sets = false; ///< d1 - a_e (e in E), d2 - a_f (f in F), E,F 2-subsets covering the complement

    [[nodiscard]] bool any() const { return both_degrees || first_degree || second_degree || complementary_sets; }
};

namespace detail {

inline void check_index(int i) {
    if (i < 0 || i >= kNumWeights) {
        throw std::out_of_range("index " + std::to_string(i) + " outside 0..4");
    }
}

inline bool some_shift_in(const Candidate& c, const GeneratorSet& s, Int d) {
    for (int e = 0; e < kNumWeights; ++e) {
        if (contains(s, d - c.a(e))) {
            return true;
        }
    }
    return false;
}

inline std::array<int, 3> complement3(int i, int j) {
    std::array<int, 3> out{};
    int n = 0;
    for (int x = 0; x < kNumWeights; ++x) {
        if (x != i && x != j) {
            out[static_cast<std::size_t>(n++)] = x;
        }
    }
    return out;
}

inline std::array<int, 2> complement2(int k, int l, int m) {
    std::array<int, 2> out{};
    int n = 0;
    for (int x = 0; x < kNumWeights; ++x) {
        if (x != k && x != l && x != m) {
            out[static_cast<std::size_t>(n++)] = x;
        }
    }
    return out;
}

}  // namespace detail

/// Singleton condition at coordinate i: a_i | d1, or a_i | d2, or
/// d1 - a_e and d2 - a_f are non-negative multiples of a_i for some e != f.
inline bool qs_singleton(const Candidate& c, int i) {
    detail::check_index(i);
    const Int ai = c.a(i);
    if (c.d1() % ai == 0 || c.d2() % ai == 0) {
        return true;
    }
    for (int e = 0; e < kNumWeights; ++e) {
        if (!detail::contains1(ai, c.d1() - c.a(e))) {
            continue;
        }
        for (int f = 0; f < kNumWeights; ++f) {
            if (f != e && detail::contains1(ai, c.d2() - c.a(f))) {
                return true;
            }
        }
    }
    return false;
}

/// Evaluates each alternative of the pair condition for 0 <= i < j <= 4 separately.
///
/// The fourth alternative reads e and f as two-element index sets E and F
/// whose union is the complementary triple {k,l,m}; all four memberships
/// d1 - a_e (e in E) and d2 - a_f (f in F) are required.
inline PairDisjuncts qs_pair_disjuncts(const Candidate& c, int i, int j) {
    detail::check_index(i);
    detail::check_index(j);
    if (i >= j) {
        throw std::invalid_argument("pair indices must satisfy i < j");
    }
    const GeneratorSet s{c.a(i), c.a(j)};
    PairDisjuncts out;
    const bool d1_in = contains(s, c.d1());
    const bool d2_in = contains(s, c.d2());
    out.both_degrees = d1_in && d2_in;
    out.first_degree = d1_in && detail::some_shift_in(c, s, c.d2());
    out.second_degree = d2_in && detail::some_shift_in(c, s, c.d1());

    const auto t = detail::complement3(i, j);
    std::array<bool, 3> m1{};
    std::array<bool, 3> m2{};
    for (std::size_t x = 0; x < 3; ++x) {
        m1[x] = contains(s, c.d1() - c.a(t[x]));
        m2[x] = contains(s, c.d2() - c.a(t[x]));
    }
    // 2-subsets of the triple are identified by the one element they omit.
    for (std::size_t skip_e = 0; skip_e < 3 && !out.complementary_sets; ++skip_e) {
        for (std::size_t skip_f = 0; skip_f < 3; ++skip_f) {
            if (skip_e == skip_f) {
                continue;
            }
            bool ok = true;
            for (std::size_t x = 0; x < 3 && ok; ++x) {
                if (x != skip_e && !m1[x]) ok = false;
                if (x != skip_f && !m2[x]) ok = false;
            }
            if (ok) {
                out.complementary_sets = true;
                break;
            }
        }
    }
    return out;
}

inline bool qs_pair(const Candidate& c, int i, int j) { return qs_pair_disjuncts(c, i, j).any(); }

/// Triple condition for k < l < m, with {i,j} the complementary pair.
inline bool qs_triple(const Candidate& c, int k, int l, int m) {
    detail::check_index(k);
    detail::check_index(l);
    detail::check_index(m);
    if (!(k < l && l < m)) {
        throw std::invalid_argument("triple indices must satisfy k < l < m");
    }
    const auto [i, j] = detail::complement2(k, l, m);
    const GeneratorSet s{c.a(k), c.a(l), c.a(m)};
    const bool d1_in = contains(s, c.d1());
    const bool d2_in = contains(s, c.d2());
    if (d1_in && d2_in) {
        return true;
    }
    if (d1_in && contains(s, c.d2() - c.a(i)) && contains(s, c.d2() - c.a(j))) {
        return true;
    }
    return d2_in && contains(s, c.d1() - c.a(i)) && contains(s, c.d1() - c.a(j));
}

namespace detail {

inline std::string singleton_detail(const Candidate& c, int i) {
    return "a" + std::to_string(i) + "=" + std::to_string(c.a(i)) + " divides neither d1=" + std::to_string(c.d1()) +
           " nor d2=" + std::to_string(c.d2()) + ", and no e != f has d1-a_e, d2-a_f in (a" + std::to_string(i) + ")";
}

inline std::string pair_detail(const Candidate& c, int i, int j) {
    return "no alternative holds for S=(" + std::to_string(c.a(i)) + "," + std::to_string(c.a(j)) +
           "): d1,d2 in S fails; d1 and d2-a_e in S fails; d1-a_e and d2 in S fails; "
           "no 2-sets E,F covering the complement with d1-a_E, d2-a_F in S";
}

inline std::string triple_detail(const Candidate& c, int k, int l, int m) {
    return "no alternative holds for S=(" + std::to_string(c.a(k)) + "," + std::to_string(c.a(l)) + "," +
           std::to_string(c.a(m)) + "): d1,d2 in S fails; d1, d2-a_i, d2-a_j in S fails; d1-a_i, d1-a_j, d2 in S fails";
}

template <typename OnViolation>
bool scan_qs(const Candidate& c, OnViolation&& on_violation) {
    bool ok = true;
    for (int i = kNumWeights - 1; i >= 0; --i) {
        if (!qs_singleton(c, i)) {
            ok = false;
            if (!on_violation(QsLevel::singleton, IndexSet{i}, [&] { return singleton_detail(c, i); })) {
                return false;
            }
        }
    }
    for (int i = 0; i < kNumWeights; ++i) {
        for (int j = i + 1; j < kNumWeights; ++j) {
            if (!qs_pair(c, i, j)) {
                ok = false;
                if (!on_violation(QsLevel::pair, IndexSet{i, j}, [&] { return pair_detail(c, i, j); })) {
                    return false;
                }
            }
        }
    }
    for (int k = 0; k < kNumWeights; ++k) {
        for (int l = k + 1; l < kNumWeights; ++l) {
            for (int m = l + 1; m < kNumWeights; ++m) {
                if (!qs_triple(c, k, l, m)) {
                    ok = false;
                    if (!on_violation(QsLevel::triple, IndexSet{k, l, m}, [&] { return triple_detail(c, k, l, m); })) {
                        return false;
                    }
                }
            }
        }
    }
    return ok;
}

}  // namespace detail

/// Full quasi-smoothness report: all 5 singletons, 10 pairs and 10 triples.
inline QsReport check_qs(const Candidate& c) {
    QsReport report;
    detail::scan_qs(c, [&](QsLevel level, IndexSet idx, auto&& detail) {
        report.violations.push_back({level, idx, detail()});
        return true;
    });
    report.passed = report.violations.empty();
    return report;
}

inline bool is_quasi_smooth(const Candidate& c) {
    return detail::scan_qs(c, [](QsLevel, IndexSet, auto&&) { return false; });
}

/// Advisory check: both degrees lie in the semigroup of all five weights.
inline bool degrees_in_weight_semigroup(const Candidate& c) {
    const GeneratorSet all(std::span<const Int>(c.weights().values()));
    return contains(all, c.d1()) && contains(all, c.d2());
}

}  // namespace wcidp

#endif  // WCIDP_QUASISMOOTH_HPP
