#ifndef WCIDP_WELLFORMED_HPP
#define WCIDP_WELLFORMED_HPP

#include <string>
#include <vector>

#include "wcidp/semigroup.hpp"
#include "wcidp/types.hpp"

namespace wcidp {

enum class WfCondition { triple_gcd, pair_gcd, single_gcd };

inline const char* to_string(WfCondition c) {
    switch (c) {
        case WfCondition::triple_gcd:
            return "triple-gcd";
        case WfCondition::pair_gcd:
            return "pair-gcd";
        case WfCondition::single_gcd:
            return "single-gcd";
    }
    return "?";
}

struct WfViolation {
    WfCondition condition;
    IndexSet omitted;
    Int gcd_value;

    friend bool operator==(const WfViolation&, const WfViolation&) = default;
};

struct WfReport {
    bool passed = true;
    std::vector<WfViolation> violations;
};

namespace detail {

template <typename OnViolation>
bool scan_wf(const Candidate& c, OnViolation&& on_violation) {
    const auto& w = c.weights();
    bool ok = true;
    // (1) every gcd of two weights divides d1 or d2
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            for (int k = j + 1; k < 5; ++k) {
                const Int b = subset_gcd(w, {i, j, k});
                if (c.d1() % b != 0 && c.d2() % b != 0) {
                    ok = false;
                    if (!on_violation(WfViolation{WfCondition::triple_gcd, IndexSet{i, j, k}, b})) {
                        return false;
                    }
                }
            }
        }
    }
    // (2) every gcd of three weights divides both degrees
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            const Int b = subset_gcd(w, {i, j});
            if (c.d1() % b != 0 || c.d2() % b != 0) {
                ok = false;
                if (!on_violation(WfViolation{WfCondition::pair_gcd, IndexSet{i, j}, b})) {
                    return false;
                }
            }
        }
    }
    // (3) every four weights are coprime
    for (int i = 0; i < 5; ++i) {
        const Int b = subset_gcd(w, {i});
        if (b != 1) {
            ok = false;
            if (!on_violation(WfViolation{WfCondition::single_gcd, IndexSet{i}, b})) {
                return false;
            }
        }
    }
    return ok;
}

}  // namespace detail

/// Full well-formedness report listing every violated gcd condition.
inline WfReport check_wf(const Candidate& c) {
    WfReport report;
    detail::scan_wf(c, [&](const WfViolation& v) {
        report.violations.push_back(v);
        return true;
    });
    report.passed = report.violations.empty();
    return report;
}

/// Short-circuiting variant of check_wf for hot loops.
inline bool is_well_formed(const Candidate& c) {
    return detail::scan_wf(c, [](const WfViolation&) { return false; });
}

}  // namespace wcidp

#endif  // WCIDP_WELLFORMED_HPP
