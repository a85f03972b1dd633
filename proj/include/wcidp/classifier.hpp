#ifndef WCIDP_CLASSIFIER_HPP
#define WCIDP_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <utility>

#include "wcidp/quasismooth.hpp"
#include "wcidp/types.hpp"
#include "wcidp/wellformed.hpp"

namespace wcidp {

/// I = a0 + a1 + a2 + a3 + a4 - d1 - d2. May be zero or negative.
inline Int amplitude(const Candidate& c) { return c.weights().sum() - c.d1() - c.d2(); }

/// First degree (1 or 2) equal to some weight, with the largest such weight index.
inline std::optional<std::pair<int, int>> linear_cone_witness(const Candidate& c) {
    for (int d = 1; d <= 2; ++d) {
        const Int deg = d == 1 ? c.d1() : c.d2();
        for (int i = kNumWeights - 1; i >= 0; --i) {
            if (c.a(i) == deg) {
                return std::pair{d, i};
            }
        }
    }
    return std::nullopt;
}

inline bool is_linear_cone(const Candidate& c) { return linear_cone_witness(c).has_value(); }

struct Verdict {
    bool is_linear_cone = false;
    WfReport wf;
    QsReport qs;
    Int amplitude = 0;
    bool is_del_pezzo = false;
};

inline Verdict classify(const Candidate& c) {
    Verdict v;
    v.is_linear_cone = is_linear_cone(c);
    v.wf = check_wf(c);
    v.qs = check_qs(c);
    v.amplitude = amplitude(c);
    v.is_del_pezzo = !v.is_linear_cone && v.wf.passed && v.qs.passed && v.amplitude >= 1;
    return v;
}

/// Boolean-only classification; cheapest tests first.
inline bool is_del_pezzo(const Candidate& c) {
    return amplitude(c) >= 1 && !is_linear_cone(c) && qs_singleton(c, 4) && is_well_formed(c) && is_quasi_smooth(c);
}

/// One-line human-readable reason for a negative verdict, empty if del Pezzo.
inline std::string rejection_reason(const Candidate& c, const Verdict& v) {
    if (v.is_linear_cone) {
        const auto [d, i] = *linear_cone_witness(c);
        return "linear cone (d" + std::to_string(d) + " = a" + std::to_string(i) + ")";
    }
    if (!v.wf.passed) {
        const auto& first = v.wf.violations.front();
        return std::string("not well-formed (") + to_string(first.condition) + " condition, omitted " +
               to_string(first.omitted) + ", gcd " + std::to_string(first.gcd_value) + ")";
    }
    if (!v.qs.passed) {
        const auto& first = v.qs.violations.front();
        return std::string("not quasi-smooth (") + to_string(first.level) + " " + to_string(first.indices) + ")";
    }
    if (v.amplitude < 1) {
        return "amplitude I=" + std::to_string(v.amplitude) + " < 1";
    }
    return {};
}

}  // namespace wcidp

#endif  // WCIDP_CLASSIFIER_HPP
