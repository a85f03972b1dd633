#ifndef WCIDP_FAMILIES_HPP
#define WCIDP_FAMILIES_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcidp/catalog_data.hpp"
#include "wcidp/classifier.hpp"
#include "wcidp/expr.hpp"
#include "wcidp/types.hpp"

namespace wcidp {

inline constexpr int kNumFamilies = 45;

/// Parameter name -> value. Names are a0, a1, b0, b1, nu, t.
using Assignment = std::map<std::string, Int>;

struct FamilyConstraint {
    Expr expr;
    std::string display;
};

struct FamilySpec {
    int id = 0;
    std::vector<std::string> params;
    std::array<Expr, 7> formulas;  // a0..a4, d1, d2
    Expr amplitude;
    /// Implicit conditions (positivity, a0 < a1, b0 < b1) first, then the listed ones.
    std::vector<FamilyConstraint> constraints;
};

struct FamilyMatch {
    int family_id = 0;
    Assignment assignment;

    friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

/// Raised by instantiate when parameters violate a constraint; names the constraint.
class InvalidParameters : public std::domain_error {
public:
    InvalidParameters(int id, std::string reason)
        : std::domain_error("family " + std::to_string(id) + ": " + reason), reason_(std::move(reason)) {}
    [[nodiscard]] const std::string& reason() const { return reason_; }

private:
    std::string reason_;
};

struct ParamCheck {
    bool valid = false;
    bool overflow = false;
    std::string reason;  // empty when valid
};

namespace detail {

inline std::vector<std::string> split_names(const char* csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(item);
    }
    return out;
}

inline bool has_param(const std::vector<std::string>& names, const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
}

inline std::vector<FamilySpec> build_catalog() {
    std::vector<FamilySpec> out;
    for (const auto& row : data::kFamilies) {
        FamilySpec f;
        f.id = row.id;
        f.params = split_names(row.params);
        for (std::size_t k = 0; k < 7; ++k) {
            f.formulas[k] = Expr::parse(row.formulas[k], f.params);
        }
        f.amplitude = Expr::parse(row.amplitude, f.params);
        for (const auto& p : f.params) {
            f.constraints.push_back({Expr::parse(p + ">=1", f.params), p + " >= 1"});
        }
        for (const char* pair : {"a", "b"}) {
            const std::string lo = std::string(pair) + "0";
            const std::string hi = std::string(pair) + "1";
            if (has_param(f.params, lo) && has_param(f.params, hi)) {
                f.constraints.push_back({Expr::parse(lo + "<" + hi, f.params), lo + " < " + hi});
            }
        }
        for (const auto& c : row.constraints) {
            f.constraints.push_back({Expr::parse(c.expr, f.params), c.display});
        }
        out.push_back(std::move(f));
    }
    if (out.size() != static_cast<std::size_t>(kNumFamilies)) {
        throw std::logic_error("family catalog must have 45 rows");
    }
    return out;
}

}  // namespace detail

/// The immutable catalog, ordered by id.
inline const std::vector<FamilySpec>& catalog() {
    static const std::vector<FamilySpec> kCatalog = detail::build_catalog();
    return kCatalog;
}

/// Throws std::out_of_range for an id outside 1..45.
inline const FamilySpec& family(int id) {
    if (id < 1 || id > kNumFamilies) {
        throw std::out_of_range("unknown family id " + std::to_string(id));
    }
    return catalog()[static_cast<std::size_t>(id - 1)];
}

/// Printed tuple, e.g. "(1, 1, t, t, 2*t-1; 2*t, 2*t)".
inline std::string formula_text(const FamilySpec& f) {
    std::string out = "(";
    for (std::size_t k = 0; k < 7; ++k) {
        out += f.formulas[k].text();
        out += k == 4 ? "; " : (k == 6 ? ")" : ", ");
    }
    return out;
}

namespace detail {

/// Positional parameter values; throws std::invalid_argument on missing or extra names.
inline std::vector<Int> bind(const FamilySpec& f, const Assignment& params) {
    std::vector<Int> values;
    values.reserve(f.params.size());
    for (const auto& name : f.params) {
        const auto it = params.find(name);
        if (it == params.end()) {
            throw std::invalid_argument("family " + std::to_string(f.id) + ": missing parameter '" + name + "'");
        }
        values.push_back(it->second);
    }
    for (const auto& [name, value] : params) {
        if (!has_param(f.params, name)) {
            throw std::invalid_argument("family " + std::to_string(f.id) + ": unexpected parameter '" + name + "'");
        }
    }
    return values;
}

inline Assignment unbind(const FamilySpec& f, std::span<const Int> values) {
    Assignment out;
    for (std::size_t i = 0; i < f.params.size(); ++i) {
        out[f.params[i]] = values[i];
    }
    return out;
}

/// Validity check on positional values; fills `tuple` when valid.
inline ParamCheck check_values(const FamilySpec& f, std::span<const Int> values, std::array<Int, 7>* tuple = nullptr) {
    ParamCheck out;
    for (const auto& c : f.constraints) {
        const auto r = c.expr.eval(values);
        if (r.error == EvalError::overflow) {
            out.overflow = true;
            out.reason = "arithmetic overflow in \"" + c.display + "\"";
            return out;
        }
        if (!r.ok() || r.value == 0) {
            out.reason = c.display;
            return out;
        }
    }
    std::array<Int, 7> v{};
    for (std::size_t k = 0; k < 7; ++k) {
        const auto r = f.formulas[k].eval(values);
        if (r.error == EvalError::overflow) {
            out.overflow = true;
            out.reason = "arithmetic overflow in \"" + f.formulas[k].text() + "\"";
            return out;
        }
        if (!r.ok()) {
            out.reason = std::string(to_string(r.error)) + " in \"" + f.formulas[k].text() + "\"";
            return out;
        }
        v[k] = r.value;
        if (v[k] <= 0) {
            out.reason = "non-positive entry " + std::to_string(k) + " (" + f.formulas[k].text() + " = " +
                         std::to_string(v[k]) + ")";
            return out;
        }
    }
    for (std::size_t k = 0; k + 1 < 5; ++k) {
        if (v[k] > v[k + 1]) {
            out.reason = "weights not ascending (a" + std::to_string(k) + " = " + std::to_string(v[k]) + " > a" +
                         std::to_string(k + 1) + " = " + std::to_string(v[k + 1]) + ")";
            return out;
        }
    }
    if (v[5] > v[6]) {
        out.reason = "d1 = " + std::to_string(v[5]) + " > d2 = " + std::to_string(v[6]);
        return out;
    }
    out.valid = true;
    if (tuple != nullptr) {
        *tuple = v;
    }
    return out;
}

}  // namespace detail

/// Detailed validity check: the first failing constraint is reported by its display text.
/// Throws std::out_of_range (unknown id) or std::invalid_argument (missing/extra parameter).
inline ParamCheck check_params(int id, const Assignment& params) {
    const auto& f = family(id);
    return detail::check_values(f, detail::bind(f, params));
}

inline bool valid_params(int id, const Assignment& params) { return check_params(id, params).valid; }

/// Substitutes the parameters. Throws InvalidParameters on a failed constraint and
/// std::overflow_error when a formula leaves the 64-bit range.
inline Candidate instantiate(int id, const Assignment& params) {
    const auto& f = family(id);
    std::array<Int, 7> v{};
    const auto check = detail::check_values(f, detail::bind(f, params), &v);
    if (check.overflow) {
        throw std::overflow_error("family " + std::to_string(id) + ": " + check.reason);
    }
    if (!check.valid) {
        throw InvalidParameters(id, check.reason);
    }
    return Candidate::from_seven(v);
}

/// Evaluates the amplitude formula; throws like instantiate.
inline Int amplitude_formula(int id, const Assignment& params) {
    const auto& f = family(id);
    const auto values = detail::bind(f, params);
    const auto r = f.amplitude.eval(values);
    if (!r.ok()) {
        throw std::overflow_error("family " + std::to_string(id) + ": " + to_string(r.error) + " in amplitude");
    }
    return r.value;
}

namespace detail {

// Depth-first scan over parameters in declared order. Each formula is compared with
// the target as soon as all of its parameters are bound, which prunes almost everything.
inline void match_family(const FamilySpec& f, const std::array<Int, 7>& target, std::vector<Int>& values,
                         std::size_t depth, Int bound, std::vector<FamilyMatch>& out) {
    const std::uint32_t bound_mask = (1U << depth) - 1U;
    const std::uint32_t new_bit = depth == 0 ? 0U : 1U << (depth - 1);
    for (std::size_t k = 0; k < 7; ++k) {
        const auto vars = f.formulas[k].variables();
        const bool ready = (vars & ~bound_mask) == 0;
        const bool fresh = depth == 0 ? vars == 0 : (vars & new_bit) != 0;
        if (ready && fresh) {
            const auto r = f.formulas[k].eval(values);
            if (!r.ok() || r.value != target[k]) {
                return;
            }
        }
    }
    if (depth == f.params.size()) {
        std::array<Int, 7> tuple{};
        if (check_values(f, values, &tuple).valid && tuple == target) {
            out.push_back({f.id, unbind(f, values)});
        }
        return;
    }
    for (Int x = 1; x <= bound; ++x) {
        values[depth] = x;
        match_family(f, target, values, depth + 1, bound, out);
    }
    values[depth] = 0;
}

}  // namespace detail

/// Every (family, assignment) reproducing c, ordered by family id. Each parameter
/// is searched in 1..a4+2.
inline std::vector<FamilyMatch> match_tuple(const Candidate& c) {
    std::vector<FamilyMatch> out;
    const auto target = c.to_seven();
    const Int bound = c.a(4) + 2;
    for (const auto& f : catalog()) {
        std::vector<Int> values(f.params.size(), 0);
        detail::match_family(f, target, values, 0, bound, out);
    }
    return out;
}

inline bool in_some_family(const Candidate& c) { return !match_tuple(c).empty(); }

/// True iff amplitude(instantiate(id, p)) equals the amplitude formula for each p.
/// Throws std::invalid_argument if any assignment is invalid.
inline bool verify_amplitude_column(int id, const std::vector<Assignment>& sample) {
    for (const auto& p : sample) {
        const auto check = check_params(id, p);
        if (!check.valid) {
            throw std::invalid_argument("invalid sample for family " + std::to_string(id) + ": " + check.reason);
        }
        if (amplitude(instantiate(id, p)) != amplitude_formula(id, p)) {
            return false;
        }
    }
    return true;
}

namespace detail {

// Visits the compositions of `rest` into the positions depth..k-1 (all parts >= 1) in
// lexicographic order; stops early once `visit` returns false.
template <typename Visit>
bool for_each_composition(std::vector<Int>& v, std::size_t depth, Int rest, Visit&& visit) {
    const std::size_t k = v.size();
    if (depth + 1 == k) {
        v[depth] = rest;
        return visit(v);
    }
    const Int remaining_slots = static_cast<Int>(k - depth - 1);
    for (Int x = 1; x <= rest - remaining_slots; ++x) {
        v[depth] = x;
        if (!for_each_composition(v, depth + 1, rest - x, visit)) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

/// The first n valid assignments ordered by parameter sum, then lexicographically
/// in declared parameter order.
inline std::vector<Assignment> smallest_valid_assignments(int id, std::size_t n, Int max_sum = 2000) {
    const auto& f = family(id);
    std::vector<Assignment> out;
    std::vector<Int> v(f.params.size(), 1);
    for (Int sum = static_cast<Int>(v.size()); sum <= max_sum && out.size() < n; ++sum) {
        detail::for_each_composition(v, 0, sum, [&](const std::vector<Int>& values) {
            if (detail::check_values(f, values).valid) {
                out.push_back(detail::unbind(f, values));
            }
            return out.size() < n;
        });
    }
    return out;
}

/// A redundancy statement: every valid member of `subfamily` (t >= 2) also lies in each listed family.
struct OverlapNote {
    int subfamily;
    std::vector<int> supersets;
};

inline const std::vector<OverlapNote>& overlap_notes() {
    static const std::vector<OverlapNote> kNotes = {
        {19, {1, 2, 11, 12}},
        {30, {2, 11}},
        {17, {6, 8}},
        {26, {8}},
    };
    return kNotes;
}

}  // namespace wcidp

#endif  // WCIDP_FAMILIES_HPP
