#ifndef WCIDP_ENUMERATOR_HPP
#define WCIDP_ENUMERATOR_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wcidp/classifier.hpp"
#include "wcidp/families.hpp"
#include "wcidp/types.hpp"

namespace wcidp {

struct Bounds {
    Int max_a4 = 0;
    Int max_d2 = 0;

    /// Throws std::invalid_argument unless max_a4 >= 1 and max_d2 >= 2.
    void validate() const {
        if (max_a4 < 1) {
            throw std::invalid_argument("max_a4 must be >= 1");
        }
        if (max_d2 < 2) {
            throw std::invalid_argument("max_d2 must be >= 2");
        }
        if (max_a4 > kMaxA4 || max_d2 > 4 * kMaxA4) {
            throw std::length_error("bounds exceed the supported search size (max_a4 <= " + std::to_string(kMaxA4) +
                                    ", max_d2 <= " + std::to_string(4 * kMaxA4) + ")");
        }
    }

    static constexpr Int kMaxA4 = 100000;

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

enum class Mode { exhaustive, shaped };

inline const char* to_string(Mode m) { return m == Mode::exhaustive ? "exhaustive" : "shaped"; }

/// Largest max_a4 accepted in exhaustive mode without an explicit override.
inline constexpr Int kExhaustiveLimit = 60;

struct FamilyInstance {
    Candidate candidate;
    std::vector<FamilyMatch> matches;
};

struct EnumerationResult {
    Bounds bounds;
    Mode mode = Mode::shaped;
    std::vector<Candidate> solutions;
    std::vector<Candidate> sporadic;
    std::vector<FamilyInstance> family_instances;
};

/// Inclusive range of a2 values handled by one worker; empty when lo > hi.
struct WorkRange {
    Int a2_lo = 1;
    Int a2_hi = 0;

    [[nodiscard]] bool empty() const { return a2_lo > a2_hi; }
    friend bool operator==(const WorkRange&, const WorkRange&) = default;
};

struct ProgressEvent {
    std::size_t worker = 0;
    Int a2 = 0;                    ///< a2 value just finished
    std::size_t solutions = 0;     ///< found so far by this worker
};

struct EnumerateOptions {
    Mode mode = Mode::shaped;
    unsigned jobs = 1;
    bool allow_large_exhaustive = false;
    /// When false, sporadic and family_instances are left empty.
    bool split_families = true;
    std::function<void(const ProgressEvent&)> on_progress;
};

/// The distinct (d1, d2) degree shapes possible for a del Pezzo with these weights, sorted.
inline std::vector<std::pair<Int, Int>> lemma1_shapes(const WeightSystem& w) {
    const Int a0 = w[0], a1 = w[1], a2 = w[2], a3 = w[3], a4 = w[4];
    std::vector<std::pair<Int, Int>> out = {
        {a0 + a4, a1 + a4}, {a0 + a4, a2 + a4}, {a1 + a4, a2 + a4},
        {a0 + a4, a3 + a4}, {a1 + a4, a3 + a4}, {a2 + a4, a3 + a4},
    };
    for (Int d1 : {a0 + a3, a1 + a3, a2 + a3, a0 + a4, a1 + a4, a2 + a4, 2 * a3, a3 + a4, 2 * a4}) {
        out.emplace_back(d1, 2 * a4);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace detail {

// Each shape is d1 = a_p + a_q, d2 = a_r + a_s.
struct Shape {
    int p, q, r, s;
};

inline constexpr std::array<Shape, 15> kShapes = {{
    {0, 4, 1, 4}, {0, 4, 2, 4}, {1, 4, 2, 4}, {0, 4, 3, 4}, {1, 4, 3, 4}, {2, 4, 3, 4},
    {0, 3, 4, 4}, {1, 3, 4, 4}, {2, 3, 4, 4}, {0, 4, 4, 4}, {1, 4, 4, 4}, {2, 4, 4, 4},
    {3, 3, 4, 4}, {3, 4, 4, 4}, {4, 4, 4, 4},
}};

/// c0*x0 + c1*x1 + k, where x0 = a0 and x1 = a1 are the unknowns.
struct Lin {
    Int c0 = 0;
    Int c1 = 0;
    Int k = 0;

    [[nodiscard]] Int at(Int x0, Int x1) const { return c0 * x0 + c1 * x1 + k; }
    friend Lin operator+(Lin a, Lin b) { return {a.c0 + b.c0, a.c1 + b.c1, a.k + b.k}; }
    friend Lin operator-(Lin a, Lin b) { return {a.c0 - b.c0, a.c1 - b.c1, a.k - b.k}; }
    friend Lin operator*(Int s, Lin a) { return {s * a.c0, s * a.c1, s * a.k}; }
};

inline Int mod(Int v, Int m) {
    const Int r = v % m;
    return r < 0 ? r + m : r;
}

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

/// Solves c*x = r (mod m) for 0 < c < m; on success x = base (mod step).
inline bool solve_congruence(Int c, Int r, Int m, Int& base, Int& step) {
    const Int g = std::gcd(c, m);
    if (r % g != 0) {
        return false;
    }
    const Int mm = m / g;
    const Int cc = (c / g) % mm;
    // Inverse of cc modulo mm by the extended Euclidean algorithm.
    Int old_r = cc, rr = mm, old_s = 1, s = 0;
    while (rr != 0) {
        const Int q = old_r / rr;
        std::tie(old_r, rr) = std::pair{rr, old_r - q * rr};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
    }
    const Int inv = mod(old_s, mm);
    base = (r / g % mm) * inv % mm;  // both factors < mm <= 4e5
    step = mm;
    return true;
}

inline void push_progression(Int base, Int step, Int lo, Int hi, std::vector<Int>& out) {
    for (Int x = lo + mod(base - lo, step); x <= hi; x += step) {
        out.push_back(x);
    }
}

/// A singleton-condition alternative: all listed forms divisible by the modulus.
struct Option {
    std::array<Lin, 2> forms;
    int size;
};

// Options of the singleton condition at one coordinate for the given degree forms.
using Options = std::array<Option, 22>;

inline Options singleton_options(const Lin& d1, const Lin& d2, const std::array<Lin, 5>& w) {
    Options out{};
    std::size_t n = 0;
    out[n++] = {{d1, Lin{}}, 1};
    out[n++] = {{d2, Lin{}}, 1};
    for (int e = 0; e < kNumWeights; ++e) {
        for (int f = 0; f < kNumWeights; ++f) {
            if (e != f) {
                out[n++] = {{d1 - w[static_cast<std::size_t>(e)], d2 - w[static_cast<std::size_t>(f)]}, 2};
            }
        }
    }
    return out;
}

/// Reduces one option modulo m. Returns false if it can never hold; `live`
/// receives the forms that are not identically zero.
inline bool reduce_option(const Option& opt, Int m, std::array<Lin, 2>& live, int& n) {
    n = 0;
    for (int t = 0; t < opt.size; ++t) {
        const Lin& f = opt.forms[static_cast<std::size_t>(t)];
        const Lin r{mod(f.c0, m), mod(f.c1, m), mod(f.k, m)};
        if (r.c0 == 0 && r.c1 == 0) {
            if (r.k != 0) return false;
            continue;
        }
        live[static_cast<std::size_t>(n++)] = r;
    }
    return true;
}

/// True iff every satisfiable option modulo m imposes a non-trivial congruence.
inline bool constrains(const Options& options, Int m) {
    std::array<Lin, 2> live{};
    int n = 0;
    for (const auto& opt : options) {
        if (reduce_option(opt, m, live, n) && n == 0) return false;
    }
    return true;
}

/// Values in [lo, hi] of unknown `var` (0 or 1) allowed by the singleton condition
/// modulo m when the other unknown equals `known`; false if `var` is unconstrained.
inline bool pin_var(const Options& options, int var, Int known, Int m, Int lo, Int hi,
                    std::vector<Int>& out) {
    out.clear();
    for (const auto& opt : options) {
        std::array<std::pair<Int, Int>, 2> live{};  // (c, k): c*x + k = 0 mod m
        int n = 0;
        bool infeasible = false;
        for (int t = 0; t < opt.size; ++t) {
            const Lin& f = opt.forms[static_cast<std::size_t>(t)];
            const Int c = mod(var == 0 ? f.c0 : f.c1, m);
            const Int k = mod((var == 0 ? f.c1 : f.c0) * known + f.k, m);
            if (c == 0) {
                if (k != 0) infeasible = true;
                continue;
            }
            live[static_cast<std::size_t>(n++)] = {c, k};
        }
        if (infeasible) continue;
        if (n == 0) return false;
        Int base = 0, step = 0;
        if (!solve_congruence(live[0].first, mod(-live[0].second, m), m, base, step)) {
            continue;
        }
        for (Int x = lo + mod(base - lo, step); x <= hi; x += step) {
            if (n == 1 || mod(live[1].first * x + live[1].second, m) == 0) {
                out.push_back(x);
            }
        }
    }
    return true;
}

// Clips [lo, hi] by alpha*x + beta >= 0.
inline void clip(Int alpha, Int beta, Int& lo, Int& hi) {
    if (alpha > 0) {
        lo = std::max(lo, ceil_div(-beta, alpha));
    } else if (alpha < 0) {
        hi = std::min(hi, floor_div(beta, -alpha));
    } else if (beta < 0) {
        hi = lo - 1;
    }
}

/// Solves for (x0, x1) = (a0, a1) with a2, a3, a4 and the degree shape fixed.
/// Every point produced satisfies the singleton condition at one of a2, a3, a4
/// (or is produced by a plain loop when no modulus constrains); points are
/// candidates only and are fully classified afterwards.
class ShapeSolver {
public:
    ShapeSolver(Int a2, Int a3, Int a4, const std::array<Lin, 4>& cons, const Options& options,
                std::vector<std::pair<Int, Int>>& points)
        : a2_(a2), moduli_{a3, a2, a4}, g234_(std::gcd(std::gcd(a2, a3), a4)), cons_(cons), options_(options),
          points_(points) {}

    void run() {
        Int lo0 = 0, hi0 = 0;
        range0(lo0, hi0);
        if (lo0 > hi0) return;
        Int m = 0;
        for (Int cand : moduli_) {
            if (constrains(options_, cand)) {
                m = cand;
                break;
            }
        }
        if (m == 0) {
            for (Int x0 = lo0; x0 <= hi0; ++x0) with_x0(x0);
            return;
        }
        std::array<Lin, 2> live{};
        int n = 0;
        for (const auto& opt : options_) {
            if (!reduce_option(opt, m, live, n)) continue;
            // A congruence in x0 alone, directly or by eliminating x1.
            const Lin* x0_only = nullptr;
            Lin eliminated{};
            for (int t = 0; t < n; ++t) {
                if (live[static_cast<std::size_t>(t)].c1 == 0) x0_only = &live[static_cast<std::size_t>(t)];
            }
            if (x0_only == nullptr && n == 2) {
                const Lin e = live[1].c1 * live[0] - live[0].c1 * live[1];
                eliminated = {mod(e.c0, m), 0, mod(e.k, m)};
                if (eliminated.c0 != 0) {
                    x0_only = &eliminated;
                } else if (eliminated.k != 0) {
                    continue;
                }
            }
            if (x0_only != nullptr) {
                Int base = 0, step = 0;
                if (!solve_congruence(x0_only->c0, mod(-x0_only->k, m), m, base, step)) continue;
                for (Int x0 = lo0 + mod(base - lo0, step); x0 <= hi0; x0 += step) {
                    const Lin* f1 = nullptr;
                    for (int t = 0; t < n; ++t) {
                        if (live[static_cast<std::size_t>(t)].c1 != 0) f1 = &live[static_cast<std::size_t>(t)];
                    }
                    if (f1 == nullptr) {
                        with_x0(x0);
                    } else {
                        on_line(x0, *f1, live, n, m);
                    }
                }
                continue;
            }
            const Lin& f = live[0];
            if (f.c0 == 0) {
                Int lo1 = 0, hi1 = 0;
                range1(lo1, hi1);
                Int base = 0, step = 0;
                if (!solve_congruence(f.c1, mod(-f.k, m), m, base, step)) continue;
                for (Int x1 = lo1 + mod(base - lo1, step); x1 <= hi1; x1 += step) {
                    if (satisfies(live, n, m, 0, x1, true)) with_x1(x1);
                }
            } else {
                for (Int x0 = lo0; x0 <= hi0; ++x0) on_line(x0, f, live, n, m);
            }
        }
    }

private:
    // x0 bounds, relaxed over x1 in [x0, a2].
    void range0(Int& lo, Int& hi) const {
        lo = 1;
        hi = a2_;
        for (const auto& c : cons_) {
            if (c.c1 > 0) {
                clip(c.c0, c.c1 * a2_ + c.k, lo, hi);
            } else {
                clip(c.c0 + c.c1, c.k, lo, hi);
            }
        }
    }
    // x1 bounds, relaxed over x0 in [1, x1].
    void range1(Int& lo, Int& hi) const {
        lo = 1;
        hi = a2_;
        for (const auto& c : cons_) {
            if (c.c0 > 0) {
                clip(c.c0 + c.c1, c.k, lo, hi);
            } else {
                clip(c.c1, c.c0 + c.k, lo, hi);
            }
        }
    }

    // With one unknown ignored, checks that all live forms vanish modulo m.
    static bool satisfies(const std::array<Lin, 2>& live, int n, Int m, Int x0, Int x1, bool x1_only) {
        for (int t = 0; t < n; ++t) {
            const Lin& f = live[static_cast<std::size_t>(t)];
            if (x1_only && f.c0 != 0) continue;
            if (mod(f.at(x0, x1), m) != 0) return false;
        }
        return true;
    }

    void on_line(Int x0, const Lin& f, const std::array<Lin, 2>& live, int n, Int m) {
        if (std::gcd(x0, g234_) != 1) return;
        Int lo = x0, hi = a2_;
        for (const auto& c : cons_) clip(c.c1, c.c0 * x0 + c.k, lo, hi);
        Int base = 0, step = 0;
        if (lo > hi || !solve_congruence(f.c1, mod(-(f.c0 * x0 + f.k), m), m, base, step)) return;
        for (Int x1 = lo + mod(base - lo, step); x1 <= hi; x1 += step) {
            if (satisfies(live, n, m, x0, x1, false)) points_.emplace_back(x0, x1);
        }
    }

    void with_x0(Int x0) {
        if (std::gcd(x0, g234_) != 1) return;
        Int lo = x0, hi = a2_;
        for (const auto& c : cons_) clip(c.c1, c.c0 * x0 + c.k, lo, hi);
        if (lo > hi) return;
        for (Int m : {moduli_[0], moduli_[1], moduli_[2], x0}) {
            if (pin_var(options_, 1, x0, m, lo, hi, buf_)) {
                for (Int x1 : buf_) points_.emplace_back(x0, x1);
                return;
            }
        }
        for (Int x1 = lo; x1 <= hi; ++x1) points_.emplace_back(x0, x1);
    }

    void with_x1(Int x1) {
        if (std::gcd(x1, g234_) != 1) return;
        Int lo = 1, hi = x1;
        for (const auto& c : cons_) clip(c.c0, c.c1 * x1 + c.k, lo, hi);
        if (lo > hi) return;
        for (Int m : {moduli_[0], moduli_[1], moduli_[2], x1}) {
            if (pin_var(options_, 0, x1, m, lo, hi, buf_)) {
                for (Int x0 : buf_) points_.emplace_back(x0, x1);
                return;
            }
        }
        for (Int x0 = lo; x0 <= hi; ++x0) points_.emplace_back(x0, x1);
    }

    Int a2_;
    std::array<Int, 3> moduli_;
    Int g234_;
    const std::array<Lin, 4>& cons_;
    const Options& options_;
    std::vector<std::pair<Int, Int>>& points_;
    std::vector<Int> buf_;
};

/// Shaped search for all a2 in [a2_lo, a2_hi]: a2, a3, a4 are looped, a0 and a1 are
/// solved from the singleton quasi-smoothness congruences; every hit is fully classified.
template <typename Emit, typename Progress>
void shaped_range(const Bounds& b, Int a2_lo, Int a2_hi, Emit&& emit, Progress&& progress) {
    const Int A = b.max_a4;
    const Int D = b.max_d2;
    std::vector<std::pair<Int, Int>> points;
    for (Int a2 = a2_lo; a2 <= a2_hi; ++a2) {
        for (Int a3 = a2; a3 <= A; ++a3) {
            // I >= 1 forces a4 <= a2 + a3 - 1 for every shape.
            const Int a4_hi = std::min(A, a2 + a3 - 1);
            for (Int a4 = a3; a4 <= a4_hi; ++a4) {
                const std::array<Lin, 5> w = {Lin{1, 0, 0}, Lin{0, 1, 0}, Lin{0, 0, a2}, Lin{0, 0, a3}, Lin{0, 0, a4}};
                const Lin sum = w[0] + w[1] + w[2] + w[3] + w[4];
                for (const auto& sh : kShapes) {
                    const Lin d1 = w[static_cast<std::size_t>(sh.p)] + w[static_cast<std::size_t>(sh.q)];
                    const Lin d2 = w[static_cast<std::size_t>(sh.r)] + w[static_cast<std::size_t>(sh.s)];
                    // Constraints L >= 0: I - 1, D - d2, 2a4 - d2, d1 - a0 - a3.
                    const std::array<Lin, 4> cons = {sum - d1 - d2 - Lin{0, 0, 1}, Lin{0, 0, D} - d2,
                                                     Lin{0, 0, 2 * a4} - d2, d1 - w[0] - w[3]};
                    const auto options = singleton_options(d1, d2, w);
                    points.clear();
                    ShapeSolver(a2, a3, a4, cons, options, points).run();
                    std::sort(points.begin(), points.end());
                    points.erase(std::unique(points.begin(), points.end()), points.end());
                    for (const auto& [x0, x1] : points) {
                        if (x0 < 1 || x0 > x1 || x1 > a2) continue;
                        bool ok = true;
                        for (const auto& c : cons) ok = ok && c.at(x0, x1) >= 0;
                        if (!ok) continue;
                        const Candidate c({x0, x1, a2, a3, a4}, d1.at(x0, x1), d2.at(x0, x1));
                        if (is_del_pezzo(c)) {
                            emit(c);
                        }
                    }
                }
            }
        }
        progress(a2);
    }
}

/// Raw search for all a2 in [a2_lo, a2_hi]: every sorted weight tuple and every degree
/// pair with 1 <= d1 <= d2 <= max_d2 and d1 + d2 <= sum - 1.
template <typename Emit, typename Progress>
void exhaustive_range(const Bounds& b, Int a2_lo, Int a2_hi, Emit&& emit, Progress&& progress) {
    const Int A = b.max_a4;
    for (Int a2 = a2_lo; a2 <= a2_hi; ++a2) {
        for (Int a3 = a2; a3 <= A; ++a3) {
            for (Int a4 = a3; a4 <= A; ++a4) {
                for (Int a1 = 1; a1 <= a2; ++a1) {
                    for (Int a0 = 1; a0 <= a1; ++a0) {
                        const WeightSystem w({a0, a1, a2, a3, a4});
                        const Int sum = w.sum();
                        for (Int d1 = 1; 2 * d1 <= sum - 1; ++d1) {
                            const Int d2_hi = std::min(b.max_d2, sum - 1 - d1);
                            for (Int d2 = d1; d2 <= d2_hi; ++d2) {
                                const Candidate c(w, d1, d2);
                                if (is_del_pezzo(c)) {
                                    emit(c);
                                }
                            }
                        }
                    }
                }
            }
        }
        progress(a2);
    }
}

/// Straightforward shaped traversal (every sorted tuple, every shape), kept as a
/// reference for the congruence-solving search.
inline std::vector<Candidate> shaped_reference(const Bounds& b) {
    b.validate();
    std::vector<Candidate> out;
    const Int A = b.max_a4;
    for (Int a0 = 1; a0 <= A; ++a0)
        for (Int a1 = a0; a1 <= A; ++a1)
            for (Int a2 = a1; a2 <= A; ++a2)
                for (Int a3 = a2; a3 <= A; ++a3)
                    for (Int a4 = a3; a4 <= A; ++a4) {
                        const WeightSystem w({a0, a1, a2, a3, a4});
                        // Every four weights coprime.
                        bool coprime = true;
                        for (int i = 0; i < kNumWeights && coprime; ++i) {
                            coprime = subset_gcd(w, {i}) == 1;
                        }
                        if (!coprime) continue;
                        for (const auto& [d1, d2] : lemma1_shapes(w)) {
                            if (d2 > std::min(b.max_d2, 2 * a4) || w.sum() - d1 - d2 < 1 || d1 < a0 + a3) continue;
                            const Candidate c(w, d1, d2);
                            if (is_del_pezzo(c)) out.push_back(c);
                        }
                    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline double range_cost(Mode mode, Int A, Int a2) {
    double pairs = 0;
    for (Int a3 = a2; a3 <= A; ++a3) {
        const Int a4_hi = mode == Mode::shaped ? std::min(A, a2 + a3 - 1) : A;
        if (a4_hi >= a3) pairs += static_cast<double>(a4_hi - a3 + 1);
    }
    const double x = static_cast<double>(a2);
    return mode == Mode::shaped ? pairs * (1.0 + x) : pairs * x * x * static_cast<double>(A) * static_cast<double>(A);
}

}  // namespace detail

/// Splits a2 in [1, max_a4] into `jobs` contiguous ranges of similar estimated cost.
/// Trailing ranges may be empty.
inline std::vector<WorkRange> partition(const Bounds& b, unsigned jobs, Mode mode = Mode::shaped) {
    if (jobs < 1) {
        throw std::invalid_argument("jobs must be >= 1");
    }
    b.validate();
    const Int A = b.max_a4;
    std::vector<double> cost(static_cast<std::size_t>(A) + 1, 0.0);
    double total = 0;
    for (Int a2 = 1; a2 <= A; ++a2) {
        cost[static_cast<std::size_t>(a2)] = detail::range_cost(mode, A, a2);
        total += cost[static_cast<std::size_t>(a2)];
    }
    std::vector<WorkRange> out;
    Int next = 1;
    double acc = 0;
    for (unsigned j = 0; j < jobs; ++j) {
        WorkRange r{next, next - 1};
        if (j + 1 == jobs) {
            r.a2_hi = A;
        } else {
            const double target = total * static_cast<double>(j + 1) / static_cast<double>(jobs);
            while (r.a2_hi < A && (acc < target || r.empty())) {
                ++r.a2_hi;
                acc += cost[static_cast<std::size_t>(r.a2_hi)];
                if (acc >= target) break;
            }
        }
        if (r.a2_lo > A) {
            r = WorkRange{A + 1, A};
        }
        next = r.a2_hi + 1;
        out.push_back(r);
    }
    return out;
}

/// Solutions of one work range, sorted and duplicate-free.
inline std::vector<Candidate> enumerate_range(const Bounds& b, Mode mode, const WorkRange& r,
                                              const std::function<void(Int, std::size_t)>& progress = {}) {
    std::vector<Candidate> out;
    auto emit = [&](const Candidate& c) { out.push_back(c); };
    auto report = [&](Int a2) {
        if (progress) progress(a2, out.size());
    };
    if (!r.empty()) {
        if (mode == Mode::shaped) {
            detail::shaped_range(b, r.a2_lo, r.a2_hi, emit, report);
        } else {
            detail::exhaustive_range(b, r.a2_lo, r.a2_hi, emit, report);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Splits solutions into sporadic ones and family instances.
inline void split_by_family(EnumerationResult& r) {
    r.sporadic.clear();
    r.family_instances.clear();
    for (const auto& c : r.solutions) {
        auto m = match_tuple(c);
        if (m.empty()) {
            r.sporadic.push_back(c);
        } else {
            r.family_instances.push_back({c, std::move(m)});
        }
    }
}

/// All del Pezzo candidates with a4 <= max_a4 and d2 <= max_d2.
inline EnumerationResult enumerate(const Bounds& b, const EnumerateOptions& opts = {}) {
    b.validate();
    if (opts.mode == Mode::exhaustive && b.max_a4 > kExhaustiveLimit && !opts.allow_large_exhaustive) {
        throw std::length_error("exhaustive mode is limited to max_a4 <= " + std::to_string(kExhaustiveLimit) +
                                " unless explicitly overridden");
    }
    const auto ranges = partition(b, std::max(1U, opts.jobs), opts.mode);
    std::vector<std::vector<Candidate>> parts(ranges.size());
    std::mutex progress_mutex;
    auto run = [&](std::size_t idx) {
        std::function<void(Int, std::size_t)> progress;
        if (opts.on_progress) {
            progress = [&, idx](Int a2, std::size_t n) {
                const std::lock_guard lock(progress_mutex);
                opts.on_progress(ProgressEvent{idx, a2, n});
            };
        }
        parts[idx] = enumerate_range(b, opts.mode, ranges[idx], progress);
    };
    if (ranges.size() == 1) {
        run(0);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(ranges.size());
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            workers.emplace_back(run, i);
        }
        for (auto& t : workers) {
            t.join();
        }
    }
    EnumerationResult r;
    r.bounds = b;
    r.mode = opts.mode;
    for (auto& p : parts) {
        r.solutions.insert(r.solutions.end(), p.begin(), p.end());
    }
    std::sort(r.solutions.begin(), r.solutions.end());
    r.solutions.erase(std::unique(r.solutions.begin(), r.solutions.end()), r.solutions.end());
    if (opts.split_families) {
        split_by_family(r);
    }
    return r;
}

inline EnumerationResult enumerate(const Bounds& b, Mode mode) {
    EnumerateOptions opts;
    opts.mode = mode;
    return enumerate(b, opts);
}

/// Solutions that belong to no infinite family, sorted.
inline std::vector<Candidate> sporadic(const Bounds& b, Mode mode = Mode::shaped, unsigned jobs = 1) {
    EnumerateOptions opts;
    opts.mode = mode;
    opts.jobs = jobs;
    return enumerate(b, opts).sporadic;
}

}  // namespace wcidp

#endif  // WCIDP_ENUMERATOR_HPP
