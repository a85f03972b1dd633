#ifndef WCIDP_IO_HPP
#define WCIDP_IO_HPP

// File formats: tuple CSV, verdict JSONL, the exported family catalog and the
// frozen table of family sample assignments.

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "wcidp/classifier.hpp"
#include "wcidp/families.hpp"
#include "wcidp/types.hpp"

namespace wcidp {

inline constexpr const char* kCsvHeader = "a0,a1,a2,a3,a4,d1,d2";

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(line);
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

/// Strict decimal parse of a whole field.
inline bool parse_int(const std::string& s, Int& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace detail

/// Header, then one LF-terminated row per candidate, in the given order.
inline void write_csv(std::ostream& os, const std::vector<Candidate>& rows) {
    os << kCsvHeader << '\n';
    for (const auto& c : rows) {
        os << to_csv_row(c) << '\n';
    }
}

/// Parses tuple CSV (header required). Rows must hold seven positive integers.
inline std::vector<Candidate> read_csv(std::istream& is, const std::string& source = "<csv>") {
    std::vector<Candidate> out;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != kCsvHeader) {
                throw FormatError(source + ":" + std::to_string(line_no) + ": expected header '" + kCsvHeader + "'");
            }
            header_seen = true;
            continue;
        }
        const auto fields = detail::split(line, ',');
        std::array<Int, 7> v{};
        bool ok = fields.size() == 7;
        for (std::size_t i = 0; ok && i < 7; ++i) {
            ok = detail::parse_int(fields[i], v[i]) && v[i] > 0;
        }
        if (!ok) {
            throw FormatError(source + ":" + std::to_string(line_no) + ": malformed row '" + line + "'");
        }
        out.push_back(Candidate::from_seven(v));
    }
    if (!header_seen) {
        throw FormatError(source + ": empty file");
    }
    return out;
}

inline std::vector<Candidate> read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open " + path);
    }
    return read_csv(in, path);
}

inline nlohmann::json to_json(const Assignment& a) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : a) j[k] = v;
    return j;
}

inline nlohmann::json to_json(const FamilyMatch& m) {
    return {{"family", m.family_id}, {"params", to_json(m.assignment)}};
}

/// Full verdict for one candidate, as written on each JSONL line.
inline nlohmann::json verdict_json(const Candidate& c, const Verdict& v,
                                   const std::vector<FamilyMatch>* matches = nullptr) {
    nlohmann::json wf = nlohmann::json::array();
    for (const auto& x : v.wf.violations) {
        wf.push_back({{"condition", to_string(x.condition)}, {"omitted", x.omitted.indices()}, {"gcd", x.gcd_value}});
    }
    nlohmann::json qs = nlohmann::json::array();
    for (const auto& x : v.qs.violations) {
        qs.push_back({{"level", to_string(x.level)}, {"indices", x.indices.indices()}, {"detail", x.detail}});
    }
    const auto a = c.weights().values();
    nlohmann::json j = {
        {"a", std::vector<Int>(a.begin(), a.end())},
        {"d", {c.d1(), c.d2()}},
        {"amplitude", v.amplitude},
        {"linear_cone", v.is_linear_cone},
        {"well_formed", v.wf.passed},
        {"quasi_smooth", v.qs.passed},
        {"del_pezzo", v.is_del_pezzo},
        {"wf_violations", wf},
        {"qs_violations", qs},
    };
    if (matches != nullptr) {
        nlohmann::json fam = nlohmann::json::array();
        for (const auto& m : *matches) fam.push_back(to_json(m));
        j["families"] = fam;
    }
    return j;
}

/// Candidate stored in a verdict record.
inline Candidate candidate_from_json(const nlohmann::json& j) {
    const auto a = j.at("a").get<std::vector<Int>>();
    const auto d = j.at("d").get<std::vector<Int>>();
    if (a.size() != 5 || d.size() != 2) {
        throw FormatError("verdict record needs five weights and two degrees");
    }
    return Candidate({a[0], a[1], a[2], a[3], a[4]}, d[0], d[1]);
}

inline std::vector<Candidate> read_jsonl(std::istream& is) {
    std::vector<Candidate> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            out.push_back(candidate_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

/// One record per family: id, parameters, formulas, amplitude and constraints.
inline nlohmann::json catalog_json() {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& f : catalog()) {
        nlohmann::json weights = nlohmann::json::array();
        for (std::size_t k = 0; k < 5; ++k) weights.push_back(f.formulas[k].text());
        nlohmann::json cons = nlohmann::json::array();
        for (const auto& c : f.constraints) {
            cons.push_back({{"expr", c.expr.text()}, {"text", c.display}});
        }
        out.push_back({
            {"id", f.id},
            {"parameters", f.params},
            {"weights", weights},
            {"degrees", {f.formulas[5].text(), f.formulas[6].text()}},
            {"amplitude", f.amplitude.text()},
            {"constraints", cons},
        });
    }
    return out;
}

/// Textual form "a0=1;a1=3;nu=2" in declared parameter order.
inline std::string assignment_to_string(const FamilySpec& f, const Assignment& a) {
    std::string out;
    for (const auto& p : f.params) {
        if (!out.empty()) out += ';';
        out += p + "=" + std::to_string(a.at(p));
    }
    return out;
}

/// Parses "name=value" items separated by ';' or given as separate strings.
/// Accepts the Greek letter as an alias for nu.
inline Assignment parse_assignment(const std::vector<std::string>& items) {
    Assignment out;
    for (const auto& raw : items) {
        for (const auto& item : detail::split(raw, ';')) {
            const auto eq = item.find('=');
            Int value = 0;
            if (eq == std::string::npos || eq == 0 || !detail::parse_int(item.substr(eq + 1), value)) {
                throw std::invalid_argument("expected name=value, got '" + item + "'");
            }
            std::string name = item.substr(0, eq);
            if (name == "\xCE\xBD") name = "nu";
            if (!out.emplace(name, value).second) {
                throw std::invalid_argument("parameter '" + name + "' given twice");
            }
        }
    }
    return out;
}

inline constexpr const char* kSamplesHeader = "family,params,a0,a1,a2,a3,a4,d1,d2,amplitude";

struct FamilySample {
    int family_id = 0;
    Assignment assignment;
    Candidate candidate;
    Int amplitude = 0;
};

/// The frozen sample grid: the `per_family` smallest valid assignments of each family.
inline std::vector<FamilySample> generate_samples(std::size_t per_family = 10) {
    std::vector<FamilySample> out;
    for (const auto& f : catalog()) {
        for (const auto& a : smallest_valid_assignments(f.id, per_family)) {
            out.push_back({f.id, a, instantiate(f.id, a), amplitude_formula(f.id, a)});
        }
    }
    return out;
}

inline void write_samples(std::ostream& os, const std::vector<FamilySample>& samples) {
    os << kSamplesHeader << '\n';
    for (const auto& s : samples) {
        os << s.family_id << ',' << assignment_to_string(family(s.family_id), s.assignment) << ','
           << to_csv_row(s.candidate) << ',' << s.amplitude << '\n';
    }
}

inline std::vector<FamilySample> read_samples(std::istream& is, const std::string& source = "<samples>") {
    std::vector<FamilySample> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != kSamplesHeader) throw FormatError(source + ": bad header");
            continue;
        }
        const auto fields = detail::split(line, ',');
        std::array<Int, 9> v{};  // family, then a0..d2, amplitude
        bool ok = fields.size() == 10 && detail::parse_int(fields[0], v[0]);
        for (std::size_t i = 2; ok && i < 10; ++i) ok = detail::parse_int(fields[i], v[i - 1]);
        if (!ok) throw FormatError(source + ":" + std::to_string(line_no) + ": malformed row '" + line + "'");
        FamilySample s{static_cast<int>(v[0]), parse_assignment({fields[1]}),
                       Candidate::from_seven({v[1], v[2], v[3], v[4], v[5], v[6], v[7]}), v[8]};
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<FamilySample> read_samples_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return read_samples(in, path);
}

}  // namespace wcidp

#endif  // WCIDP_IO_HPP
