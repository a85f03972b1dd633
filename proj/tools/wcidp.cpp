// wcidp: command-line front end for the classifier, the family catalog and the
// enumerator.
//
// Exit status: 0 success or affirmative answer, 1 verification mismatch or I/O
// failure, 2 usage error, 3 negative classification or invalid family parameters.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wcidp/wcidp.hpp"

#ifndef WCIDP_DATA_DIR
#define WCIDP_DATA_DIR "data"
#endif

namespace {

using namespace wcidp;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kNegative = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string data_path(const std::string& name) { return std::string(WCIDP_DATA_DIR) + "/" + name; }

unsigned default_jobs() {
    if (const char* env = std::getenv("WCIDP_JOBS")) {
        Int v = 0;
        if (detail::parse_int(env, v) && v >= 1 && v <= 1024) {
            return static_cast<unsigned>(v);
        }
        std::cerr << "warning: ignoring WCIDP_JOBS='" << env << "'\n";
    }
    return 1;
}

std::array<Int, 7> parse_seven(const std::vector<std::string>& args) {
    if (args.size() != 7) {
        throw UsageError("expected seven integers a0 a1 a2 a3 a4 d1 d2, got " + std::to_string(args.size()));
    }
    std::array<Int, 7> v{};
    for (std::size_t i = 0; i < 7; ++i) {
        if (!detail::parse_int(args[i], v[i]) || v[i] <= 0) {
            throw UsageError("'" + args[i] + "' is not a positive integer");
        }
    }
    return v;
}

// Output sink: a file when a path is given, standard output otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw std::ios_base::failure("cannot open " + path + " for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void finish(const std::string& path) {
        stream().flush();
        if (!stream()) throw std::ios_base::failure("write failed" + (path.empty() ? std::string() : " for " + path));
    }

private:
    std::ofstream file_;
};

// ---- check ----------------------------------------------------------------

struct CheckArgs {
    std::vector<std::string> tuple;
    bool explain = false;
    bool require_nonempty = false;
    bool json = false;
};

int cmd_check(const CheckArgs& args) {
    const Candidate c = Candidate::from_seven(parse_seven(args.tuple));
    const Verdict v = classify(c);
    const bool semigroup_ok = !args.require_nonempty || degrees_in_weight_semigroup(c);
    const bool yes = v.is_del_pezzo && semigroup_ok;
    if (args.json) {
        const auto matches = match_tuple(c);
        auto j = verdict_json(c, v, &matches);
        if (args.require_nonempty) j["degrees_in_weight_semigroup"] = degrees_in_weight_semigroup(c);
        std::cout << j.dump() << '\n';
        return yes ? kOk : kNegative;
    }
    if (yes) {
        std::cout << "del Pezzo: yes, I=" << v.amplitude << '\n';
    } else if (!v.is_del_pezzo) {
        std::cout << "rejected: " << rejection_reason(c, v) << '\n';
    } else {
        std::cout << "rejected: a degree is not in the semigroup generated by the weights\n";
    }
    if (args.explain) {
        std::cout << "tuple: " << to_string(c) << '\n';
        std::cout << "amplitude: I=" << v.amplitude << '\n';
        if (const auto w = linear_cone_witness(c)) {
            std::cout << "linear cone: d" << w->first << " = a" << w->second << '\n';
        } else {
            std::cout << "linear cone: no\n";
        }
        std::cout << "well-formed: " << (v.wf.passed ? "yes" : "no") << '\n';
        for (const auto& x : v.wf.violations) {
            std::cout << "  " << to_string(x.condition) << " condition fails: omitted " << to_string(x.omitted)
                      << ", gcd " << x.gcd_value << '\n';
        }
        std::cout << "quasi-smooth: " << (v.qs.passed ? "yes" : "no") << '\n';
        for (const auto& x : v.qs.violations) {
            std::cout << "  " << to_string(x.level) << ' ' << to_string(x.indices) << ": " << x.detail << '\n';
        }
        if (args.require_nonempty) {
            std::cout << "degrees in weight semigroup: " << (degrees_in_weight_semigroup(c) ? "yes" : "no") << '\n';
        }
        const auto matches = match_tuple(c);
        if (matches.empty()) {
            std::cout << "families: none\n";
        }
        for (const auto& m : matches) {
            std::cout << "family " << m.family_id << ": " << assignment_to_string(family(m.family_id), m.assignment)
                      << '\n';
        }
    }
    return yes ? kOk : kNegative;
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateArgs {
    Int max_a4 = 0;
    std::optional<Int> max_d2;
    std::string mode = "shaped";
    bool exclude_families = false;
    std::string format = "csv";
    unsigned jobs = 1;
    std::string output;
    bool allow_large_exhaustive = false;
    bool progress = false;
};

Bounds make_bounds(Int max_a4, const std::optional<Int>& max_d2) {
    Bounds b{max_a4, max_d2.value_or(2 * max_a4)};
    try {
        b.validate();
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return b;
}

EnumerateOptions make_options(Mode mode, unsigned jobs, bool allow_large, bool progress) {
    EnumerateOptions opts;
    opts.mode = mode;
    opts.jobs = jobs;
    opts.allow_large_exhaustive = allow_large;
    if (progress) {
        opts.on_progress = [](const ProgressEvent& e) {
            std::cerr << "progress: worker " << e.worker << " finished a2=" << e.a2 << ", " << e.solutions
                      << " solutions\n";
        };
    }
    return opts;
}

int cmd_enumerate(const EnumerateArgs& args) {
    const Bounds b = make_bounds(args.max_a4, args.max_d2);
    const Mode mode = args.mode == "exhaustive" ? Mode::exhaustive : Mode::shaped;
    if (mode == Mode::exhaustive && b.max_a4 > kExhaustiveLimit && !args.allow_large_exhaustive) {
        throw UsageError("exhaustive mode is limited to --max-a4 <= " + std::to_string(kExhaustiveLimit) +
                         "; pass --allow-large-exhaustive to override");
    }
    const auto opts = make_options(mode, args.jobs, args.allow_large_exhaustive, args.progress);
    const EnumerationResult r = enumerate(b, opts);
    const auto& rows = args.exclude_families ? r.sporadic : r.solutions;

    Sink sink(args.output);
    auto& os = sink.stream();
    if (args.format == "csv") {
        write_csv(os, rows);
    } else {
        std::map<Candidate, const std::vector<FamilyMatch>*> matches;
        for (const auto& fi : r.family_instances) matches.emplace(fi.candidate, &fi.matches);
        const std::vector<FamilyMatch> none;
        for (const auto& c : rows) {
            const auto it = matches.find(c);
            os << verdict_json(c, classify(c), it == matches.end() ? &none : it->second).dump() << '\n';
        }
    }
    sink.finish(args.output);
    std::cerr << rows.size() << (args.exclude_families ? " sporadic" : "") << " solutions (a4 <= " << b.max_a4
              << ", d2 <= " << b.max_d2 << ", " << to_string(mode) << " mode)\n";
    return kOk;
}

// ---- families -------------------------------------------------------------

int cmd_families_list() {
    for (const auto& f : catalog()) {
        std::cout << std::setw(2) << f.id << "  " << formula_text(f) << "  I=" << f.amplitude.text();
        std::string conds;
        for (const auto& c : f.constraints) {
            if (!conds.empty()) conds += "; ";
            conds += c.display;
        }
        std::cout << "  [" << conds << "]\n";
    }
    return kOk;
}

int parse_family_id(const std::string& text) {
    Int id = 0;
    if (!detail::parse_int(text, id) || id < 1 || id > kNumFamilies) {
        throw UsageError("unknown family id '" + text + "' (expected 1.." + std::to_string(kNumFamilies) + ")");
    }
    return static_cast<int>(id);
}

int cmd_families_instantiate(const std::string& id_text, const std::vector<std::string>& params) {
    const int id = parse_family_id(id_text);
    Assignment a;
    try {
        a = parse_assignment(params);
        (void)check_params(id, a);  // missing or extra names are usage errors
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    try {
        const Candidate c = instantiate(id, a);
        std::cout << to_csv_row(c) << '\n';
        return kOk;
    } catch (const InvalidParameters& e) {
        std::cout << "invalid parameters for family " << id << ": constraint \"" << e.reason() << "\" violated\n";
        return kNegative;
    } catch (const std::overflow_error& e) {
        std::cout << e.what() << '\n';
        return kNegative;
    }
}

int cmd_families_match(const std::vector<std::string>& tuple) {
    const Candidate c = Candidate::from_seven(parse_seven(tuple));
    const auto matches = match_tuple(c);
    if (matches.empty()) {
        std::cout << "no family matches " << to_string(c) << '\n';
        return kNegative;
    }
    for (const auto& m : matches) {
        std::cout << "family " << m.family_id << ": " << assignment_to_string(family(m.family_id), m.assignment)
                  << '\n';
    }
    return kOk;
}

int cmd_families_export(const std::string& output) {
    Sink sink(output);
    sink.stream() << catalog_json().dump(2) << '\n';
    sink.finish(output);
    return kOk;
}

int cmd_families_samples(const std::string& output, std::size_t per_family) {
    Sink sink(output);
    write_samples(sink.stream(), generate_samples(per_family));
    sink.finish(output);
    return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    Int max_a4 = 0;
    std::optional<Int> max_d2;
    std::string table2 = data_path("table2.csv");
    std::string samples = data_path("table1_samples.csv");
    unsigned jobs = 1;
    bool progress = false;
};

int cmd_verify(const VerifyArgs& args) {
    const Bounds b = make_bounds(args.max_a4, args.max_d2);
    std::vector<Candidate> table2;
    std::vector<FamilySample> samples;
    try {
        table2 = read_csv_file(args.table2);
        samples = read_samples_file(args.samples);
    } catch (const std::exception& e) {
        std::cerr << "error: missing or unreadable asset: " << e.what() << '\n';
        return kUsage;
    }
    std::vector<std::string> diffs;

    // Every sporadic table row is a del Pezzo that lies in no family.
    for (const auto& c : table2) {
        const Verdict v = classify(c);
        if (!v.is_del_pezzo) diffs.push_back("table2 row " + to_string(c) + " rejected: " + rejection_reason(c, v));
        if (in_some_family(c)) diffs.push_back("table2 row " + to_string(c) + " lies in a family");
    }
    // Every frozen family sample instantiates as recorded and is a del Pezzo with the tabulated I.
    for (const auto& s : samples) {
        const std::string tag = "family " + std::to_string(s.family_id) + " sample " +
                                assignment_to_string(family(s.family_id), s.assignment);
        try {
            const Candidate c = instantiate(s.family_id, s.assignment);
            if (c != s.candidate) diffs.push_back(tag + ": instantiates to " + to_string(c));
            const Verdict v = classify(c);
            if (!v.is_del_pezzo) diffs.push_back(tag + ": rejected: " + rejection_reason(c, v));
            if (v.amplitude != amplitude_formula(s.family_id, s.assignment) || v.amplitude != s.amplitude) {
                diffs.push_back(tag + ": amplitude " + std::to_string(v.amplitude) + " differs from the I column");
            }
        } catch (const std::exception& e) {
            diffs.push_back(tag + ": " + e.what());
        }
    }
    // Sporadic search against the table restricted to the bounds.
    std::set<Candidate> expected;
    for (const auto& c : table2) {
        if (c.a(4) <= b.max_a4 && c.d2() <= b.max_d2) expected.insert(c);
    }
    const auto found_list = enumerate(b, make_options(Mode::shaped, args.jobs, false, args.progress)).sporadic;
    const std::set<Candidate> found(found_list.begin(), found_list.end());
    for (const auto& c : expected) {
        if (!found.count(c)) diffs.push_back("missing from search: " + to_csv_row(c));
    }
    for (const auto& c : found) {
        if (!expected.count(c)) diffs.push_back("not in table2: " + to_csv_row(c));
    }

    for (const auto& d : diffs) std::cout << "DIFF " << d << '\n';
    std::cout << (diffs.empty() ? "PASS" : "FAIL") << ": " << found.size() << " sporadic found, " << expected.size()
              << " expected within a4 <= " << b.max_a4 << ", d2 <= " << b.max_d2 << "; " << table2.size()
              << " table2 rows and " << samples.size() << " family samples checked\n";
    return diffs.empty() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classifier and enumerator for codimension 2 weighted complete intersection del Pezzo surfaces"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Classify one tuple a0 a1 a2 a3 a4 d1 d2");
    c->add_option("tuple", check.tuple, "Seven positive integers")->required()->expected(7);
    c->add_flag("--explain", check.explain, "Print every violated condition and family matches");
    c->add_flag("--require-nonempty", check.require_nonempty,
                "Also require both degrees to lie in the semigroup of all weights");
    c->add_flag("--json", check.json, "Print the verdict as one JSON object");

    EnumerateArgs en;
    en.jobs = default_jobs();
    auto* e = app.add_subcommand("enumerate", "List all del Pezzo tuples within bounds");
    e->add_option("--max-a4", en.max_a4, "Largest weight bound")->required()->check(CLI::PositiveNumber);
    e->add_option("--max-d2", en.max_d2, "Largest degree bound (default 2*max-a4)");
    e->add_option("--mode", en.mode, "Search mode")->check(CLI::IsMember({"shaped", "exhaustive"}));
    e->add_flag("--exclude-families", en.exclude_families, "Only tuples lying in no infinite family");
    e->add_option("--format", en.format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
    e->add_option("--jobs", en.jobs, "Worker threads (default from WCIDP_JOBS, else 1)")->check(CLI::Range(1, 1024));
    e->add_option("--output,-o", en.output, "Output file (default standard output)");
    e->add_flag("--allow-large-exhaustive", en.allow_large_exhaustive, "Permit exhaustive mode above max-a4 60");
    e->add_flag("--progress", en.progress, "Report progress on standard error");

    auto* fam = app.add_subcommand("families", "Infinite family catalog");
    fam->require_subcommand(1);
    fam->add_subcommand("list", "Print the catalog");
    std::string inst_id;
    std::vector<std::string> inst_params;
    auto* fi = fam->add_subcommand("instantiate", "Substitute parameters, e.g. 'instantiate 15 t=2'");
    fi->add_option("id", inst_id, "Family id")->required();
    fi->add_option("params", inst_params, "name=value pairs")->required();
    std::vector<std::string> match_tuple_args;
    auto* fm = fam->add_subcommand("match", "Find every family containing a tuple");
    fm->add_option("tuple", match_tuple_args, "Seven positive integers")->required()->expected(7);
    std::string export_out;
    auto* fx = fam->add_subcommand("export", "Write the catalog as JSON");
    fx->add_option("--output,-o", export_out, "Output file (default standard output)");
    std::string samples_out;
    std::size_t per_family = 10;
    auto* fs = fam->add_subcommand("samples", "Write the smallest valid assignments of every family as CSV");
    fs->add_option("--output,-o", samples_out, "Output file (default standard output)");
    fs->add_option("--per-family", per_family, "Assignments per family")->check(CLI::PositiveNumber);

    VerifyArgs ver;
    ver.jobs = default_jobs();
    auto* v = app.add_subcommand("verify", "Compare the sporadic search with the shipped tables");
    v->add_option("--max-a4", ver.max_a4, "Largest weight bound")->required()->check(CLI::PositiveNumber);
    v->add_option("--max-d2", ver.max_d2, "Largest degree bound (default 2*max-a4)");
    v->add_option("--table2", ver.table2, "Sporadic table CSV");
    v->add_option("--samples", ver.samples, "Family sample CSV");
    v->add_option("--jobs", ver.jobs, "Worker threads")->check(CLI::Range(1, 1024));
    v->add_flag("--progress", ver.progress, "Report progress on standard error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::CallForAllHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kUsage;
    }

    try {
        if (c->parsed()) return cmd_check(check);
        if (e->parsed()) return cmd_enumerate(en);
        if (v->parsed()) return cmd_verify(ver);
        if (fam->parsed()) {
            if (fi->parsed()) return cmd_families_instantiate(inst_id, inst_params);
            if (fm->parsed()) return cmd_families_match(match_tuple_args);
            if (fx->parsed()) return cmd_families_export(export_out);
            if (fs->parsed()) return cmd_families_samples(samples_out, per_family);
            return cmd_families_list();
        }
    } catch (const UsageError& err) {
        std::cerr << "usage error: " << err.what() << "\n\n" << app.help();
        return kUsage;
    } catch (const std::ios_base::failure& err) {
        std::cerr << "I/O error: " << err.what() << '\n';
        return kMismatch;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}
