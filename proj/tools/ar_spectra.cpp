// ar-spectra: command-line front end for the arspec library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <arspec/arspec.hpp>

namespace {

using namespace arspec;
using json = nlohmann::ordered_json;

enum exit_code : int { ok = 0, verification_failed = 1, usage = 2, cap = 3 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct cli_config {
    std::optional<unsigned> n;
    std::string which = "A";
    std::string format = "plain";
    std::string output;
    std::optional<unsigned> max_n;
    std::optional<std::size_t> oracle_cap;
    unsigned precision = 12;

    // matrix
    std::string variant = "raw";
    std::string construction = "recursive";
    // sigma
    std::string method = "recursive";
    bool as_permutation = false;
    // thue-morse
    std::optional<unsigned> word;
    bool sigma_word = false;
    std::optional<unsigned> j;
    // verify
    unsigned n_max = 6;
    std::string only;
    bool inject_fault = false;
};

limits effective_limits(const cli_config& cfg) {
    limits lim;
    if (const char* env = std::getenv("AR_SPECTRA_NMAX"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(env, &used);
            if (used != std::string(env).size() || v > 30) throw std::invalid_argument("range");
            lim.max_n = static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw usage_error("AR_SPECTRA_NMAX must be an integer in [0, 30]");
        }
    }
    if (cfg.max_n) lim.max_n = *cfg.max_n;
    if (cfg.oracle_cap) lim.oracle_max_dim = *cfg.oracle_cap;
    return lim;
}

family parse_family(const std::string& s) { return s == "B" ? family::B : family::A; }

unsigned require_n(const cli_config& cfg) {
    if (!cfg.n) throw usage_error("--n is required");
    return *cfg.n;
}

// Output goes to --output when given, else stdout.
class output_sink {
public:
    explicit output_sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw usage_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void write_json(std::ostream& os, const json& doc) { os << doc.dump(2) << '\n'; }

int cmd_matrix(const cli_config& cfg) {
    const unsigned n = require_n(cfg);
    const limits lim = effective_limits(cfg);
    const family f = parse_family(cfg.which);
    check_dense_cap(n, lim, "matrix");

    auto raw = [&] {
        return cfg.construction == "entrywise" ? build_entrywise<checked_int>(f, n, lim)
                                               : build_recursive<checked_int>(f, n, lim);
    };
    small_matrix m;
    if (cfg.variant == "raw")
        m = raw();
    else if (cfg.variant == "conjugated")
        m = conjugate_by_zeta(raw());
    else if (cfg.variant == "blocked")
        m = permute_conjugate(conjugate_by_zeta(raw()), std::span<const subset_mask>(sigma_recursive(n, lim).values));
    else if (cfg.variant == "U")
        m = build_zeta<checked_int>(n, lim);
    else
        m = build_mobius<checked_int>(n, lim);

    output_sink sink(cfg.output);
    if (cfg.format == "structured") {
        json doc;
        doc["command"] = "matrix";
        doc["n"] = n;
        doc["matrix"] = cfg.which;
        doc["variant"] = cfg.variant;
        doc["dim"] = m.dim();
        auto rows = json::array();
        for (std::size_t i = 0; i < m.dim(); ++i) {
            auto row = json::array();
            for (auto v : m.row(i)) row.push_back(v.value());
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
        write_json(sink.stream(), doc);
    } else {
        write_matrix(sink.stream(), m);
    }
    return ok;
}

int cmd_spectrum(const cli_config& cfg) {
    const unsigned n = require_n(cfg);
    const limits lim = effective_limits(cfg);
    check_dense_cap(n, lim, "spectrum");
    if (cfg.precision == 0) throw usage_error("--precision must be positive");
    const auto rep = spectrum(n, parse_family(cfg.which), cfg.precision);
    output_sink sink(cfg.output);
    if (cfg.format == "structured")
        write_json(sink.stream(), spectrum_json(rep));
    else
        write_spectrum_text(sink.stream(), rep);
    return ok;
}

int cmd_sigma(const cli_config& cfg) {
    const unsigned n = require_n(cfg);
    const limits lim = effective_limits(cfg);
    const sigma_table t = cfg.method == "closed" ? sigma_closed_form_table(n, lim) : sigma_recursive(n, lim);
    output_sink sink(cfg.output);
    auto& os = sink.stream();
    if (cfg.format == "structured") {
        json doc;
        doc["command"] = "sigma";
        doc["n"] = n;
        doc["method"] = cfg.method;
        if (cfg.as_permutation) {
            doc["permutation"] = sigma_as_permutation(t);
        } else {
            auto table = json::array();
            for (std::size_t p = 0; p < t.values.size(); p += 2) {
                auto pair = json::array({to_string(t.values[p])});
                if (p + 1 < t.values.size()) pair.push_back(to_string(t.values[p + 1]));
                table.push_back(std::move(pair));
            }
            doc["table"] = std::move(table);
        }
        write_json(os, doc);
    } else if (cfg.as_permutation) {
        const auto perm = sigma_as_permutation(t);
        for (std::size_t p = 0; p < perm.size(); ++p) os << (p ? " " : "") << perm[p];
        os << '\n';
    } else {
        write_sigma_table(os, t);
    }
    return ok;
}

int cmd_thue_morse(const cli_config& cfg) {
    binary_word w;
    if (cfg.sigma_word) {
        const unsigned n = require_n(cfg);
        if (!cfg.j) throw usage_error("--sigma-word needs --j");
        if (*cfg.j < 1 || *cfg.j > n) throw usage_error("--j must lie in [1, n]");
        const limits lim = effective_limits(cfg);
        w = sigma_word(sigma_recursive(n, lim), *cfg.j);
    } else {
        if (!cfg.word) throw usage_error("thue-morse needs --word <m> or --sigma-word");
        const limits lim = effective_limits(cfg);
        if (*cfg.word > std::max(lim.max_n, 20u)) throw resource_limit_error("thue-morse: --word exceeds cap");
        w = thue_morse_word(*cfg.word);
    }
    output_sink sink(cfg.output);
    if (cfg.format == "structured") {
        json doc;
        doc["command"] = "thue-morse";
        doc["word"] = w.str();
        write_json(sink.stream(), doc);
    } else {
        sink.stream() << w.str() << '\n';
    }
    return ok;
}

int cmd_verify(const cli_config& cfg) {
    suite_options opt;
    opt.n_max = cfg.n_max;
    opt.only = cfg.only;
    opt.lim = effective_limits(cfg);
    if (!opt.only.empty()) {
        const auto& fams = suite_claim_families();
        if (std::find(fams.begin(), fams.end(), opt.only) == fams.end())
            throw usage_error("unknown claim family for --only: " + opt.only);
    }
    if (cfg.inject_fault)
        opt.perturb = [](small_matrix& m, family, unsigned) { m(0, 0) += checked_int{1}; };

    output_sink sink(cfg.output);
    auto& os = sink.stream();
    const bool structured = cfg.format == "structured";
    const auto outcomes = run_verification_suite(opt, [&](const verification_outcome& v) {
        if (!structured) os << to_string(v) << '\n' << std::flush;
    });
    bool all = true;
    for (const auto& v : outcomes) all = all && v.passed;
    if (structured) {
        json doc;
        doc["command"] = "verify";
        doc["n_max"] = cfg.n_max;
        auto list = json::array();
        for (const auto& v : outcomes) {
            json item;
            item["claim"] = v.claim;
            item["n"] = v.n;
            item["passed"] = v.passed;
            if (v.witness) item["witness"] = *v.witness;
            list.push_back(std::move(item));
        }
        doc["outcomes"] = std::move(list);
        doc["passed"] = all;
        write_json(os, doc);
    }
    return all ? ok : verification_failed;
}

void add_common(CLI::App* sub, cli_config& cfg, bool with_n) {
    if (with_n) sub->add_option("--n", cfg.n, "Ambient size n");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"plain", "structured"}));
    sub->add_option("--output,-o", cfg.output, "Write to this file instead of stdout");
    sub->add_option("--max-n", cfg.max_n, "Override the dense-matrix cap (default 14 or $AR_SPECTRA_NMAX)");
    sub->add_option("--oracle-cap", cfg.oracle_cap, "Largest matrix dimension for brute-force oracles");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructions, spectra and structural checks for the A_n / B_n matrix families"};
    app.require_subcommand(1);
    cli_config cfg;

    auto* matrix = app.add_subcommand("matrix", "Print A_n, B_n, their conjugates, or the zeta matrices");
    add_common(matrix, cfg, true);
    matrix->add_option("--which", cfg.which, "A or B")->check(CLI::IsMember({"A", "B"}));
    matrix->add_option("--variant", cfg.variant, "raw | conjugated | blocked | U | U-inverse")
        ->check(CLI::IsMember({"raw", "conjugated", "blocked", "U", "U-inverse"}));
    matrix->add_option("--construction", cfg.construction, "recursive | entrywise")
        ->check(CLI::IsMember({"recursive", "entrywise"}));

    auto* spec = app.add_subcommand("spectrum", "Eigenvalue pairs per composition and the characteristic polynomial");
    add_common(spec, cfg, true);
    spec->add_option("--which", cfg.which, "A or B")->check(CLI::IsMember({"A", "B"}));
    spec->add_option("--precision", cfg.precision, "Significant digits of the decimal approximations");

    auto* sigma = app.add_subcommand("sigma", "Print the pairing permutation table");
    add_common(sigma, cfg, true);
    sigma->add_option("--method", cfg.method, "recursive | closed")->check(CLI::IsMember({"recursive", "closed"}));
    sigma->add_flag("--as-permutation", cfg.as_permutation, "Print position images as indices");

    auto* tm = app.add_subcommand("thue-morse", "Thue-Morse words and the membership words of the table");
    add_common(tm, cfg, true);
    tm->add_option("--word", cfg.word, "Print the doubling word w_m");
    tm->add_flag("--sigma-word", cfg.sigma_word, "Print the membership word of --j down the table for --n");
    tm->add_option("--j", cfg.j, "Element whose membership word to print");

    auto* verify = app.add_subcommand("verify", "Run the structural and oracle checks");
    add_common(verify, cfg, false);
    verify->add_option("--n-max", cfg.n_max, "Largest n to check");
    verify->add_option("--only", cfg.only, "Restrict to one claim family");
    verify->add_flag("--inject-fault", cfg.inject_fault, "Corrupt one conjugated entry (negative control)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*matrix) return cmd_matrix(cfg);
        if (*spec) return cmd_spectrum(cfg);
        if (*sigma) return cmd_sigma(cfg);
        if (*tm) return cmd_thue_morse(cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
