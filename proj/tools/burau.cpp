// Command-line front end: every command prints one JSON report line (or a
// readable summary with --human). Exit codes: 0 pass, 1 domain failure, 2 usage.

#include "burau/burau.hpp"
#include "burau/density.hpp"
#include "burau/errors.hpp"
#include "burau/json_io.hpp"
#include "burau/kernels.hpp"
#include "burau/liealg.hpp"
#include "burau/search.hpp"
#include "burau/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace burau;
using io::json;

namespace {

// Bad input (unreadable file, malformed JSON, bad expression): exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Status { Pass, Fail, Partial };

struct Report {
    Status status = Status::Pass;
    json payload = json::object();
    std::string summary;
    std::string human;  // extra text for --human
};

const char* status_name(Status s)
{
    return s == Status::Pass ? "pass" : s == Status::Fail ? "fail" : "partial";
}

struct Common {
    int n = 5;
    std::vector<std::string> lets;
    bool human = false;
};

Bindings bindings_for(const Common& c)
{
    Bindings b = builtin_bindings(c.n);
    for (const auto& let : c.lets) {
        const auto eq = let.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("--let expects NAME=word, got '" + let + "'");
        const std::string name = let.substr(0, eq);
        b[name] = parse_word(let.substr(eq + 1), c.n, b).named(name);
    }
    return b;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    try {
        json j = json::parse(in);
        // Accept a whole command report and use its payload.
        if (j.is_object() && j.contains("payload") && j.contains("command"))
            j = j["payload"];
        return j;
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

template <class F>
auto decode(const std::string& what, F&& f)
{
    try {
        return f();
    } catch (const burau::ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(what + ": " + e.what());
    }
}

LaurentMatrix read_matrix(const std::string& path)
{
    json j = read_json_file(path);
    if (j.is_object() && j.contains("matrix") && j["matrix"].is_object())
        j = j["matrix"];
    return decode(path, [&] { return io::laurent_matrix_from_json(j); });
}

json depth_json(const Depth& d)
{
    json v = d.infinite() ? json("infinity") : json(d.value);
    return {{"depth", v}, {"lower_bound", d.lower_bound}, {"text", d.to_string()}};
}

std::string trunc_text(const TruncMatrix& m)
{
    std::ostringstream os;
    for (int d = 0; d < m.precision(); ++d)
        os << "s^" << d << ": " << to_string(m.plane(d)) << "\n";
    return os.str();
}

// Linear combinations of X_ij and Y_ijk such as "2 X25 + X45" or "X24 - X13".
GradedElement parse_combination(const std::string& text, int n, std::optional<int> degree)
{
    std::size_t pos = 0;
    auto ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw UsageError("element expression '" + text + "' at " + std::to_string(pos) + ": " + what);
    };
    auto index = [&]() -> int {
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            return text[pos++] - '0';
        if (pos >= text.size() || text[pos] != '(')
            fail("expected index");
        const std::size_t close = text.find(')', pos);
        if (close == std::string::npos)
            fail("unterminated index");
        const int v = std::stoi(text.substr(pos + 1, close - pos - 1));
        pos = close + 1;
        return v;
    };
    IntMatrix sum(n, n);
    int base_degree = 0;
    bool first = true;
    while (true) {
        ws();
        if (pos >= text.size())
            break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        long long coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                coeff = coeff * 10 + (text[pos++] - '0');
            ws();
            if (pos < text.size() && text[pos] == '*')
                ++pos;
            ws();
        }
        if (pos >= text.size())
            fail("expected X or Y");
        const char g = text[pos++];
        GradedElement term;
        if (g == 'X') {
            const int i = index(), j = index();
            term = gen_x(i, j, n);
        } else if (g == 'Y') {
            const int i = index(), j = index(), k = index();
            term = gen_y(i, j, k, n);
        } else {
            --pos;
            fail("expected X or Y");
        }
        if (base_degree != 0 && base_degree != term.degree)
            fail("mixed X and Y terms");
        base_degree = term.degree;
        sum += term.matrix.scaled(BigInt(sign * coeff));
        first = false;
    }
    if (first)
        fail("empty expression");
    return {degree.value_or(base_degree), sum};
}

GradedElement read_element(const std::string& text, int n, std::optional<int> degree)
{
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (!trimmed.empty() && trimmed[0] == '{') {
        GradedElement g = decode("element", [&] { return io::graded_from_json(json::parse(trimmed)); });
        if (degree)
            g.degree = *degree;
        return g;
    }
    try {
        return parse_combination(text, n, degree);
    } catch (const burau::IndexOutOfRange& e) {
        throw UsageError(e.what());
    }
}

// A command input given either as a word or as a matrix file.
struct Source {
    std::string word;
    std::string matrix;
    bool has_word = false;

    void add(CLI::App* cmd)
    {
        auto* w = cmd->add_option("--word", word, "braid word");
        auto* m = cmd->add_option("--matrix", matrix, "JSON matrix file");
        w->excludes(m);
        w->each([this](const std::string&) { has_word = true; });
    }
};

json word_payload(const BraidWord& w)
{
    return io::word_to_json(w);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Burau representation toolkit: exact evaluation, s-adic depth, graded Lie algebra, approximation"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--n", common.n, "strand count")->check(CLI::Range(2, 64));
    app.add_option("--let", common.lets, "bind NAME=word (repeatable; ALPHA, W3, DELTA are built in)");
    app.add_flag("--human", common.human, "readable output instead of JSON");

    std::function<Report()> action;
    std::string command;
    auto sub = [&](const std::string& name, const std::string& help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("--n", common.n, "strand count")->check(CLI::Range(2, 64));
        s->add_option("--let", common.lets, "bind NAME=word");
        s->add_flag("--human", common.human, "readable output");
        return s;
    };

    // eval
    std::string eval_word;
    int eval_truncate = 0;
    {
        auto* s = sub("eval", "Burau matrix of a word");
        s->add_option("--word", eval_word, "braid word")->required();
        s->add_option("--truncate", eval_truncate, "evaluate in Z[s]/(s^N)")->check(CLI::PositiveNumber);
        s->final_callback([&] {
            action = [&] {
                const BraidWord w = parse_word(eval_word, common.n, bindings_for(common));
                Report r;
                if (eval_truncate > 0) {
                    const TruncMatrix m = burau_eval_trunc(w, eval_truncate);
                    r.payload = io::to_json(m);
                    r.summary = std::to_string(common.n) + "x" + std::to_string(common.n) + " matrix mod s^" +
                                std::to_string(eval_truncate) + ", depth " + m.depth().to_string();
                    r.human = trunc_text(m);
                } else {
                    const LaurentMatrix m = burau_eval(w);
                    r.payload = io::to_json(m);
                    r.summary = std::to_string(common.n) + "x" + std::to_string(common.n) + " matrix";
                    r.human = to_string(m);
                }
                r.payload["word"] = w.to_string();
                return r;
            };
        });
    }

    // check
    Source check_src;
    {
        auto* s = sub("check", "membership test for Gamma");
        check_src.add(s);
        s->final_callback([&] {
            action = [&] {
                LaurentMatrix m;
                if (check_src.has_word)
                    m = burau_eval(parse_word(check_src.word, common.n, bindings_for(common)));
                else if (!check_src.matrix.empty())
                    m = read_matrix(check_src.matrix);
                else
                    throw UsageError("check needs --word or --matrix");
                const GammaReport g = gamma_report(m);
                Report r;
                r.status = g.ok() ? Status::Pass : Status::Fail;
                r.payload = {{"member", g.ok()}, {"violations", g.violations}};
                r.summary = g.ok() ? "all conditions hold" : std::to_string(g.violations.size()) + " violated";
                for (const auto& v : g.violations)
                    r.human += "violated: " + v + "\n";
                return r;
            };
        });
    }

    // depth
    Source depth_src;
    int depth_truncate = 0;
    {
        auto* s = sub("depth", "s-adic depth of a word or matrix");
        depth_src.add(s);
        s->add_option("--truncate", depth_truncate, "use the truncated path at precision N (words only)")
            ->check(CLI::PositiveNumber);
        s->final_callback([&] {
            action = [&] {
                Depth d;
                if (depth_src.has_word) {
                    const BraidWord w = parse_word(depth_src.word, common.n, bindings_for(common));
                    d = depth_truncate > 0 ? burau_eval_trunc(w, depth_truncate).depth() : depth(burau_eval(w));
                } else if (!depth_src.matrix.empty()) {
                    d = depth(read_matrix(depth_src.matrix));
                } else {
                    throw UsageError("depth needs --word or --matrix");
                }
                Report r;
                r.payload = depth_json(d);
                r.summary = "depth " + d.to_string();
                return r;
            };
        });
    }

    // coeff
    Source coeff_src;
    int coeff_k = 1;
    bool coeff_exact = false;
    {
        auto* s = sub("coeff", "leading coefficient (A)_(k) as an element of G_k");
        coeff_src.add(s);
        s->add_option("--k", coeff_k, "degree")->required()->check(CLI::PositiveNumber);
        s->add_flag("--exact", coeff_exact, "use exact Laurent arithmetic for words");
        s->final_callback([&] {
            action = [&] {
                GradedElement g;
                if (coeff_src.has_word) {
                    const BraidWord w = parse_word(coeff_src.word, common.n, bindings_for(common));
                    g = coeff_exact ? gamma_coeff(GammaElement::checked(burau_eval(w), w), coeff_k)
                                    : word_coeff(w, coeff_k);
                } else if (!coeff_src.matrix.empty()) {
                    g = gamma_coeff(GammaElement::checked(read_matrix(coeff_src.matrix)), coeff_k);
                } else {
                    throw UsageError("coeff needs --word or --matrix");
                }
                Report r;
                r.payload = io::to_json(g);
                r.payload["violations"] = g.violations();
                r.summary = "degree-" + std::to_string(coeff_k) + " coefficient";
                r.human = to_string(g.matrix);
                return r;
            };
        });
    }

    // expand
    Source expand_src;
    int expand_count = 4;
    {
        auto* s = sub("expand", "s-adic expansion coefficients (A)_(0..N-1)");
        expand_src.add(s);
        s->add_option("--count", expand_count, "number of coefficients")->check(CLI::PositiveNumber);
        s->final_callback([&] {
            action = [&] {
                std::vector<IntMatrix> coeffs;
                if (expand_src.has_word) {
                    const BraidWord w = parse_word(expand_src.word, common.n, bindings_for(common));
                    coeffs = burau_eval_trunc(w, expand_count).planes();
                } else if (!expand_src.matrix.empty()) {
                    coeffs = s_expand(read_matrix(expand_src.matrix), expand_count);
                } else {
                    throw UsageError("expand needs --word or --matrix");
                }
                Report r;
                json list = json::array();
                for (std::size_t d = 0; d < coeffs.size(); ++d) {
                    list.push_back(io::int_rows(coeffs[d]));
                    r.human += "s^" + std::to_string(d) + ": " + to_string(coeffs[d]) + "\n";
                }
                r.payload = {{"coefficients", list}};
                r.summary = std::to_string(coeffs.size()) + " coefficients";
                return r;
            };
        });
    }

    // bracket
    std::string bracket_a, bracket_b;
    std::optional<int> degree_a, degree_b;
    {
        auto* s = sub("bracket", "Lie bracket <A, B> = AB - BA of graded elements");
        s->add_option("--a", bracket_a, "element: JSON or a combination like '2 X25 + X45'")->required();
        s->add_option("--b", bracket_b, "element: JSON or a combination like 'X24 - X25'")->required();
        s->add_option("--degree-a", degree_a, "degree of A (default from its generators)");
        s->add_option("--degree-b", degree_b, "degree of B");
        s->final_callback([&] {
            action = [&] {
                const GradedElement a = read_element(bracket_a, common.n, degree_a);
                const GradedElement b = read_element(bracket_b, common.n, degree_b);
                const GradedElement c = bracket(a, b);
                Report r;
                r.payload = io::to_json(c);
                r.payload["violations"] = c.violations();
                r.summary = "bracket in degree " + std::to_string(c.degree);
                r.human = to_string(c.matrix);
                return r;
            };
        });
    }

    // approximate
    std::string approx_gamma, approx_library;
    int approx_k = 3;
    bool approx_exact = false;
    {
        auto* s = sub("approximate", "braid word matching a Gamma element modulo s^(K+1)");
        s->add_option("--gamma", approx_gamma, "JSON matrix file")->required();
        s->add_option("--K", approx_k, "target degree K")->check(CLI::Range(0, 12));
        s->add_option("--library", approx_library, "witness library file (built on the fly otherwise)");
        s->add_flag("--exact", approx_exact, "re-check the final depth with exact arithmetic");
        s->final_callback([&] {
            action = [&] {
                const GammaElement g = GammaElement::checked(read_matrix(approx_gamma));
                const int n = g.n();
                const WitnessLibrary lib = approx_library.empty()
                                               ? WitnessLibrary::build(n, std::max(approx_k, 1))
                                               : WitnessLibrary::from_json(read_json_file(approx_library));
                ApproximateOptions opts;
                opts.exact_recheck = approx_exact;
                const ApproximationResult res = approximate(g, approx_k, lib, opts);
                Report r;
                json steps = json::array();
                for (const auto& st : res.steps) {
                    json c = json::array();
                    for (const auto& x : st.coefficients)
                        c.push_back(io::to_json(x));
                    steps.push_back({{"degree", st.degree},
                                     {"coefficients", c},
                                     {"residual_depth", depth_json(st.residual_depth)},
                                     {"dag_size", st.dag_size}});
                }
                r.payload = {{"word", word_payload(res.word)},
                             {"achieved_depth", depth_json(res.achieved_depth)},
                             {"expanded_length", res.word.expanded_length()},
                             {"steps", steps}};
                if (res.exact_depth)
                    r.payload["exact_depth"] = depth_json(*res.exact_depth);
                r.status = res.achieved_depth.at_least(approx_k + 1) ? Status::Pass : Status::Fail;
                r.summary = "residual depth " + res.achieved_depth.to_string() + " with a word of DAG size " +
                            std::to_string(res.word.dag_size());
                return r;
            };
        });
    }

    // search
    std::string search_config, search_preset, search_out;
    SearchConfig search_flags;
    std::vector<std::string> search_pool;
    {
        auto* s = sub("search", "enumerate commutator products and report deep elements");
        s->add_option("--config", search_config, "JSON config file");
        s->add_option("--preset", search_preset, "alpha or delta")->check(CLI::IsMember({"alpha", "delta"}));
        s->add_option("--pool", search_pool, "pool word (repeatable)");
        s->add_option("--target-depth", search_flags.target_depth)->check(CLI::PositiveNumber);
        s->add_option("--min-nesting", search_flags.min_nesting)->check(CLI::NonNegativeNumber);
        s->add_option("--max-nesting", search_flags.max_nesting)->check(CLI::NonNegativeNumber);
        s->add_option("--max-product", search_flags.max_product)->check(CLI::PositiveNumber);
        s->add_option("--precision", search_flags.precision)->check(CLI::PositiveNumber);
        s->add_option("--budget", search_flags.candidate_budget, "candidate budget");
        s->add_option("--cap", search_flags.result_cap, "maximum number of reported hits");
        s->add_option("--exact-cap", search_flags.exact_check_cap, "exact re-check for hits up to this length");
        s->add_option("--out", search_out, "write hits as JSON lines to this file instead of stdout");
        s->final_callback([&] {
            action = [&] {
                SearchConfig cfg = search_flags;
                cfg.n = common.n;
                const Bindings b = bindings_for(common);
                if (!search_config.empty()) {
                    const json j = read_json_file(search_config);
                    cfg = decode(search_config, [&] { return SearchConfig::from_json(j, b); });
                } else if (search_preset == "alpha") {
                    cfg.n = 5;
                    cfg.pool.clear();
                    for (int i = 1; i <= 4; ++i)
                        for (int j = i + 1; j <= 4; ++j)
                            cfg.pool.push_back(pure_gen_word(i, j, 5));
                    cfg.target_depth = 3;
                    cfg.precision = 4;
                    cfg.min_nesting = cfg.max_nesting = 1;
                    cfg.max_product = 4;
                } else if (search_preset == "delta") {
                    const Bindings b5 = builtin_bindings(5);
                    cfg.n = 5;
                    cfg.pool = {b5.at("ALPHA"), BraidWord::generator(5, 4), parse_word("A25^2 A45", 5)};
                    cfg.target_depth = 5;
                    cfg.precision = 6;
                    cfg.min_nesting = 0;
                    cfg.max_nesting = 2;
                    cfg.max_product = 1;
                } else {
                    for (const auto& p : search_pool)
                        cfg.pool.push_back(parse_word(p, cfg.n, b));
                    if (cfg.precision <= cfg.target_depth)
                        cfg.precision = cfg.target_depth + 1;
                }
                try {
                    cfg.validate();
                } catch (const DimensionMismatch& e) {
                    throw UsageError(e.what());
                }
                const SearchResult res = search_deep(cfg);
                std::ofstream file;
                if (!search_out.empty()) {
                    file.open(search_out);
                    if (!file)
                        throw UsageError("cannot write " + search_out);
                }
                std::ostream& hits_out = search_out.empty() ? std::cout : file;
                for (const auto& h : res.hits) {
                    json line = word_payload(h.word);
                    line["index"] = h.index;
                    line["depth"] = h.depth;
                    line["coefficient"] = io::to_json(h.coefficient);
                    line["exact_checked"] = h.exact_checked;
                    if (common.human && search_out.empty())
                        hits_out << "#" << h.index << " depth " << h.depth << "  " << format_shared(h.word).text
                                 << "  " << to_string(h.coefficient.matrix) << "\n";
                    else
                        hits_out << line.dump() << "\n";
                }
                Report r;
                r.status = res.hits.empty() ? Status::Fail : res.budget_exhausted ? Status::Partial : Status::Pass;
                r.payload = {{"hits", res.hits.size()},
                             {"candidates", res.candidates},
                             {"saturated", res.saturated},
                             {"duplicates", res.duplicates},
                             {"budget_exhausted", res.budget_exhausted},
                             {"simd", kernels::isa_name(kernels::active_isa())}};
                r.summary = std::to_string(res.hits.size()) + " distinct hits among " +
                            std::to_string(res.candidates) + " candidates";
                return r;
            };
        });
    }

    // verify-paper
    int verify_degree = 5;
    {
        auto* s = sub("verify-paper", "run the structural check suite, one line per check");
        s->add_option("--max-degree", verify_degree, "witness library degree")->check(CLI::Range(3, 8));
        s->final_callback([&] {
            action = [&] {
                if (common.n < 5)
                    throw UsageError("the check suite needs n >= 5");
                SuiteOptions opts;
                opts.n = common.n;
                opts.max_degree = verify_degree;
                const auto results = run_structure_suite(opts, [&](const CheckResult& c) {
                    if (common.human) {
                        std::printf("%-4s %-62s %8.3fs  %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.seconds,
                                    c.detail.c_str());
                    } else {
                        const json line{{"check", c.name},
                                        {"status", c.passed ? "pass" : "fail"},
                                        {"seconds", c.seconds},
                                        {"detail", c.detail}};
                        std::cout << line.dump() << "\n";
                    }
                    std::cout.flush();
                });
                Report r;
                int failed = 0;
                for (const auto& c : results)
                    failed += c.passed ? 0 : 1;
                r.status = failed == 0 ? Status::Pass : Status::Fail;
                r.payload = {{"checks", results.size()}, {"failed", failed}};
                r.summary = std::to_string(results.size() - static_cast<std::size_t>(failed)) + "/" +
                            std::to_string(results.size()) + " checks passed";
                return r;
            };
        });
    }

    // library-build
    int lib_k = 4;
    std::string lib_out;
    {
        auto* s = sub("library-build", "build and save a witness library");
        s->add_option("--K", lib_k, "maximum degree")->check(CLI::Range(1, 10));
        s->add_option("--out", lib_out, "output file")->required();
        s->final_callback([&] {
            action = [&] {
                const WitnessLibrary lib = WitnessLibrary::build(common.n, lib_k);
                std::ofstream out(lib_out);
                if (!out)
                    throw UsageError("cannot write " + lib_out);
                out << lib.to_json().dump(1) << "\n";
                Report r;
                json sizes = json::array();
                for (int k = 1; k <= lib_k; ++k)
                    sizes.push_back(lib.degree(k).size());
                r.payload = {{"file", lib_out}, {"witnesses_per_degree", sizes}};
                r.summary = "library for n = " + std::to_string(common.n) + " up to degree " + std::to_string(lib_k);
                return r;
            };
        });
    }

    // library-verify
    std::string verify_lib;
    bool verify_trust = false;
    {
        auto* s = sub("library-verify", "reload a witness library and re-check it");
        s->add_option("--library", verify_lib, "library file")->required();
        s->add_flag("--trust", verify_trust, "skip re-evaluation of the stored witnesses");
        s->final_callback([&] {
            action = [&] {
                const json j = read_json_file(verify_lib);
                const WitnessLibrary lib = WitnessLibrary::from_json(j, true);
                Report r;
                std::vector<std::string> failures;
                if (!verify_trust)
                    failures = lib.verify();
                r.status = failures.empty() ? Status::Pass : Status::Fail;
                r.payload = {{"n", lib.n()}, {"max_degree", lib.max_degree()}, {"failures", failures},
                             {"verified", !verify_trust}};
                r.summary = verify_trust ? "loaded without re-evaluation"
                                         : failures.empty() ? "all witnesses re-verified"
                                                            : std::to_string(failures.size()) + " failures";
                return r;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    command = app.get_subcommands().front()->get_name();
    const auto t0 = std::chrono::steady_clock::now();
    Report report;
    int exit_code = 0;
    try {
        report = action();
        exit_code = report.status == Status::Pass ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const burau::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const StrandMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        report.status = Status::Fail;
        report.summary = e.what();
        report.payload = {{"error", e.what()}};
        exit_code = 1;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (common.human) {
        if (!report.human.empty())
            std::cout << report.human << (report.human.back() == '\n' ? "" : "\n");
        std::cout << command << ": " << status_name(report.status) << " - " << report.summary << " (" << seconds
                  << "s)\n";
    } else {
        const json out{{"command", command},
                       {"status", status_name(report.status)},
                       {"payload", report.payload},
                       {"summary", report.summary},
                       {"wall_time_s", seconds}};
        std::cout << out.dump() << "\n";
    }
    return exit_code;
}
