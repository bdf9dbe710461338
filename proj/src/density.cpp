#include "burau/density.hpp"

#include "burau/errors.hpp"
#include "burau/liealg.hpp"
#include "burau/parallel.hpp"

namespace burau {

namespace {

struct Candidate {
    BraidWord word;
    GradedElement image;
    bool evaluated = false;  // image already computed from the word itself
};

GradedElement designated_target(int n, int k)
{
    return {k, gen_x(2, 4, n).matrix - gen_x(2, 5, n).matrix};
}

Candidate evaluated(const BraidWord& w, int k)
{
    return {w, word_coeff(w, k), true};
}

// Conjugates u w u^-1 over u = perm_lift(pi), pi in S_n; images by matrix conjugation.
void append_conjugates(std::vector<Candidate>& out, const Candidate& base)
{
    const int n = base.word.strands();
    for (const Perm& p : Perm::all(n)) {
        if (p.is_identity())
            continue;
        const BraidWord u = perm_lift(p);
        out.push_back({base.word.conjugated_by(u), sn_act(p, base.image), false});
    }
}

// [A_ij, w] for every witness w of the previous degree; images by bracketing.
void append_brackets(std::vector<Candidate>& out, int n, const std::vector<Witness>& lower)
{
    for (const auto& w : lower)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                out.push_back({BraidWord::commutator(pure_gen_word(i, j, n), w.word),
                               bracket(gen_x(i, j, n), w.image), false});
}

std::vector<Witness> select_spanning(int n, int k, const std::vector<Candidate>& candidates)
{
    const Lattice target = g_lattice(n, k);
    Lattice current(n * n);
    std::vector<const Candidate*> chosen;
    for (const auto& c : candidates) {
        if (c.image.is_zero())
            continue;
        Lattice next = current.with(vectorize(c.image.matrix));
        if (next == current)
            continue;
        current = std::move(next);
        chosen.push_back(&c);
        if (current == target)
            break;
    }
    if (current != target)
        throw SpanFailure(k, "selected images have rank " + std::to_string(current.rank()) + " (G_k has rank " +
                                 std::to_string(target.rank()) + ") or index " + to_decimal(current.pivot_product()));

    std::vector<Witness> out(chosen.size());
    parallel_for(chosen.size(), [&](std::size_t i) {
        const Candidate& c = *chosen[i];
        GradedElement image = c.evaluated ? c.image : word_coeff(c.word, k);
        if (image != c.image)
            throw Error("witness image mismatch in degree " + std::to_string(k) + ": predicted " +
                        to_string(c.image.matrix) + ", evaluated " + to_string(image.matrix));
        if (!image.valid())
            throw Error("witness image violates the G_k conditions in degree " + std::to_string(k));
        out[i] = Witness{c.word, std::move(image)};
    });
    return out;
}

}  // namespace

WitnessLibrary WitnessLibrary::build(int n, int max_degree)
{
    if (max_degree < 1)
        throw DimensionMismatch("library degree must be positive");
    WitnessLibrary lib;
    lib.n_ = n;
    lib.max_degree_ = max_degree;
    lib.designated_.assign(static_cast<std::size_t>(max_degree), std::nullopt);
    const Bindings named = builtin_bindings(n);

    for (int k = 1; k <= max_degree; ++k) {
        std::vector<Candidate> cands;
        if (k == 1) {
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    cands.push_back(evaluated(pure_gen_word(i, j, n), 1));
        } else if (k == 2) {
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int l = j + 1; l <= n; ++l)
                        if (i != j && i != l)
                            cands.push_back(
                                {BraidWord::commutator(pure_gen_word(std::min(i, j), std::max(i, j), n),
                                                       pure_gen_word(std::min(i, l), std::max(i, l), n)),
                                 bracket(gen_x(i, j, n), gen_x(i, l, n)), false});
        } else if (k == 3) {
            if (n >= 5) {
                const Candidate alpha = evaluated(named.at("ALPHA"), 3);
                cands.push_back(alpha);
                cands.push_back(evaluated(named.at("W3"), 3));
                append_conjugates(cands, alpha);
            }
        } else if (k % 2 == 0) {
            append_brackets(cands, n, lib.degree(k - 1));
        } else {
            const auto& lower = lib.designated(k - 2);
            if (lower) {
                const BraidWord twist = parse_word("A25^2 A45", n);
                BraidWord base = BraidWord::commutator(twist, lower->word);
                if (k == 5)
                    base = named.at("DELTA");
                const Candidate c = evaluated(base, k);
                cands.push_back(c);
                append_conjugates(cands, c);
            }
            append_brackets(cands, n, lib.degree(k - 1));
        }
        lib.per_degree_.push_back(select_spanning(n, k, cands));

        if (k >= 3 && k % 2 == 1) {
            const GradedElement target = designated_target(n, k);
            BraidWord w = k == 3 ? named.at("W3") : lib.solve(target);
            GradedElement image = word_coeff(w, k);
            if (image != target)
                throw Error("designated witness has coefficient " + to_string(image.matrix));
            lib.designated_[static_cast<std::size_t>(k - 1)] = Witness{w, image};
        }
    }
    return lib;
}

void WitnessLibrary::require_degree(int k) const
{
    if (k < 1 || k > max_degree_)
        throw DimensionMismatch("degree " + std::to_string(k) + " outside the library range 1.." +
                                std::to_string(max_degree_));
}

const std::vector<Witness>& WitnessLibrary::degree(int k) const
{
    require_degree(k);
    return per_degree_[static_cast<std::size_t>(k - 1)];
}

const std::optional<Witness>& WitnessLibrary::designated(int k) const
{
    require_degree(k);
    return designated_[static_cast<std::size_t>(k - 1)];
}

IntVector WitnessLibrary::coordinates(const GradedElement& t) const
{
    const auto& ws = degree(t.degree);
    if (t.n() != n_)
        throw DimensionMismatch("target size differs from the library's n");
    std::vector<IntMatrix> gens;
    for (const auto& w : ws)
        gens.push_back(w.image.matrix);
    if (gens.empty()) {
        if (t.is_zero())
            return {};
        throw NoSolution("empty witness list in degree " + std::to_string(t.degree));
    }
    auto c = hnf_solve(gens, t.matrix);
    if (!c)
        throw NoSolution("target is outside the span of the degree-" + std::to_string(t.degree) + " witnesses");
    return *c;
}

BraidWord WitnessLibrary::solve(const GradedElement& t) const
{
    const IntVector c = coordinates(t);
    const auto& ws = degree(t.degree);
    std::vector<BraidWord> factors;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) {
            const auto e = to_i64(c[i]);
            if (!e)
                throw NoSolution("solution coefficient does not fit in a word exponent");
            factors.push_back(ws[i].word.power(*e));
        }
    return BraidWord::product(n_, factors);
}

io::json WitnessLibrary::to_json() const
{
    auto entry = [](const Witness& w) {
        io::json e = io::word_to_json(w.word);
        e["element"] = io::to_json(w.image);
        return e;
    };
    io::json degrees = io::json::array();
    for (int k = 1; k <= max_degree_; ++k) {
        io::json list = io::json::array();
        for (const auto& w : degree(k))
            list.push_back(entry(w));
        degrees.push_back({{"degree", k}, {"witnesses", list}});
    }
    io::json designated = io::json::array();
    for (int k = 1; k <= max_degree_; ++k)
        if (const auto& d = this->designated(k)) {
            io::json e = entry(*d);
            e["degree"] = k;
            designated.push_back(e);
        }
    return {{"n", n_}, {"max_degree", max_degree_}, {"degrees", degrees}, {"designated", designated}};
}

WitnessLibrary WitnessLibrary::from_json(const io::json& j, bool trust)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("max_degree") || !j.contains("degrees"))
        throw Error("malformed library JSON: needs \"n\", \"max_degree\" and \"degrees\"");
    WitnessLibrary lib;
    lib.n_ = j["n"].get<int>();
    lib.max_degree_ = j["max_degree"].get<int>();
    if (lib.n_ < 2 || lib.max_degree_ < 1 || j["degrees"].size() != static_cast<std::size_t>(lib.max_degree_))
        throw Error("malformed library JSON: inconsistent sizes");
    lib.designated_.assign(static_cast<std::size_t>(lib.max_degree_), std::nullopt);
    auto read = [&](const io::json& e, int k) {
        Witness w{io::word_from_json(e, lib.n_), io::graded_from_json(e.at("element"))};
        if (w.image.degree != k || w.image.n() != lib.n_)
            throw Error("malformed library JSON: element degree or size mismatch in degree " + std::to_string(k));
        return w;
    };
    for (int k = 1; k <= lib.max_degree_; ++k) {
        const auto& d = j["degrees"][static_cast<std::size_t>(k - 1)];
        if (d.at("degree").get<int>() != k)
            throw Error("malformed library JSON: degrees out of order");
        std::vector<Witness> list;
        for (const auto& e : d.at("witnesses"))
            list.push_back(read(e, k));
        lib.per_degree_.push_back(std::move(list));
    }
    if (j.contains("designated"))
        for (const auto& e : j["designated"]) {
            const int k = e.at("degree").get<int>();
            lib.require_degree(k);
            lib.designated_[static_cast<std::size_t>(k - 1)] = read(e, k);
        }
    if (!trust) {
        const auto failures = lib.verify();
        if (!failures.empty())
            throw Error("library verification failed: " + failures.front() + " (" + std::to_string(failures.size()) +
                        " failures)");
    }
    return lib;
}

std::vector<std::string> WitnessLibrary::verify() const
{
    struct Job {
        const Witness* w;
        std::string label;
    };
    std::vector<Job> jobs;
    for (int k = 1; k <= max_degree_; ++k) {
        const auto& ws = degree(k);
        for (std::size_t i = 0; i < ws.size(); ++i)
            jobs.push_back({&ws[i], "degree " + std::to_string(k) + " witness " + std::to_string(i)});
        if (const auto& d = designated(k))
            jobs.push_back({&*d, "degree " + std::to_string(k) + " designated witness"});
    }
    std::vector<std::string> results(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        const Witness& w = *jobs[i].w;
        try {
            if (!w.image.valid())
                results[i] = jobs[i].label + ": element violates the G_k conditions";
            else if (word_coeff(w.word, w.image.degree) != w.image)
                results[i] = jobs[i].label + ": evaluated coefficient differs";
        } catch (const Error& e) {
            results[i] = jobs[i].label + ": " + e.what();
        }
    });
    std::vector<std::string> failures;
    for (auto& r : results)
        if (!r.empty())
            failures.push_back(std::move(r));
    for (int k = 1; k <= max_degree_; ++k) {
        std::vector<IntMatrix> gens;
        for (const auto& w : degree(k))
            gens.push_back(w.image.matrix);
        const Lattice span = gens.empty() ? Lattice(n_ * n_) : Lattice::span(gens);
        if (span != g_lattice(n_, k))
            failures.push_back("degree " + std::to_string(k) + ": images do not span G_k");
    }
    return failures;
}

ApproximationResult approximate(const GammaElement& gamma, int max_degree, const WitnessLibrary& library,
                                const ApproximateOptions& options)
{
    const int n = gamma.n();
    if (library.n() != n)
        throw DimensionMismatch("library strand count differs from the matrix size");
    if (max_degree < 0 || max_degree > library.max_degree())
        throw DimensionMismatch("approximation degree " + std::to_string(max_degree) + " exceeds the library's " +
                                std::to_string(library.max_degree()));
    const int precision = max_degree + 1;

    const auto perm = as_permutation(reduce_at_one(gamma.matrix()));
    if (!perm)
        throw NotInGamma("reduction mod s is not a permutation matrix");
    const TruncMatrix gamma_inv = TruncMatrix::from_laurent(gamma.matrix(), precision).inverse();

    ApproximationResult out;
    out.word = perm_lift(*perm);
    TruncMatrix image = burau_eval_trunc(out.word, precision);
    TruncMatrix residual = gamma_inv * image;
    out.steps.push_back({0, {}, residual.depth(), out.word.dag_size()});
    if (!residual.depth().at_least(1))
        throw DepthRegression("permutation step left residual depth " + residual.depth().to_string());

    for (int k = 1; k <= max_degree; ++k) {
        const GradedElement target{k, residual.plane(k)};
        const IntVector c = library.coordinates(target);
        const BraidWord step_inv = library.solve(target).inverse();
        image = image * burau_eval_trunc(step_inv, precision);
        out.word = out.word * step_inv;
        residual = gamma_inv * image;
        const Depth d = residual.depth();
        out.steps.push_back({k, c, d, out.word.dag_size()});
        if (!d.at_least(k + 1))
            throw DepthRegression("step " + std::to_string(k) + " left residual depth " + d.to_string());
    }

    // Independent re-evaluation of the finished word.
    out.achieved_depth = (gamma_inv * burau_eval_trunc(out.word, precision)).depth();
    if (!out.achieved_depth.at_least(precision))
        throw DepthRegression("re-evaluated residual depth " + out.achieved_depth.to_string());
    if (options.exact_recheck && out.word.expanded_length() <= options.exact_length_cap)
        out.exact_depth = depth(inverse(gamma.matrix()) * burau_eval(out.word));
    return out;
}

}  // namespace burau
