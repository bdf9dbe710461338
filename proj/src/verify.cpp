#include "burau/verify.hpp"

#include "burau/burau.hpp"
#include "burau/density.hpp"
#include "burau/errors.hpp"
#include "burau/liealg.hpp"

#include <chrono>
#include <random>

namespace burau {

namespace {

// Checks throw CheckFailed with a reason; any other exception also fails the check.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what)
{
    if (!ok)
        throw CheckFailed(what);
}

BraidWord random_word(std::mt19937_64& rng, int n, int max_len)
{
    std::uniform_int_distribution<int> len(0, max_len), gen(1, n - 1), sign(0, 1);
    std::vector<Letter> letters;
    for (int i = len(rng); i > 0; --i)
        letters.push_back({gen(rng), sign(rng) ? 1 : -1});
    return BraidWord::literal(n, letters);
}

GradedElement xdiff(int n, int a, int b, int c, int d, int degree)
{
    return {degree, gen_x(a, b, n).matrix - gen_x(c, d, n).matrix};
}

}  // namespace

std::vector<CheckResult> run_structure_suite(const SuiteOptions& opt,
                                             const std::function<void(const CheckResult&)>& on_result)
{
    const int n = opt.n;
    std::mt19937_64 rng(opt.seed);
    std::vector<CheckResult> results;
    std::optional<WitnessLibrary> library;
    const Bindings named = builtin_bindings(n);

    auto run = [&](const std::string& name, const std::function<std::string()>& body) {
        CheckResult r{name, false, "", 0};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = body();
            r.passed = true;
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(r);
        if (on_result)
            on_result(r);
    };

    run("generator matrices and braid relations", [&] {
        for (int m = 2; m <= n; ++m)
            for (int i = 1; i < m; ++i) {
                const LaurentMatrix g = burau_gen(m, i, 1);
                expect(g * burau_gen(m, i, -1) == laurent_identity(m), "generator inverse");
                for (int j = i + 1; j < m; ++j) {
                    const LaurentMatrix h = burau_gen(m, j, 1);
                    if (j == i + 1)
                        expect(g * h * g == h * g * h, "braid relation");
                    else
                        expect(g * h == h * g, "far commutation");
                }
            }
        return std::string("n <= ") + std::to_string(n);
    });

    std::vector<BraidWord> words;
    for (int i = 0; i < opt.random_words; ++i)
        words.push_back(random_word(rng, n, 12));

    run("reduction mod s is the permutation representation", [&] {
        for (const auto& w : words)
            expect(reduce_at_one(burau_eval(w)) == perm_matrix(word_permutation(w)), "reduction of " + w.to_string());
        for (int i = 1; i < n; ++i)
            expect(word_permutation(pure_gen_word(i, n, n)).is_identity(), "pure generator permutation");
        return std::to_string(words.size()) + " words";
    });

    run("invariant vector, row sums and unitarity", [&] {
        for (const auto& w : words) {
            const GammaReport r = gamma_report(burau_eval(w));
            expect(r.ok(), "membership of " + w.to_string());
        }
        return std::to_string(words.size()) + " words";
    });

    run("truncated evaluation equals truncated expansion", [&] {
        for (std::size_t i = 0; i < 10 && i < words.size(); ++i) {
            const auto exact = s_expand(burau_eval(words[i]), 6);
            const TruncMatrix t = burau_eval_trunc(words[i], 6);
            for (int d = 0; d < 6; ++d)
                expect(t.plane(d) == exact[static_cast<std::size_t>(d)], "plane " + std::to_string(d));
        }
        return std::string("precision 6");
    });

    run("inverse expansion in the filtration", [&] {
        const BraidWord alpha = named.at("ALPHA");
        const TruncMatrix a = burau_eval_trunc(alpha, 6);
        const TruncMatrix ai = burau_eval_trunc(alpha.inverse(), 6);
        for (int d = 3; d <= 5; ++d)
            expect(ai.plane(d) == -a.plane(d), "(X^-1)_(d) = -(X)_(d) at d = " + std::to_string(d));
        return std::string("depth-3 element up to s^5");
    });

    run("commutator bracket grading", [&] {
        std::vector<std::pair<BraidWord, GradedElement>> samples;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                samples.push_back({pure_gen_word(i, j, n), gen_x(i, j, n)});
        samples.push_back({named.at("ALPHA"), word_coeff(named.at("ALPHA"), 3)});
        std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
        for (int r = 0; r < 40; ++r) {
            const auto& x = samples[pick(rng)];
            const auto& y = samples[pick(rng)];
            const int k = x.second.degree + y.second.degree;
            const TruncMatrix c = burau_eval_trunc(BraidWord::commutator(x.first, y.first), k + 1);
            expect(c.depth().at_least(k), "commutator depth");
            expect(c.plane(k) == bracket(x.second, y.second).matrix, "commutator coefficient");
        }
        return std::string("40 pairs");
    });

    run("leading coefficients add under products", [&] {
        const BraidWord a = named.at("ALPHA");
        const BraidWord b = a.conjugated_by(perm_lift(Perm::from_images({2, 3, 1, 5, 4})));
        expect(word_coeff(a * b, 3).matrix == word_coeff(a, 3).matrix + word_coeff(b, 3).matrix, "additivity");
        expect(word_coeff(a * b, 3) == word_coeff(b * a, 3), "commutativity mod the next layer");
        return std::string("degree 3");
    });

    run("graded pieces: annihilation, symmetry, trace, determinant", [&] {
        if (!library)
            library = WitnessLibrary::build(n, opt.max_degree);
        int count = 0;
        for (int k = 1; k <= opt.max_degree; ++k)
            for (const auto& w : library->degree(k)) {
                expect(w.image.valid(), "G_k conditions in degree " + std::to_string(k));
                ++count;
            }
        for (int k = 2; k <= std::min(opt.max_degree, 3); ++k)
            for (const auto& w : library->degree(k))
                expect(determinant(burau_eval(w.word)) == LaurentPoly(1), "det = 1");
        return std::to_string(count) + " witnesses";
    });

    run("bracket formulas for X and Y", [&] {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    if (i == j || j == k || i == k)
                        continue;
                    expect(bracket(gen_x(i, j, n), gen_x(i, k, n)).matrix == gen_y(i, j, k, n).matrix, "<X_ij, X_ik>");
                    const GradedElement want{3, (gen_x(i, k, n).matrix - gen_x(j, k, n).matrix).scaled(BigInt(2))};
                    expect(bracket(gen_x(i, j, n), gen_y(i, j, k, n)) == want, "<X_ij, Y_ijk>");
                    for (int l = 1; l <= n; ++l)
                        if (l != i && l != j && l != k && k < l)
                            expect(bracket(gen_x(i, j, n), gen_x(k, l, n)).is_zero(), "<X_ij, X_kl>");
                }
        return std::string("all index patterns");
    });

    run("bracket lattices and orbit spanning", [&] {
        expect(*bracket_lattice(n, 3) == g_lattice(n, 4), "<G1,G3> = G4");
        for (const auto& b : g_basis(n, 5))
            expect(bracket_lattice(n, 4)->contains(IntMatrix(b.matrix.scaled(BigInt(2)))), "2 G5 in <G1,G4>");
        expect(!bracket_lattice(n, 4)->contains(xdiff(n, 2, 4, 2, 5, 5).matrix), "X24 - X25 outside <G1,G4>");
        std::vector<IntMatrix> orbit;
        for (const auto& g : sn_orbit(xdiff(n, 2, 4, 1, 3, 3)))
            orbit.push_back(g.matrix);
        expect(Lattice::span(orbit) == g_lattice(n, 3), "orbit of X24 - X13 spans G3");
        return std::string("rank <G1,G3> = ") + std::to_string(bracket_lattice(n, 3)->rank());
    });

    run("phi: direct and expansion formulas agree", [&] {
        const GradedElement w = xdiff(n, 2, 4, 2, 5, 3);
        const BraidWord omega = named.at("W3");
        KernelElement d{3, {{2, 5, w, omega}, {2, 5, w, omega}, {4, 5, w, omega}}};
        const PhiEvaluation p = phi_eval(d, n, PhiMode::Verify);
        expect(p.coset == CosetElement::of(word_coeff(named.at("DELTA"), 5)), "coset of the depth-5 element");
        expect(p.coset == CosetElement::of(w.transported(5)), "coset of X24 - X25");
        expect(p.coset == phi_from_w(d.terms, n, 5), "reconstruction from W");
        return std::string("d = (2 X25 + X45) (x) (X24 - X25)");
    });

    run("phi: independent of witnesses and degree", [&] {
        if (!library)
            library = WitnessLibrary::build(n, opt.max_degree);
        const GradedElement w = xdiff(n, 2, 4, 2, 5, 3);
        const BraidWord base = named.at("W3");
        const CosetElement reference = phi_from_w({{2, 5, w, {}}, {2, 5, w, {}}, {4, 5, w, {}}}, n, 5);
        int tried = 0;
        for (const auto& deep : library->degree(std::min(opt.max_degree, 4))) {
            if (tried == 3)
                break;
            const BraidWord omega = base * deep.word;
            KernelElement d{3, {{2, 5, w, omega}, {2, 5, w, omega}, {4, 5, w, omega}}};
            expect(phi_eval(d, n).coset == reference, "alternate witness");
            ++tried;
        }
        expect(phi_from_w({{2, 5, w, {}}, {2, 5, w, {}}, {4, 5, w, {}}}, n, 7) == reference.transported(7),
               "transport to degree 7");
        return std::to_string(tried) + " alternate witnesses";
    });

    run("degree-one witnesses span G1", [&] {
        std::vector<IntMatrix> images;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const GradedElement c = word_coeff(pure_gen_word(i, j, n), 1);
                expect(c == gen_x(i, j, n), "(A_ij)_(1) = X_ij");
                images.push_back(c.matrix);
            }
        expect(Lattice::span(images) == g_lattice(n, 1), "span");
        return std::string("rank ") + std::to_string(g_rank(n, 1));
    });

    run("depth-3 element", [&] {
        const Depth d = depth(burau_eval(named.at("ALPHA")));
        expect(d == Depth{3, false}, "depth " + d.to_string());
        expect(word_coeff(named.at("ALPHA"), 3) == xdiff(n, 2, 4, 1, 3, 3), "coefficient X24 - X13");
        return std::string("exact depth 3");
    });

    run("depth-5 element", [&] {
        const Depth d = depth(burau_eval(named.at("DELTA")));
        expect(d == Depth{5, false}, "depth " + d.to_string());
        const int known[5][5] = {{0, 2, 0, 2, -4}, {2, -2, -2, 1, 1}, {0, -2, 0, -2, 4}, {2, 1, -2, 1, -2},
                                     {-4, 1, 4, -2, 1}};
        const GradedElement c = word_coeff(named.at("DELTA"), 5);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                expect(c.matrix(i, j) == (i < 5 && j < 5 ? known[i][j] : 0), "coefficient entry");
        return std::string("exact depth 5");
    });

    run("witness library spans every degree", [&] {
        if (!library)
            library = WitnessLibrary::build(n, opt.max_degree);
        const auto failures = library->verify();
        expect(failures.empty(), failures.empty() ? "" : failures.front());
        std::string sizes;
        for (int k = 1; k <= opt.max_degree; ++k)
            sizes += (k > 1 ? "," : "") + std::to_string(library->degree(k).size());
        return "witnesses per degree " + sizes;
    });

    return results;
}

}  // namespace burau
