#include "burau/liealg.hpp"

#include "burau/burau.hpp"
#include "burau/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <map>
#include <mutex>
#include <set>

namespace burau {

namespace {

void require_index(int i, int n, const char* what)
{
    if (i < 1 || i > n)
        throw IndexOutOfRange(std::string(what) + ": index " + std::to_string(i) + " out of range 1.." +
                              std::to_string(n));
}

GradedElement graded_zero(int k, int n) { return {k, IntMatrix(n, n)}; }

}  // namespace

GradedElement gen_x(int i, int j, int n)
{
    require_index(i, n, "gen_x");
    require_index(j, n, "gen_x");
    if (i == j)
        throw IndexOutOfRange("gen_x: indices must differ");
    IntMatrix m(n, n);
    m(i - 1, i - 1) = 1;
    m(j - 1, j - 1) = 1;
    m(i - 1, j - 1) = -1;
    m(j - 1, i - 1) = -1;
    return {1, m};
}

GradedElement gen_y(int i, int j, int k, int n)
{
    require_index(i, n, "gen_y");
    require_index(j, n, "gen_y");
    require_index(k, n, "gen_y");
    if (i == j || j == k || i == k)
        throw IndexOutOfRange("gen_y: indices must be distinct");
    IntMatrix m(n, n);
    auto skew = [&](int a, int b, int c) {
        m(a - 1, b - 1) += c;
        m(b - 1, a - 1) -= c;
    };
    skew(i, j, 1);
    skew(i, k, -1);
    skew(j, k, 1);
    return {2, m};
}

GradedElement bracket(const GradedElement& m, const GradedElement& n)
{
    if (m.n() != n.n())
        throw DimensionMismatch("bracket: size mismatch");
    return {m.degree + n.degree, m.matrix * n.matrix - n.matrix * m.matrix};
}

GradedElement sn_act(const Perm& pi, const GradedElement& m)
{
    if (pi.size() != m.n())
        throw DimensionMismatch("sn_act: permutation size differs from matrix size");
    const IntMatrix p = perm_matrix(pi);
    return {m.degree, p * m.matrix * p.transpose()};
}

std::vector<GradedElement> sn_orbit(const GradedElement& m)
{
    std::vector<GradedElement> out;
    std::set<std::vector<BigInt>> seen;
    for (const Perm& p : Perm::all(m.n())) {
        GradedElement g = sn_act(p, m);
        if (seen.insert(vectorize(g.matrix)).second)
            out.push_back(std::move(g));
    }
    return out;
}

std::vector<GradedElement> g_basis(int n, int k)
{
    if (n < 2 || k < 1)
        throw DimensionMismatch("g_basis: need n >= 2 and k >= 1");
    std::vector<GradedElement> out;
    if (k == 1) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                out.push_back(gen_x(i, j, n));
    } else if (k % 2 == 0) {
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 1; j <= n - 1; ++j)
                out.push_back({k, gen_y(i, j, n, n).matrix});
    } else {
        const IntMatrix x12 = gen_x(1, 2, n).matrix;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (!(i == 1 && j == 2))
                    out.push_back({k, gen_x(i, j, n).matrix - x12});
    }
    return out;
}

int g_rank(int n, int k)
{
    if (k == 1)
        return n * (n - 1) / 2;
    if (k % 2 == 0)
        return (n - 1) * (n - 2) / 2;
    return n * (n - 1) / 2 - 1;
}

Lattice g_lattice(int n, int k)
{
    std::vector<IntMatrix> gens;
    for (const auto& g : g_basis(n, k))
        gens.push_back(g.matrix);
    if (gens.empty())
        return Lattice(n * n);
    return Lattice::span(gens);
}

std::shared_ptr<const Lattice> bracket_lattice(int n, int k)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const Lattice>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find({n, k}); it != cache.end())
            return it->second;
    }
    std::vector<IntVector> gens;
    const auto b1 = g_basis(n, 1);
    const auto bk = g_basis(n, k);
    for (const auto& x : b1)
        for (const auto& y : bk)
            gens.push_back(vectorize(bracket(x, y).matrix));
    auto lattice = std::make_shared<const Lattice>(Lattice::span(gens, n * n));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::make_pair(n, k), lattice).first->second;
}

// --- kernel of the bracket map -----------------------------------------------

GradedElement KernelElement::bracket_sum(int n) const
{
    GradedElement sum = graded_zero(degree + 1, n);
    for (const auto& t : terms) {
        if (t.w.degree != degree)
            throw KernelViolation("kernel term has degree " + std::to_string(t.w.degree) + ", expected " +
                                  std::to_string(degree));
        sum.matrix += bracket(gen_x(t.i, t.j, n), t.w).matrix;
    }
    return sum;
}

std::vector<KernelElement> kernel_generators(int n, int degree)
{
    const auto b1 = g_basis(n, 1);
    const auto bk = g_basis(n, degree);
    std::vector<IntVector> rows;
    for (const auto& x : b1)
        for (const auto& y : bk)
            rows.push_back(vectorize(bracket(x, y).matrix));
    std::vector<KernelElement> out;
    for (const auto& rel : hnf_kernel(rows, n * n)) {
        // Regroup the relation by the X_I factor: sum_I X_I (x) (sum_q c_Iq b_q).
        KernelElement e;
        e.degree = degree;
        std::size_t idx = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                IntMatrix w(n, n);
                for (const auto& b : bk) {
                    if (rel[idx] != 0)
                        w += b.matrix.scaled(rel[idx]);
                    ++idx;
                }
                if (!w.is_zero())
                    e.terms.push_back({i, j, {degree, w}, std::nullopt});
            }
        out.push_back(std::move(e));
    }
    return out;
}

// --- cosets ---------------------------------------------------------------

CosetElement::CosetElement(GradedElement rep, std::shared_ptr<const Lattice> modulus)
    : rep_(std::move(rep)), modulus_(std::move(modulus))
{
    if (rep_.degree < 3 || rep_.degree % 2 == 0)
        throw DimensionMismatch("cosets live in odd degrees >= 3");
}

CosetElement CosetElement::of(const GradedElement& rep)
{
    return CosetElement(rep, bracket_lattice(rep.n(), rep.degree - 1));
}

CosetElement CosetElement::transported(int degree) const
{
    return of(rep_.transported(degree));
}

bool operator==(const CosetElement& a, const CosetElement& b)
{
    if (a.rep_.degree != b.rep_.degree || a.rep_.n() != b.rep_.n())
        return false;
    return a.modulus_->contains(a.rep_.matrix - b.rep_.matrix);
}

// --- phi ------------------------------------------------------------------

PhiEvaluation phi_eval(const KernelElement& a, int n, PhiMode mode)
{
    const int m = a.degree;
    if (m < 3 || m % 2 == 0)
        throw DepthViolation("phi needs an odd source degree >= 3, got " + std::to_string(m));
    if (!a.in_kernel(n))
        throw KernelViolation("sum <X_I, W_I> is nonzero: " + to_string(a.bracket_sum(n).matrix));

    std::vector<BraidWord> factors;
    std::vector<TruncMatrix> omegas;
    for (const auto& t : a.terms) {
        if (!t.witness)
            throw DepthViolation("kernel term without a witness word");
        if (t.witness->strands() != n)
            throw StrandMismatch("witness strand count differs from n");
        TruncMatrix om = burau_eval_trunc(*t.witness, m + 2);
        const Depth d = om.depth();
        if (!d.at_least(m))
            throw DepthViolation("witness depth " + d.to_string() + " is below " + std::to_string(m));
        if (om.plane(m) != t.w.matrix)
            throw DepthViolation("witness coefficient differs from its term: " + to_string(om.plane(m)));
        if (mode == PhiMode::Verify)
            omegas.push_back(std::move(om));
        factors.push_back(BraidWord::commutator(pure_gen_word(t.i, t.j, n), *t.witness));
    }

    const BraidWord alpha = BraidWord::product(n, factors);
    const TruncMatrix am = burau_eval_trunc(alpha, m + 3);
    GradedElement direct{m + 2, IntMatrix(n, n)};
    if (!am.depth().at_least(m + 2))
        throw DepthViolation("product of commutators has depth " + am.depth().to_string() + " below " +
                             std::to_string(m + 2));
    direct.matrix = am.plane(m + 2);

    PhiEvaluation out{direct, std::nullopt, CosetElement::of(direct)};
    if (mode == PhiMode::Verify) {
        IntMatrix sum(n, n);
        for (std::size_t q = 0; q < a.terms.size(); ++q) {
            const auto& t = a.terms[q];
            const TruncMatrix ai = burau_eval_trunc(pure_gen_word(t.i, t.j, n), 3);
            const IntMatrix& x = ai.plane(1);
            const IntMatrix& w = omegas[q].plane(m);
            const IntMatrix& v = omegas[q].plane(m + 1);
            sum += x * v - v * x;
            sum += ai.plane(2) * w - w * ai.plane(2);
            sum += (w * x - x * w) * x;
        }
        out.formula = GradedElement{m + 2, sum};
        if (sum != direct.matrix)
            throw Error("phi paths disagree: direct " + to_string(direct.matrix) + " vs formula " + to_string(sum));
    }
    return out;
}

IntMatrix j_first_coefficient(int n)
{
    return s_expand(form_j(n), 2)[1];
}

QMatrix reconstruct_plus(const GradedElement& w, int k)
{
    const int n = w.n();
    const QMatrix j1 = to_rational(j_first_coefficient(n));
    const QMatrix wq = to_rational(w.matrix);
    QMatrix plus = (j1 * wq - wq * j1 + wq.scaled(Rational(4 * k - 2))).scaled(Rational(-1, 4));
    for (const auto& x : plus.data())
        if (boost::multiprecision::denominator(x) > 2)
            throw HalfIntegralityViolation("reconstructed symmetric part has entry " + x.str());
    return plus;
}

std::vector<Rational> skew_column_sums(const GradedElement& w, int k)
{
    const QMatrix plus = reconstruct_plus(w, k);
    const int n = w.n();
    std::vector<Rational> u(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            u[static_cast<std::size_t>(j)] -= plus(i, j);
    return u;
}

QMatrix banded_skew(const std::vector<Rational>& u)
{
    const int n = static_cast<int>(u.size());
    Rational total = 0;
    for (const auto& x : u)
        total += x;
    if (total != 0)
        throw KernelViolation("column sums of a skew matrix must add to zero, got " + total.str());
    QMatrix o(n, n);
    Rational c = 0;
    for (int i = 1; i < n; ++i) {
        c += u[static_cast<std::size_t>(i - 1)];
        o(i, i - 1) = c;
        o(i - 1, i) = -c;
    }
    return o;
}

QMatrix w_prime_banded(const GradedElement& w, int k)
{
    return banded_skew(skew_column_sums(w, k));
}

QMatrix w_prime(const GradedElement& w, int k)
{
    const QMatrix plus = reconstruct_plus(w, k);
    const int n = w.n();
    QMatrix f(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Rational x = -plus(i, j);
            // Fractional part in [0, 1).
            BigInt fl = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
            if (x < 0 && Rational(fl) != x)
                fl -= 1;
            f(i, j) = x - Rational(fl);
            f(j, i) = -f(i, j);
        }
    std::vector<Rational> u = skew_column_sums(w, k);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            u[static_cast<std::size_t>(j)] -= f(i, j);
    return f + banded_skew(u);
}

CosetElement phi_from_w(const std::vector<KernelTerm>& terms, int n, int target_degree)
{
    if (target_degree < 5 || target_degree % 2 == 0)
        throw DimensionMismatch("phi_from_w: target degree must be odd and >= 5");
    const int k = (target_degree - 1) / 2;
    KernelElement a;
    a.degree = target_degree - 2;
    for (const auto& t : terms)
        a.terms.push_back({t.i, t.j, t.w.transported(a.degree), std::nullopt});
    if (!a.in_kernel(n))
        throw KernelViolation("sum <X_I, W_I> is nonzero: " + to_string(a.bracket_sum(n).matrix));

    QMatrix val(n, n);
    for (const auto& t : a.terms) {
        const TruncMatrix ai = burau_eval_trunc(pure_gen_word(t.i, t.j, n), 3);
        const QMatrix x = to_rational(ai.plane(1));
        const QMatrix x2 = to_rational(ai.plane(2));
        const QMatrix w = to_rational(t.w.matrix);
        const QMatrix op = w_prime(t.w, k);
        const QMatrix rest = x2 * w - w * x2 + (w * x - x * w) * x;
        val += x * op - op * x;
        val += (rest + rest.transpose()).scaled(Rational(1, 2));
    }
    auto integral = to_integral(val);
    if (!integral)
        throw HalfIntegralityViolation("phi value from W data is not integral: " + to_string(val));
    return CosetElement::of({target_degree, *integral});
}

}  // namespace burau
