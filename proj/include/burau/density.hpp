#pragma once

#include "burau/braid.hpp"
#include "burau/burau.hpp"
#include "burau/graded.hpp"
#include "burau/hnf.hpp"
#include "burau/json_io.hpp"

#include <map>
#include <optional>
#include <vector>

namespace burau {

struct Witness {
    BraidWord word;
    GradedElement image;  // gamma_coeff(word, image.degree)
};

/// Per-degree witness words whose leading coefficients span G_k over Z.
class WitnessLibrary {
public:
    /// Candidate images are computed by matrix conjugation or bracketing; every selected
    /// witness is then re-evaluated from its word. Throws SpanFailure(k) when the selected
    /// images do not span G_k.
    static WitnessLibrary build(int n, int max_degree);

    int n() const { return n_; }
    int max_degree() const { return max_degree_; }
    const std::vector<Witness>& degree(int k) const;
    /// Witness with coefficient X_24 - X_25 in an odd degree >= 3, when built.
    const std::optional<Witness>& designated(int k) const;

    /// Word prod w_i^{c_i} with coefficient T in degree T.degree; throws NoSolution if T is outside the span.
    BraidWord solve(const GradedElement& t) const;
    /// Solved coefficient vector for T (the canonical HNF solution).
    IntVector coordinates(const GradedElement& t) const;

    io::json to_json() const;
    /// Reloads a library. Unless `trust` is set, every coefficient and the spanning property are re-checked.
    static WitnessLibrary from_json(const io::json& j, bool trust = false);
    /// Re-evaluates every stored witness; returns a description of each failure.
    std::vector<std::string> verify() const;

private:
    void require_degree(int k) const;

    int n_ = 0;
    int max_degree_ = 0;
    std::vector<std::vector<Witness>> per_degree_;  // index k - 1
    std::vector<std::optional<Witness>> designated_;
};

struct ApproximationStep {
    int degree = 0;
    IntVector coefficients;  // solved coefficients (empty for the permutation step)
    Depth residual_depth;    // depth of gamma^-1 beta(word) after the step
    std::size_t dag_size = 0;
};

struct ApproximationResult {
    BraidWord word;
    Depth achieved_depth;                 // truncated path, precision K + 1
    std::optional<Depth> exact_depth;     // set when the exact recheck ran
    std::vector<ApproximationStep> steps;
};

struct ApproximateOptions {
    bool exact_recheck = false;
    /// Exact recheck is skipped when the expanded word is longer than this.
    std::uint64_t exact_length_cap = 20000;
};

/// Word w with depth(gamma^-1 beta(w)) >= K + 1, built degree by degree. Reads only the matrix of gamma.
/// Throws DepthRegression if a step fails to raise the residual depth.
ApproximationResult approximate(const GammaElement& gamma, int max_degree, const WitnessLibrary& library,
                                const ApproximateOptions& options = {});

}  // namespace burau
