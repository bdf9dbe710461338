#pragma once

#include "burau/braid.hpp"
#include "burau/graded.hpp"
#include "burau/linalg.hpp"

#include <json.hpp>

namespace burau::io {

using json = nlohmann::json;

/// {"t": {"<exp>": "<decimal>", ...}}
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

/// {"n": n, "entries": [[LaurentPoly, ...], ...]}
json to_json(const LaurentMatrix& m);
LaurentMatrix laurent_matrix_from_json(const json& j);

/// Integers are JSON numbers when they fit in int64 and decimal strings otherwise.
json to_json(const BigInt& x);
BigInt bigint_from_json(const json& j);

/// Plain nested integer arrays.
json int_rows(const IntMatrix& m);
IntMatrix int_matrix_from_rows(const json& rows);
/// {"n": n, "entries": [[int, ...], ...]}
json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const json& j);

/// {"n": n, "precision": N, "entries": [[[c_0, ..., c_{N-1}], ...], ...]}, c_d the coefficient of s^d.
json to_json(const TruncMatrix& m);
TruncMatrix trunc_matrix_from_json(const json& j);

/// {"degree": k, "matrix": [[int, ...], ...]}
json to_json(const GradedElement& g);
GradedElement graded_from_json(const json& j);

/// {"word": text, "lets": [[name, text], ...]} with shared subterms factored out.
json word_to_json(const BraidWord& w);
BraidWord word_from_json(const json& j, int n, const Bindings& base = {});

}  // namespace burau::io
