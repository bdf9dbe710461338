#include "burau/json_io.hpp"

#include "burau/errors.hpp"

namespace burau::io {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error("malformed JSON: " + what);
}

int square_size(const json& j)
{
    require(j.is_object() && j.contains("n") && j["n"].is_number_integer(), "missing integer \"n\"");
    const int n = j["n"].get<int>();
    require(n >= 0, "negative \"n\"");
    require(j.contains("entries") && j["entries"].is_array() && j["entries"].size() == static_cast<std::size_t>(n),
            "\"entries\" must have n rows");
    for (const auto& row : j["entries"])
        require(row.is_array() && row.size() == static_cast<std::size_t>(n), "every row must have n entries");
    return n;
}

}  // namespace

json to_json(const LaurentPoly& p)
{
    json terms = json::object();
    for (const auto& [e, c] : p.terms())
        terms[std::to_string(e)] = to_decimal(c);
    return json{{"t", terms}};
}

LaurentPoly laurent_from_json(const json& j)
{
    require(j.is_object() && j.contains("t") && j["t"].is_object(), "Laurent polynomial needs a \"t\" object");
    std::vector<std::pair<int, BigInt>> terms;
    for (const auto& [key, value] : j["t"].items()) {
        std::size_t used = 0;
        int e = 0;
        try {
            e = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used == key.size() && !key.empty(), "bad exponent \"" + key + "\"");
        terms.emplace_back(e, bigint_from_json(value));
    }
    return LaurentPoly::from_terms(terms);
}

json to_json(const LaurentMatrix& m)
{
    if (!m.is_square())
        throw DimensionMismatch("JSON matrix encoding needs a square matrix");
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return json{{"n", m.rows()}, {"entries", rows}};
}

LaurentMatrix laurent_matrix_from_json(const json& j)
{
    const int n = square_size(j);
    LaurentMatrix m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            m(a, b) = laurent_from_json(j["entries"][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    return m;
}

json to_json(const BigInt& x)
{
    if (auto v = to_i64(x))
        return *v;
    return to_decimal(x);
}

BigInt bigint_from_json(const json& j)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
    require(j.is_string(), "integer must be a number or decimal string");
    auto v = parse_decimal(j.get<std::string>());
    require(v.has_value(), "bad decimal \"" + j.get<std::string>() + "\"");
    return *v;
}

json int_rows(const IntMatrix& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

IntMatrix int_matrix_from_rows(const json& rows)
{
    require(rows.is_array(), "matrix rows must be an array");
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        require(row.is_array() && static_cast<int>(row.size()) == c, "ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m(i, j) = bigint_from_json(row[static_cast<std::size_t>(j)]);
    }
    return m;
}

json to_json(const IntMatrix& m)
{
    return json{{"n", m.rows()}, {"entries", int_rows(m)}};
}

IntMatrix int_matrix_from_json(const json& j)
{
    square_size(j);
    return int_matrix_from_rows(j["entries"]);
}

json to_json(const TruncMatrix& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            json series = json::array();
            for (int d = 0; d < m.precision(); ++d)
                series.push_back(to_json(m.plane(d)(i, j)));
            row.push_back(series);
        }
        rows.push_back(row);
    }
    return json{{"n", m.rows()}, {"precision", m.precision()}, {"entries", rows}};
}

TruncMatrix trunc_matrix_from_json(const json& j)
{
    const int n = square_size(j);
    require(j.contains("precision") && j["precision"].is_number_integer(), "missing integer \"precision\"");
    const int p = j["precision"].get<int>();
    require(p >= 1, "precision must be positive");
    TruncMatrix m(n, n, p);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto& series = j["entries"][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            require(series.is_array() && static_cast<int>(series.size()) == p, "series length must equal precision");
            for (int d = 0; d < p; ++d)
                m.plane(d)(a, b) = bigint_from_json(series[static_cast<std::size_t>(d)]);
        }
    return m;
}

json to_json(const GradedElement& g)
{
    return json{{"degree", g.degree}, {"matrix", int_rows(g.matrix)}};
}

GradedElement graded_from_json(const json& j)
{
    require(j.is_object() && j.contains("degree") && j["degree"].is_number_integer(), "missing integer \"degree\"");
    require(j.contains("matrix"), "missing \"matrix\"");
    GradedElement g{j["degree"].get<int>(), int_matrix_from_rows(j["matrix"])};
    require(g.matrix.is_square(), "graded element matrix must be square");
    return g;
}

json word_to_json(const BraidWord& w)
{
    const SharedText t = format_shared(w);
    json lets = json::array();
    for (const auto& [name, body] : t.bindings)
        lets.push_back(json::array({name, body}));
    json out{{"word", t.text}};
    if (!lets.empty())
        out["lets"] = lets;
    return out;
}

BraidWord word_from_json(const json& j, int n, const Bindings& base)
{
    require(j.is_object() && j.contains("word") && j["word"].is_string(), "missing string \"word\"");
    std::vector<std::pair<std::string, std::string>> lets;
    if (j.contains("lets")) {
        require(j["lets"].is_array(), "\"lets\" must be an array");
        for (const auto& l : j["lets"]) {
            require(l.is_array() && l.size() == 2 && l[0].is_string() && l[1].is_string(),
                    "each let must be [name, word]");
            lets.emplace_back(l[0].get<std::string>(), l[1].get<std::string>());
        }
    }
    return parse_word_with(j["word"].get<std::string>(), n, lets, base);
}

}  // namespace burau::io
