#pragma once

#include "errors.hpp"
#include "linalg.hpp"
#include "numeric.hpp"
#include "triangulation.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace index3d {

/// Edge rows E_i and optional cusp rows (M_k, L_k) of the gluing matrix.
struct GluingData {
    int n = 0;
    int r = 0;
    std::vector<QuadVector> edge_rows;
    /// Empty, or 2r rows ordered M_1, L_1, M_2, L_2, ...
    std::vector<QuadVector> cusp_rows;

    bool has_cusp_rows() const { return !cusp_rows.empty(); }
    const QuadVector& meridian(int k) const { return cusp_rows[static_cast<std::size_t>(2 * k)]; }
    const QuadVector& longitude(int k) const { return cusp_rows[static_cast<std::size_t>(2 * k + 1)]; }

    /// Tetrahedral solution T_j.
    QuadVector tet_solution(int j) const {
        QuadVector t(static_cast<std::size_t>(3 * n), 0);
        for (int s = 0; s < 3; ++s) t[static_cast<std::size_t>(3 * j + s)] = 1;
        return t;
    }

    void require_cusp_rows(const std::string& what) const {
        if (!has_cusp_rows()) throw MissingCuspRows(what + " needs meridian and longitude rows");
    }
};

/**
 * @brief Parses the gluing fixture format.
 *
 * Line 1 holds `n r`, followed by n edge rows and optionally 2r cusp rows
 * (meridian then longitude per cusp) of 3n integers each. `#` starts a comment.
 */
inline GluingData load_gluing_matrix(const std::string& text) {
    std::vector<std::vector<long long>> rows;
    std::vector<int> row_lines;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::vector<long long> row;
        std::size_t p = 0;
        while (p < line.size()) {
            while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
            if (p >= line.size()) break;
            std::size_t start = p;
            if (line[p] == '-' || line[p] == '+') ++p;
            while (p < line.size() && std::isdigit(static_cast<unsigned char>(line[p]))) ++p;
            if (p == start || (p == start + 1 && !std::isdigit(static_cast<unsigned char>(line[start]))) ||
                (p < line.size() && !std::isspace(static_cast<unsigned char>(line[p]))))
                throw ParseError("expected an integer", lineno, static_cast<int>(start + 1));
            row.push_back(std::stoll(line.substr(start, p - start)));
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
            row_lines.push_back(lineno);
        }
    }
    if (rows.empty()) throw ParseError("missing header line `n r`", 1, 1);
    if (rows[0].size() != 2) throw ParseError("header must contain exactly `n r`", row_lines[0], 1);
    GluingData g;
    g.n = static_cast<int>(rows[0][0]);
    g.r = static_cast<int>(rows[0][1]);
    if (g.n <= 0 || g.r < 0) throw ParseError("header counts out of range", row_lines[0], 1);
    std::size_t body = rows.size() - 1;
    if (body != static_cast<std::size_t>(g.n) && body != static_cast<std::size_t>(g.n + 2 * g.r))
        throw ShapeError("expected " + std::to_string(g.n) + " or " + std::to_string(g.n + 2 * g.r) + " rows, found " +
                         std::to_string(body));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != static_cast<std::size_t>(3 * g.n))
            throw ShapeError("line " + std::to_string(row_lines[i]) + ": row has " + std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(3 * g.n));
        if (i <= static_cast<std::size_t>(g.n))
            g.edge_rows.push_back(rows[i]);
        else
            g.cusp_rows.push_back(rows[i]);
    }
    return g;
}

inline GluingData load_gluing_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::ios_base::failure("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return load_gluing_matrix(ss.str());
}

inline std::string to_fixture_text(const GluingData& g) {
    std::ostringstream os;
    os << g.n << " " << g.r << "\n";
    auto put = [&os](const QuadVector& row) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << "\n";
    };
    for (const auto& row : g.edge_rows) put(row);
    for (const auto& row : g.cusp_rows) put(row);
    return os.str();
}

/// Edge rows computed from a triangulation; no cusp rows.
inline GluingData gluing_from_triangulation(const Triangulation& t) {
    validate(t);
    GluingData g;
    g.n = t.size();
    vertex_classes(t, &g.r);
    IntMatrix A = edge_equation_matrix(t);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        QuadVector row(A.cols());
        for (std::size_t j = 0; j < A.cols(); ++j) row[j] = static_cast<long long>(A(i, j));
        g.edge_rows.push_back(row);
    }
    return g;
}

/// C applied blockwise: (a, b, c) -> (-b + c, -c + a, -a + b).
inline QuadVector apply_C(const QuadVector& x) {
    if (x.size() % 3 != 0) throw ShapeError("quad vector length is not a multiple of 3");
    QuadVector y(x.size());
    for (std::size_t j = 0; j < x.size(); j += 3) {
        long long a = x[j], b = x[j + 1], c = x[j + 2];
        y[j] = -b + c;
        y[j + 1] = -c + a;
        y[j + 2] = -a + b;
    }
    return y;
}

/// Q-matching matrix B = A C with A the edge rows, C acting on row vectors.
inline IntMatrix qmatching_matrix(const GluingData& g) {
    IntMatrix B(g.edge_rows.size(), static_cast<std::size_t>(3 * g.n));
    for (std::size_t i = 0; i < g.edge_rows.size(); ++i) {
        QuadVector row = apply_C(g.edge_rows[i]);
        for (std::size_t j = 0; j < row.size(); ++j) B(i, j) = row[j];
    }
    return B;
}

/// Neumann-Zagier pairing omega(x, y) = C(x) . y.
inline long long symplectic(const QuadVector& x, const QuadVector& y) {
    if (x.size() != y.size()) throw ShapeError("quad vectors of different lengths");
    QuadVector cx = apply_C(x);
    long long s = 0;
    for (std::size_t j = 0; j < y.size(); ++j) s += cx[j] * y[j];
    return s;
}

/// Coefficients of the boundary of S in the basis mu_1, lambda_1, mu_2, lambda_2, ...
inline std::vector<long long> boundary(const GluingData& g, const QuadVector& S) {
    g.require_cusp_rows("the boundary map");
    std::vector<long long> out;
    for (int k = 0; k < g.r; ++k) {
        out.push_back(-symplectic(S, g.longitude(k)));
        out.push_back(symplectic(S, g.meridian(k)));
    }
    return out;
}

}  // namespace index3d
