#include <intdiff/linalg.hpp>

namespace intdiff {

Matrix identity_matrix(std::size_t n) {
    Matrix m(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}

Scalar determinant(const Matrix& input) {
    const std::size_t n = input.size();
    if (n == 0) return Scalar(1);
    Matrix m = input;
    Scalar prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return Scalar();
        if (p != k) {
            std::swap(m[p], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = Scalar();
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::optional<Matrix> inverse(const Matrix& input) {
    const std::size_t n = input.size();
    Matrix a = input;
    Matrix inv = identity_matrix(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Scalar piv = a[c][c].inv();
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= piv;
            inv[c][j] *= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Scalar f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(Matrix& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Scalar piv = a[r][c].inv();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    Matrix a = m;
    return echelon(a).size();
}

std::vector<std::vector<Scalar>> left_nullspace(const Matrix& m, std::size_t rows) {
    // Solve m^T c = 0.
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    Matrix t(cols, std::vector<Scalar>(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    std::vector<std::size_t> pivots = echelon(t);
    std::vector<bool> is_pivot(rows, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < rows; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(rows);
        v[free] = Scalar(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -t[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = k == 0 ? 0 : b[0].size();
    Matrix r(n, std::vector<Scalar>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

std::vector<std::size_t> independent_rows(const Matrix& m) {
    std::vector<std::size_t> chosen;
    Matrix basis;
    for (std::size_t i = 0; i < m.size(); ++i) {
        Matrix trial = basis;
        trial.push_back(m[i]);
        if (rank(trial) == trial.size()) {
            basis = std::move(trial);
            chosen.push_back(i);
        }
    }
    return chosen;
}

}  // namespace intdiff
