#include "cyclecalc/exact_linalg.hpp"

#include <algorithm>

#include "cyclecalc/errors.hpp"

namespace cyclecalc {

Matrix identity_matrix(std::size_t n) {
    Matrix m(n, Vector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b.front().size();
    Matrix out(a.size(), Vector(cols, Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Vector multiply(const Matrix& a, const Vector& x) {
    Vector out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < x.size(); ++k) out[i] += a[i][k] * x[k];
    return out;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const Rational lead = m[r][c];
        for (auto& x : m[r]) x /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Vector solve(const Matrix& a, const Vector& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw DomainError("solve: dimension mismatch");
    Matrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DomainError("solve: matrix is not square");
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    const auto pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
        throw SingularSystem("singular system:\n" + to_string(a));
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

Matrix inverse(const Matrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return {};
    Matrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DomainError("inverse: matrix is not square");
        aug[i] = a[i];
        aug[i].resize(2 * n, Rational(0));
        aug[i][n + i] = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularSystem("singular matrix:\n" + to_string(a));
    Matrix inv(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        std::copy(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end(), inv[i].begin());
    return inv;
}

std::string to_string(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

std::string to_string(const Matrix& m) {
    std::string s;
    for (const auto& row : m) s += to_string(row) + "\n";
    return s;
}

}  // namespace cyclecalc
