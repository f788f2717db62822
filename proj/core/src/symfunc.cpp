#include "vqc/symfunc.hpp"

#include <Eigen/Dense>

#include <functional>
#include <numeric>
#include <stdexcept>

namespace vqc {

std::vector<Complex> elementary_all(int max_r, const PointVector& x) {
    std::vector<Complex> e(static_cast<std::size_t>(std::max(max_r, 0) + 1), Complex(0.0));
    e[0] = 1.0;
    for (const Complex& xi : x)
        for (int r = max_r; r >= 1; --r) e[static_cast<std::size_t>(r)] += xi * e[static_cast<std::size_t>(r - 1)];
    return e;
}

std::vector<Complex> complete_all(int max_r, const PointVector& x) {
    std::vector<Complex> h(static_cast<std::size_t>(std::max(max_r, 0) + 1), Complex(0.0));
    h[0] = 1.0;
    for (const Complex& xi : x)
        for (int r = 1; r <= max_r; ++r) h[static_cast<std::size_t>(r)] += xi * h[static_cast<std::size_t>(r - 1)];
    return h;
}

Complex elementary_eval(int r, const PointVector& x) {
    if (r < 0) return 0.0;
    if (r > static_cast<int>(x.size())) return 0.0;
    return elementary_all(r, x)[static_cast<std::size_t>(r)];
}

Complex complete_eval(int r, const PointVector& x) {
    if (r < 0) return 0.0;
    return complete_all(r, x)[static_cast<std::size_t>(r)];
}

Complex complex_det(const std::vector<Complex>& a, int m) {
    if (m == 0) return 1.0;
    Eigen::MatrixXcd mat(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) mat(i, j) = a[static_cast<std::size_t>(i * m + j)];
    return mat.partialPivLu().determinant();
}

namespace {

Complex jacobi_trudi(const Partition& shape, const std::vector<Complex>& values) {
    const int m = shape.length();
    std::vector<Complex> a(static_cast<std::size_t>(m * m));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            const int idx = shape.part(i) - i + j;
            a[static_cast<std::size_t>((i - 1) * m + (j - 1))] =
                (idx < 0 || idx >= static_cast<int>(values.size())) ? Complex(0.0) : values[static_cast<std::size_t>(idx)];
        }
    return complex_det(a, m);
}

}  // namespace

Complex schur_eval(const Partition& lambda, const PointVector& x) {
    if (lambda.length() > static_cast<int>(x.size())) return 0.0;
    const int max_idx = lambda.part(1) + lambda.length();
    return jacobi_trudi(lambda, complete_all(max_idx, x));
}

Complex schur_eval_dual(const Partition& lambda, const PointVector& x) {
    if (lambda.length() > static_cast<int>(x.size())) return 0.0;
    const Partition t = lambda.transpose();
    const int max_idx = t.part(1) + t.length();
    std::vector<Complex> e = elementary_all(max_idx, x);
    for (int r = static_cast<int>(x.size()) + 1; r <= max_idx; ++r) e[static_cast<std::size_t>(r)] = 0.0;
    return jacobi_trudi(t, e);
}

long long kostka(const Partition& lambda, const std::vector<int>& alpha) {
    int total = 0;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("composition has a negative entry");
        total += a;
    }
    if (total != lambda.size()) throw std::invalid_argument("Kostka number needs |lambda| = |alpha|");
    // Cells in row-major order; each filled with a value >= its left neighbour and > its upper neighbour.
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) cells.emplace_back(i, j);
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(lambda.length() + 1),
                                       std::vector<int>(static_cast<std::size_t>(lambda.part(1) + 1), 0));
    std::vector<int> left = alpha;
    const int values = static_cast<int>(alpha.size());
    long long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            ++count;
            return;
        }
        const auto [i, j] = cells[c];
        int lo = 1;
        if (j > 1) lo = std::max(lo, grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
        if (i > 1) lo = std::max(lo, grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1);
        for (int v = lo; v <= values; ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
            --left[static_cast<std::size_t>(v - 1)];
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            rec(c + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    };
    rec(0);
    return count;
}

long long littlewood_richardson(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size() || !nu.contains(lambda)) return 0;
    // Skew cells of nu/lambda in reverse reading order: rows top to bottom, each right to left.
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= nu.length(); ++i)
        for (int j = nu.part(i); j > lambda.part(i); --j) cells.emplace_back(i, j);
    const int rows = nu.length();
    const int cols = nu.part(1);
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows + 2),
                                       std::vector<int>(static_cast<std::size_t>(cols + 2), 0));
    const int values = mu.length();
    std::vector<int> used(static_cast<std::size_t>(values + 1), 0);
    long long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            ++count;
            return;
        }
        const auto [i, j] = cells[c];
        int hi = values;
        if (j < nu.part(i)) hi = std::min(hi, grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)]);
        int lo = 1;
        if (i > 1 && j > lambda.part(i - 1))
            lo = grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (used[static_cast<std::size_t>(v)] >= mu.part(v)) continue;
            if (v > 1 && used[static_cast<std::size_t>(v)] + 1 > used[static_cast<std::size_t>(v - 1)]) continue;
            ++used[static_cast<std::size_t>(v)];
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            rec(c + 1);
            --used[static_cast<std::size_t>(v)];
        }
        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    };
    rec(0);
    return count;
}

}  // namespace vqc
