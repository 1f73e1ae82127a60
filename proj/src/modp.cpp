#include "gentle/modp.hpp"

#include <stdexcept>

namespace gentle {

int64_t Fp::inv(int64_t a) const {
    a = norm(a);
    if (a == 0) throw std::domain_error("inverse of zero");
    // extended Euclid
    int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    return norm(t);
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::mul(const Matrix& o, const Fp& f) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int64_t v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(v, o.at(k, j)));
        }
    return r;
}

bool Matrix::is_zero() const {
    for (int64_t v : a_)
        if (v != 0) return false;
    return true;
}

// Row reduction; returns pivot columns.
static std::vector<int> reduce(Matrix& m, const Fp& f) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (f.norm(m.at(r, col)) != 0) { piv = r; break; }
        if (piv < 0) continue;
        for (int c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(piv, c));
        int64_t s = f.inv(m.at(row, col));
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) = f.mul(m.at(row, c), s);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            int64_t v = f.norm(m.at(r, col));
            if (v == 0) continue;
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) = f.sub(m.at(r, c), f.mul(v, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Matrix m, const Fp& f) { return static_cast<int>(reduce(m, f).size()); }

Matrix nullspace(Matrix m, const Fp& f) {
    const int n = m.cols();
    auto pivots = reduce(m, f);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    Matrix basis(n, n - static_cast<int>(pivots.size()));
    int out = 0;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        basis.at(free, out) = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            basis.at(pivots[i], out) = f.sub(0, m.at(static_cast<int>(i), free));
        ++out;
    }
    return basis;
}

bool solve(Matrix m, std::vector<int64_t> rhs, const Fp& f, std::vector<int64_t>& out) {
    const int rows = m.rows(), cols = m.cols();
    Matrix aug(rows, cols + 1);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, cols) = f.norm(rhs.at(r));
    }
    // reduce only on the coefficient columns
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (f.norm(aug.at(r, col)) != 0) { piv = r; break; }
        if (piv < 0) continue;
        for (int c = 0; c <= cols; ++c) std::swap(aug.at(row, c), aug.at(piv, c));
        int64_t s = f.inv(aug.at(row, col));
        for (int c = 0; c <= cols; ++c) aug.at(row, c) = f.mul(aug.at(row, c), s);
        for (int r = 0; r < rows; ++r) {
            if (r == row) continue;
            int64_t v = f.norm(aug.at(r, col));
            if (v == 0) continue;
            for (int c = 0; c <= cols; ++c) aug.at(r, c) = f.sub(aug.at(r, c), f.mul(v, aug.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (f.norm(aug.at(r, cols)) != 0) return false;
    out.assign(cols, 0);
    for (size_t i = 0; i < pivots.size(); ++i) out[pivots[i]] = aug.at(static_cast<int>(i), cols);
    return true;
}

}  // namespace gentle
