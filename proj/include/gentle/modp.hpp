#pragma once

#include <cstdint>
#include <vector>

/* Dense exact linear algebra over a prime field F_p. */

namespace gentle {

struct Fp {
    int64_t p;
    int64_t norm(int64_t x) const { x %= p; return x < 0 ? x + p : x; }
    int64_t add(int64_t a, int64_t b) const { return norm(a + b); }
    int64_t sub(int64_t a, int64_t b) const { return norm(a - b); }
    int64_t mul(int64_t a, int64_t b) const { return norm(a * b); }
    int64_t inv(int64_t a) const;  // a != 0 mod p
};

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int64_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    int64_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    static Matrix identity(int n);
    Matrix mul(const Matrix& o, const Fp& f) const;
    bool is_zero() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<int64_t> a_;
};

int rank(Matrix m, const Fp& f);
// Basis of the right nullspace {x : m x = 0}, as columns of the result.
Matrix nullspace(Matrix m, const Fp& f);
// One solution x of m x = rhs, if any (rhs is a column vector).
bool solve(Matrix m, std::vector<int64_t> rhs, const Fp& f, std::vector<int64_t>& out);

}  // namespace gentle
