#include "suptor/fp_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "suptor/arith.hpp"
#include "suptor/errors.hpp"

namespace suptor {

FpMatrix::FpMatrix(std::int64_t p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    if (rows < 0 || cols < 0)
        throw ArgumentError("negative matrix dimension");
}

FpMatrix FpMatrix::identity(std::int64_t p, int n) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::from_rows(std::int64_t p, const std::vector<std::vector<std::int64_t>> &rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    FpMatrix m(p, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw ArgumentError("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
}

FpMatrix FpMatrix::unit(std::int64_t p, int n, int i, int j) {
    FpMatrix m(p, n, n);
    m.set(i, j, 1);
    return m;
}

std::size_t FpMatrix::index(int i, int j) const {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_)
        throw ArgumentError("matrix index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
}

void FpMatrix::set(int i, int j, std::int64_t value) { data_[index(i, j)] = mod(value, p_); }

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(p_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.set(j, i, (*this)(i, j));
    return t;
}

FpMatrix FpMatrix::scaled(std::int64_t c) const {
    FpMatrix r = *this;
    for (auto &x : r.data_)
        x = mulmod(x, c, p_);
    return r;
}

std::int64_t FpMatrix::trace() const {
    std::int64_t t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i)
        t = mod(t + (*this)(i, i), p_);
    return t;
}

bool FpMatrix::is_zero() const {
    for (auto x : data_)
        if (x != 0)
            return false;
    return true;
}

FpMatrix &FpMatrix::operator+=(const FpMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw ArgumentError("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] = mod(data_[i] + o.data_[i], p_);
    return *this;
}

FpMatrix &FpMatrix::operator-=(const FpMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw ArgumentError("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] = mod(data_[i] - o.data_[i], p_);
    return *this;
}

FpMatrix operator*(const FpMatrix &a, const FpMatrix &b) {
    if (a.cols_ != b.rows_ || a.p_ != b.p_)
        throw ArgumentError("matrix shape mismatch in product");
    FpMatrix c(a.p_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const std::int64_t x = a(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < b.cols_; ++j)
                c.data_[c.index(i, j)] = mod(c.data_[c.index(i, j)] + mulmod(x, b(k, j), a.p_), a.p_);
        }
    return c;
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j);
    }
    os << ']';
    return os.str();
}

FpMatrix bracket(const FpMatrix &a, const FpMatrix &b) { return a * b - b * a; }

namespace {

// Row-reduce in place; returns (rank, determinant when square).
std::pair<int, std::int64_t> eliminate(FpMatrix &a) {
    const std::int64_t p = a.prime();
    std::int64_t det = 1;
    int rank = 0;
    for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < a.rows(); ++i)
            if (a(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            det = 0;
            continue;
        }
        if (pivot != rank) {
            for (int j = 0; j < a.cols(); ++j) {
                const std::int64_t t = a(pivot, j);
                a.set(pivot, j, a(rank, j));
                a.set(rank, j, t);
            }
            det = mod(-det, p);
        }
        const std::int64_t pv = a(rank, col);
        det = mulmod(det, pv, p);
        const std::int64_t inv = invmod(pv, p);
        for (int i = rank + 1; i < a.rows(); ++i) {
            const std::int64_t f = mulmod(a(i, col), inv, p);
            if (f == 0)
                continue;
            for (int j = col; j < a.cols(); ++j)
                a.set(i, j, a(i, j) - mulmod(f, a(rank, j), p));
        }
        ++rank;
    }
    if (rank < a.rows())
        det = 0;
    return {rank, det};
}

} // namespace

std::int64_t fp_det(FpMatrix a) {
    if (a.rows() != a.cols())
        throw ArgumentError("determinant of a non-square matrix");
    return eliminate(a).second;
}

int fp_rank(FpMatrix a) { return eliminate(a).first; }

FpMatrix fp_inverse(const FpMatrix &a) {
    const int n = a.rows();
    if (n != a.cols())
        throw ArgumentError("inverse of a non-square matrix");
    const std::int64_t p = a.prime();
    FpMatrix aug(p, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.set(i, j, a(i, j));
        aug.set(i, n + i, 1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (aug(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            throw ArgumentError("singular matrix over F_" + std::to_string(p));
        if (pivot != col)
            for (int j = 0; j < 2 * n; ++j) {
                const std::int64_t t = aug(pivot, j);
                aug.set(pivot, j, aug(col, j));
                aug.set(col, j, t);
            }
        const std::int64_t inv = invmod(aug(col, col), p);
        for (int j = 0; j < 2 * n; ++j)
            aug.set(col, j, mulmod(aug(col, j), inv, p));
        for (int i = 0; i < n; ++i) {
            if (i == col || aug(i, col) == 0)
                continue;
            const std::int64_t f = aug(i, col);
            for (int j = 0; j < 2 * n; ++j)
                aug.set(i, j, aug(i, j) - mulmod(f, aug(col, j), p));
        }
    }
    FpMatrix out(p, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.set(i, j, aug(i, n + j));
    return out;
}

int fp_span_rank(const std::vector<FpMatrix> &family) {
    if (family.empty())
        return 0;
    const std::int64_t p = family[0].prime();
    const int width = family[0].rows() * family[0].cols();
    FpMatrix stacked(p, static_cast<int>(family.size()), width);
    for (std::size_t k = 0; k < family.size(); ++k)
        for (int e = 0; e < width; ++e)
            stacked.set(static_cast<int>(k), e, family[k].data()[static_cast<std::size_t>(e)]);
    return fp_rank(stacked);
}

} // namespace suptor
