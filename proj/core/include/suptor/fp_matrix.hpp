#pragma once

// Dense matrices over the prime field F_p.

#include <cstdint>
#include <string>
#include <vector>

namespace suptor {

class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::int64_t p, int rows, int cols);

    static FpMatrix identity(std::int64_t p, int n);
    /// Entries are reduced modulo p.
    static FpMatrix from_rows(std::int64_t p, const std::vector<std::vector<std::int64_t>> &rows);
    /// The matrix unit E_ij (0-based).
    static FpMatrix unit(std::int64_t p, int n, int i, int j);

    std::int64_t prime() const noexcept { return p_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    std::int64_t operator()(int i, int j) const { return data_[index(i, j)]; }
    /// Stores value mod p.
    void set(int i, int j, std::int64_t value);

    FpMatrix transpose() const;
    FpMatrix scaled(std::int64_t c) const;
    std::int64_t trace() const;
    bool is_zero() const;

    FpMatrix &operator+=(const FpMatrix &o);
    FpMatrix &operator-=(const FpMatrix &o);
    friend FpMatrix operator+(FpMatrix a, const FpMatrix &b) { return a += b; }
    friend FpMatrix operator-(FpMatrix a, const FpMatrix &b) { return a -= b; }
    friend FpMatrix operator*(const FpMatrix &a, const FpMatrix &b);
    friend bool operator==(const FpMatrix &a, const FpMatrix &b) = default;

    std::string to_string() const;

    const std::vector<std::int64_t> &data() const noexcept { return data_; }

private:
    std::size_t index(int i, int j) const;

    std::int64_t p_ = 2;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// [A, B] = AB - BA.
FpMatrix bracket(const FpMatrix &a, const FpMatrix &b);

std::int64_t fp_det(FpMatrix a);
int fp_rank(FpMatrix a);
/// Throws ArgumentError if singular.
FpMatrix fp_inverse(const FpMatrix &a);

/// Rank of a family of equally shaped matrices, each flattened to a vector.
int fp_span_rank(const std::vector<FpMatrix> &family);

} // namespace suptor
