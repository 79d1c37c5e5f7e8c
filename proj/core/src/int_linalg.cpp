#include "suptor/int_linalg.hpp"

#include <algorithm>
#include <utility>

#include "suptor/errors.hpp"

namespace suptor {

mpz_class bareiss_det(IntMatrix m) {
    const std::size_t n = m.size();
    for (const auto &row : m)
        if (row.size() != n)
            throw ArgumentError("determinant of a non-square matrix");
    if (n == 0)
        return 1;
    mpz_class sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<mpz_class> smith_invariants(IntMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (const auto &row : a)
        if (row.size() != cols)
            throw ArgumentError("ragged integer matrix");

    std::vector<mpz_class> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        bool exhausted = false;
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) {
                exhausted = true;
                break;
            }
            std::swap(a[t], a[pi]);
            for (auto &row : a)
                std::swap(row[t], row[pj]);

            bool clean = true;
            const mpz_class p = a[t][t];
            mpz_class q;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), p.get_mpz_t());
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), p.get_mpz_t());
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // Pivot must divide the whole trailing block.
            std::size_t bad_row = rows;
            for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % p != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row == rows)
                break;
            for (std::size_t j = t; j < cols; ++j)
                a[t][j] += a[bad_row][j];
        }
        if (exhausted)
            break;
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

std::vector<mpz_class> group_structure(const AbelianPresentation &p) {
    if (static_cast<int>(p.relations.size()) != p.generators)
        throw ArgumentError("relation matrix must have one row per generator");
    const auto inv = smith_invariants(p.relations);
    if (static_cast<int>(inv.size()) < p.generators)
        throw DomainError("presented abelian group is infinite");
    std::vector<mpz_class> out;
    for (const auto &d : inv)
        if (d != 1)
            out.push_back(d);
    return out;
}

mpz_class group_order(const AbelianPresentation &p) {
    mpz_class order = 1;
    for (const auto &d : group_structure(p))
        order *= d;
    return order;
}

IntMatrix hconcat(const IntMatrix &a, const IntMatrix &b) {
    if (a.size() != b.size())
        throw ArgumentError("row counts differ");
    IntMatrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i].insert(out[i].end(), b[i].begin(), b[i].end());
    return out;
}

mpz_class abelian_order(const AbelianPresentation &p, const IntMatrix &columns) {
    const mpz_class whole = group_order(p);
    const AbelianPresentation quotient{p.generators, hconcat(p.relations, columns)};
    return whole / group_order(quotient);
}

} // namespace suptor
