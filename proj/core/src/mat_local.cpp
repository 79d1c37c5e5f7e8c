#include "suptor/mat_local.hpp"

#include <algorithm>
#include <utility>

#include <nlohmann/json.hpp>

#include "suptor/errors.hpp"

namespace suptor {

MatLocal::MatLocal(RingCtx ctx, int dim) : ctx_(std::move(ctx)), dim_(dim) {
    if (dim < 1)
        throw ArgumentError("matrix dimension must be positive");
    entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), CycloElt(ctx_));
}

MatLocal::MatLocal(RingCtx ctx, int dim, std::vector<CycloElt> entries)
    : ctx_(std::move(ctx)), dim_(dim), entries_(std::move(entries)) {
    if (dim < 1)
        throw ArgumentError("matrix dimension must be positive");
    if (entries_.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
        throw ArgumentError("expected " + std::to_string(dim * dim) + " entries, got " +
                            std::to_string(entries_.size()));
    for (const auto &e : entries_)
        require_same_ctx(ctx_, e.ctx());
}

MatLocal MatLocal::identity(const RingCtx &ctx, int dim) {
    MatLocal m(ctx, dim);
    for (int i = 0; i < dim; ++i)
        m.set(i, i, CycloElt::one(ctx));
    return m;
}

MatLocal MatLocal::diagonal(const std::vector<CycloElt> &diag) {
    if (diag.empty())
        throw ArgumentError("empty diagonal");
    MatLocal m(diag[0].ctx(), static_cast<int>(diag.size()));
    for (std::size_t i = 0; i < diag.size(); ++i)
        m.set(static_cast<int>(i), static_cast<int>(i), diag[i]);
    return m;
}

MatLocal MatLocal::from_fp(const RingCtx &ctx, const FpMatrix &m) {
    if (m.rows() != m.cols())
        throw ArgumentError("square matrix required");
    if (m.prime() != ctx.ell())
        throw ContextError("F_p matrix over the wrong prime");
    MatLocal out(ctx, m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.set(i, j, CycloElt::from_int(ctx, m(i, j)));
    return out;
}

MatLocal MatLocal::from_digits(const RingCtx &ctx, const std::vector<FpMatrix> &levels) {
    if (levels.empty())
        throw ArgumentError("empty digit expansion");
    if (static_cast<int>(levels.size()) > ctx.precision())
        throw ArgumentError("more digit levels than precision");
    const int d = levels[0].rows();
    MatLocal out(ctx, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<int> digits(static_cast<std::size_t>(ctx.precision()), 0);
            for (std::size_t k = 0; k < levels.size(); ++k)
                digits[k] = static_cast<int>(levels[k](i, j));
            out.set(i, j, CycloElt(ctx, std::move(digits)));
        }
    return out;
}

const CycloElt &MatLocal::operator()(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
        throw ArgumentError("matrix index out of range");
    return entries_[static_cast<std::size_t>(i * dim_ + j)];
}

void MatLocal::set(int i, int j, CycloElt value) {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
        throw ArgumentError("matrix index out of range");
    require_same_ctx(ctx_, value.ctx());
    entries_[static_cast<std::size_t>(i * dim_ + j)] = std::move(value);
}

FpMatrix MatLocal::digit(int k) const {
    FpMatrix m(ell(), dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            m.set(i, j, (*this)(i, j).digit(k));
    return m;
}

std::vector<FpMatrix> MatLocal::digit_expansion() const {
    std::vector<FpMatrix> out;
    for (int k = 0; k < precision(); ++k)
        out.push_back(digit(k));
    return out;
}

int MatLocal::level() const {
    const MatLocal diff = *this - identity(ctx_, dim_);
    return diff.valuation();
}

int MatLocal::valuation() const {
    int v = precision();
    for (const auto &e : entries_)
        v = std::min(v, e.valuation());
    return v;
}

MatLocal MatLocal::transpose() const {
    MatLocal t(ctx_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            t.set(j, i, (*this)(i, j));
    return t;
}

MatLocal MatLocal::dagger() const {
    MatLocal t(ctx_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            t.set(j, i, conjugate((*this)(i, j)));
    return t;
}

MatLocal MatLocal::scaled(const CycloElt &c) const {
    MatLocal r = *this;
    for (auto &e : r.entries_)
        e *= c;
    return r;
}

MatLocal MatLocal::shift_up(int s) const {
    MatLocal r = *this;
    for (auto &e : r.entries_)
        e = e.shift_up(s);
    return r;
}

MatLocal MatLocal::reduce(int p) const {
    std::vector<CycloElt> es;
    es.reserve(entries_.size());
    for (const auto &e : entries_)
        es.push_back(e.reduce(p));
    return MatLocal(ctx_.with_precision(p), dim_, std::move(es));
}

MatLocal MatLocal::extend(int p) const {
    std::vector<CycloElt> es;
    es.reserve(entries_.size());
    for (const auto &e : entries_)
        es.push_back(e.extend(p));
    return MatLocal(ctx_.with_precision(p), dim_, std::move(es));
}

CycloElt MatLocal::trace() const {
    CycloElt t(ctx_);
    for (int i = 0; i < dim_; ++i)
        t += (*this)(i, i);
    return t;
}

MatLocal MatLocal::operator-() const {
    MatLocal r = *this;
    for (auto &e : r.entries_)
        e = -e;
    return r;
}

void MatLocal::check_compatible(const MatLocal &o) const {
    require_same_ctx(ctx_, o.ctx_);
    if (dim_ != o.dim_)
        throw ArgumentError("matrix dimensions differ");
}

MatLocal &MatLocal::operator+=(const MatLocal &o) {
    check_compatible(o);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += o.entries_[i];
    return *this;
}

MatLocal &MatLocal::operator-=(const MatLocal &o) {
    check_compatible(o);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= o.entries_[i];
    return *this;
}

MatLocal operator*(const MatLocal &a, const MatLocal &b) {
    a.check_compatible(b);
    const int d = a.dim_;
    const auto &t = a.ctx_;
    const std::int64_t M = t.modulus();
    const int ell = t.ell();
    // Accumulate in the zeta basis, canonicalize once per entry.
    std::vector<ZetaPoly> al, bl;
    for (const auto &e : a.entries_)
        al.push_back(e.lift());
    for (const auto &e : b.entries_)
        bl.push_back(e.lift());
    MatLocal c(t, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<__int128> acc(static_cast<std::size_t>(ell), 0);
            for (int k = 0; k < d; ++k) {
                const auto &x = al[static_cast<std::size_t>(i * d + k)];
                const auto &y = bl[static_cast<std::size_t>(k * d + j)];
                for (std::size_t u = 0; u < x.size(); ++u) {
                    if (x[u] == 0)
                        continue;
                    for (std::size_t v = 0; v < y.size(); ++v) {
                        auto &slot = acc[(u + v) % static_cast<std::size_t>(ell)];
                        slot = (slot + static_cast<__int128>(x[u]) * y[v]) % M;
                    }
                }
            }
            std::vector<std::int64_t> poly(acc.size());
            for (std::size_t u = 0; u < acc.size(); ++u)
                poly[u] = static_cast<std::int64_t>(acc[u]);
            c.entries_[static_cast<std::size_t>(i * d + j)] = canonicalize(t, poly);
        }
    return c;
}

bool operator==(const MatLocal &a, const MatLocal &b) {
    a.check_compatible(b);
    return a.entries_ == b.entries_;
}

CycloElt det_local(const MatLocal &a) {
    const int d = a.dim();
    const RingCtx &ctx = a.ctx();
    const int n = ctx.precision();
    std::vector<CycloElt> m = a.entries();
    auto at = [&](int i, int j) -> CycloElt & { return m[static_cast<std::size_t>(i * d + j)]; };

    CycloElt det = CycloElt::one(ctx);
    for (int k = 0; k < d; ++k) {
        int pi = -1, pj = -1, best = n;
        for (int i = k; i < d; ++i)
            for (int j = k; j < d; ++j) {
                const int v = at(i, j).valuation();
                if (v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0)
            return CycloElt::zero(ctx);
        if (pi != k) {
            for (int j = 0; j < d; ++j)
                std::swap(at(pi, j), at(k, j));
            det = -det;
        }
        if (pj != k) {
            for (int i = 0; i < d; ++i)
                std::swap(at(i, pj), at(i, k));
            det = -det;
        }
        const CycloElt pivot = at(k, k);
        det *= pivot;
        const int v = best;
        const CycloElt unit_inv = ring_inv(v > 0 ? pivot.shift_down(v) : pivot);
        for (int i = k + 1; i < d; ++i) {
            if (at(i, k).is_zero())
                continue;
            const CycloElt e = v > 0 ? at(i, k).shift_down(v) : at(i, k);
            const CycloElt q = (e * unit_inv).extend(n);
            for (int j = k; j < d; ++j)
                at(i, j) -= q * at(k, j);
        }
    }
    return det;
}

CycloElt det_base(const MatLocal &a) { return norm(det_local(a)); }

MatLocal inverse(const MatLocal &a) {
    const int d = a.dim();
    const RingCtx &ctx = a.ctx();
    MatLocal left = a;
    MatLocal right = MatLocal::identity(ctx, d);
    auto swap_rows = [d](MatLocal &m, int r1, int r2) {
        for (int j = 0; j < d; ++j) {
            CycloElt t = m(r1, j);
            m.set(r1, j, m(r2, j));
            m.set(r2, j, std::move(t));
        }
    };
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int i = col; i < d; ++i)
            if (left(i, col).is_unit()) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            throw NotAUnit(det_local(a).valuation());
        swap_rows(left, pivot, col);
        swap_rows(right, pivot, col);
        const CycloElt inv = ring_inv(left(col, col));
        for (int j = 0; j < d; ++j) {
            left.set(col, j, left(col, j) * inv);
            right.set(col, j, right(col, j) * inv);
        }
        for (int i = 0; i < d; ++i) {
            if (i == col || left(i, col).is_zero())
                continue;
            const CycloElt f = left(i, col);
            for (int j = 0; j < d; ++j) {
                left.set(i, j, left(i, j) - f * left(col, j));
                right.set(i, j, right(i, j) - f * right(col, j));
            }
        }
    }
    return right;
}

MatLocal inverse_neumann(const MatLocal &a) {
    const int level = a.level();
    if (level < 1)
        throw MembershipError("Neumann inverse needs a matrix congruent to I mod lambda");
    const RingCtx &ctx = a.ctx();
    const MatLocal x = MatLocal::identity(ctx, a.dim()) - a;
    MatLocal sum = MatLocal::identity(ctx, a.dim());
    MatLocal power = sum;
    for (int k = 1; k * level < ctx.precision(); ++k) {
        power = power * x;
        sum += power;
    }
    return sum;
}

void to_json(nlohmann::json &j, const MatLocal &m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto &e : m.entries())
        entries.push_back(std::vector<int>(e.digits().begin(), e.digits().end()));
    j = nlohmann::json{{"ell", m.ell()}, {"precision", m.precision()}, {"dim", m.dim()}, {"entries", entries}};
}

MatLocal mat_from_json(const nlohmann::json &j) {
    try {
        const RingCtx ctx(j.at("ell").get<int>(), j.at("precision").get<int>());
        const int dim = j.at("dim").get<int>();
        const auto &raw = j.at("entries");
        if (!raw.is_array())
            throw ArgumentError("entries must be an array");
        std::vector<CycloElt> entries;
        for (const auto &e : raw)
            entries.emplace_back(ctx, e.get<std::vector<int>>());
        return MatLocal(ctx, dim, std::move(entries));
    } catch (const nlohmann::json::exception &e) {
        throw ArgumentError(std::string("malformed matrix JSON: ") + e.what());
    }
}

} // namespace suptor
