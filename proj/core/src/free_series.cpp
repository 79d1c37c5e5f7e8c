#include "suptor/free_series.hpp"

#include <sstream>

#include "suptor/arith.hpp"
#include "suptor/errors.hpp"

namespace suptor {

FreeSeries::FreeSeries(std::shared_ptr<const Alphabet> alphabet, int truncation)
    : alphabet_(std::move(alphabet)), truncation_(truncation) {
    if (!alphabet_)
        throw ArgumentError("null alphabet");
    if (alphabet_->size() > 255)
        throw ArgumentError("alphabet too large");
    if (truncation < 1)
        throw ArgumentError("truncation must be positive");
}

FreeSeries FreeSeries::constant(std::shared_ptr<const Alphabet> alphabet, int truncation, const mpq_class &c) {
    FreeSeries s(std::move(alphabet), truncation);
    s.add_term({0, {}}, c);
    return s;
}

FreeSeries FreeSeries::t_power(std::shared_ptr<const Alphabet> alphabet, int truncation, int degree,
                               const mpq_class &coefficient) {
    FreeSeries s(std::move(alphabet), truncation);
    if (degree < 0)
        throw ArgumentError("negative t-degree");
    s.add_term({degree, {}}, coefficient);
    return s;
}

FreeSeries FreeSeries::monomial(std::shared_ptr<const Alphabet> alphabet, int truncation, int degree,
                                const std::string &symbol, const mpq_class &coefficient) {
    FreeSeries s(std::move(alphabet), truncation);
    const auto idx = static_cast<std::uint8_t>(s.symbol_index(symbol));
    if (degree < 0)
        throw ArgumentError("negative t-degree");
    if (degree < truncation)
        s.add_term({degree, {idx}}, coefficient);
    return s;
}

std::size_t FreeSeries::symbol_index(const std::string &name) const {
    for (std::size_t i = 0; i < alphabet_->size(); ++i)
        if ((*alphabet_)[i] == name)
            return i;
    throw ArgumentError("symbol '" + name + "' is not in the alphabet");
}

mpq_class FreeSeries::coefficient(int degree, const Word &word) const {
    auto it = terms_.find({degree, word});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void FreeSeries::add_term(const Key &key, const mpq_class &c) {
    if (key.first >= truncation_ || c == 0)
        return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void FreeSeries::check_compatible(const FreeSeries &o) const {
    if (truncation_ != o.truncation_)
        throw ArgumentError("series truncations differ");
    if (alphabet_ != o.alphabet_ && *alphabet_ != *o.alphabet_)
        throw ArgumentError("series alphabets differ");
}

FreeSeries &FreeSeries::operator+=(const FreeSeries &o) {
    check_compatible(o);
    for (const auto &[k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

FreeSeries &FreeSeries::operator-=(const FreeSeries &o) {
    check_compatible(o);
    for (const auto &[k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

FreeSeries &FreeSeries::operator*=(const mpq_class &c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, v] : terms_)
        v *= c;
    return *this;
}

FreeSeries operator*(const FreeSeries &a, const FreeSeries &b) {
    a.check_compatible(b);
    FreeSeries out(a.alphabet_, a.truncation_);
    for (const auto &[ka, ca] : a.terms_)
        for (const auto &[kb, cb] : b.terms_) {
            const int deg = ka.first + kb.first;
            if (deg >= a.truncation_)
                break;
            FreeSeries::Word w = ka.second;
            w.insert(w.end(), kb.second.begin(), kb.second.end());
            out.add_term({deg, std::move(w)}, ca * cb);
        }
    return out;
}

bool operator==(const FreeSeries &a, const FreeSeries &b) {
    a.check_compatible(b);
    return a.terms_ == b.terms_;
}

FreeSeries series_mul(const FreeSeries &p, const FreeSeries &q) { return p * q; }

std::string FreeSeries::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : terms_) {
        os << (first ? "" : " + ") << to_fraction_string(c);
        if (k.first > 0)
            os << "*t^" << k.first;
        for (auto s : k.second)
            os << '*' << (*alphabet_)[s];
        first = false;
    }
    return os.str();
}

MatLocal evaluate(const FreeSeries &s, const std::vector<FpMatrix> &values, const RingCtx &ctx) {
    if (values.size() != s.alphabet().size())
        throw ArgumentError("one matrix per symbol required");
    const int ell = ctx.ell();
    const int d = values.empty() ? 1 : values[0].rows();
    MatLocal out(ctx, d);
    for (const auto &[k, c] : s.terms()) {
        if (k.first >= ctx.precision())
            continue;
        FpMatrix word = FpMatrix::identity(ell, d);
        for (auto sym : k.second)
            word = word * values[sym];
        mpz_class num = c.get_num(), den = c.get_den();
        mpz_class ell_z = ell;
        mpz_class den_r;
        mpz_fdiv_r(den_r.get_mpz_t(), den.get_mpz_t(), ell_z.get_mpz_t());
        if (den_r == 0)
            throw DomainError("coefficient denominator divisible by ell");
        const CycloElt coef = CycloElt::from_int(ctx, num) * ring_inv(CycloElt::from_int(ctx, den));
        out += MatLocal::from_fp(ctx, word).scaled(coef).shift_up(k.first);
    }
    return out;
}

} // namespace suptor
