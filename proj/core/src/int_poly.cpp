#include "suptor/int_poly.hpp"

#include <cctype>
#include <sstream>

#include "suptor/errors.hpp"
#include "suptor/int_linalg.hpp"

namespace suptor {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
    if (i < 0 || i > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

IntPoly IntPoly::derivative() const {
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return IntPoly(std::move(d));
}

mpz_class IntPoly::eval(const mpz_class &x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

mpz_class IntPoly::norm2_ceil() const {
    mpz_class s = 0;
    for (const auto &c : coeffs_)
        s += c * c;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (r * r < s)
        r += 1;
    return r;
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class &c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        const mpz_class a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || a != 1)
            os << a.get_str();
        if (i > 0)
            os << (a != 1 ? "*x" : "x");
        if (i > 1)
            os << '^' << i;
    }
    return os.str();
}

IntPoly operator+(const IntPoly &a, const IntPoly &b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] += b.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly &a, const IntPoly &b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] -= b.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly &a, const IntPoly &b) {
    if (a.is_zero() || b.is_zero())
        return IntPoly();
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly &a, const IntPoly &b) {
    if (!b.is_monic())
        throw ArgumentError("divisor must be monic");
    std::vector<mpz_class> r = a.coeffs();
    const int db = b.degree();
    std::vector<mpz_class> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, 0);
    for (int i = a.degree(); i >= db; --i) {
        const mpz_class c = r[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i])))
                chars_.push_back({text[i], i});
        end_ = text.size();
    }

    IntPoly parse() {
        if (chars_.empty())
            throw ParseError("empty polynomial", 0);
        std::vector<mpz_class> coeffs;
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++at_;
        }
        for (;;) {
            auto [c, e] = term();
            if (coeffs.size() <= e)
                coeffs.resize(e + 1, 0);
            coeffs[e] += sign * c;
            if (done())
                break;
            if (peek() != '+' && peek() != '-')
                throw ParseError(std::string("unexpected character '") + peek() + "'", pos());
            sign = peek() == '-' ? -1 : 1;
            ++at_;
        }
        IntPoly f(std::move(coeffs));
        if (!f.is_monic())
            throw ParseError("polynomial is not monic", 0);
        return f;
    }

private:
    struct Char {
        char c;
        std::size_t pos;
    };

    bool done() const { return at_ >= chars_.size(); }
    char peek() const { return done() ? '\0' : chars_[at_].c; }
    std::size_t pos() const { return done() ? end_ : chars_[at_].pos; }

    mpz_class integer() {
        std::string digits;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            ++at_;
        }
        if (peek() == '.' || peek() == '/' || peek() == 'e' || peek() == 'E')
            throw ParseError("coefficient is not an integer", pos());
        return mpz_class(digits);
    }

    std::pair<mpz_class, std::size_t> term() {
        mpz_class c = 1;
        bool has_x = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = integer();
            if (peek() == '*') {
                ++at_;
                if (peek() != 'x')
                    throw ParseError("expected 'x' after '*'", pos());
            }
        } else if (peek() != 'x') {
            throw ParseError(done() ? std::string("expected a term") : std::string("expected a term, got '") + peek() + "'",
                             pos());
        }
        if (peek() == 'x') {
            ++at_;
            has_x = true;
        }
        if (!has_x)
            return {c, 0};
        if (peek() != '^')
            return {c, 1};
        ++at_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("exponent must be a positive integer", pos());
        const std::size_t at = pos();
        const mpz_class e = integer();
        if (e < 1)
            throw ParseError("exponent must be a positive integer", at);
        if (e > 4096)
            throw ParseError("exponent too large", at);
        return {c, static_cast<std::size_t>(e.get_ui())};
    }

    std::vector<Char> chars_;
    std::size_t at_ = 0;
    std::size_t end_ = 0;
};

} // namespace

IntPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

mpz_class resultant(const IntPoly &f, const IntPoly &g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0)
        return 0;
    if (m == 0 && n == 0)
        return 1;
    const int size = m + n;
    IntMatrix s(static_cast<std::size_t>(size), std::vector<mpz_class>(static_cast<std::size_t>(size), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = g.coeff(n - j);
    return bareiss_det(std::move(s));
}

mpz_class discriminant(const IntPoly &f) {
    const int r = f.degree();
    if (r < 2)
        throw ArgumentError("discriminant needs degree >= 2");
    mpz_class res = resultant(f, f.derivative());
    if ((static_cast<long>(r) * (r - 1) / 2) % 2 == 1)
        res = -res;
    if (res % f.lead() != 0)
        throw InternalError("resultant not divisible by the leading coefficient");
    return res / f.lead();
}

} // namespace suptor
