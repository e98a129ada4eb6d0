#include "modunits/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace modunits {

QSeries::QSeries(int prec) {
    if (prec < 1) throw DomainError("QSeries: precision must be >= 1");
    coeff_.assign(static_cast<std::size_t>(prec), Rational(0));
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeff_(std::move(coeffs)) {
    if (coeff_.empty()) throw DomainError("QSeries: precision must be >= 1");
}

QSeries QSeries::one(int prec) {
    QSeries s(prec);
    s.coeff_[0] = 1;
    return s;
}

QSeries QSeries::monomial(Rational c, int exponent, int prec) {
    QSeries s(prec);
    if (exponent < 0) throw DomainError("QSeries::monomial: exponent must be >= 0");
    if (exponent < prec) s.coeff_[static_cast<std::size_t>(exponent)] = std::move(c);
    return s;
}

std::optional<int> QSeries::valuation() const {
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] != 0) return static_cast<int>(i);
    }
    return std::nullopt;
}

QSeries add(const QSeries& a, const QSeries& b) {
    const int p = std::min(a.prec(), b.prec());
    std::vector<Rational> out(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) out[i] = a.coeff(i) + b.coeff(i);
    return QSeries(std::move(out));
}

QSeries sub(const QSeries& a, const QSeries& b) {
    const int p = std::min(a.prec(), b.prec());
    std::vector<Rational> out(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) out[i] = a.coeff(i) - b.coeff(i);
    return QSeries(std::move(out));
}

QSeries neg(const QSeries& a) {
    std::vector<Rational> out(a.coeffs());
    for (auto& c : out) c = -c;
    return QSeries(std::move(out));
}

QSeries mul(const QSeries& a, const QSeries& b) {
    const int p = std::min(a.prec(), b.prec());
    std::vector<Rational> out(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        const Rational& ai = a.coeff(i);
        if (ai == 0) continue;
        for (int j = 0; j + i < p; ++j) {
            const Rational& bj = b.coeff(j);
            if (bj != 0) out[static_cast<std::size_t>(i + j)] += ai * bj;
        }
    }
    return QSeries(std::move(out));
}

QSeries scale(const QSeries& a, const Rational& c) {
    std::vector<Rational> out(a.coeffs());
    for (auto& x : out) x *= c;
    return QSeries(std::move(out));
}

QSeries div(const QSeries& a, const QSeries& b) {
    const auto vb = b.valuation();
    if (!vb) throw DivisionByZeroSeries("div: division by zero series");
    const int p = std::min(a.prec(), b.prec()) - *vb;
    if (p < 1)
        throw PrecisionInsufficient("div: precision insufficient (valuation shift consumes it)");
    const auto va = a.valuation();
    if (!va) return QSeries(p); // 0 / b = 0 at the reduced precision
    if (*va < *vb) throw ValuationMismatch("div: valuation mismatch (numerator valuation below divisor)");
    std::vector<Rational> out(static_cast<std::size_t>(p));
    const Rational& lead = b.coeff(*vb);
    for (int n = 0; n < p; ++n) {
        Rational s = a.coeff(n + *vb);
        for (int i = 0; i < n; ++i) {
            if (out[static_cast<std::size_t>(i)] != 0)
                s -= out[static_cast<std::size_t>(i)] * b.coeff(n - i + *vb);
        }
        out[static_cast<std::size_t>(n)] = s / lead;
    }
    return QSeries(std::move(out));
}

QSeries pow(const QSeries& a, long e) {
    if (e == 0) return QSeries::one(a.prec());
    if (e < 0) return pow(div(QSeries::one(a.prec()), a), -e);
    QSeries base = a;
    QSeries result = QSeries::one(a.prec());
    bool started = false;
    while (e) {
        if (e & 1) {
            result = started ? mul(result, base) : base;
            started = true;
        }
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

namespace {

// (1 - q^step)^e as a sparse list of (exponent, coefficient), exact binomial
// series for any integer e.
std::vector<std::pair<int, Rational>> binomial_factor(std::int64_t e, std::int64_t step,
                                                      int prec) {
    std::vector<std::pair<int, Rational>> terms{{0, Rational(1)}};
    Rational c = 1;
    for (std::int64_t k = 1; k * step < prec; ++k) {
        c *= Rational(e - (k - 1), k);
        Rational signed_c = (k % 2 == 0) ? c : -c;
        if (signed_c != 0)
            terms.emplace_back(static_cast<int>(k * step), std::move(signed_c));
        if (c == 0) break; // e >= 0 and k > e: binomial series terminates
    }
    return terms;
}

void mul_sparse_inplace(std::vector<Rational>& dense,
                        const std::vector<std::pair<int, Rational>>& sparse) {
    const int p = static_cast<int>(dense.size());
    // Terms beyond the first have positive exponents, so updating from the
    // top down uses only not-yet-overwritten entries.
    for (int i = p - 1; i >= 0; --i) {
        Rational acc = dense[static_cast<std::size_t>(i)]; // exponent-0 term has coeff 1
        for (std::size_t t = 1; t < sparse.size(); ++t) {
            const int j = i - sparse[t].first;
            if (j < 0) break;
            if (dense[static_cast<std::size_t>(j)] != 0)
                acc += sparse[t].second * dense[static_cast<std::size_t>(j)];
        }
        dense[static_cast<std::size_t>(i)] = std::move(acc);
    }
}

} // namespace

QSeries euler_factor(std::int64_t m, std::int64_t e, int prec) {
    if (m < 1) throw DomainError("euler_factor: m must be >= 1");
    if (prec < 1) throw DomainError("euler_factor: precision must be >= 1");
    std::vector<Rational> out(static_cast<std::size_t>(prec), Rational(0));
    out[0] = 1;
    if (e != 0) {
        for (std::int64_t n = 1; n * m < prec; ++n)
            mul_sparse_inplace(out, binomial_factor(e, n * m, prec));
    }
    return QSeries(std::move(out));
}

QSeries dilate(const QSeries& a, std::int64_t n) {
    if (n < 1) throw DomainError("dilate: factor must be >= 1");
    std::vector<Rational> out(static_cast<std::size_t>(a.prec()) * static_cast<std::size_t>(n),
                              Rational(0));
    for (int i = 0; i < a.prec(); ++i)
        out[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)] = a.coeff(i);
    return QSeries(std::move(out));
}

QSeries truncate(const QSeries& a, int new_prec) {
    if (new_prec < 1 || new_prec > a.prec())
        throw DomainError("truncate: target precision out of range");
    std::vector<Rational> out(a.coeffs().begin(), a.coeffs().begin() + new_prec);
    return QSeries(std::move(out));
}

QSeries shift(const QSeries& a, int k) {
    if (k < 0) throw DomainError("shift: exponent must be >= 0");
    std::vector<Rational> out(static_cast<std::size_t>(a.prec()), Rational(0));
    for (int i = 0; i + k < a.prec(); ++i) out[static_cast<std::size_t>(i + k)] = a.coeff(i);
    return QSeries(std::move(out));
}

std::string to_string(const QSeries& a) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < a.prec(); ++i) {
        const Rational& c = a.coeff(i);
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational abs_c = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (i == 0) {
            os << to_string(abs_c);
        } else {
            if (abs_c != 1) os << to_string(abs_c) << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) {
        os << "O(q^" << a.prec() << ")";
    } else {
        os << " + O(q^" << a.prec() << ")";
    }
    return os.str();
}

} // namespace modunits
