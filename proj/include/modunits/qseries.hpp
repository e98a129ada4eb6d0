#ifndef MODUNITS_QSERIES_HPP
#define MODUNITS_QSERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "modunits/arith.hpp"

namespace modunits {

// Dense truncated power series in q over exact rationals. A series of
// precision p is known modulo q^p: coefficients 0..p-1 are stored, nothing
// beyond them is trusted. Every operation propagates the min of the operand
// precisions (reduced by the valuation shift on division).
class QSeries {
public:
    // Zero series of the given precision (prec >= 1).
    explicit QSeries(int prec);

    // Takes ownership of the coefficients; precision = size.
    explicit QSeries(std::vector<Rational> coeffs);

    static QSeries one(int prec);
    static QSeries monomial(Rational c, int exponent, int prec);

    int prec() const { return static_cast<int>(coeff_.size()); }
    const Rational& coeff(int i) const { return coeff_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rational>& coeffs() const { return coeff_; }

    // Index of the first nonzero coefficient; nullopt when the series is
    // zero up to its precision.
    std::optional<int> valuation() const;
    bool is_zero() const { return !valuation().has_value(); }

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<Rational> coeff_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries neg(const QSeries& a);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Rational& c);

// Exact long division after shifting out q^{valuation(b)}. Requires
// valuation(b) <= valuation(a); result precision is min(prec) - valuation(b).
QSeries div(const QSeries& a, const QSeries& b);

// Repeated squaring; e = 0 gives 1, negative e inverts first (which needs
// valuation(a) = 0, as in div).
QSeries pow(const QSeries& a, long e);

// Expansion of prod_{n>=1} (1 - q^{mn})^e to the given precision.
QSeries euler_factor(std::int64_t m, std::int64_t e, int prec);

// Coefficient of q^{nj} becomes a's coefficient of q^j; precision grows to
// a.prec * n.
QSeries dilate(const QSeries& a, std::int64_t n);

// First new_prec coefficients (new_prec <= a.prec).
QSeries truncate(const QSeries& a, int new_prec);

// Multiplies by q^k (k >= 0), keeping the precision.
QSeries shift(const QSeries& a, int k);

// "c0 + c1*q + c2*q^2 + ... + O(q^prec)" with exact rationals as "a/b".
std::string to_string(const QSeries& a);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

} // namespace modunits

#endif
