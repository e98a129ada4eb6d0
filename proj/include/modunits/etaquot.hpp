#ifndef MODUNITS_ETAQUOT_HPP
#define MODUNITS_ETAQUOT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modunits/arith.hpp"
#include "modunits/qseries.hpp"

namespace modunits {

// Symbolic prod_{m|N} eta(m tau)^{a_m}. Zero exponents are dropped on
// construction so equality is exponent-set equality.
class EtaQuotient {
public:
    EtaQuotient(std::int64_t level, std::map<std::int64_t, std::int64_t> exponents);

    std::int64_t level() const { return level_; }
    const std::map<std::int64_t, std::int64_t>& exponents() const { return exponents_; }
    std::int64_t exponent(std::int64_t m) const;

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    std::int64_t level_;
    std::map<std::int64_t, std::int64_t> exponents_;
};

// 2k = (1/2) sum a_m; throws DomainError when sum a_m is odd.
std::int64_t weight_times_two(const EtaQuotient& f);

// nu(f) = (1/24) sum m a_m. Not assumed integral here.
Rational valuation(const EtaQuotient& f);

// ord(f, 1/c) = (N/24) sum gcd(c,m)^2 / m * a_m, for 1 <= c <= N.
Rational cusp_order(const EtaQuotient& f, std::int64_t c);

struct CuspOrderEntry {
    std::int64_t c;
    Rational order;
};

// One entry per divisor c of N (the order at -d/c depends only on gcd(c,N)).
struct CuspOrderReport {
    std::int64_t level;
    std::vector<CuspOrderEntry> entries;
};

CuspOrderReport cusp_orders(const EtaQuotient& f);

// Conditions of the weak-modularity criterion; prod m'^{a_m} must be a
// rational square, and both (1/24) sum m a_m and (1/24) sum m' a_m integers.
struct WeakModularityReport {
    bool square_condition = false;
    bool valuation_integral = false;
    bool dual_valuation_integral = false;
    Rational valuation;
    Rational dual_valuation;
    bool passed() const {
        return square_condition && valuation_integral && dual_valuation_integral;
    }
};

WeakModularityReport is_weakly_modular(const EtaQuotient& f);

// Conditions of the strong-unit criterion: (i) square condition,
// (ii) (1/24) sum m a_m a positive integer, (iii) sum gcd(c,m)^2/m a_m = 0
// for every c in 1..N-1 (checked on divisors of N, which suffices since the
// sum depends on c only through gcd(c,N)). The order at c = N must be > 0.
struct StrongUnitReport {
    bool square_condition = false;
    bool valuation_positive_integer = false;
    bool interior_cusps_nonvanishing = false;
    bool infinite_cusp_vanishing = false;
    Rational valuation;
    bool passed() const {
        return square_condition && valuation_positive_integer &&
               interior_cusps_nonvanishing && infinite_cusp_vanishing;
    }
};

StrongUnitReport is_strong_unit(const EtaQuotient& f);

// q^{nu(f)} * prod euler_factor(m, a_m) to q^prec. Throws DomainError when
// nu(f) is fractional or negative.
QSeries expand(const EtaQuotient& f, int prec);

// tau -> n tau: exponent a_m moves to divisor n*m, level becomes n*N.
EtaQuotient dilate_quotient(const EtaQuotient& f, std::int64_t n);

// Exhaustive search over |a_m| <= exp_bound with weight <= max_weight for
// strong units, sorted by (weight, valuation, exponents). Desk scale only:
// the box has (2*exp_bound+1)^d(N) corners.
std::vector<EtaQuotient> search_eta_units(std::int64_t N, std::int64_t max_weight,
                                          std::int64_t exp_bound);

// "eta(tau)^-8 * eta(2*tau)^16", ordered by divisor; "1" for empty.
std::string to_string(const EtaQuotient& f);

} // namespace modunits

#endif
