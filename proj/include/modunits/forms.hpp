#ifndef MODUNITS_FORMS_HPP
#define MODUNITS_FORMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "modunits/qseries.hpp"

namespace modunits {

// A q-expansion known to lie in M_{weight}(Gamma_0(level)); the label records
// the construction recipe.
struct FormExpansion {
    std::int64_t level;
    int weight;
    QSeries series;
    std::string label;
};

// Ordered list of unitary expansions with strictly increasing valuations,
// all at the shared precision.
struct TriangularBasis {
    std::int64_t level;
    int weight;
    int prec;
    std::vector<FormExpansion> elements;
};

// Slack added on top of the Sturm-style bound in policy_prec. Default 2;
// the CLI honors the MODUNITS_PREC_SLACK environment variable.
int precision_slack();
void set_precision_slack(int slack);

// Working precision for (N, weight 2k): ceil(k mu0(N) / 6) + nu(Delta_N) + slack.
// At or above this bound, coefficient agreement is genuine equality of forms.
int policy_prec(std::int64_t N, int k);

// Normalized Eisenstein series 1 - (2 k2 / B_{k2}) sum sigma_{k2-1}(n) q^n,
// for even k2 >= 4.
QSeries eisenstein_series(int k2, int prec);

// The weight-2 level-N Eisenstein form, constant term 1, q-coefficient
// 24/(N-1): 1 + 24/(N-1) sum (sigma(n) - N sigma(n/N)) q^n.
QSeries h2n(std::int64_t N, int prec);

// Unitary valuation-1 element of M_4(Gamma_0(N)): E_4 - h2n(N)^2 rescaled by
// its leading coefficient 240 + 48/(1-N).
QSeries weight4_val1(std::int64_t N, int prec);

// Generating candidates for M_{2k}(Gamma_0(N)): all products, of total weight
// exactly 2k, of h2n(d)(e tau), E_{2j}(d tau), weight4_val1(d)(e tau) and
// expand(Delta_d)(e tau) atoms over d*e | N. May overgenerate freely; rank
// deficiency is detected downstream.
std::vector<FormExpansion> spanning_set(std::int64_t N, int k, int prec);

// Exact Gaussian elimination (fully reduced, so the output is the canonical
// echelon basis of the candidate span). Candidates are processed sorted by
// (valuation, label). Throws RankDeficient when the span is short, and
// PrecisionInsufficient when a dependence decision falls below policy_prec.
TriangularBasis echelonize(std::vector<FormExpansion> candidates, int expected_dim);

// Unitary upper triangular basis of M_{2k}(Gamma_0(N)) via the structure
// recursion: direct echelonization for 2k <= rho_N + 2, otherwise
// Delta_N * basis(2k - rho_N) plus the low-valuation heads
// E^{(s)}_{rho_N+2} * (E^{(0)}_2)^{k - rho_N/2 - 1}. prec <= 0 selects
// policy_prec(N, k).
TriangularBasis structured_basis(std::int64_t N, int k, int prec = 0);

// True iff the first min(nu(Delta_N), size) valuations are exactly 0,1,2,...
bool verify_staircase(const TriangularBasis& basis);

} // namespace modunits

#endif
