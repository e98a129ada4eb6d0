#include "modunits/forms.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>
#include <utility>

#include "modunits/delta.hpp"
#include "modunits/dims.hpp"
#include "modunits/etaquot.hpp"

namespace modunits {

namespace {
std::atomic<int> g_precision_slack{2};
}

int precision_slack() { return g_precision_slack.load(); }

void set_precision_slack(int slack) {
    if (slack < 0) throw DomainError("set_precision_slack: slack must be >= 0");
    g_precision_slack.store(slack);
}

int policy_prec(std::int64_t N, int k) {
    if (k < 1) throw DomainError("policy_prec: k must be >= 1");
    const std::int64_t mu0 = profile(N).mu0;
    const std::int64_t sturm = (std::int64_t{k} * mu0 + 5) / 6; // ceil
    const std::int64_t bound = sturm + nu(N) + precision_slack();
    if (bound > 100'000'000)
        throw DomainError("policy_prec: precision bound too large at level " +
                          std::to_string(N));
    return static_cast<int>(bound);
}

QSeries eisenstein_series(int k2, int prec) {
    if (k2 < 4 || k2 % 2 != 0)
        throw DomainError("eisenstein_series: weight must be even and >= 4");
    const Rational c = Rational(-2 * k2) / bernoulli(k2);
    std::vector<Rational> out(static_cast<std::size_t>(prec));
    out[0] = 1;
    for (int n = 1; n < prec; ++n)
        out[static_cast<std::size_t>(n)] = c * Rational(sigma(k2 - 1, n));
    return QSeries(std::move(out));
}

QSeries h2n(std::int64_t N, int prec) {
    if (N < 2) throw DomainError("h2n: level must be >= 2");
    const Rational c(24, N - 1);
    std::vector<Rational> out(static_cast<std::size_t>(prec));
    out[0] = 1;
    for (int n = 1; n < prec; ++n) {
        Int t = sigma(1, n);
        if (n % N == 0) t -= Int(N) * sigma(1, n / N);
        out[static_cast<std::size_t>(n)] = c * Rational(t);
    }
    return QSeries(std::move(out));
}

QSeries weight4_val1(std::int64_t N, int prec) {
    if (N < 2) throw DomainError("weight4_val1: level must be >= 2");
    if (prec < 2) throw DomainError("weight4_val1: precision must be >= 2");
    const QSeries h = h2n(N, prec);
    const QSeries u = sub(eisenstein_series(4, prec), mul(h, h));
    const Rational lead = Rational(240) - Rational(48, N - 1);
    if (lead == 0 || u.coeff(0) != 0 || u.coeff(1) != lead)
        throw InternalError("weight4_val1: leading coefficient mismatch");
    return scale(u, Rational(1) / lead);
}

namespace {

// One generator series together with its weight; products of atoms make up
// the spanning candidates.
struct Atom {
    std::string label;
    int weight;
    QSeries series;
};

QSeries dilated(const QSeries& base, std::int64_t e, int prec) {
    if (e == 1) return truncate(base, prec);
    return truncate(dilate(base, e), prec);
}

int base_prec(std::int64_t e, int prec) {
    return static_cast<int>((prec + e - 1) / e);
}

std::string at_label(const std::string& name, std::int64_t e) {
    return e == 1 ? name : name + "@" + std::to_string(e);
}

std::vector<Atom> build_atoms(std::int64_t N, int k, int prec) {
    std::vector<Atom> atoms;
    const auto ds = divisors(N);
    for (std::int64_t d : ds) {
        if (d < 2) continue;
        for (std::int64_t e : ds) {
            if (N % (d * e) != 0) continue;
            atoms.push_back({at_label("H2(" + std::to_string(d) + ")", e), 2,
                             dilated(h2n(d, base_prec(e, prec)), e, prec)});
        }
    }
    for (int j = 2; j <= k; ++j) {
        for (std::int64_t d : ds) {
            atoms.push_back({at_label("E" + std::to_string(2 * j), d), 2 * j,
                             dilated(eisenstein_series(2 * j, base_prec(d, prec)), d, prec)});
        }
    }
    for (std::int64_t d : ds) {
        if (d < 2) continue;
        for (std::int64_t e : ds) {
            if (N % (d * e) != 0) continue;
            atoms.push_back({at_label("V4(" + std::to_string(d) + ")", e), 4,
                             dilated(weight4_val1(d, std::max(2, base_prec(e, prec))), e,
                                     prec)});
        }
    }
    for (std::int64_t d : ds) {
        const std::int64_t rho_d = rho(d);
        if (rho_d > 2 * k) continue;
        for (std::int64_t e : ds) {
            if (N % (d * e) != 0) continue;
            atoms.push_back(
                {at_label("Delta(" + std::to_string(d) + ")", e),
                 static_cast<int>(rho_d),
                 dilated(expand(delta_unit(d).quotient, base_prec(e, prec)), e, prec)});
        }
    }
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
        return std::tie(a.weight, a.label) < std::tie(b.weight, b.label);
    });
    return atoms;
}

std::string product_label(const std::vector<Atom>& atoms, const std::vector<int>& picked) {
    std::ostringstream os;
    for (std::size_t i = 0; i < picked.size();) {
        std::size_t j = i;
        while (j < picked.size() && picked[j] == picked[i]) ++j;
        if (i > 0) os << "*";
        os << atoms[static_cast<std::size_t>(picked[i])].label;
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

// Enumerates multisets of atoms with total weight exactly 2k, grouped by
// factor count. The sink returns false to abort (span already complete).
template <typename Sink>
void for_each_product_wave(std::int64_t N, int k, const std::vector<Atom>& atoms,
                           Sink&& sink) {
    const int target = 2 * k;
    bool stop = false;
    for (int arity = 1; arity <= k && !stop; ++arity) {
        std::vector<int> picked;
        auto rec = [&](auto&& self, int from, int weight_left) -> void {
            if (stop) return;
            if (static_cast<int>(picked.size()) == arity) {
                if (weight_left != 0) return;
                QSeries prod = atoms[static_cast<std::size_t>(picked[0])].series;
                for (std::size_t i = 1; i < picked.size(); ++i)
                    prod = mul(prod, atoms[static_cast<std::size_t>(picked[i])].series);
                if (!sink(FormExpansion{N, target, std::move(prod),
                                        product_label(atoms, picked)}))
                    stop = true;
                return;
            }
            const int slots = arity - static_cast<int>(picked.size());
            for (int i = from; i < static_cast<int>(atoms.size()) && !stop; ++i) {
                const int w = atoms[static_cast<std::size_t>(i)].weight;
                if (w * slots > weight_left) break; // atoms sorted by weight
                picked.push_back(i);
                self(self, i, weight_left - w);
                picked.pop_back();
            }
        };
        rec(rec, 0, target);
    }
}

// Fully reduced exact elimination. Rows are kept sorted by pivot valuation;
// inserting a candidate reduces it against all pivots, then back-eliminates
// its pivot column from the existing rows, so the resulting basis is the
// canonical reduced echelon form of the span.
class EchelonBuilder {
public:
    EchelonBuilder(std::int64_t level, int weight, int min_decidable_prec)
        : level_(level), weight_(weight), min_decidable_prec_(min_decidable_prec) {}

    void insert(const FormExpansion& cand) {
        std::vector<Rational> c = cand.series.coeffs();
        const int p = static_cast<int>(c.size());
        for (const Row& row : rows_) {
            const QSeries& rs = row.expansion.series;
            if (row.pivot < p && c[static_cast<std::size_t>(row.pivot)] != 0) {
                const Rational f = c[static_cast<std::size_t>(row.pivot)];
                for (int i = row.pivot; i < p && i < rs.prec(); ++i)
                    c[static_cast<std::size_t>(i)] -= f * rs.coeff(i);
            }
        }
        int v = -1;
        for (int i = 0; i < p; ++i) {
            if (c[static_cast<std::size_t>(i)] != 0) {
                v = i;
                break;
            }
        }
        if (v < 0) {
            // Reduced to zero: a genuine dependence only if the precision is
            // at least the policy bound for this (level, weight).
            if (p < min_decidable_prec_)
                throw PrecisionInsufficient(
                    "echelonize: precision insufficient, candidates indistinguishable up to q^" +
                    std::to_string(p));
            return;
        }
        const Rational lead = c[static_cast<std::size_t>(v)];
        for (auto& x : c) x /= lead;
        for (Row& row : rows_) {
            const QSeries& rs = row.expansion.series;
            if (v < rs.prec() && rs.coeff(v) != 0) {
                const Rational f = rs.coeff(v);
                std::vector<Rational> r = rs.coeffs();
                for (int i = v; i < static_cast<int>(r.size()) && i < p; ++i)
                    r[static_cast<std::size_t>(i)] -= f * c[static_cast<std::size_t>(i)];
                row.expansion.series = QSeries(std::move(r));
            }
        }
        Row row{v, FormExpansion{cand.level, cand.weight, QSeries(std::move(c)), cand.label}};
        auto pos = std::lower_bound(rows_.begin(), rows_.end(), row,
                                    [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
        rows_.insert(pos, std::move(row));
    }

    int rank() const { return static_cast<int>(rows_.size()); }

    TriangularBasis take(int expected_dim) {
        if (rank() < expected_dim) throw RankDeficient(rank(), expected_dim);
        TriangularBasis basis{level_, weight_, 0, {}};
        for (Row& row : rows_) basis.elements.push_back(std::move(row.expansion));
        if (!basis.elements.empty()) basis.prec = basis.elements.front().series.prec();
        return basis;
    }

private:
    struct Row {
        int pivot;
        FormExpansion expansion;
    };

    std::int64_t level_;
    int weight_;
    int min_decidable_prec_;
    std::vector<Row> rows_;
};

} // namespace

std::vector<FormExpansion> spanning_set(std::int64_t N, int k, int prec) {
    if (N < 1) throw DomainError("spanning_set: level must be >= 1");
    if (k < 1) throw DomainError("spanning_set: k must be >= 1");
    if (prec < 1) throw DomainError("spanning_set: precision must be >= 1");
    const std::vector<Atom> atoms = build_atoms(N, k, prec);
    std::vector<FormExpansion> out;
    for_each_product_wave(N, k, atoms, [&](FormExpansion f) {
        out.push_back(std::move(f));
        return true;
    });
    return out;
}

TriangularBasis echelonize(std::vector<FormExpansion> candidates, int expected_dim) {
    if (expected_dim < 0) throw DomainError("echelonize: expected dimension must be >= 0");
    if (candidates.empty()) {
        if (expected_dim == 0) return TriangularBasis{0, 0, 0, {}};
        throw RankDeficient(0, expected_dim);
    }
    const std::int64_t level = candidates.front().level;
    const int weight = candidates.front().weight;
    const int prec = candidates.front().series.prec();
    for (const auto& c : candidates) {
        if (c.level != level || c.weight != weight || c.series.prec() != prec)
            throw DomainError("echelonize: candidates must share level, weight, precision");
    }
    // Deterministic tie-breaking: valuation first, label second.
    std::sort(candidates.begin(), candidates.end(),
              [](const FormExpansion& a, const FormExpansion& b) {
                  const int va = a.series.valuation().value_or(std::numeric_limits<int>::max());
                  const int vb = b.series.valuation().value_or(std::numeric_limits<int>::max());
                  return std::tie(va, a.label) < std::tie(vb, b.label);
              });
    EchelonBuilder builder(level, weight, policy_prec(level, weight / 2));
    for (const auto& c : candidates) builder.insert(c);
    return builder.take(expected_dim);
}

namespace {

class BasisBuilder {
public:
    BasisBuilder(std::int64_t N, int prec) : N_(N), prec_(prec) {}

    const TriangularBasis& build(int k) {
        auto it = memo_.find(k);
        if (it != memo_.end()) return it->second;
        const int d = static_cast<int>(dim_M(N_, k));
        const std::int64_t rho_n = rho(N_);
        TriangularBasis basis{N_, 2 * k, prec_, {}};
        if (d == 0) {
            return memo_.emplace(k, std::move(basis)).first->second;
        }
        if (2 * k <= rho_n + 2) {
            basis = direct(k, d);
        } else {
            const TriangularBasis& low = build(k - static_cast<int>(rho_n) / 2);
            const QSeries delta_exp = expand(delta_unit(N_).quotient, prec_);
            std::vector<FormExpansion> cands;
            for (const auto& e : low.elements) {
                cands.push_back({N_, 2 * k, mul(delta_exp, e.series),
                                 "Delta(" + std::to_string(N_) + ")*[" + e.label + "]"});
            }
            for (auto& h : heads(k)) cands.push_back(std::move(h));
            basis = echelonize(std::move(cands), d);
        }
        basis.level = N_;
        basis.weight = 2 * k;
        basis.prec = prec_;
        return memo_.emplace(k, std::move(basis)).first->second;
    }

private:
    TriangularBasis direct(int k, int d) {
        const std::vector<Atom> atoms = build_atoms(N_, k, prec_);
        EchelonBuilder builder(N_, 2 * k, policy_prec(N_, k));
        for_each_product_wave(N_, k, atoms, [&](FormExpansion f) {
            builder.insert(f);
            return builder.rank() < d;
        });
        return builder.take(d);
    }

    // The nu(Delta_N) elements of valuation < nu(Delta_N) at weight rho_N + 2,
    // carried up by powers of the weight-2 valuation-0 generator. Level 1 has
    // no weight-2 form; its single head is the Eisenstein series itself.
    std::vector<FormExpansion> heads(int k) {
        const std::int64_t rho_n = rho(N_);
        const std::int64_t nu_n = nu(N_);
        std::vector<FormExpansion> out;
        if (N_ == 1) {
            out.push_back({N_, 2 * k, eisenstein_series(2 * k, prec_),
                           "E" + std::to_string(2 * k)});
            return out;
        }
        const TriangularBasis& seed = build(static_cast<int>(rho_n) / 2 + 1);
        std::vector<const FormExpansion*> low_heads;
        for (const auto& e : seed.elements) {
            const auto v = e.series.valuation();
            if (v && *v < nu_n) low_heads.push_back(&e);
        }
        if (static_cast<std::int64_t>(low_heads.size()) != nu_n)
            throw InternalError("structured_basis: head shortfall at weight " +
                                std::to_string(rho_n + 2));
        const TriangularBasis& weight2 = build(1);
        if (weight2.elements.empty() || weight2.elements.front().series.valuation() != 0)
            throw InternalError("structured_basis: no valuation-0 weight-2 generator");
        const FormExpansion& e2 = weight2.elements.front();
        const int power = k - static_cast<int>(rho_n) / 2 - 1;
        const QSeries e2_pow = pow(e2.series, power);
        for (const FormExpansion* h : low_heads) {
            out.push_back({N_, 2 * k, mul(h->series, e2_pow),
                           "[" + h->label + "]*[" + e2.label + "]^" + std::to_string(power)});
        }
        return out;
    }

    std::int64_t N_;
    int prec_;
    std::map<int, TriangularBasis> memo_;
};

} // namespace

TriangularBasis structured_basis(std::int64_t N, int k, int prec) {
    if (N < 1) throw DomainError("structured_basis: level must be >= 1");
    if (k < 1) throw DomainError("structured_basis: k must be >= 1");
    const int target_prec = prec > 0 ? prec : policy_prec(N, k);
    BasisBuilder builder(N, target_prec);
    return builder.build(k);
}

bool verify_staircase(const TriangularBasis& basis) {
    const std::int64_t nu_n = nu(basis.level);
    const std::int64_t count =
        std::min<std::int64_t>(nu_n, static_cast<std::int64_t>(basis.elements.size()));
    for (std::int64_t r = 0; r < count; ++r) {
        const auto v = basis.elements[static_cast<std::size_t>(r)].series.valuation();
        if (!v || *v != r) return false;
    }
    return true;
}

} // namespace modunits
