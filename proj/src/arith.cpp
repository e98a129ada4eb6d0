#include "modunits/arith.hpp"

#include <algorithm>
#include <mutex>

namespace modunits {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = static_cast<std::uint64_t>(n - 1);
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all 64-bit integers.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, static_cast<std::uint64_t>(n));
        if (x == 1 || x == static_cast<std::uint64_t>(n - 1)) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, static_cast<std::uint64_t>(n));
            if (x == static_cast<std::uint64_t>(n - 1)) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(std::int64_t n) {
    if (n <= 0) throw DomainError("factorize: argument must be >= 1");
    Factorization out;
    for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.push_back({d, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n <= 0) throw DomainError("divisors: argument must be >= 1");
    std::vector<std::int64_t> ds{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = ds.size();
        std::int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

Int sigma(int k, std::int64_t n) {
    if (k < 1 || n < 1) throw DomainError("sigma: arguments must be >= 1");
    Int s = 0;
    for (std::int64_t d : divisors(n)) s += boost::multiprecision::pow(Int(d), k);
    return s;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n <= 0) throw DomainError("euler_phi: argument must be >= 1");
    std::int64_t r = n;
    for (const auto& [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

Rational bernoulli(int m) {
    if (m < 2 || m % 2 != 0)
        throw DomainError("bernoulli: index must be even and >= 2");
    static std::mutex mu;
    static std::vector<Rational> cache; // cache[i] = B_{2i+2}
    std::lock_guard<std::mutex> lock(mu);
    const std::size_t idx = static_cast<std::size_t>(m / 2 - 1);
    while (cache.size() <= idx) {
        const int target = 2 * static_cast<int>(cache.size()) + 2;
        // Akiyama-Tanigawa triangle, row `target`.
        std::vector<Rational> a(static_cast<std::size_t>(target) + 1);
        for (int j = 0; j <= target; ++j) a[j] = Rational(1, j + 1);
        for (int j = 1; j <= target; ++j) {
            for (int i = j; i >= 1; --i) {
                a[i - 1] = Rational(i) * (a[i - 1] - a[i]);
            }
        }
        cache.push_back(a[0]);
    }
    return cache[idx];
}

int kronecker_minus4(std::int64_t p) {
    if (!is_prime(p)) throw DomainError("kronecker_minus4: argument must be prime");
    if (p == 2) return 0;
    return p % 4 == 1 ? 1 : -1;
}

int kronecker_minus3(std::int64_t p) {
    if (!is_prime(p)) throw DomainError("kronecker_minus3: argument must be prime");
    if (p == 3) return 0;
    return p % 3 == 1 ? 1 : -1;
}

Int binomial(const Int& n, int k) {
    if (k < 0) throw DomainError("binomial: k must be >= 0");
    Rational r = 1;
    for (int i = 1; i <= k; ++i) r *= Rational(n - (i - 1), i);
    return numerator(r); // always integral
}

} // namespace modunits
