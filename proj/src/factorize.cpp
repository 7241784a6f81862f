#include "goodint/integer_arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace goodint {

namespace detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr int kBatch = 128;

} // namespace

// Brent's cycle finding on x -> x^2 + c, batching |x - y| products before
// each gcd. Returns a nontrivial factor of composite odd n.
u64 pollard_brent_u64(u64 n) {
    if (n % 2 == 0)
        return 2;
    auto f = [n](u64 x, u64 c) { return u64((u128(x) * x + c) % n); };
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = y, ys = y, q = 1, g = 1;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = f(y, c);
            for (u64 k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                const u64 lim = std::min<u64>(kBatch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = f(y, c);
                    q = u64(u128(q) * (x > y ? x - y : y - x) % n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            // Batch overshot; replay one step at a time.
            do {
                ys = f(ys, c);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

Int pollard_brent(const Int& n) {
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    Int x, y, ys, q, g, diff;
    for (unsigned long c = 1;; ++c) {
        auto f = [&](Int& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        y = 2;
        q = 1;
        g = 1;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i)
                f(y);
            for (u64 k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                const u64 lim = std::min<u64>(kBatch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    f(y);
                    diff = x - y;
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g == n) {
            do {
                f(ys);
                diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

} // namespace detail

namespace {

void split_composite(const Int& n, std::map<Int, unsigned long>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int root;
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2;; ++k) {
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                std::map<Int, unsigned long> inner;
                split_composite(root, inner);
                for (const auto& [p, e] : inner)
                    out[p] += e * k;
                return;
            }
        }
    }
    Int d = mpz_fits_ulong_p(n.get_mpz_t())
                ? Int(detail::pollard_brent_u64(mpz_get_ui(n.get_mpz_t())))
                : detail::pollard_brent(n);
    split_composite(d, out);
    split_composite(Int(n / d), out);
}

} // namespace

Factorization factorize(const Int& n) {
    if (n < 1)
        throw DomainError("factorize requires n >= 1");
    Factorization result;
    Int rest = n;
    for (std::uint32_t p : detail::small_primes()) {
        if (Int(p) * p > rest)
            break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            Int prime = p;
            unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
            result.factors.push_back({prime, e});
        }
    }
    if (rest == 1)
        return result;
    // The cofactor has no prime below the last trial divisor, so its primes
    // all sort after the ones collected so far.
    std::map<Int, unsigned long> large;
    split_composite(rest, large);
    for (const auto& [p, e] : large)
        result.factors.push_back({p, e});
    return result;
}

} // namespace goodint
