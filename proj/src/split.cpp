#include "goodint/split.hpp"

#include <algorithm>
#include <vector>

namespace goodint {

LambdaSplit lambda_split(const Int& n, std::span<const Int> primes) {
    if (n < 1)
        throw DomainError("lambda_split requires n >= 1");
    std::vector<Int> set(primes.begin(), primes.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    Int part = 1;
    for (const Int& p : set) {
        unsigned long e = p_adic_valuation(p, n);  // rejects non-primes
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        part *= pe;
    }
    return {part, n / part};
}

std::uint64_t gamma(const Factorization& L, const Factorization& g) {
    std::uint64_t best = 0;
    for (const auto& f : g.factors)
        best = std::max<std::uint64_t>(best, ceil_div(L.exponent_of(f.prime), f.exponent));
    return best;
}

std::uint64_t gamma(const Int& L, const Int& g) {
    if (L < 1 || g < 1)
        throw DomainError("gamma requires L >= 1 and g >= 1");
    return gamma(factorize(L), factorize(g));
}

SplitContext build_context(const Int& A, const Int& B, const Int& L) {
    if (A == 0 || B == 0)
        throw DomainError("A and B must be nonzero");
    if (L < 1)
        throw DomainError("L must be positive");

    SplitContext ctx;
    ctx.A = A;
    ctx.B = B;
    ctx.L = L;
    ctx.g = gcd(A, B);
    ctx.a = A / ctx.g;
    ctx.b = B / ctx.g;
    ctx.g_factors = factorize(ctx.g);
    ctx.L_factors = factorize(L);

    ctx.g_part = 1;
    ctx.ell = 1;
    for (const auto& f : ctx.L_factors.factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
        if (ctx.g_factors.contains(f.prime)) {
            ctx.g_part *= pe;
        } else {
            ctx.ell *= pe;
            ctx.ell_factors.factors.push_back(f);
        }
    }
    ctx.gamma = gamma(ctx.L_factors, ctx.g_factors);
    return ctx;
}

} // namespace goodint
