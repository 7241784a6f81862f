#pragma once

#include "goodint/integer_arith.hpp"

#include <cstdint>
#include <span>
#include <utility>

namespace goodint {

// A query (A, B, L) decomposed around g = gcd(A, B).
//
//   A = g*a, B = g*b, gcd(a, b) = 1, g > 0, signs carried by a and b.
//   L = g_part * ell, where g_part collects the primes of L dividing g and
//   ell (the coprime core) collects the rest.
//   gamma = max over p | g of ceil(nu_p(L) / nu_p(g)), 0 when g = 1.
struct SplitContext {
    Int A, B, L;
    Int g, a, b;
    Int g_part;
    Int ell;
    std::uint64_t gamma = 0;

    Factorization g_factors;
    Factorization L_factors;
    Factorization ell_factors;
};

struct LambdaSplit {
    Int lambda_S;
    Int lambda_S_prime;

    bool operator==(const LambdaSplit&) const = default;
};

// n = lambda_S(n) * lambda_S'(n) with lambda_S(n) = prod_{p in S} p^nu_p(n).
// Primes of S that do not divide n contribute 1.
LambdaSplit lambda_split(const Int& n, std::span<const Int> primes);

std::uint64_t gamma(const Int& L, const Int& g);
std::uint64_t gamma(const Factorization& L, const Factorization& g);

SplitContext build_context(const Int& A, const Int& B, const Int& L);

// Integer ceil(x / y) for y > 0.
constexpr std::uint64_t ceil_div(std::uint64_t x, std::uint64_t y) { return (x + y - 1) / y; }

} // namespace goodint
