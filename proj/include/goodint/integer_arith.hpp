#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace goodint {

using Int = mpz_class;

// Raised when an argument lies outside the domain of an operation
// (zero where nonzero is required, non-prime where a prime is required).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// gcd(a, m) != 1 where an inverse or an order was requested.
class NotInvertibleError : public DomainError {
public:
    NotInvertibleError(const Int& value, const Int& modulus, Int common);

    const Int& common_divisor() const noexcept { return common_; }

private:
    Int common_;
};

struct PrimePower {
    Int prime;
    unsigned long exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

// Prime decomposition of a positive integer, primes strictly ascending.
// The factorization of 1 is empty.
struct Factorization {
    std::vector<PrimePower> factors;

    Int value() const;
    bool empty() const noexcept { return factors.empty(); }
    // Exponent of p, zero when p is not listed.
    unsigned long exponent_of(const Int& p) const;
    bool contains(const Int& p) const { return exponent_of(p) != 0; }

    bool operator==(const Factorization&) const = default;
};

Int parse_int(const std::string& text);
std::string to_string(const Int& n);

// Nonnegative gcd. Throws DomainError when both arguments are zero.
Int gcd(const Int& x, const Int& y);
Int lcm(const Int& x, const Int& y);

// Canonical residue of x modulo m in [0, m).
Int mod_normalize(const Int& x, const Int& m);

// Largest e with p^e | n. Acts on |n|.
unsigned long p_adic_valuation(const Int& p, const Int& n);

// Baillie-PSW. Deterministic below 2^64; no known counterexample above.
bool is_prime(const Int& n);

Factorization factorize(const Int& n);

Int mod_pow(const Int& base, const Int& exp, const Int& m);
Int mod_inv(const Int& a, const Int& m);

Int carmichael_lambda(const Int& m);
Int carmichael_lambda(const Factorization& m);
// Factorization of lambda(m), assembled from the factorizations of p - 1.
Factorization carmichael_lambda_factorization(const Factorization& m);

// Least t >= 1 with a^t = 1 (mod m), found by stripping prime factors off
// lambda(m). Throws NotInvertibleError when gcd(a, m) != 1.
Int multiplicative_order(const Int& a, const Int& m);
Int multiplicative_order(const Int& a, const Factorization& m);

namespace detail {

// Primes below kSmallPrimeBound, built once on first use.
inline constexpr std::uint32_t kSmallPrimeBound = 1'000'000;
const std::vector<std::uint32_t>& small_primes();

bool is_prime_u64(std::uint64_t n);
// BPSW on the multiprecision path regardless of size.
bool is_prime_bpsw(const Int& n);
std::uint64_t pollard_brent_u64(std::uint64_t n);
Int pollard_brent(const Int& n);

} // namespace detail

} // namespace goodint
