#pragma once

#include "goodint/integer_arith.hpp"
#include "goodint/progression.hpp"

#include <optional>
#include <string_view>

namespace goodint {

// ord_ell(a b^-1) together with the residue that decides whether -1 lies in
// the cyclic group it generates.
struct OrderCertificate {
    Int modulus;
    Int base;   // a * b^-1 mod modulus
    Int order;
    unsigned long two_adic = 0;
    std::optional<Int> half_power;  // base^(order/2), only for even order

    // For modulus >= 3: true iff order is even and half_power = -1.
    bool witnesses_minus_one() const;
};

OrderCertificate order_certificate(const Int& a, const Int& b, const Factorization& modulus);

enum class CoprimeReason {
    trivial_modulus,
    order_witness,
    structural_witness,
    shares_factor_with_a,
    shares_factor_with_b,
    odd_order,
    half_power_not_minus_one,
    two_adic_mismatch,
    even_part_fails,
};

std::string_view to_string(CoprimeReason reason);

struct CoprimeVerdict {
    bool good = false;
    CoprimeReason reason = CoprimeReason::trivial_modulus;
    std::optional<Int> offending_prime;        // shares_factor_*
    std::optional<OrderCertificate> certificate;  // direct path, ell >= 3
    // Structural path: the common nu_2(ord_p(a b^-1)) over odd p | ell, when
    // one exists.
    std::optional<unsigned long> common_two_adic;
};

// Good iff -1 is a power of a b^-1 modulo ell: order even and
// (a b^-1)^(order/2) = -1.
CoprimeVerdict is_good_coprime_direct(const Int& a, const Int& b, const Int& ell);
CoprimeVerdict is_good_coprime_direct(const Int& a, const Int& b, const Factorization& ell);

// Writes ell = 2^beta * d, d odd, and decides from the 2-adic valuations of
// ord_p(a b^-1) over the primes p | d plus the congruence a b^-1 = -1
// (mod 2^beta). Never computes ord_ell itself.
CoprimeVerdict is_good_coprime_structural(const Int& a, const Int& b, const Int& ell);
CoprimeVerdict is_good_coprime_structural(const Int& a, const Int& b, const Factorization& ell);

// {k = ord/2 (mod ord)} for ell >= 3, all k >= 1 for ell in {1, 2}.
// Throws DomainError when ell is not good.
ExponentProgression exponent_set_coprime(const Int& a, const Int& b, const Int& ell);

} // namespace goodint
