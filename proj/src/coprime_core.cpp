#include "goodint/coprime_core.hpp"

namespace goodint {

namespace {

void require_coprime(const Int& a, const Int& b) {
    if (a == 0 || b == 0)
        throw DomainError("a and b must be nonzero");
    if (gcd(a, b) != 1)
        throw DomainError("a and b must be coprime");
}

// Shared necessity screen: a good ell >= 2 is coprime to both a and b.
std::optional<CoprimeVerdict> screen_common_factors(const Int& a, const Int& b,
                                                    const Factorization& ell) {
    for (const auto& f : ell.factors) {
        if (mpz_divisible_p(a.get_mpz_t(), f.prime.get_mpz_t()))
            return CoprimeVerdict{false, CoprimeReason::shares_factor_with_a, f.prime, {}, {}};
        if (mpz_divisible_p(b.get_mpz_t(), f.prime.get_mpz_t()))
            return CoprimeVerdict{false, CoprimeReason::shares_factor_with_b, f.prime, {}, {}};
    }
    return std::nullopt;
}

Int ratio_mod(const Int& a, const Int& b, const Int& m) {
    return mod_normalize(a * mod_inv(b, m), m);
}

CoprimeVerdict good(CoprimeReason reason) { return {true, reason, {}, {}, {}}; }
CoprimeVerdict bad(CoprimeReason reason) { return {false, reason, {}, {}, {}}; }

} // namespace

bool OrderCertificate::witnesses_minus_one() const {
    return half_power.has_value() && *half_power == modulus - 1;
}

OrderCertificate order_certificate(const Int& a, const Int& b, const Factorization& modulus) {
    OrderCertificate cert;
    cert.modulus = modulus.value();
    cert.base = ratio_mod(a, b, cert.modulus);
    cert.order = multiplicative_order(cert.base, modulus);
    cert.two_adic = mpz_scan1(cert.order.get_mpz_t(), 0);
    if (cert.two_adic > 0)
        cert.half_power = mod_pow(cert.base, cert.order / 2, cert.modulus);
    return cert;
}

std::string_view to_string(CoprimeReason reason) {
    switch (reason) {
    case CoprimeReason::trivial_modulus: return "trivial_modulus";
    case CoprimeReason::order_witness: return "order_witness";
    case CoprimeReason::structural_witness: return "structural_witness";
    case CoprimeReason::shares_factor_with_a: return "shares_factor_with_a";
    case CoprimeReason::shares_factor_with_b: return "shares_factor_with_b";
    case CoprimeReason::odd_order: return "odd_order";
    case CoprimeReason::half_power_not_minus_one: return "half_power_not_minus_one";
    case CoprimeReason::two_adic_mismatch: return "two_adic_mismatch";
    case CoprimeReason::even_part_fails: return "even_part_fails";
    }
    return "unknown";
}

CoprimeVerdict is_good_coprime_direct(const Int& a, const Int& b, const Factorization& ell) {
    require_coprime(a, b);
    if (auto shared = screen_common_factors(a, b, ell))
        return *shared;
    const Int modulus = ell.value();
    if (modulus <= 2)
        return good(CoprimeReason::trivial_modulus);

    CoprimeVerdict v;
    v.certificate = order_certificate(a, b, ell);
    if (v.certificate->two_adic == 0) {
        v.reason = CoprimeReason::odd_order;
    } else if (v.certificate->witnesses_minus_one()) {
        v.good = true;
        v.reason = CoprimeReason::order_witness;
    } else {
        v.reason = CoprimeReason::half_power_not_minus_one;
    }
    return v;
}

CoprimeVerdict is_good_coprime_direct(const Int& a, const Int& b, const Int& ell) {
    if (ell < 1)
        throw DomainError("ell must be positive");
    return is_good_coprime_direct(a, b, factorize(ell));
}

CoprimeVerdict is_good_coprime_structural(const Int& a, const Int& b, const Factorization& ell) {
    require_coprime(a, b);
    if (auto shared = screen_common_factors(a, b, ell))
        return *shared;

    const unsigned long beta = ell.exponent_of(2);
    const bool has_odd_part = ell.factors.size() > (beta > 0 ? 1u : 0u);

    // a b^-1 = -1 (mod 2^beta); equivalent to 2^beta | a + b for odd a, b.
    auto even_part_holds = [&] {
        Int two_beta;
        mpz_ui_pow_ui(two_beta.get_mpz_t(), 2, beta);
        return ratio_mod(a, b, two_beta) == two_beta - 1;
    };

    if (!has_odd_part) {
        if (beta <= 1)
            return good(CoprimeReason::trivial_modulus);
        return even_part_holds() ? good(CoprimeReason::structural_witness)
                                 : bad(CoprimeReason::even_part_fails);
    }

    // Odd part d > 1: every p | d must give the same s = nu_2(ord_p) >= 1.
    std::optional<unsigned long> common;
    for (const auto& f : ell.factors) {
        if (f.prime == 2)
            continue;
        const Int c = ratio_mod(a, b, f.prime);
        const Int order = multiplicative_order(c, Factorization{{{f.prime, 1}}});
        const unsigned long s = mpz_scan1(order.get_mpz_t(), 0);
        if (s == 0 && !common) {
            auto v = bad(CoprimeReason::two_adic_mismatch);
            v.common_two_adic = 0;
            return v;
        }
        if (s == 0 || (common && *common != s))
            return bad(CoprimeReason::two_adic_mismatch);
        common = s;
    }

    // beta = 1: 2d is good iff d is good.
    if (beta >= 2) {
        if (!even_part_holds())
            return bad(CoprimeReason::even_part_fails);
        // nu_2(ord_d) equals the common s, and must be exactly 1.
        if (*common != 1) {
            auto v = bad(CoprimeReason::two_adic_mismatch);
            v.common_two_adic = common;
            return v;
        }
    }
    auto v = good(CoprimeReason::structural_witness);
    v.common_two_adic = common;
    return v;
}

CoprimeVerdict is_good_coprime_structural(const Int& a, const Int& b, const Int& ell) {
    if (ell < 1)
        throw DomainError("ell must be positive");
    return is_good_coprime_structural(a, b, factorize(ell));
}

ExponentProgression exponent_set_coprime(const Int& a, const Int& b, const Int& ell) {
    const Factorization ell_factors = factorize(ell);
    const CoprimeVerdict v = is_good_coprime_direct(a, b, ell_factors);
    if (!v.good)
        throw DomainError("ell = " + ell.get_str() + " is not good (" +
                          std::string(to_string(v.reason)) + ")");
    ExponentProgression p;
    p.threshold = 1;
    if (!v.certificate) {
        p.residue = 0;
        p.modulus = 1;
        p.k_min = 1;
        return p;
    }
    p.modulus = v.certificate->order;
    p.residue = p.modulus / 2;
    p.k_min = p.residue;
    return p;
}

} // namespace goodint
