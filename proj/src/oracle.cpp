#include "goodint/oracle.hpp"

#include <stdexcept>

namespace goodint::oracle {

bool divides_power_sum(const mpz_class& A, const mpz_class& B, const mpz_class& L,
                       const mpz_class& K) {
    if (L < 1)
        throw std::domain_error("oracle: L must be positive");
    if (K < 1)
        throw std::domain_error("oracle: K must be positive");
    mpz_class a, b, ra, rb, e = K;
    mpz_fdiv_r(a.get_mpz_t(), A.get_mpz_t(), L.get_mpz_t());
    mpz_fdiv_r(b.get_mpz_t(), B.get_mpz_t(), L.get_mpz_t());
    mpz_powm(ra.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), L.get_mpz_t());
    mpz_powm(rb.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), L.get_mpz_t());
    mpz_class sum = ra + rb;
    return mpz_divisible_p(sum.get_mpz_t(), L.get_mpz_t()) != 0;
}

OracleReport scan_exponents(const mpz_class& A, const mpz_class& B, const mpz_class& L,
                            std::uint64_t bound) {
    if (L < 1)
        throw std::domain_error("oracle: L must be positive");
    OracleReport report;
    report.bound = bound;
    mpz_class a, b;
    mpz_fdiv_r(a.get_mpz_t(), A.get_mpz_t(), L.get_mpz_t());
    mpz_fdiv_r(b.get_mpz_t(), B.get_mpz_t(), L.get_mpz_t());
    mpz_class pa = 1, pb = 1, sum;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        pa = pa * a % L;
        pb = pb * b % L;
        sum = pa + pb;
        if (mpz_divisible_p(sum.get_mpz_t(), L.get_mpz_t()))
            report.admissible.push_back(k);
    }
    return report;
}

std::uint64_t default_bound(std::uint64_t lambda_ell, std::uint64_t gamma) {
    return 4 * lambda_ell + gamma + 4;
}

} // namespace goodint::oracle
