#pragma once

// Brute-force reference for K_(A,B)(L). Deliberately naive, and built only on
// raw GMP calls so that it shares nothing with the decision code it checks.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace goodint::oracle {

struct OracleReport {
    std::vector<std::uint64_t> admissible;  // ascending, all <= bound
    std::uint64_t bound = 0;
};

// (A^K + B^K) mod L == 0.
bool divides_power_sum(const mpz_class& A, const mpz_class& B, const mpz_class& L,
                       const mpz_class& K);

// Every K in 1..bound with L | A^K + B^K, via running residues A^K, B^K mod L.
OracleReport scan_exponents(const mpz_class& A, const mpz_class& B, const mpz_class& L,
                            std::uint64_t bound);

// 4*lambda(ell) + gamma + 4: past the least admissible K whenever one exists.
std::uint64_t default_bound(std::uint64_t lambda_ell, std::uint64_t gamma);

} // namespace goodint::oracle
