#include "goodint/integer_arith.hpp"

#include <algorithm>
#include <map>

namespace goodint {

NotInvertibleError::NotInvertibleError(const Int& value, const Int& modulus, Int common)
    : DomainError("not invertible: gcd(" + value.get_str() + ", " + modulus.get_str() +
                  ") = " + common.get_str()),
      common_(std::move(common)) {}

Int Factorization::value() const {
    Int n = 1;
    for (const auto& f : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
        n *= pe;
    }
    return n;
}

unsigned long Factorization::exponent_of(const Int& p) const {
    auto it = std::lower_bound(factors.begin(), factors.end(), p,
                               [](const PrimePower& f, const Int& q) { return f.prime < q; });
    return (it != factors.end() && it->prime == p) ? it->exponent : 0;
}

Int parse_int(const std::string& text) {
    std::size_t pos = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (pos == text.size())
        throw DomainError("not an integer: '" + text + "'");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw DomainError("not an integer: '" + text + "'");
    }
    // mpz_set_str rejects a leading '+'.
    return Int(text[0] == '+' ? text.substr(1) : text, 10);
}

std::string to_string(const Int& n) { return n.get_str(10); }

Int gcd(const Int& x, const Int& y) {
    if (x == 0 && y == 0)
        throw DomainError("gcd(0, 0) is undefined");
    Int r;
    mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

Int lcm(const Int& x, const Int& y) {
    Int r;
    mpz_lcm(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

Int mod_normalize(const Int& x, const Int& m) {
    if (m < 1)
        throw DomainError("modulus must be positive");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

unsigned long p_adic_valuation(const Int& p, const Int& n) {
    if (n == 0)
        throw DomainError("valuation of 0 is infinite");
    if (!is_prime(p))
        throw DomainError("valuation base " + p.get_str() + " is not prime");
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) == 0)
        return 0;
    Int rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

Int mod_pow(const Int& base, const Int& exp, const Int& m) {
    if (m < 1)
        throw DomainError("modulus must be positive");
    if (exp < 0)
        throw DomainError("negative exponent");
    Int r;
    Int b = mod_normalize(base, m);
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int mod_inv(const Int& a, const Int& m) {
    if (m < 1)
        throw DomainError("modulus must be positive");
    Int g = gcd(a, m);
    if (g != 1)
        throw NotInvertibleError(a, m, g);
    if (m == 1)
        return 0;
    Int r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return mod_normalize(r, m);
}

namespace {

Int prime_power(const Int& p, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

// lambda(p^e) for a single prime power.
Int lambda_prime_power(const Int& p, unsigned long e) {
    if (p == 2) {
        if (e <= 1)
            return 1;
        if (e == 2)
            return 2;
        return prime_power(2, e - 2);
    }
    return prime_power(p, e - 1) * (p - 1);
}

} // namespace

Int carmichael_lambda(const Factorization& m) {
    Int result = 1;
    for (const auto& f : m.factors)
        result = lcm(result, lambda_prime_power(f.prime, f.exponent));
    return result;
}

Int carmichael_lambda(const Int& m) {
    if (m < 1)
        throw DomainError("carmichael_lambda requires m >= 1");
    return carmichael_lambda(factorize(m));
}

Factorization carmichael_lambda_factorization(const Factorization& m) {
    // lcm of prime powers: take the max exponent per prime.
    std::map<Int, unsigned long> exps;
    auto absorb = [&](const Int& p, unsigned long e) {
        auto& slot = exps[p];
        slot = std::max(slot, e);
    };
    for (const auto& f : m.factors) {
        if (f.prime == 2) {
            if (f.exponent == 2)
                absorb(2, 1);
            else if (f.exponent >= 3)
                absorb(2, f.exponent - 2);
            continue;
        }
        std::map<Int, unsigned long> local;
        if (f.exponent > 1)
            local[f.prime] += f.exponent - 1;
        for (const auto& q : factorize(f.prime - 1).factors)
            local[q.prime] += q.exponent;
        for (const auto& [p, e] : local)
            absorb(p, e);
    }
    Factorization out;
    for (const auto& [p, e] : exps)
        out.factors.push_back({p, e});
    return out;
}

Int multiplicative_order(const Int& a, const Factorization& m) {
    const Int modulus = m.value();
    Int g = gcd(a, modulus);
    if (g != 1)
        throw NotInvertibleError(a, modulus, g);
    if (modulus == 1)
        return 1;
    const Int base = mod_normalize(a, modulus);
    const Factorization lam = carmichael_lambda_factorization(m);
    Int order = lam.value();
    for (const auto& q : lam.factors) {
        for (unsigned long i = 0; i < q.exponent; ++i) {
            Int candidate = order / q.prime;
            if (mod_pow(base, candidate, modulus) != 1)
                break;
            order = candidate;
        }
    }
    return order;
}

Int multiplicative_order(const Int& a, const Int& m) {
    if (m < 1)
        throw DomainError("modulus must be positive");
    return multiplicative_order(a, factorize(m));
}

} // namespace goodint
