#include "goodint/integer_arith.hpp"

#include <array>
#include <bit>

namespace goodint {

namespace detail {

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> table = [] {
        std::vector<bool> composite(kSmallPrimeBound, false);
        std::vector<std::uint32_t> primes;
        primes.reserve(80'000);
        for (std::uint32_t i = 2; i < kSmallPrimeBound; ++i) {
            if (composite[i])
                continue;
            primes.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < kSmallPrimeBound; j += i)
                composite[j] = true;
        }
        return primes;
    }();
    return table;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool strong_probable_prime(u64 n, u64 a) {
    a %= n;
    if (a == 0)
        return true;
    const int s = std::countr_zero(n - 1);
    const u64 d = (n - 1) >> s;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

bool strong_probable_prime(const Int& n, unsigned long a) {
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    Int x;
    Int base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Int minus_one = n - 1;
    if (x == 1 || x == minus_one)
        return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == minus_one)
            return true;
    }
    return false;
}

// Halve x modulo odd n.
void half_mod(Int& x, const Int& n) {
    if (mpz_odd_p(x.get_mpz_t()))
        x += n;
    x >>= 1;
    x %= n;
}

// Strong Lucas probable-prime test with Selfridge parameters (method A).
bool strong_lucas_probable_prime(const Int& n) {
    if (mpz_perfect_square_p(n.get_mpz_t()))
        return false;
    long D = 5;
    for (;;) {
        Int dd = D;
        int j = mpz_jacobi(dd.get_mpz_t(), n.get_mpz_t());
        if (j == -1)
            break;
        if (j == 0) {
            Int absd = D < 0 ? -D : D;
            if (absd != n)
                return false;
        }
        D = D > 0 ? -(D + 2) : -(D - 2);
    }
    const long P = 1;
    const long Q = (1 - D) / 4;

    Int d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    const Int Dm = mod_normalize(Int(D), n);
    const Int Qm = mod_normalize(Int(Q), n);
    Int U = 0, V = 2, Qk = 1;  // k = 0
    const std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        // k -> 2k
        U = U * V % n;
        V = mod_normalize(V * V - 2 * Qk, n);
        Qk = Qk * Qk % n;
        if (mpz_tstbit(d.get_mpz_t(), i)) {
            // k -> k + 1
            Int U1 = P * U + V;
            Int V1 = Dm * U + P * V;
            half_mod(U1, n);
            half_mod(V1, n);
            U = std::move(U1);
            V = std::move(V1);
            Qk = Qk * Qm % n;
        }
    }
    if (U == 0 || V == 0)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = mod_normalize(V * V - 2 * Qk, n);
        Qk = Qk * Qk % n;
        if (V == 0)
            return true;
    }
    return false;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2)
        return false;
    for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0)
            return n == p;
    }
    if (n < 37 * 37)
        return true;
    // Jim Sinclair's base set, deterministic for all n < 2^64.
    constexpr std::array<u64, 7> bases{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    for (u64 a : bases) {
        if (!strong_probable_prime(n, a))
            return false;
    }
    return true;
}

bool is_prime_bpsw(const Int& n) {
    if (n < 2)
        return false;
    for (std::uint32_t p : small_primes()) {
        if (p > 1000)
            break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return n == p;
    }
    return strong_probable_prime(n, 2) && strong_lucas_probable_prime(n);
}

} // namespace detail

bool is_prime(const Int& n) {
    if (n < 2)
        return false;
    if (mpz_fits_ulong_p(n.get_mpz_t()))
        return detail::is_prime_u64(mpz_get_ui(n.get_mpz_t()));
    return detail::is_prime_bpsw(n);
}

} // namespace goodint
