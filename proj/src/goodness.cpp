#include "goodint/goodness.hpp"

#include <algorithm>
#include <thread>

namespace goodint {

std::string_view to_string(FailureStep step) {
    switch (step) {
    case FailureStep::step3_gcd_a: return "step3_gcd_a";
    case FailureStep::step3_gcd_b: return "step3_gcd_b";
    case FailureStep::step4_core_bad: return "step4_core_bad";
    }
    return "unknown";
}

std::string_view to_string(SpecialCaseKind kind) {
    switch (kind) {
    case SpecialCaseKind::pure_g_part: return "pure_g_part";
    case SpecialCaseKind::g_contained: return "g_contained";
    case SpecialCaseKind::prime_power_g: return "prime_power_g";
    case SpecialCaseKind::squarefree_g: return "squarefree_g";
    case SpecialCaseKind::general: return "general";
    }
    return "unknown";
}

namespace {

CoprimeVerdict run_coprime(const SplitContext& ctx, CoprimeMethod method) {
    return method == CoprimeMethod::direct
               ? is_good_coprime_direct(ctx.a, ctx.b, ctx.ell_factors)
               : is_good_coprime_structural(ctx.a, ctx.b, ctx.ell_factors);
}

bool divides_sum_of_powers(const SplitContext& ctx, const Int& K) {
    return mod_normalize(mod_pow(ctx.A, K, ctx.L) + mod_pow(ctx.B, K, ctx.L), ctx.L) == 0;
}

// Residue class from the core, threshold from the g-part. Members of the
// class below the threshold are not covered by the g-part bound alone: they
// are admissible exactly when the primes of g dividing a^K + b^K make up the
// shortfall, so each one is tested directly. There are fewer than gamma of
// them.
ExponentProgression build_progression(const SplitContext& ctx,
                                      const std::optional<OrderCertificate>& cert) {
    ExponentProgression p;
    p.threshold = ctx.gamma;
    if (ctx.ell <= 2 || !cert) {
        p.residue = 0;
        p.modulus = 1;
    } else {
        p.modulus = cert->order;
        p.residue = mod_normalize(p.modulus / 2, p.modulus);
    }
    const Int floor = p.floor();
    Int K = p.residue == 0 ? p.modulus : p.residue;
    for (; K < floor; K += p.modulus) {
        if (divides_sum_of_powers(ctx, K))
            p.exceptions.push_back(K);
    }
    p.k_min = p.exceptions.empty() ? first_at_threshold(p.residue, p.modulus, p.threshold)
                                   : p.exceptions.front();
    return p;
}

} // namespace

GoodnessVerdict decide(const Int& A, const Int& B, const Int& L, const DecideOptions& opts) {
    GoodnessVerdict v;
    v.context = build_context(A, B, L);
    const SplitContext& ctx = v.context;

    // Steps 0 and 2: no coprime core, only the threshold matters.
    if (ctx.ell == 1) {
        v.good = true;
        v.progression = build_progression(ctx, std::nullopt);
        return v;
    }

    // Step 3: a good core is coprime to a and b.
    for (const auto& f : ctx.ell_factors.factors) {
        if (mpz_divisible_p(ctx.a.get_mpz_t(), f.prime.get_mpz_t())) {
            v.failure_step = FailureStep::step3_gcd_a;
            v.offending_prime = f.prime;
            return v;
        }
    }
    for (const auto& f : ctx.ell_factors.factors) {
        if (mpz_divisible_p(ctx.b.get_mpz_t(), f.prime.get_mpz_t())) {
            v.failure_step = FailureStep::step3_gcd_b;
            v.offending_prime = f.prime;
            return v;
        }
    }

    // Step 4: classical criterion on the core.
    v.coprime_verdict = run_coprime(ctx, opts.method);
    if (opts.cross_check) {
        const auto other = run_coprime(ctx, opts.method == CoprimeMethod::direct
                                                ? CoprimeMethod::structural
                                                : CoprimeMethod::direct);
        if (other.good != v.coprime_verdict->good)
            throw InconsistencyError("direct and structural criteria disagree on ell = " +
                                     ctx.ell.get_str());
    }
    if (!v.coprime_verdict->good) {
        v.failure_step = FailureStep::step4_core_bad;
        return v;
    }

    // Step 5. The structural route carries no certificate; the order is
    // still needed for the period.
    std::optional<OrderCertificate> cert = v.coprime_verdict->certificate;
    if (!cert && ctx.ell >= 3)
        cert = order_certificate(ctx.a, ctx.b, ctx.ell_factors);
    v.good = true;
    v.progression = build_progression(ctx, cert);
    return v;
}

ExponentProgression exponent_set(const Int& A, const Int& B, const Int& L) {
    GoodnessVerdict v = decide(A, B, L);
    if (!v.good)
        throw DomainError("L = " + L.get_str() + " is not good with respect to (" + A.get_str() +
                          ", " + B.get_str() + ")");
    return std::move(*v.progression);
}

Int min_exponent(const Int& A, const Int& B, const Int& L) { return exponent_set(A, B, L).k_min; }

SpecialCase classify_special_case(const SplitContext& ctx) {
    if (ctx.ell == 1) {
        // Every K >= gamma works, so gamma is the least K with L | g^K.
        std::uint64_t K = 0;
        Int power = 1 % ctx.L;
        while (power != 0 && ctx.L != 1) {
            power = power * ctx.g % ctx.L;
            ++K;
        }
        return {SpecialCaseKind::pure_g_part, K};
    }
    const auto& gf = ctx.g_factors.factors;
    if (ctx.g > 1 && ctx.g_part > 1 &&
        std::all_of(gf.begin(), gf.end(), [&](const PrimePower& f) {
            return ctx.L_factors.exponent_of(f.prime) <= f.exponent;
        })) {
        return {SpecialCaseKind::g_contained, 1};
    }
    if (gf.size() == 1) {
        const std::uint64_t alpha = ctx.L_factors.exponent_of(gf.front().prime);
        return {SpecialCaseKind::prime_power_g, ceil_div(alpha, gf.front().exponent)};
    }
    if (ctx.g > 1 && std::all_of(gf.begin(), gf.end(),
                                 [](const PrimePower& f) { return f.exponent == 1; })) {
        std::uint64_t best = 0;
        for (const auto& f : gf)
            best = std::max<std::uint64_t>(best, ctx.L_factors.exponent_of(f.prime));
        return {SpecialCaseKind::squarefree_g, best};
    }
    return {SpecialCaseKind::general, std::nullopt};
}

void for_each_good(const Int& A, const Int& B, const Int& N,
                   const std::function<void(const GoodnessVerdict&)>& callback, unsigned jobs) {
    if (A == 0 || B == 0)
        throw DomainError("A and B must be nonzero");
    if (N < 1)
        throw DomainError("N must be positive");
    jobs = std::max(1u, jobs);
    constexpr unsigned long kBlock = 2048;
    std::vector<std::optional<GoodnessVerdict>> block;
    DecideOptions opts;
    opts.cross_check = false;

    for (Int start = 1; start <= N; start += kBlock) {
        Int stop = start + kBlock;
        if (stop > N + 1)
            stop = N + 1;
        const unsigned long count = Int(stop - start).get_ui();
        block.assign(count, std::nullopt);
        auto work = [&](unsigned lane) {
            for (unsigned long i = lane; i < count; i += jobs) {
                GoodnessVerdict v = decide(A, B, start + i, opts);
                if (v.good)
                    block[i] = std::move(v);
            }
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned lane = 0; lane < jobs; ++lane)
                pool.emplace_back(work, lane);
        }
        for (const auto& v : block) {
            if (v)
                callback(*v);
        }
    }
}

std::vector<GoodEntry> enumerate_good(const Int& A, const Int& B, const Int& N, unsigned jobs) {
    std::vector<GoodEntry> out;
    for_each_good(
        A, B, N, [&](const GoodnessVerdict& v) { out.emplace_back(v.context.L, *v.progression); },
        jobs);
    return out;
}

} // namespace goodint
