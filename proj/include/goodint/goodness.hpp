#pragma once

#include "goodint/coprime_core.hpp"
#include "goodint/progression.hpp"
#include "goodint/split.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace goodint {

// Two routes that must agree disagreed. Never expected; surfaces as exit 3.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class FailureStep { step3_gcd_a, step3_gcd_b, step4_core_bad };
std::string_view to_string(FailureStep step);

enum class CoprimeMethod { direct, structural };

struct DecideOptions {
    // Which coprime criterion decides the core.
    CoprimeMethod method = CoprimeMethod::direct;
    // Also run the other criterion and throw InconsistencyError on mismatch.
#ifdef NDEBUG
    bool cross_check = false;
#else
    bool cross_check = true;
#endif
};

struct GoodnessVerdict {
    bool good = false;
    SplitContext context;
    std::optional<ExponentProgression> progression;
    std::optional<CoprimeVerdict> coprime_verdict;
    std::optional<FailureStep> failure_step;
    std::optional<Int> offending_prime;
};

// Decide whether L | A^K + B^K for some K >= 1, and when it does, attach the
// full set of such K.
GoodnessVerdict decide(const Int& A, const Int& B, const Int& L, const DecideOptions& opts = {});

// Throws DomainError when L is not good.
ExponentProgression exponent_set(const Int& A, const Int& B, const Int& L);
Int min_exponent(const Int& A, const Int& B, const Int& L);

enum class SpecialCaseKind { pure_g_part, g_contained, prime_power_g, squarefree_g, general };
std::string_view to_string(SpecialCaseKind kind);

struct SpecialCase {
    SpecialCaseKind kind = SpecialCaseKind::general;
    // gamma as given by the matching closed form; absent for general.
    std::optional<std::uint64_t> closed_form_gamma;
};

// Precedence: pure_g_part > g_contained > prime_power_g > squarefree_g > general.
SpecialCase classify_special_case(const SplitContext& ctx);

using GoodEntry = std::pair<Int, ExponentProgression>;

// Streams every good L in 1..N in ascending order. With jobs > 1 blocks of L
// are decided concurrently; callback order and content match jobs == 1.
void for_each_good(const Int& A, const Int& B, const Int& N,
                   const std::function<void(const GoodnessVerdict&)>& callback,
                   unsigned jobs = 1);

std::vector<GoodEntry> enumerate_good(const Int& A, const Int& B, const Int& N, unsigned jobs = 1);

} // namespace goodint
