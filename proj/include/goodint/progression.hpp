#pragma once

#include "goodint/integer_arith.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace goodint {

// The set of admissible exponents of a good modulus:
//
//   exceptions  U  { K : K = residue (mod modulus), K >= max(1, threshold) }
//
// threshold is the raw gamma(L), possibly 0. exceptions lists admissible K
// lying in the residue class but below max(1, threshold); it is empty unless
// a prime of g also divides a^K + b^K for such a K. k_min is the least
// element of the whole set.
struct ExponentProgression {
    Int residue;
    Int modulus = 1;
    std::uint64_t threshold = 0;
    Int k_min = 1;
    std::vector<Int> exceptions;

    // max(1, threshold)
    Int floor() const;
    bool contains(const Int& K) const;
    // Least member >= K.
    Int next_at_or_after(const Int& K) const;
    std::vector<Int> first(std::size_t count) const;
    std::vector<Int> up_to(const Int& limit) const;

    bool operator==(const ExponentProgression&) const = default;
};

// threshold + ((residue - threshold) mod modulus), raised to 1 when it is 0.
// This is the least member of the residue class at or above the threshold.
Int first_at_threshold(const Int& residue, const Int& modulus, std::uint64_t threshold);

} // namespace goodint
