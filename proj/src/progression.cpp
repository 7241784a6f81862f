#include "goodint/progression.hpp"

#include <algorithm>

namespace goodint {

Int first_at_threshold(const Int& residue, const Int& modulus, std::uint64_t threshold) {
    const Int t = Int(static_cast<unsigned long>(threshold));
    const Int r = mod_normalize(residue, modulus);
    Int k = t + mod_normalize(r - t, modulus);
    if (k == 0)
        k = modulus;  // K ranges over positive integers; 0 + modulus stays in class
    return k;
}

Int ExponentProgression::floor() const {
    return threshold == 0 ? Int(1) : Int(static_cast<unsigned long>(threshold));
}

bool ExponentProgression::contains(const Int& K) const {
    if (K < 1)
        return false;
    if (std::binary_search(exceptions.begin(), exceptions.end(), K))
        return true;
    return K >= floor() && mod_normalize(K - residue, modulus) == 0;
}

Int ExponentProgression::next_at_or_after(const Int& K) const {
    const Int start = K < 1 ? Int(1) : K;
    for (const Int& e : exceptions) {
        if (e >= start)
            return e;
    }
    const Int from = std::max(start, floor());
    return from + mod_normalize(residue - from, modulus);
}

std::vector<Int> ExponentProgression::first(std::size_t count) const {
    std::vector<Int> out;
    out.reserve(count);
    Int k = 1;
    while (out.size() < count) {
        k = next_at_or_after(k);
        out.push_back(k);
        k += 1;
    }
    return out;
}

std::vector<Int> ExponentProgression::up_to(const Int& limit) const {
    std::vector<Int> out;
    for (Int k = next_at_or_after(1); k <= limit; k = next_at_or_after(k + 1))
        out.push_back(k);
    return out;
}

} // namespace goodint
