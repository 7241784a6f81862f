#pragma once

#include "goodint/goodness.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace goodint {

inline constexpr const char* kSchemaVersion = "1";

// One line of machine output. Integers travel as decimal strings so that
// consumers with 64-bit number types never truncate them.
struct OutputRecord {
    Int A, B, L;
    bool verdict = false;
    std::optional<std::string> failure_step;
    std::optional<Int> offending_prime;
    Int g, a, b, g_part, ell;
    std::uint64_t gamma = 0;
    std::optional<ExponentProgression> progression;
    std::string special_case;
    std::optional<std::vector<Int>> exponents_preview;
};

OutputRecord make_record(const GoodnessVerdict& verdict, std::size_t preview = 0);

nlohmann::ordered_json to_json(const OutputRecord& record);
// Compact, single line, fixed key order.
std::string serialize(const OutputRecord& record);

} // namespace goodint
