#include "goodint/output.hpp"

namespace goodint {

OutputRecord make_record(const GoodnessVerdict& verdict, std::size_t preview) {
    const SplitContext& ctx = verdict.context;
    OutputRecord r;
    r.A = ctx.A;
    r.B = ctx.B;
    r.L = ctx.L;
    r.verdict = verdict.good;
    if (verdict.failure_step)
        r.failure_step = std::string(to_string(*verdict.failure_step));
    r.offending_prime = verdict.offending_prime;
    r.g = ctx.g;
    r.a = ctx.a;
    r.b = ctx.b;
    r.g_part = ctx.g_part;
    r.ell = ctx.ell;
    r.gamma = ctx.gamma;
    r.progression = verdict.progression;
    r.special_case = std::string(to_string(classify_special_case(ctx).kind));
    if (verdict.progression && preview > 0)
        r.exponents_preview = verdict.progression->first(preview);
    return r;
}

nlohmann::ordered_json to_json(const OutputRecord& r) {
    using nlohmann::ordered_json;
    auto str = [](const Int& n) { return to_string(n); };
    auto list = [&](const std::vector<Int>& xs) {
        ordered_json arr = ordered_json::array();
        for (const auto& x : xs)
            arr.push_back(str(x));
        return arr;
    };

    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["query"] = {{"A", str(r.A)}, {"B", str(r.B)}, {"L", str(r.L)}};
    j["verdict"] = r.verdict;
    j["failure_step"] = r.failure_step ? ordered_json(*r.failure_step) : ordered_json(nullptr);
    j["offending_prime"] =
        r.offending_prime ? ordered_json(str(*r.offending_prime)) : ordered_json(nullptr);
    j["split"] = {{"g", str(r.g)},           {"a", str(r.a)},     {"b", str(r.b)},
                  {"g_part", str(r.g_part)}, {"ell", str(r.ell)}, {"gamma", std::to_string(r.gamma)}};
    if (r.progression) {
        const auto& p = *r.progression;
        j["progression"] = {{"residue", str(p.residue)},
                            {"modulus", str(p.modulus)},
                            {"threshold", std::to_string(p.threshold)},
                            {"k_min", str(p.k_min)},
                            {"exceptions", list(p.exceptions)}};
    } else {
        j["progression"] = nullptr;
    }
    j["special_case"] = r.special_case;
    j["exponents_preview"] =
        r.exponents_preview ? list(*r.exponents_preview) : ordered_json(nullptr);
    return j;
}

std::string serialize(const OutputRecord& record) { return to_json(record).dump(); }

} // namespace goodint
