#include "goodint/cli.hpp"

#include "goodint/goodness.hpp"
#include "goodint/oracle.hpp"
#include "goodint/output.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <ostream>

namespace goodint::cli {

namespace {

constexpr std::size_t kPreviewLength = 5;
// Cap on oracle work for --verify when lambda(ell) is large.
constexpr std::uint64_t kMaxVerifyBound = 200'000;

struct GlobalFlags {
    bool json = false;
    bool verify = false;
    bool quiet = false;
    bool structural = false;
};

struct Query {
    std::string A, B, L;
};

DecideOptions options_for(const GlobalFlags& flags) {
    DecideOptions opts;
    opts.method = flags.structural ? CoprimeMethod::structural : CoprimeMethod::direct;
    if (flags.verify)
        opts.cross_check = true;
    return opts;
}

std::string join(const std::vector<Int>& xs) {
    std::string s;
    for (const auto& x : xs) {
        if (!s.empty())
            s += ' ';
        s += to_string(x);
    }
    return s;
}

std::string describe_set(const ExponentProgression& p) {
    std::string s;
    if (p.modulus != 1)
        s = "K ≡ " + to_string(p.residue) + " (mod " + to_string(p.modulus) + "), ";
    s += "K ≥ " + to_string(p.floor());
    if (!p.exceptions.empty())
        s += "; also K ∈ {" + join(p.exceptions) + "}";
    return s;
}

std::string describe_failure(const GoodnessVerdict& v) {
    std::string s = "not good (" + std::string(to_string(*v.failure_step));
    if (v.offending_prime)
        s += ", prime " + to_string(*v.offending_prime);
    if (v.coprime_verdict)
        s += ", " + std::string(to_string(v.coprime_verdict->reason));
    return s + ")";
}

std::string describe_split(const SplitContext& c) {
    return "g=" + to_string(c.g) + " a=" + to_string(c.a) + " b=" + to_string(c.b) +
           " g_part=" + to_string(c.g_part) + " ell=" + to_string(c.ell) +
           " gamma=" + std::to_string(c.gamma);
}

// Oracle scan over 1..bound compared with the decided set.
bool agrees_with_oracle(const GoodnessVerdict& v, std::uint64_t bound) {
    const auto& c = v.context;
    const auto report = oracle::scan_exponents(c.A, c.B, c.L, bound);
    std::vector<Int> expected;
    if (v.good)
        expected = v.progression->up_to(Int(static_cast<unsigned long>(bound)));
    if (expected.size() != report.admissible.size())
        return false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (expected[i] != Int(static_cast<unsigned long>(report.admissible[i])))
            return false;
    }
    return true;
}

std::uint64_t verification_bound(const GoodnessVerdict& v) {
    const Int lam = carmichael_lambda(v.context.ell_factors);
    if (!mpz_fits_ulong_p(lam.get_mpz_t()))
        return kMaxVerifyBound;
    return std::min(kMaxVerifyBound, oracle::default_bound(lam.get_ui(), v.context.gamma));
}

int cmd_check(const Query& q, const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
    const GoodnessVerdict v = decide(parse_int(q.A), parse_int(q.B), parse_int(q.L), options_for(flags));
    if (flags.verify && !agrees_with_oracle(v, verification_bound(v))) {
        err << "error: oracle disagrees with the decided exponent set\n";
        return kInternal;
    }
    if (!flags.quiet) {
        if (flags.json) {
            out << serialize(make_record(v, kPreviewLength)) << '\n';
        } else {
            const auto& c = v.context;
            out << "query: A=" << c.A << " B=" << c.B << " L=" << c.L << '\n';
            out << "verdict: " << (v.good ? "good" : describe_failure(v)) << '\n';
            out << "split: " << describe_split(c) << '\n';
            out << "special case: " << to_string(classify_special_case(c).kind) << '\n';
            if (v.good) {
                out << "exponents: " << describe_set(*v.progression) << '\n';
                out << "k_min: " << v.progression->k_min << '\n';
                out << "first: " << join(v.progression->first(kPreviewLength)) << '\n';
            }
        }
    }
    return v.good ? kSuccess : kNotGood;
}

int cmd_exponents(const Query& q, std::size_t count, const std::string& limit,
                  const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
    const GoodnessVerdict v = decide(parse_int(q.A), parse_int(q.B), parse_int(q.L), options_for(flags));
    if (!v.good) {
        if (!flags.quiet)
            out << describe_failure(v) << '\n';
        return kNotGood;
    }
    std::vector<Int> ks;
    if (!limit.empty()) {
        const Int M = parse_int(limit);
        if (M < 1)
            throw DomainError("--limit must be positive");
        ks = v.progression->up_to(M);
    } else {
        if (count < 1)
            throw DomainError("--count must be positive");
        ks = v.progression->first(count);
    }
    if (flags.verify) {
        const auto& c = v.context;
        for (const auto& K : ks) {
            if (!oracle::divides_power_sum(c.A, c.B, c.L, K)) {
                err << "error: oracle rejects K=" << K << '\n';
                return kInternal;
            }
        }
    }
    if (!flags.quiet) {
        if (flags.json) {
            auto rec = make_record(v);
            rec.exponents_preview = ks;
            out << serialize(rec) << '\n';
        } else {
            out << join(ks) << '\n';
        }
    }
    return kSuccess;
}

int cmd_split(const Query& q, const GlobalFlags& flags, std::ostream& out) {
    const SplitContext c = build_context(parse_int(q.A), parse_int(q.B), parse_int(q.L));
    if (!flags.quiet) {
        if (flags.json) {
            nlohmann::ordered_json j;
            j["schema_version"] = kSchemaVersion;
            j["query"] = {{"A", to_string(c.A)}, {"B", to_string(c.B)}, {"L", to_string(c.L)}};
            j["split"] = {{"g", to_string(c.g)},         {"a", to_string(c.a)},
                          {"b", to_string(c.b)},         {"g_part", to_string(c.g_part)},
                          {"ell", to_string(c.ell)},     {"gamma", std::to_string(c.gamma)}};
            j["special_case"] = to_string(classify_special_case(c).kind);
            out << j.dump() << '\n';
        } else {
            out << describe_split(c) << '\n';
        }
    }
    return kSuccess;
}

int cmd_enumerate(const Query& q, unsigned jobs, const GlobalFlags& flags, std::ostream& out,
                  std::ostream& err) {
    const Int A = parse_int(q.A), B = parse_int(q.B), N = parse_int(q.L);
    bool consistent = true;
    for_each_good(
        A, B, N,
        [&](const GoodnessVerdict& v) {
            if (flags.verify && !agrees_with_oracle(v, verification_bound(v)))
                consistent = false;
            if (flags.quiet)
                return;
            if (flags.json)
                out << serialize(make_record(v)) << '\n';
            else
                out << v.context.L << '\n';
        },
        jobs);
    if (!consistent) {
        err << "error: oracle disagrees with at least one enumerated modulus\n";
        return kInternal;
    }
    return kSuccess;
}

int cmd_verify(const Query& q, std::uint64_t bound, const GlobalFlags& flags, std::ostream& out,
               std::ostream& err) {
    if (bound < 1)
        throw DomainError("--bound must be positive");
    const GoodnessVerdict v = decide(parse_int(q.A), parse_int(q.B), parse_int(q.L), options_for(flags));
    const bool ok = agrees_with_oracle(v, bound);
    if (!flags.quiet) {
        if (flags.json) {
            out << serialize(make_record(v, kPreviewLength)) << '\n';
        } else if (ok) {
            out << "agree: oracle and " << (v.good ? "progression" : "verdict (not good)")
                << " match for K <= " << bound << '\n';
        }
    }
    if (!ok) {
        err << "error: oracle scan and decided set differ for K <= " << bound << '\n';
        return kInternal;
    }
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide whether L divides A^K + B^K for some K >= 1, and list every such K.",
                 "goodint"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "Machine output, one JSON record per line");
    app.add_flag("--verify", flags.verify, "Cross-check against the brute-force oracle");
    app.add_flag("--quiet", flags.quiet, "Suppress normal output; report by exit code only");
    app.add_flag("--structural", flags.structural,
                 "Decide the coprime core with the 2-adic order criterion");

    Query q;
    auto add_query = [&q](CLI::App* sub, const char* third) {
        sub->add_option("A", q.A, "First base")->required();
        sub->add_option("B", q.B, "Second base")->required();
        sub->add_option(third, q.L, "Modulus")->required();
    };

    auto* check = app.add_subcommand("check", "Decide L and print its exponent set");
    add_query(check, "L");

    auto* exponents = app.add_subcommand("exponents", "List admissible exponents");
    add_query(exponents, "L");
    std::size_t count = 10;
    std::string limit;
    auto* count_opt = exponents->add_option("--count,-n", count, "How many exponents to list");
    auto* limit_opt = exponents->add_option("--limit,-m", limit, "List every exponent up to M");
    count_opt->excludes(limit_opt);

    auto* split = app.add_subcommand("split", "Print the g-part / coprime-core split of L");
    add_query(split, "L");

    auto* enumerate = app.add_subcommand("enumerate", "Stream every good L up to N");
    add_query(enumerate, "N");
    unsigned jobs = 1;
    enumerate->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

    auto* verify = app.add_subcommand("verify", "Compare the decided set with an oracle scan");
    add_query(verify, "L");
    std::uint64_t bound = 500;
    verify->add_option("--bound", bound, "Scan K = 1..bound");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*check)
            return cmd_check(q, flags, out, err);
        if (*exponents)
            return cmd_exponents(q, count, limit, flags, out, err);
        if (*split)
            return cmd_split(q, flags, out);
        if (*enumerate)
            return cmd_enumerate(q, jobs, flags, out, err);
        if (*verify)
            return cmd_verify(q, bound, flags, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InconsistencyError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

} // namespace goodint::cli
