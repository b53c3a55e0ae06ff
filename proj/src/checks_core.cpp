#include "qtsym/checks.hpp"

#include "checks_registry.hpp"
#include "qtsym/pool.hpp"

#include <chrono>
#include <mutex>

namespace qtsym {

const std::vector<Check>& builtin_catalog() {
    static std::vector<Check> catalog = [] {
        std::vector<Check> v;
        detail::add_qlemma_checks(v);
        detail::add_macbasics_checks(v);
        detail::add_series_checks(v);
        detail::add_main_checks(v);
        detail::add_sec5_checks(v);
        detail::add_sec6_checks(v);
        detail::add_sec7_checks(v);
        detail::add_sec89_checks(v);
        return v;
    }();
    return catalog;
}

std::optional<Counterexample> expect_eq(const std::string& params, const SymFunc& lhs,
                                        const SymFunc& rhs) {
    if (lhs == rhs) return std::nullopt;
    return Counterexample{params, lhs.str(), rhs.str(), (lhs - rhs).str()};
}

std::optional<Counterexample> expect_eq(const std::string& params, const RatQT& lhs,
                                        const RatQT& rhs) {
    if (lhs == rhs) return std::nullopt;
    return Counterexample{params, lhs.str(), rhs.str(), (lhs - rhs).str()};
}

std::size_t det_pick(const std::string& seed, std::size_t modulus) {
    if (modulus == 0) return 0;
    std::uint64_t h = fnv1a(seed);
    h ^= h >> 30; h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27; h *= 0x94d049bb133111ebull;
    h ^= h >> 31;
    return static_cast<std::size_t>(h % modulus);
}

bool check_matches(const Check& c, const std::string& pattern) {
    if (pattern.empty()) return true;
    // glob match on the name, and also on the tag so group patterns work
    auto glob = [](const std::string& pat, const std::string& s) {
        std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t p, std::size_t i) {
            while (p < pat.size()) {
                if (pat[p] == '*') {
                    for (std::size_t k = i; k <= s.size(); ++k)
                        if (rec(p + 1, k)) return true;
                    return false;
                }
                if (i >= s.size()) return false;
                if (pat[p] != '?' && pat[p] != s[i]) return false;
                ++p; ++i;
            }
            return i == s.size();
        };
        return rec(0, 0);
    };
    return glob(pattern, c.name) || glob(pattern, c.tag);
}

CheckResult run_check(const Check& c, const Bounds& b, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = c.name;
    r.ref = c.ref;
    std::vector<Instance> instances = c.enumerate(b);
    r.instances = static_cast<long>(instances.size());
    std::vector<std::optional<Counterexample>> outcomes(instances.size());
    parallel_for(instances.size(), jobs,
                 [&](std::size_t i) { outcomes[i] = instances[i].run(); });
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i]) {
            r.status = CheckResult::Status::fail;
            r.counterexample = outcomes[i];
            if (r.counterexample->params.empty())
                r.counterexample->params = instances[i].label;
            break;
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

CheckResult run_check_named(const std::string& name, const Bounds& b, int jobs) {
    const auto& cat = builtin_catalog();
    for (const auto& c : cat)
        if (c.name == name) return run_check(c, b, jobs);
    // unknown: report near matches
    std::string near;
    for (const auto& c : cat) {
        if (c.name.find(name) != std::string::npos || name.find(c.name) != std::string::npos ||
            c.name.substr(0, 3) == name.substr(0, std::min<std::size_t>(3, name.size()))) {
            if (!near.empty()) near += ", ";
            near += c.name;
        }
    }
    throw std::invalid_argument("unknown check '" + name + "'" +
                                (near.empty() ? "" : " (near matches: " + near + ")"));
}

RunSummary run_all(const Bounds& b, const std::string& filter, int jobs, bool fail_fast) {
    auto t0 = std::chrono::steady_clock::now();
    RunSummary s;
    for (const auto& c : builtin_catalog()) {
        if (!filter.empty() && !check_matches(c, filter)) continue;
        if (fail_fast && s.failures > 0) {
            CheckResult r;
            r.name = c.name;
            r.ref = c.ref;
            r.status = CheckResult::Status::skipped;
            s.results.push_back(std::move(r));
            continue;
        }
        CheckResult r = run_check(c, b, jobs);
        if (r.status == CheckResult::Status::fail) ++s.failures;
        s.total_instances += r.instances;
        s.results.push_back(std::move(r));
    }
    auto t1 = std::chrono::steady_clock::now();
    s.total_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return s;
}

}  // namespace qtsym
