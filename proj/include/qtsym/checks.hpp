#pragma once

#include "qtsym/operators.hpp"

#include <optional>

namespace qtsym {

struct Bounds {
    int N = 4;       // shared bound for partition sizes and integer parameters
    int qbound = 8;  // larger bound for the one-variable q-lemmas
};

struct Counterexample {
    std::string params;
    std::string lhs;
    std::string rhs;
    std::string diff;
};

struct Instance {
    std::string label;
    std::function<std::optional<Counterexample>()> run;
};

struct Check {
    std::string name;
    std::string tag;     // q-lemmas, mac-basics, series, main, sec5 ... sec9
    std::string ref;     // paper anchor and quote
    std::string params;  // parameter ranges, human readable
    std::function<std::vector<Instance>(const Bounds&)> enumerate;
};

struct CheckResult {
    enum class Status { pass, fail, skipped };
    std::string name;
    std::string ref;
    long instances = 0;
    Status status = Status::pass;
    std::optional<Counterexample> counterexample;
    double ms = 0;
};

struct RunSummary {
    std::vector<CheckResult> results;
    long failures = 0;
    long total_instances = 0;
    double total_ms = 0;
};

// registry of every identity in the paper, grouped by section
const std::vector<Check>& builtin_catalog();

// name glob (* and ?) against a check's name, or exact match on its tag
bool check_matches(const Check& c, const std::string& pattern);

CheckResult run_check(const Check& c, const Bounds& b, int jobs);
// throws std::invalid_argument listing near matches for unknown names
CheckResult run_check_named(const std::string& name, const Bounds& b, int jobs);

RunSummary run_all(const Bounds& b, const std::string& filter, int jobs, bool fail_fast);

// ------------------------------------------------ helpers for check code

// pass/fail outcome of comparing two symmetric functions
std::optional<Counterexample> expect_eq(const std::string& params, const SymFunc& lhs,
                                        const SymFunc& rhs);
std::optional<Counterexample> expect_eq(const std::string& params, const RatQT& lhs,
                                        const RatQT& rhs);

// deterministic pseudo-random pick used for spot-check inputs
std::size_t det_pick(const std::string& seed, std::size_t modulus);

}  // namespace qtsym
