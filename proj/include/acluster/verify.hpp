#pragma once

#include <string>
#include <vector>

#include "acluster/geometry.hpp"
#include "acluster/straighten.hpp"

namespace acluster {

struct SuiteResult {
    std::string suite;
    int64_t cases = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

// names accepted by run_suite (and the CLI): closed-forms, mutation,
// coefficients, bijections, fmap, straightening, positivity, certificates,
// newton, counterexample, negative-control
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, int window);
std::vector<SuiteResult> run_all_suites(int window);

}  // namespace acluster
