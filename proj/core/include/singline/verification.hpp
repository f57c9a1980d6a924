#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "singline/schubert.hpp"

namespace singline {

struct VerifyOptions {
    long grid_max = 40;  // queries 1 <= k <= d <= grid_max
    long sym_max = 60;   // Sym^t for 0 <= t <= sym_max
    long planes_max = 40;
    long localization_max = 20;
    unsigned newton_samples = 200;
    unsigned seed = 20240521;
    /// Structure constants checked by the "ring" suite.
    const ProductTable* table = &ProductTable::standard();
};

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failed = 0;
    std::vector<std::string> messages;  // first few failures

    bool passed() const { return failed == 0; }
    void check(bool ok, const std::string& what);
};

/// Names accepted by run_suite, in the order run_all executes them.
const std::vector<std::string_view>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options = {});

std::vector<SuiteResult> run_all(const VerifyOptions& options = {});

}  // namespace singline
