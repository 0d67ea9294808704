// End-to-end acceptance checks, one result per criterion.
#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace zeckit {

struct AcceptanceOptions {
    std::filesystem::path source_dir;  // holds tests/data, data/, scripts/
    std::filesystem::path cli;         // zeckit binary; criterion 9 is skipped (FAIL) when empty
    std::filesystem::path work_dir;    // scratch space for the CLI's automaton store
};

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS 3 lemma-suite (0.41 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace zeckit
