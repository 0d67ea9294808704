// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <filesystem>
#include <iostream>

#include "zeckit/acceptance.hpp"

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <source-dir> <zeckit-binary> [work-dir]\n";
        return 2;
    }
    zeckit::AcceptanceOptions opt;
    opt.source_dir = argv[1];
    opt.cli = argv[2];
    opt.work_dir = argc > 3 ? std::filesystem::path(argv[3])
                            : std::filesystem::temp_directory_path() / "zeckit-acceptance";
    bool ok = true;
    zeckit::run_acceptance(opt, [&](const zeckit::CriterionResult& r) {
        std::cout << zeckit::format_result(r) << '\n' << std::flush;
        ok = ok && r.passed;
    });
    std::cout << (ok ? "ALL PASS" : "SOME FAILED") << '\n';
    return ok ? 0 : 1;
}
