// Acceptance gate: runs every verification property at its full rank and
// prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <chrono>
#include <cstdio>

#include "gysin/verify.hpp"

int main() {
    const auto start = std::chrono::steady_clock::now();
    const auto results = gysin::run_verification(gysin::VerifyOptions{});
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start);

    std::size_t passed = 0;
    for (const auto& r : results) {
        std::printf("%s  %-26s  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        if (r.passed) ++passed;
    }
    std::printf("%zu/%zu criteria passed in %.1fs\n", passed, results.size(),
                static_cast<double>(elapsed.count()) / 1000.0);
    return passed == results.size() ? 0 : 1;
}
