// Acceptance suite: runs every criterion of the verification corpus and
// prints one PASS/FAIL line each. Exit status is nonzero if any fails or if
// the whole run exceeds its time budget.

#include "mfb/corpus.hpp"

#include <chrono>
#include <cstdio>

int main() {
    auto t0 = std::chrono::steady_clock::now();
    auto results = mfb::corpus::run_all_checks();
    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);

    bool ok = true;
    for (auto& r : results) {
        std::printf("%s  criterion %s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.pass ? "" : "  -- ", r.pass ? "" : r.detail.c_str());
        ok = ok && r.pass;
    }
    std::printf("%s  full corpus in %lld ms (budget 60000 ms)\n",
                elapsed.count() < 60000 ? "PASS" : "FAIL",
                static_cast<long long>(elapsed.count()));
    ok = ok && elapsed.count() < 60000;
    return ok ? 0 : 1;
}
