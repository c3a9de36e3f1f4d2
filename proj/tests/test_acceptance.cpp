#include <chrono>
#include <cstdio>

#include "polypol/acceptance.hpp"

int main() {
    using namespace polypol;
    RunConfig cfg = RunConfig::from_environment();
    auto start = std::chrono::steady_clock::now();
    AcceptanceReport rep = run_acceptance(cfg);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::fputs(rep.table().c_str(), stdout);
    std::printf("%s in %.1f s (seed %llu)\n", rep.passed() ? "all criteria passed" : "some criteria FAILED", secs,
                static_cast<unsigned long long>(cfg.seed));
    return rep.passed() ? 0 : 1;
}
