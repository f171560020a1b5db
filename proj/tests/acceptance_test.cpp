// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is checked at its stated tolerance (all results
// here are exact identities) and within its runtime budget.

#include "gkz24/checks.hpp"

#include <chrono>
#include <iostream>

using namespace gkz24;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& run) {
    auto start = Clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_time = secs < budget_seconds;
    if (!ok || !in_time) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2fs, budget %.0fs)%s%s\n",
                ok && in_time ? "PASS" : "FAIL", number, name.c_str(), secs, budget_seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
}

bool report_ok(const Report& rep, std::string& detail) {
    for (const auto& e : rep.entries)
        if (!e.pass) {
            detail = rep.name + ": " + e.check + " expected " + e.expected + " got " + e.got;
            return false;
        }
    return true;
}

}  // namespace

int main() {
    Bridge br = make_bridge();

    criterion(1, "fan table and smooth resolution", 1.0,
              [&](std::string& d) { return report_ok(check_fan_tables(), d); });

    criterion(2, "polytope tables, 105 points, normality", 5.0,
              [&](std::string& d) { return report_ok(check_polytopes(), d); });

    criterion(3, "the fourteen roots, byte-exact", 1.0,
              [&](std::string& d) { return report_ok(check_roots(), d); });

    criterion(4, "correspondence table, 15 rows + worked examples", 30.0,
              [&](std::string& d) { return report_ok(verify_correspondence_table(br), d); });

    criterion(5, "missing roots are the two diagonal ones", 1.0,
              [&](std::string& d) { return report_ok(check_missing_roots(br), d); });

    criterion(6, "degeneration of the tautological system", 120.0,
              [&](std::string& d) { return report_ok(degenerate_check(br), d); });

    criterion(7, "reconstruction of the tautological system", 120.0,
              [&](std::string& d) { return report_ok(reconstruct_X_system(br), d); });

    criterion(8, "period annihilation for the extended GKZ system", 600.0,
              [&](std::string& d) { return report_ok(check_periods(br, 3, 2), d); });

    criterion(9, "complete intersection system and its s=1 specialization", 600.0,
              [&](std::string& d) { return report_ok(check_ci(br, 2), d); });

    criterion(10, "rigidity combinatorics", 10.0,
              [&](std::string& d) { return report_ok(check_rigidity(br), d); });

    criterion(11, "property suites", 120.0,
              [&](std::string& d) { return report_ok(check_properties(br), d); });

    if (failures) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all 11 criteria pass\n");
    return 0;
}
