// Acceptance battery: runs every verification scenario and prints one
// PASS/FAIL row per scenario. Exits nonzero when any row fails.

#include <cstdio>

#include "paldef/suite.hpp"

int main() {
    const auto rows = paldef::suite::run();
    std::fputs(paldef::suite::format_table(rows).c_str(), stdout);
    for (const auto& row : rows)
        if (!row.pass) return 1;
    return 0;
}
