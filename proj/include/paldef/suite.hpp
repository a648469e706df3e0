#ifndef PALDEF_SUITE_HPP
#define PALDEF_SUITE_HPP

#include <string>
#include <vector>

namespace paldef::suite {

/// One verification scenario of the built-in battery; `run` executes every
/// scenario (or those matching a tag) and reports one row each.
struct ScenarioResult {
    int id = 0;
    std::string tag;
    std::string title;
    bool pass = false;
    std::string detail;
};

std::vector<ScenarioResult> run(const std::string& only_tag = "");

std::string format_table(const std::vector<ScenarioResult>& rows);

} // namespace paldef::suite

#endif
