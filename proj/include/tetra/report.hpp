#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tetra {

// Outcome list of a verification suite: one named pass/fail entry per check.
struct Report {
    struct Check {
        std::string name;
        bool pass;
    };

    std::vector<Check> checks;

    void add(std::string name, bool pass) { checks.push_back({std::move(name), pass}); }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    std::size_t checked() const { return checks.size(); }
    std::size_t failed() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
    bool ok() const { return failed() == 0; }
};

}  // namespace tetra
