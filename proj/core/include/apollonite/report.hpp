#pragma once

#include <string>
#include <vector>

namespace apollonite {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
    void merge(const Report& r, const std::string& prefix = {}) {
        for (const auto& c : r.checks) checks.push_back({prefix + c.name, c.ok, c.detail});
    }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    const Check* first_failure() const {
        for (const auto& c : checks)
            if (!c.ok) return &c;
        return nullptr;
    }
};

}  // namespace apollonite
