#pragma once

#include <string>
#include <vector>

namespace colorhom {

// One named check with its outcome; witness describes the failure location
// (indices, names, offending values) and stays empty on success.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, std::move(witness)});
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return c.name + ": " + c.witness;
        return "";
    }
};

}  // namespace colorhom
