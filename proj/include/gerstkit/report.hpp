#pragma once

// Pass/fail reports produced by the verification suites. Content is
// deterministic for a fixed seed; failures carry a serialized witness
// tuple so runs can be replayed.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gerstkit {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skipped";
    }
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    int trials = 0;
    std::string witness;  // empty unless status == Fail
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    void add(std::string name, bool passed, int trials, std::string witness = "") {
        checks.push_back(CheckResult{std::move(name),
                                     passed ? CheckStatus::Pass : CheckStatus::Fail, trials,
                                     passed ? std::string() : std::move(witness)});
    }

    void add_skipped(std::string name) {
        checks.push_back(CheckResult{std::move(name), CheckStatus::Skipped, 0, ""});
    }

    void append(const Report& other) {
        for (const auto& c : other.checks) checks.push_back(c);
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    int count(CheckStatus s) const {
        int n = 0;
        for (const auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }

    // Timing is off by default so that reports for a fixed seed are
    // byte-identical across runs.
    nlohmann::json to_json(bool with_timing = false) const {
        nlohmann::json j;
        j["schema"] = 1;
        j["suite"] = suite;
        j["seed"] = seed;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json e;
            e["name"] = c.name;
            e["status"] = to_string(c.status);
            e["trials"] = c.trials;
            if (c.status == CheckStatus::Fail) e["witness"] = c.witness;
            arr.push_back(e);
        }
        j["checks"] = arr;
        j["counts"] = {{"pass", count(CheckStatus::Pass)},
                       {"fail", count(CheckStatus::Fail)},
                       {"skipped", count(CheckStatus::Skipped)}};
        if (with_timing) j["elapsed_ms"] = elapsed_ms;
        return j;
    }

    std::string to_text(bool with_timing = true) const {
        std::string out = "suite " + suite + " (seed " + std::to_string(seed) + ")\n";
        for (const auto& c : checks) {
            out += "  [";
            out += (c.status == CheckStatus::Pass ? "PASS" :
                    c.status == CheckStatus::Fail ? "FAIL" : "SKIP");
            out += "] " + c.name;
            if (c.trials > 0) out += " (" + std::to_string(c.trials) + " trials)";
            if (c.status == CheckStatus::Fail && !c.witness.empty())
                out += "\n         witness: " + c.witness;
            out += "\n";
        }
        out += "  " + std::to_string(count(CheckStatus::Pass)) + " passed, " +
               std::to_string(count(CheckStatus::Fail)) + " failed, " +
               std::to_string(count(CheckStatus::Skipped)) + " skipped";
        if (with_timing) out += " [" + std::to_string(elapsed_ms) + " ms]";
        out += "\n";
        return out;
    }
};

} // namespace gerstkit
