// Check reports: every verifier returns named conditions with exact residual
// witnesses. Construction functions refuse by throwing CheckFailure carrying
// the failing report.

#pragma once

#include "workbench/linalg.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wb {

struct Witness {
    std::vector<int> indices; // 0-based basis indices; serialization shifts to 1-based
    Vec residual;             // LHS - RHS, exact
};

struct ConditionResult {
    std::string id;
    bool ok = true;
    long violations = 0; // total count; witnesses may be capped below this
    std::vector<Witness> witnesses;
};

struct CheckReport {
    std::string check_id;
    bool ok = true;
    std::vector<ConditionResult> conditions;
    std::vector<std::string> notes;

    const ConditionResult* find(const std::string& id) const {
        for (const auto& c : conditions)
            if (c.id == id) return &c;
        return nullptr;
    }
};

struct CheckOptions {
    long witness_cap = 25; // per condition; negative lifts the cap
};

// Accumulates violations for one named condition, honoring the witness cap.
class Condition {
public:
    Condition(std::string id, const CheckOptions& opt) : res_{}, cap_(opt.witness_cap) {
        res_.id = std::move(id);
    }

    void expect_zero(std::vector<int> indices, const Vec& residual) {
        if (is_zero(residual)) return;
        res_.ok = false;
        ++res_.violations;
        if (cap_ < 0 || static_cast<long>(res_.witnesses.size()) < cap_)
            res_.witnesses.push_back(Witness{std::move(indices), residual});
    }

    ConditionResult take() { return std::move(res_); }

private:
    ConditionResult res_;
    long cap_;
};

inline void finish(CheckReport& rep, Condition&& c) {
    rep.conditions.push_back(std::move(c).take());
    if (!rep.conditions.back().ok) rep.ok = false;
}

inline void merge_into(CheckReport& rep, const CheckReport& sub, const std::string& prefix) {
    for (const auto& c : sub.conditions) {
        rep.conditions.push_back(c);
        rep.conditions.back().id = prefix + c.id;
    }
    for (const auto& n : sub.notes) rep.notes.push_back(n);
    if (!sub.ok) rep.ok = false;
}

// A construction's precondition failed; the report says which check and why.
struct CheckFailure : std::runtime_error {
    CheckReport report;
    CheckFailure(const std::string& msg, CheckReport r)
        : std::runtime_error(msg), report(std::move(r)) {}
};

} // namespace wb
