#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rifs {

enum class VerdictStatus { holds, fails, inconclusive };

constexpr const char* to_string(VerdictStatus s)
{
    switch (s) {
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::fails: return "fails";
    case VerdictStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

struct Witness {
    Witness() = default;
    Witness(std::string what_, double location_, double value_, std::optional<double> end = std::nullopt)
        : what(std::move(what_)), location(location_), value(value_), location_end(end)
    {
    }

    std::string what;
    double location = 0.0;
    double value = 0.0;
    // Some witnesses are intervals (a flat piece of W, for instance).
    std::optional<double> location_end;
};

struct ProbeEntry {
    std::string quantity;
    double at;
    double value;
};

// Outcome of a numerical decision procedure.  A failing verdict always
// carries a witness; an inconclusive one always says which probe range or
// hypothesis was exhausted.
struct Verdict {
    VerdictStatus status = VerdictStatus::inconclusive;
    std::string reason;
    std::optional<Witness> witness;
    // Constant certified alongside a positive verdict (K for Delta2, A for RB_p ...).
    std::optional<double> constant;
    std::vector<ProbeEntry> probe_log;
    // Sub-verdicts for conjunctions, keyed by name.
    std::vector<std::pair<std::string, Verdict>> parts;

    static Verdict holds(std::string reason, std::optional<double> constant = std::nullopt)
    {
        Verdict v;
        v.status = VerdictStatus::holds;
        v.reason = std::move(reason);
        v.constant = constant;
        return v;
    }

    static Verdict fails(std::string reason, Witness w)
    {
        Verdict v;
        v.status = VerdictStatus::fails;
        v.reason = std::move(reason);
        v.witness = std::move(w);
        return v;
    }

    static Verdict inconclusive(std::string reason, std::vector<ProbeEntry> log = {})
    {
        Verdict v;
        v.status = VerdictStatus::inconclusive;
        v.reason = std::move(reason);
        v.probe_log = std::move(log);
        return v;
    }

    bool is_holds() const { return status == VerdictStatus::holds; }
    bool is_fails() const { return status == VerdictStatus::fails; }
    bool is_inconclusive() const { return status == VerdictStatus::inconclusive; }
};

} // namespace rifs
