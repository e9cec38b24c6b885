// Fixed-priority preemptive schedulability analysis: task derivation from
// the instance model, exact utilization, response-time iteration and report
// assembly. Per-core analyses are independent pure computations.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iotforge/instance.hpp"
#include "iotforge/model.hpp"
#include "iotforge/rational.hpp"

namespace iotforge {

struct RTTask {
    std::string id;  // annotated operation path, e.g. plant.n1.s1.senseTempHum
    CoreRef core;
    Micros wcet = 0;      // C
    Micros period = 0;    // T (sporadic: minimum inter-arrival)
    Micros deadline = 0;  // D
    int priority = 0;     // larger = higher
    ArrivalPattern pattern = ArrivalPattern::Periodic;
    std::size_t decl_index = 0;  // annotation order; breaks priority ties
};

/// Tasks bound to one core, sorted by descending priority (ties: earlier
/// declaration wins). The sort order is the effective total priority order.
struct CoreTaskSet {
    CoreRef core;
    std::vector<RTTask> tasks;
};

/// Result of the response-time recurrence for one task.
struct ResponseOutcome {
    bool diverged = false;  // iteration exceeded the deadline
    Micros value = 0;       // fixpoint R when !diverged; first iterate > D otherwise
};

/// One task per rt annotation, bound to the nearest allocated ancestor's
/// core. Core sets follow hardware declaration order; only cores with at
/// least one task appear.
std::vector<CoreTaskSet> derive_tasks(const InstanceModel& instance_model, const Model& model);

/// Exact sum of C_i / T_i.
Rational utilization(const CoreTaskSet& tasks);

/// Standard RTA recurrence: R0 = C, R(k+1) = C + sum over hp of
/// ceil(Rk / Tj) * Cj. Stops at the fixpoint, or reports divergence as soon
/// as an iterate exceeds the deadline. `higher_priority` must not contain
/// the task itself.
ResponseOutcome response_time(const RTTask& task, std::span<const RTTask> higher_priority);

struct TaskVerdict {
    std::string id;
    Micros wcet = 0;
    Micros period = 0;
    Micros deadline = 0;
    int priority = 0;
    std::optional<Micros> response;  // empty = diverged
    bool deadline_met = false;
    std::optional<Micros> slack;  // D - R, only when the response is finite
};

struct CoreVerdict {
    CoreRef core;
    Rational utilization;
    bool schedulable = false;
    std::vector<TaskVerdict> tasks;
};

struct SchedReport {
    std::string system;
    bool schedulable = false;
    std::vector<CoreVerdict> cores;
};

/// Response times and verdict for one core's task set. A core is
/// schedulable when its utilization is at most 1 and every task meets its
/// deadline.
CoreVerdict analyze_core(const CoreTaskSet& tasks);

/// Full pipeline over a validated model: instance flattening, task
/// derivation, per-core analysis, system verdict.
SchedReport analyze(const Model& model);

/// Report JSON: field order fixed, 2-space indent, trailing newline;
/// byte-identical across runs on equal models.
std::string render_report_json(const SchedReport& report);

/// Human-readable report table.
std::string render_report_text(const SchedReport& report);

}  // namespace iotforge
