// Discrete-event simulation of fixed-priority preemptive scheduling on one
// core. Independent of the analytic recurrence; serves as its test oracle.
#pragma once

#include <optional>
#include <vector>

#include "iotforge/sched.hpp"

namespace iotforge {

struct SimSegment {
    Micros start = 0;
    Micros end = 0;
    std::optional<std::size_t> task;  // index into the task set; empty = idle
};

struct JobRecord {
    std::size_t task = 0;  // index into the task set
    std::uint64_t seq = 0;
    Micros release = 0;
    Micros finish = 0;
    bool missed = false;  // finished after release + deadline
};

struct SimTrace {
    std::vector<SimSegment> segments;  // adjacent same-task segments merged
    std::vector<JobRecord> jobs;       // completion order
    std::vector<Micros> worst_response;  // per task index; 0 when no job ran
    std::vector<bool> any_miss;          // per task index
};

/// Synchronous release at t = 0 (critical instant), jobs released strictly
/// before `horizon`, then the backlog drains to completion. At most one job
/// runs per instant; a higher-priority release preempts immediately. Ties
/// follow the task set's total priority order; jobs of one task run FIFO.
SimTrace simulate(const CoreTaskSet& tasks, Micros horizon);

/// Least common multiple of the periods, clamped to `cap` (clamping
/// reported through `capped`). Horizons of at least one hyperperiod make
/// the simulated worst case exact for synchronous periodic sets.
Micros hyperperiod(const CoreTaskSet& tasks, Micros cap, bool* capped = nullptr);

}  // namespace iotforge
