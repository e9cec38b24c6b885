#include "iotforge/sim.hpp"

#include <deque>
#include <limits>
#include <numeric>

namespace iotforge {

namespace {

struct PendingJob {
    std::uint64_t seq = 0;
    Micros release = 0;
    Micros remaining = 0;
};

struct TaskState {
    Micros next_release = 0;
    std::uint64_t next_seq = 0;
    std::deque<PendingJob> queue;  // FIFO within the task
};

constexpr Micros kNever = std::numeric_limits<Micros>::max();

}  // namespace

SimTrace simulate(const CoreTaskSet& tasks, Micros horizon) {
    const std::size_t n = tasks.tasks.size();
    SimTrace trace;
    trace.worst_response.assign(n, 0);
    trace.any_miss.assign(n, false);
    if (n == 0) return trace;

    std::vector<TaskState> state(n);

    auto release_due = [&](Micros now) {
        for (std::size_t i = 0; i < n; ++i) {
            TaskState& ts = state[i];
            while (ts.next_release < horizon && ts.next_release <= now) {
                ts.queue.push_back({ts.next_seq++, ts.next_release, tasks.tasks[i].wcet});
                ts.next_release += tasks.tasks[i].period;
            }
        }
    };
    auto next_release_time = [&]() {
        Micros best = kNever;
        for (const auto& ts : state)
            if (ts.next_release < horizon) best = std::min(best, ts.next_release);
        return best;
    };
    auto pick_ready = [&]() -> std::optional<std::size_t> {
        // Task order in the set is the total priority order.
        for (std::size_t i = 0; i < n; ++i)
            if (!state[i].queue.empty()) return i;
        return std::nullopt;
    };
    auto record_segment = [&](Micros start, Micros end, std::optional<std::size_t> task) {
        if (start == end) return;
        if (!trace.segments.empty() && trace.segments.back().task == task &&
            trace.segments.back().end == start) {
            trace.segments.back().end = end;
            return;
        }
        trace.segments.push_back({start, end, task});
    };

    Micros now = 0;
    release_due(now);
    while (true) {
        std::optional<std::size_t> running = pick_ready();
        if (!running) {
            Micros next = next_release_time();
            if (next == kNever) break;  // all released work drained
            record_segment(now, next, std::nullopt);
            now = next;
            release_due(now);
            continue;
        }
        std::size_t idx = *running;
        PendingJob& job = state[idx].queue.front();
        Micros finish_time = now + job.remaining;
        Micros next = next_release_time();
        Micros until = std::min(finish_time, next);
        record_segment(now, until, idx);
        job.remaining -= until - now;
        now = until;
        if (job.remaining == 0) {
            const RTTask& task = tasks.tasks[idx];
            JobRecord rec;
            rec.task = idx;
            rec.seq = job.seq;
            rec.release = job.release;
            rec.finish = now;
            rec.missed = now > job.release + task.deadline;
            Micros response = now - job.release;
            trace.worst_response[idx] = std::max(trace.worst_response[idx], response);
            if (rec.missed) trace.any_miss[idx] = true;
            trace.jobs.push_back(rec);
            state[idx].queue.pop_front();
        }
        release_due(now);
    }
    return trace;
}

Micros hyperperiod(const CoreTaskSet& tasks, Micros cap, bool* capped) {
    if (capped) *capped = false;
    Micros lcm = 1;
    for (const auto& t : tasks.tasks) {
        Micros g = std::gcd(lcm, t.period);
        Micros step = t.period / g;
        if (lcm > cap / step) {
            if (capped) *capped = true;
            return cap;
        }
        lcm *= step;
    }
    return lcm;
}

}  // namespace iotforge
