#include "iotforge/sched.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "iotforge/serializer.hpp"

namespace iotforge {

namespace {

Micros ceil_div(Micros a, Micros b) { return (a + b - 1) / b; }

void sort_by_effective_priority(std::vector<RTTask>& tasks) {
    std::stable_sort(tasks.begin(), tasks.end(), [](const RTTask& a, const RTTask& b) {
        if (a.priority != b.priority) return a.priority > b.priority;
        return a.decl_index < b.decl_index;
    });
}

}  // namespace

std::vector<CoreTaskSet> derive_tasks(const InstanceModel& instance_model, const Model& model) {
    std::map<std::string, std::vector<RTTask>> by_core;  // key: joined core id
    std::vector<std::string> core_order;

    for (std::size_t i = 0; i < model.rt_annotations.size(); ++i) {
        const RTAnnotation& rt = model.rt_annotations[i];
        std::size_t dot = rt.target_path.rfind('.');
        if (dot == std::string::npos) continue;
        std::string instance_path = rt.target_path.substr(0, dot);
        const CoreRef* core = instance_model.allocated_core(instance_path);
        if (!core)
            throw ModelError("rt target '" + rt.target_path + "' has no allocated ancestor");

        RTTask task;
        task.id = rt.target_path;
        task.core = *core;
        task.wcet = rt.wcet;
        task.period = rt.period;  // sporadic MIT analyzed as a period
        task.deadline = rt.deadline;
        task.priority = rt.priority;
        task.pattern = rt.pattern;
        task.decl_index = i;
        by_core[core->str()].push_back(std::move(task));
    }

    // Hardware declaration order decides core order.
    std::vector<CoreTaskSet> result;
    for (const auto& proc : model.hardware.processors) {
        for (const auto& core_name : proc.cores) {
            CoreRef ref{proc.name, core_name};
            auto it = by_core.find(ref.str());
            if (it == by_core.end()) continue;
            CoreTaskSet set;
            set.core = ref;
            set.tasks = std::move(it->second);
            sort_by_effective_priority(set.tasks);
            result.push_back(std::move(set));
            by_core.erase(it);
        }
    }
    return result;
}

Rational utilization(const CoreTaskSet& tasks) {
    Rational total;
    for (const auto& t : tasks.tasks) total = total + Rational(t.wcet, t.period);
    return total;
}

ResponseOutcome response_time(const RTTask& task, std::span<const RTTask> higher_priority) {
    Micros r = task.wcet;
    while (true) {
        if (r > task.deadline) return {true, r};
        Micros next = task.wcet;
        for (const auto& hp : higher_priority) next += ceil_div(r, hp.period) * hp.wcet;
        if (next == r) return {false, r};
        r = next;
    }
}

CoreVerdict analyze_core(const CoreTaskSet& tasks) {
    CoreVerdict verdict;
    verdict.core = tasks.core;
    verdict.utilization = utilization(tasks);
    bool all_met = true;
    for (std::size_t i = 0; i < tasks.tasks.size(); ++i) {
        const RTTask& task = tasks.tasks[i];
        std::span<const RTTask> higher(tasks.tasks.data(), i);
        ResponseOutcome outcome = response_time(task, higher);
        TaskVerdict tv;
        tv.id = task.id;
        tv.wcet = task.wcet;
        tv.period = task.period;
        tv.deadline = task.deadline;
        tv.priority = task.priority;
        if (outcome.diverged) {
            tv.deadline_met = false;
            all_met = false;
        } else {
            tv.response = outcome.value;
            tv.deadline_met = outcome.value <= task.deadline;
            tv.slack = task.deadline - outcome.value;
            if (!tv.deadline_met) all_met = false;
        }
        verdict.tasks.push_back(std::move(tv));
    }
    // Utilization above 1 is a sufficient failure condition on its own.
    verdict.schedulable = all_met && verdict.utilization <= Rational::from_int(1);
    return verdict;
}

SchedReport analyze(const Model& model) {
    SchedReport report;
    report.system = model.name;
    InstanceModel instance_model = build_instance_model(model);
    std::vector<CoreTaskSet> task_sets = derive_tasks(instance_model, model);
    report.schedulable = true;
    for (const auto& set : task_sets) {
        CoreVerdict verdict = analyze_core(set);
        if (!verdict.schedulable) report.schedulable = false;
        report.cores.push_back(std::move(verdict));
    }
    return report;
}

std::string render_report_json(const SchedReport& report) {
    nlohmann::ordered_json root;
    root["system"] = report.system;
    root["verdict"] = report.schedulable ? "schedulable" : "not_schedulable";
    nlohmann::ordered_json cores = nlohmann::ordered_json::array();
    for (const auto& core : report.cores) {
        nlohmann::ordered_json c;
        c["processor"] = core.core.processor;
        c["core"] = core.core.core;
        c["utilization"] = core.utilization.str();
        nlohmann::ordered_json tasks = nlohmann::ordered_json::array();
        for (const auto& t : core.tasks) {
            nlohmann::ordered_json task;
            task["id"] = t.id;
            task["C_us"] = t.wcet;
            task["T_us"] = t.period;
            task["D_us"] = t.deadline;
            task["priority"] = t.priority;
            if (t.response)
                task["R_us"] = *t.response;
            else
                task["R_us"] = "diverged";
            task["deadline_met"] = t.deadline_met;
            if (t.slack)
                task["slack_us"] = *t.slack;
            else
                task["slack_us"] = nullptr;
            tasks.push_back(std::move(task));
        }
        c["tasks"] = std::move(tasks);
        cores.push_back(std::move(c));
    }
    root["cores"] = std::move(cores);
    return root.dump(2) + "\n";
}

std::string render_report_text(const SchedReport& report) {
    std::ostringstream out;
    out << "system " << report.system << ": "
        << (report.schedulable ? "SCHEDULABLE" : "NOT SCHEDULABLE") << "\n";
    for (const auto& core : report.cores) {
        char util[32];
        std::snprintf(util, sizeof(util), "%.3f", core.utilization.to_double());
        out << "core " << core.core.str() << "  utilization " << core.utilization.str()
            << " (" << util << ")  " << (core.schedulable ? "ok" : "NOT schedulable") << "\n";
        for (const auto& t : core.tasks) {
            out << "  " << t.id << "  C=" << format_time_ms(t.wcet)
                << " T=" << format_time_ms(t.period) << " D=" << format_time_ms(t.deadline)
                << " prio=" << t.priority << "  R=";
            if (t.response)
                out << format_time_ms(*t.response);
            else
                out << "diverged";
            out << "  " << (t.deadline_met ? "ok" : "MISS") << "\n";
        }
    }
    return out.str();
}

}  // namespace iotforge
