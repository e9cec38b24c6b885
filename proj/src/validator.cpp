// Metamodel well-formedness rules. Every finding carries a stable V_* code;
// the validator never stops at the first problem.
#include "iotforge/validator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "iotforge/instance.hpp"

namespace iotforge {

namespace {

const char* type_label(TypeKind kind) {
    switch (kind) {
        case TypeKind::Int: return "int";
        case TypeKind::Float: return "float";
        case TypeKind::Bool: return "bool";
        case TypeKind::String: return "string";
        case TypeKind::PayloadRef: return "payload";
    }
    return "?";
}

bool is_numeric(TypeKind k) { return k == TypeKind::Int || k == TypeKind::Float; }

class GuardChecker {
  public:
    GuardChecker(const Component& component) : component_(component) {}

    std::optional<TypeKind> check(const GuardExpr& e) {
        switch (e.kind) {
            case GuardExpr::Kind::Literal:
                switch (e.literal.kind) {
                    case Literal::Kind::Int: return TypeKind::Int;
                    case Literal::Kind::Float: return TypeKind::Float;
                    case Literal::Kind::Bool: return TypeKind::Bool;
                    case Literal::Kind::String: return TypeKind::String;
                }
                return std::nullopt;
            case GuardExpr::Kind::Property: {
                const Property* prop = component_.find_property(e.property);
                if (!prop) {
                    report(e.loc, "guard references unknown property '" + e.property + "'");
                    return std::nullopt;
                }
                if (prop->type.kind == TypeKind::PayloadRef) {
                    report(e.loc, "payload-typed property '" + e.property +
                                      "' cannot be used in a guard");
                    return std::nullopt;
                }
                return prop->type.kind;
            }
            case GuardExpr::Kind::Compare: {
                auto lhs = check(*e.lhs);
                auto rhs = check(*e.rhs);
                if (!lhs || !rhs) return std::nullopt;
                bool comparable =
                    (is_numeric(*lhs) && is_numeric(*rhs)) ||
                    (*lhs == TypeKind::String && *rhs == TypeKind::String) ||
                    (*lhs == TypeKind::Bool && *rhs == TypeKind::Bool &&
                     (e.cmp == CompareOp::Eq || e.cmp == CompareOp::Ne));
                if (!comparable) {
                    report(e.loc, std::string("cannot compare ") + type_label(*lhs) +
                                      " with " + type_label(*rhs));
                    return std::nullopt;
                }
                return TypeKind::Bool;
            }
            case GuardExpr::Kind::Connective: {
                auto lhs = check(*e.lhs);
                auto rhs = check(*e.rhs);
                if (!lhs || !rhs) return std::nullopt;
                if (*lhs != TypeKind::Bool || *rhs != TypeKind::Bool) {
                    report(e.loc, std::string(e.conn == BoolConn::And ? "'and'" : "'or'") +
                                      " requires boolean operands");
                    return std::nullopt;
                }
                return TypeKind::Bool;
            }
            case GuardExpr::Kind::Not: {
                auto operand = check(*e.lhs);
                if (!operand) return std::nullopt;
                if (*operand != TypeKind::Bool) {
                    report(e.loc, "'not' requires a boolean operand");
                    return std::nullopt;
                }
                return TypeKind::Bool;
            }
        }
        return std::nullopt;
    }

    std::vector<Diagnostic> diagnostics;

  private:
    const Component& component_;

    void report(SourceLoc loc, std::string message) {
        diagnostics.push_back({Severity::Error, "V_GUARD_TYPE", std::move(message), loc});
    }
};

class Validator {
  public:
    explicit Validator(const Model& model) : model_(model) {}

    std::vector<Diagnostic> run() {
        check_duplicates();
        check_payloads();
        check_interfaces();
        for (const auto& c : model_.elements) check_component(c);
        for (const auto& c : model_.boards) check_component(c);
        for (const auto& c : model_.entities) check_component(c);
        check_part_kinds();
        check_containment_cycles();
        check_hardware_and_allocations();
        check_rt_annotations();
        std::stable_sort(diags_.begin(), diags_.end(),
                         [](const Diagnostic& a, const Diagnostic& b) {
                             if (a.loc.line != b.loc.line) return a.loc.line < b.loc.line;
                             return a.loc.column < b.loc.column;
                         });
        return std::move(diags_);
    }

  private:
    const Model& model_;
    std::vector<Diagnostic> diags_;

    void report(const char* code, Severity severity, SourceLoc loc, std::string message) {
        diags_.push_back({severity, code, std::move(message), loc});
    }
    void error(const char* code, SourceLoc loc, std::string message) {
        report(code, Severity::Error, loc, std::move(message));
    }
    void warning(const char* code, SourceLoc loc, std::string message) {
        report(code, Severity::Warning, loc, std::move(message));
    }

    template <typename T>
    void check_unique(const std::vector<T>& items, const std::string& category) {
        std::set<std::string> seen;
        for (const auto& item : items)
            if (!seen.insert(item.name).second)
                error("V_DUP_NAME", item.loc,
                      "duplicate " + category + " name '" + item.name + "'");
    }

    void check_duplicates() {
        check_unique(model_.payloads, "payload");
        check_unique(model_.interfaces, "interface");
        std::set<std::string> component_names;
        auto check_components = [&](const std::vector<Component>& comps) {
            for (const auto& c : comps)
                if (!component_names.insert(c.name).second)
                    error("V_DUP_NAME", c.loc, "duplicate component name '" + c.name + "'");
        };
        check_components(model_.elements);
        check_components(model_.boards);
        check_components(model_.entities);
        check_unique(model_.hardware.processors, "processor");
        for (const auto& proc : model_.hardware.processors) {
            std::set<std::string> cores(proc.cores.begin(), proc.cores.end());
            if (cores.size() != proc.cores.size())
                error("V_DUP_NAME", proc.loc,
                      "duplicate core name in processor '" + proc.name + "'");
            if (proc.cores.empty())
                error("V_UNRESOLVED", proc.loc,
                      "processor '" + proc.name + "' declares no cores");
        }
        std::set<std::string> alloc_paths;
        for (const auto& alloc : model_.allocations)
            if (!alloc_paths.insert(alloc.instance_path).second)
                error("V_DUP_NAME", alloc.loc,
                      "instance '" + alloc.instance_path + "' is allocated more than once");
        std::set<std::string> rt_paths;
        for (const auto& rt : model_.rt_annotations)
            if (!rt_paths.insert(rt.target_path).second)
                error("V_DUP_NAME", rt.loc,
                      "duplicate rt annotation for '" + rt.target_path + "'");
    }

    void check_payloads() {
        for (const auto& p : model_.payloads) {
            check_unique(p.attributes, "attribute");
            for (const auto& attr : p.attributes)
                if (attr.type.kind == TypeKind::PayloadRef &&
                    !model_.find_payload(attr.type.payload))
                    error("V_UNRESOLVED", attr.loc,
                          "attribute '" + attr.name + "' references unknown payload '" +
                              attr.type.payload + "'");
        }
        detect_payload_cycles();
    }

    void detect_payload_cycles() {
        // Colors: 0 unvisited, 1 on stack, 2 done. One finding per cycle.
        std::map<std::string, int> color;
        std::set<std::string> reported;
        std::vector<std::string> stack;

        auto dfs = [&](auto&& self, const Payload& p) -> void {
            color[p.name] = 1;
            stack.push_back(p.name);
            for (const auto& attr : p.attributes) {
                if (attr.type.kind != TypeKind::PayloadRef) continue;
                const Payload* next = model_.find_payload(attr.type.payload);
                if (!next) continue;
                if (color[next->name] == 1) {
                    auto start = std::find(stack.begin(), stack.end(), next->name);
                    std::string cycle;
                    for (auto it = start; it != stack.end(); ++it)
                        cycle += *it + " -> ";
                    cycle += next->name;
                    if (reported.insert(next->name).second)
                        error("V_PAYLOAD_CYCLE", p.loc,
                              "recursive payload containment: " + cycle);
                } else if (color[next->name] == 0) {
                    self(self, *next);
                }
            }
            stack.pop_back();
            color[p.name] = 2;
        };
        for (const auto& p : model_.payloads)
            if (color[p.name] == 0) dfs(dfs, p);
    }

    void check_interfaces() {
        for (const auto& iface : model_.interfaces) {
            check_unique(iface.operations, "operation");
            for (const auto& op : iface.operations) {
                check_unique(op.params, "parameter");
                for (const auto& param : op.params)
                    if (param.type.kind == TypeKind::PayloadRef &&
                        !model_.find_payload(param.type.payload))
                        error("V_UNRESOLVED", param.loc,
                              "parameter '" + param.name + "' references unknown payload '" +
                                  param.type.payload + "'");
                if (op.return_type && op.return_type->kind == TypeKind::PayloadRef &&
                    !model_.find_payload(op.return_type->payload))
                    error("V_UNRESOLVED", op.loc,
                          "operation '" + op.name + "' returns unknown payload '" +
                              op.return_type->payload + "'");
            }
        }
    }

    void check_component(const Component& c) {
        check_unique(c.properties, "property");
        check_unique(c.ports, "port");
        check_unique(c.parts, "part");
        for (const auto& prop : c.properties) check_property(c, prop);
        for (const auto& port : c.ports)
            if (!model_.find_interface(port.interface))
                error("V_UNRESOLVED", port.loc,
                      "port '" + port.name + "' references unknown interface '" +
                          port.interface + "'");
        for (const auto& part : c.parts)
            if (!model_.find_component(part.component))
                error("V_UNRESOLVED", part.loc,
                      "part '" + part.name + "' references unknown component '" +
                          part.component + "'");
        for (const auto& conn : c.connections) check_connection(c, conn);
        if (c.statemachine) check_statemachine(c, *c.statemachine);
    }

    void check_property(const Component& c, const Property& prop) {
        if (prop.type.kind == TypeKind::PayloadRef) {
            if (!model_.find_payload(prop.type.payload))
                error("V_UNRESOLVED", prop.loc,
                      "property '" + prop.name + "' references unknown payload '" +
                          prop.type.payload + "'");
            if (prop.init)
                error("V_ASSIGN_TYPE", prop.loc,
                      "payload-typed property '" + prop.name +
                          "' cannot have a literal initial value");
            return;
        }
        if (!prop.init) return;
        if (!literal_assignable(prop.type.kind, prop.init->kind))
            error("V_ASSIGN_TYPE", prop.loc,
                  "initial value of '" + prop.name + "' is not a " +
                      type_label(prop.type.kind) + " literal");
    }

    static bool literal_assignable(TypeKind target, Literal::Kind lit) {
        switch (target) {
            case TypeKind::Int: return lit == Literal::Kind::Int;
            case TypeKind::Float:
                return lit == Literal::Kind::Float || lit == Literal::Kind::Int;
            case TypeKind::Bool: return lit == Literal::Kind::Bool;
            case TypeKind::String: return lit == Literal::Kind::String;
            case TypeKind::PayloadRef: return false;
        }
        return false;
    }

    struct EndpointInfo {
        const Port* port = nullptr;
        std::string label;
    };

    EndpointInfo resolve_endpoint(const Component& owner, const PortPath& endpoint) {
        EndpointInfo info;
        info.label = endpoint.str();
        if (endpoint.is_own()) {
            info.port = owner.find_port(endpoint.port);
            if (!info.port)
                error("V_UNRESOLVED", endpoint.loc,
                      "connection endpoint '" + info.label + "' names no port of '" +
                          owner.name + "'");
            return info;
        }
        const PartDecl* part = owner.find_part(endpoint.part);
        if (!part) {
            error("V_UNRESOLVED", endpoint.loc,
                  "connection endpoint '" + info.label + "' names unknown part '" +
                      endpoint.part + "'");
            return info;
        }
        const Component* type = model_.find_component(part->component);
        if (!type) return info;  // already reported at the part declaration
        info.port = type->find_port(endpoint.port);
        if (!info.port)
            error("V_UNRESOLVED", endpoint.loc,
                  "connection endpoint '" + info.label + "' names no port of '" +
                      type->name + "'");
        return info;
    }

    void check_connection(const Component& owner, const Connection& conn) {
        EndpointInfo from = resolve_endpoint(owner, conn.from);
        EndpointInfo to = resolve_endpoint(owner, conn.to);
        if (!from.port || !to.port) return;
        if (from.port->interface != to.port->interface) {
            error("V_PORT_MATCH", conn.loc,
                  "connection '" + from.label + " -> " + to.label +
                      "' joins different interfaces ('" + from.port->interface + "' vs '" +
                      to.port->interface + "')");
            return;
        }
        // One endpoint must face provided, the other required; bidirectional
        // ports can take either side.
        auto dir = [](const Port& p) { return p.direction; };
        PortDirection a = dir(*from.port), b = dir(*to.port);
        bool ok = (a == PortDirection::Bidirectional || b == PortDirection::Bidirectional)
                      ? true
                      : (a != b);
        if (!ok)
            error("V_PORT_MATCH", conn.loc,
                  "connection '" + from.label + " -> " + to.label + "' joins two " +
                      (a == PortDirection::Provided ? "provided" : "required") + " ports");
    }

    void check_statemachine(const Component& c, const StateMachine& sm) {
        check_unique(sm.actions, "action");
        check_unique(sm.events, "event");
        check_unique(sm.states, "state");

        for (const auto& action : sm.actions) check_action(c, action);
        for (const auto& event : sm.events) check_event(c, sm, event);

        if (sm.initial_states.size() != 1)
            error("V_SM_INITIAL", sm.loc,
                  "statemachine of '" + c.name + "' must declare exactly one initial state (found " +
                      std::to_string(sm.initial_states.size()) + ")");

        for (const auto& state : sm.states) {
            if (state.on_entry.empty() || state.on_exit.empty()) {
                error("V_STATE_EVENTS", state.loc,
                      "state '" + state.name + "' must link both an entry and an exit event");
            } else {
                check_event_ref(sm, state.on_entry, state.loc, "entry event of '" + state.name + "'");
                check_event_ref(sm, state.on_exit, state.loc, "exit event of '" + state.name + "'");
            }
            for (const auto& ev : state.internal_events)
                check_event_ref(sm, ev, state.loc, "internal event of '" + state.name + "'");
        }

        for (const auto& t : sm.transitions) {
            if (!sm.find_state(t.source))
                error("V_UNRESOLVED", t.loc, "transition source '" + t.source + "' is not a state");
            if (!sm.find_state(t.target))
                error("V_UNRESOLVED", t.loc, "transition target '" + t.target + "' is not a state");
            if (!t.trigger.empty())
                check_event_ref(sm, t.trigger, t.loc, "transition trigger");
            if (t.guard) {
                GuardType result = typecheck_guard(t.guard, c);
                for (auto& d : result.diagnostics) diags_.push_back(std::move(d));
                if (result.type && *result.type != TypeKind::Bool)
                    error("V_GUARD_TYPE", t.guard->loc,
                          std::string("guard evaluates to ") + type_label(*result.type) +
                              ", must be boolean");
            }
        }

        check_reachability(c, sm);
    }

    void check_event_ref(const StateMachine& sm, const std::string& name, SourceLoc loc,
                         const std::string& where) {
        if (!sm.find_event(name))
            error("V_UNRESOLVED", loc, where + " references unknown event '" + name + "'");
    }

    void check_action(const Component& c, const IoTAction& action) {
        switch (action.kind) {
            case ActionKind::SendPayload:
            case ActionKind::ReceivePayload:
                if (!model_.find_payload(action.payload))
                    error("V_UNRESOLVED", action.loc,
                          "action '" + action.name + "' references unknown payload '" +
                              action.payload + "'");
                break;
            case ActionKind::Generic: {
                const Property* target = c.find_property(action.target_property);
                if (!target) {
                    error("V_UNRESOLVED", action.loc,
                          "action '" + action.name + "' assigns unknown property '" +
                              action.target_property + "'");
                    break;
                }
                if (action.value.kind == AssignExpr::Kind::Property) {
                    const Property* source = c.find_property(action.value.property);
                    if (!source)
                        error("V_UNRESOLVED", action.loc,
                              "action '" + action.name + "' reads unknown property '" +
                                  action.value.property + "'");
                    else if (source->type != target->type &&
                             !(target->type.kind == TypeKind::Float &&
                               source->type.kind == TypeKind::Int))
                        error("V_ASSIGN_TYPE", action.loc,
                              "action '" + action.name + "' assigns a " +
                                  type_label(source->type.kind) + " value to " +
                                  type_label(target->type.kind) + " property '" +
                                  action.target_property + "'");
                } else if (target->type.kind == TypeKind::PayloadRef ||
                           !literal_assignable(target->type.kind, action.value.literal.kind)) {
                    error("V_ASSIGN_TYPE", action.loc,
                          "action '" + action.name + "' assigns an incompatible literal to '" +
                              action.target_property + "'");
                }
                break;
            }
        }
    }

    void check_event(const Component& c, const StateMachine& sm, const IoTEvent& event) {
        const IoTAction* action = sm.find_action(event.action);
        if (!action)
            error("V_UNRESOLVED", event.loc,
                  "event '" + event.name + "' references unknown action '" + event.action + "'");

        bool directional = event.kind != EventKind::Generic;
        if (directional && event.port.empty())
            error("V_EVENT_PORT", event.loc,
                  "event '" + event.name + "' is " +
                      (event.kind == EventKind::Incoming ? "incoming" : "outgoing") +
                      " and must name a port");
        if (!directional && !event.port.empty())
            error("V_EVENT_PORT", event.loc,
                  "generic event '" + event.name + "' must not name a port");
        if (!event.port.empty() && !c.find_port(event.port))
            error("V_UNRESOLVED", event.loc,
                  "event '" + event.name + "' references unknown port '" + event.port + "'");

        if (action) {
            if (action->kind == ActionKind::SendPayload && event.kind != EventKind::Outgoing)
                error("V_ACTION_DIRECTION", event.loc,
                      "send action '" + action->name + "' requires an outgoing event, but '" +
                          event.name + "' is not outgoing");
            if (action->kind == ActionKind::ReceivePayload && event.kind != EventKind::Incoming)
                error("V_ACTION_DIRECTION", event.loc,
                      "receive action '" + action->name + "' requires an incoming event, but '" +
                          event.name + "' is not incoming");
        }
    }

    void check_reachability(const Component& c, const StateMachine& sm) {
        if (sm.initial_states.size() != 1) return;  // undefined start; skip
        std::set<std::string> reachable{sm.initial()};
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& t : sm.transitions)
                if (reachable.count(t.source) && !reachable.count(t.target)) {
                    reachable.insert(t.target);
                    changed = true;
                }
        }
        for (const auto& state : sm.states)
            if (!reachable.count(state.name))
                warning("V_SM_UNREACHABLE", state.loc,
                        "state '" + state.name + "' of '" + c.name +
                            "' is unreachable from the initial state");
    }

    void check_part_kinds() {
        for (const auto& entity : model_.entities)
            for (const auto& part : entity.parts) {
                const Component* type = model_.find_component(part.component);
                if (!type) continue;
                bool allowed = type->kind == ComponentKind::Board ||
                               (type->kind == ComponentKind::Element && type->power_source);
                if (!allowed)
                    error("V_ENTITY_PARTS", part.loc,
                          "entity part '" + part.name +
                              "' must reference a board or a power source, not '" +
                              part.component + "'");
            }
        auto elements_only = [&](const Component& owner) {
            for (const auto& part : owner.parts) {
                const Component* type = model_.find_component(part.component);
                if (!type) continue;
                if (type->kind != ComponentKind::Element)
                    error("V_PART_KIND", part.loc,
                          std::string(owner.kind == ComponentKind::Board ? "board" : "element") +
                              " '" + owner.name + "' may contain only elements, but part '" +
                              part.name + "' is a " +
                              (type->kind == ComponentKind::Board ? "board" : "entity"));
            }
        };
        for (const auto& c : model_.boards) elements_only(c);
        for (const auto& c : model_.elements) elements_only(c);
    }

    void check_containment_cycles() {
        std::map<std::string, int> color;  // 0 unvisited, 1 on stack, 2 done
        std::set<std::string> reported;
        auto dfs = [&](auto&& self, const Component& c) -> void {
            color[c.name] = 1;
            for (const auto& part : c.parts) {
                const Component* type = model_.find_component(part.component);
                if (!type) continue;
                if (color[type->name] == 1) {
                    if (reported.insert(type->name).second)
                        error("V_PART_CYCLE", part.loc,
                              "cyclic component containment through '" + type->name + "'");
                } else if (color[type->name] == 0) {
                    self(self, *type);
                }
            }
            color[c.name] = 2;
        };
        auto walk = [&](const std::vector<Component>& comps) {
            for (const auto& c : comps)
                if (color[c.name] == 0) dfs(dfs, c);
        };
        walk(model_.entities);
        walk(model_.boards);
        walk(model_.elements);
    }

    // Resolves an instance path starting at an entity and descending through
    // parts. Returns the component at the end, or null after reporting.
    const Component* resolve_instance_path(const std::string& path, SourceLoc loc,
                                           const std::string& what) {
        std::vector<std::string> segments = split_path(path);
        if (segments.empty()) {
            error("V_UNRESOLVED", loc, what + " has an empty instance path");
            return nullptr;
        }
        const Component* current = nullptr;
        for (const auto& entity : model_.entities)
            if (entity.name == segments.front()) current = &entity;
        if (!current) {
            error("V_UNRESOLVED", loc,
                  what + " path '" + path + "' does not start at an entity");
            return nullptr;
        }
        for (std::size_t i = 1; i < segments.size(); ++i) {
            const PartDecl* part = current->find_part(segments[i]);
            if (!part) {
                error("V_UNRESOLVED", loc,
                      what + " path '" + path + "' has no part '" + segments[i] + "'");
                return nullptr;
            }
            current = model_.find_component(part->component);
            if (!current) return nullptr;  // dangling part already reported
        }
        return current;
    }

    void check_hardware_and_allocations() {
        for (const auto& alloc : model_.allocations) {
            resolve_instance_path(alloc.instance_path, alloc.loc, "allocation");
            if (!model_.hardware.has_core(alloc.core.processor, alloc.core.core))
                error("V_ALLOC_CORE", alloc.loc,
                      "allocation targets unknown core '" + alloc.core.str() + "'");
        }
    }

    // True when some prefix of `path` (including itself) has an allocation.
    bool has_allocated_ancestor(const std::string& path) const {
        std::string current = path;
        while (!current.empty()) {
            for (const auto& alloc : model_.allocations)
                if (alloc.instance_path == current) return true;
            std::size_t dot = current.rfind('.');
            if (dot == std::string::npos) break;
            current.resize(dot);
        }
        return false;
    }

    void check_rt_annotations() {
        for (const auto& rt : model_.rt_annotations) {
            if (rt.wcet <= 0)
                error("V_RT_VALUES", rt.loc,
                      "rt annotation '" + rt.target_path + "' has non-positive wcet");
            if (rt.deadline <= 0)
                error("V_RT_VALUES", rt.loc,
                      "rt annotation '" + rt.target_path + "' has non-positive deadline");
            if (rt.period <= 0)
                error("V_RT_VALUES", rt.loc,
                      "rt annotation '" + rt.target_path + "' has non-positive period");
            if (rt.period > 0 && rt.wcet > rt.period)
                warning("V_RT_OVERRUN", rt.loc,
                        "rt annotation '" + rt.target_path +
                            "' has wcet exceeding its period; the core cannot keep up");

            std::vector<std::string> segments = split_path(rt.target_path);
            if (segments.size() < 2) {
                error("V_UNRESOLVED", rt.loc,
                      "rt target '" + rt.target_path +
                          "' must name an instance path plus an operation or action");
                continue;
            }
            std::string member = segments.back();
            std::string instance_path = rt.target_path.substr(0, rt.target_path.rfind('.'));
            const Component* component =
                resolve_instance_path(instance_path, rt.loc, "rt target");
            if (!component) continue;
            if (!resolve_rt_member(*component, member))
                error("V_UNRESOLVED", rt.loc,
                      "rt target '" + rt.target_path + "': component '" + component->name +
                          "' has no operation or outgoing-event action named '" + member + "'");
            else if (!has_allocated_ancestor(instance_path))
                error("V_ALLOC_MISSING", rt.loc,
                      "rt target '" + rt.target_path + "' is not covered by any allocation");
        }
    }

    // Operations of provided/bidirectional interfaces, or actions of
    // outgoing events, qualify as annotatable members.
    bool resolve_rt_member(const Component& component, const std::string& member) const {
        for (const auto& port : component.ports) {
            if (port.direction == PortDirection::Required) continue;
            const Interface* iface = model_.find_interface(port.interface);
            if (iface && iface->find_operation(member)) return true;
        }
        if (component.statemachine)
            for (const auto& event : component.statemachine->events)
                if (event.kind == EventKind::Outgoing && event.action == member &&
                    component.statemachine->find_action(member))
                    return true;
        return false;
    }
};

}  // namespace

const std::vector<RuleId>& rule_catalog() {
    static const std::vector<RuleId> catalog = {
        {"V_ACTION_DIRECTION", "send actions require outgoing events, receive actions incoming ones",
         Severity::Error},
        {"V_ALLOC_CORE", "allocation targets a declared processor core", Severity::Error},
        {"V_ALLOC_MISSING", "rt-annotated instances need an allocated ancestor", Severity::Error},
        {"V_ASSIGN_TYPE", "property initializers and assignments are type-correct", Severity::Error},
        {"V_DUP_NAME", "names are unique within their category", Severity::Error},
        {"V_ENTITY_PARTS", "entity parts reference boards or power sources only", Severity::Error},
        {"V_EVENT_PORT", "incoming/outgoing events carry a port, generic events none", Severity::Error},
        {"V_GUARD_TYPE", "guards are boolean over resolved properties", Severity::Error},
        {"V_PART_CYCLE", "component containment is acyclic", Severity::Error},
        {"V_PART_KIND", "boards and elements may contain only elements", Severity::Error},
        {"V_PAYLOAD_CYCLE", "payload containment is acyclic", Severity::Error},
        {"V_PORT_MATCH", "connections join one provided-facing and one required-facing port of the same interface",
         Severity::Error},
        {"V_RT_OVERRUN", "wcet should not exceed the period", Severity::Warning},
        {"V_RT_VALUES", "wcet, deadline and period are positive", Severity::Error},
        {"V_SM_INITIAL", "statemachines declare exactly one initial state", Severity::Error},
        {"V_SM_UNREACHABLE", "states should be reachable from the initial state", Severity::Warning},
        {"V_STATE_EVENTS", "states link both an entry and an exit event", Severity::Error},
        {"V_UNRESOLVED", "cross-references resolve to declared items", Severity::Error},
    };
    return catalog;
}

std::vector<Diagnostic> validate(const Model& model) { return Validator(model).run(); }

GuardType typecheck_guard(const GuardNode& guard, const Component& component) {
    GuardType result;
    if (!guard) return result;
    GuardChecker checker(component);
    result.type = checker.check(*guard);
    result.diagnostics = std::move(checker.diagnostics);
    return result;
}

}  // namespace iotforge
