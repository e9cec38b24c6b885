#include "iotforge/thingml.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "iotforge/serializer.hpp"
#include "iotforge/validator.hpp"

namespace iotforge {

namespace {

const char* mapped_type(TypeKind kind) {
    switch (kind) {
        case TypeKind::Int: return "Integer";
        case TypeKind::Float: return "Double";
        case TypeKind::Bool: return "Boolean";
        case TypeKind::String: return "String";
        case TypeKind::PayloadRef: return "";  // flattened instead
    }
    return "";
}

const char* zero_literal(TypeKind kind) {
    switch (kind) {
        case TypeKind::Int: return "0";
        case TypeKind::Float: return "0.0";
        case TypeKind::Bool: return "false";
        case TypeKind::String: return "\"\"";
        case TypeKind::PayloadRef: return "0";
    }
    return "0";
}

/// Deterministic collision-free identifiers within one scope: the first
/// claimant keeps the base name, later ones get _2, _3, ...
class NameScope {
  public:
    std::string claim(const std::string& base) {
        if (used_.insert(base).second) return base;
        for (int i = 2;; ++i) {
            std::string candidate = base + "_" + std::to_string(i);
            if (used_.insert(candidate).second) return candidate;
        }
    }

  private:
    std::set<std::string> used_;
};

struct FlatParam {
    std::string name;
    TypeKind type;
};

class Generator {
  public:
    explicit Generator(const Model& model) : model_(model) {}

    GenerationResult run() {
        flatten_payloads();
        emit_datatypes();
        emit_messages();
        for (const auto& c : model_.elements) emit_thing(c);
        for (const auto& c : model_.boards) emit_thing(c);
        emit_configuration();
        return std::move(result_);
    }

    std::string thing_text(const Component& c) {
        flatten_payloads();
        name_messages();
        std::string out;
        render_thing(c, out);
        return out;
    }

    std::string statechart_text(const Component& c) {
        flatten_payloads();
        name_messages();
        NameScope scope;
        ComponentNames names = compute_component_names(c, scope);
        std::string out;
        render_statechart(c, *c.statemachine, names, "", out, nullptr);
        return out;
    }

  private:
    const Model& model_;
    GenerationResult result_;
    NameScope unit_names_;  // thing/fragment/configuration identifiers
    std::string fragment_name_;
    std::map<std::string, std::string> message_names_;              // payload -> emitted
    std::map<std::string, std::vector<FlatParam>> message_params_;  // payload -> flat params

    struct ComponentNames {
        std::map<std::string, std::string> properties;
        std::map<std::string, std::string> ports;
        std::map<std::string, std::string> states;
    };

    void provenance(std::string unit, std::string construct, std::string emitted,
                    std::string model_path) {
        for (const auto& entry : result_.provenance)
            if (entry.model_path == model_path && entry.construct == construct)
                return;  // one entry per model element: first emission wins
        result_.provenance.push_back(
            {std::move(unit), std::move(construct), std::move(emitted), std::move(model_path)});
    }

    // Payload-typed attributes have no ThingML datatype; they expand into
    // one prefixed parameter per primitive attribute, recursively. Cycles
    // are excluded by validation.
    void flatten_payloads() {
        if (!message_params_.empty()) return;
        for (const auto& p : model_.payloads) {
            std::vector<FlatParam> params;
            flatten_into(p, "", params);
            message_params_[p.name] = std::move(params);
        }
    }

    void flatten_into(const Payload& p, const std::string& prefix,
                      std::vector<FlatParam>& out) const {
        for (const auto& attr : p.attributes) {
            std::string name = prefix.empty() ? attr.name : prefix + "_" + attr.name;
            if (attr.type.kind == TypeKind::PayloadRef) {
                if (const Payload* nested = model_.find_payload(attr.type.payload))
                    flatten_into(*nested, name, out);
            } else {
                out.push_back({std::move(name), attr.type.kind});
            }
        }
    }

    void name_messages() {
        if (!fragment_name_.empty()) return;
        fragment_name_ = unit_names_.claim(model_.name + "Msgs");
        NameScope message_scope;
        for (const auto& p : model_.payloads)
            message_names_[p.name] = message_scope.claim(lower_camel(p.name));
    }

    void emit_datatypes() {
        std::string out;
        out += "// Generated by iotforge. Do not edit.\n";
        out += "datatype Integer<4>\n";
        out += "datatype Double<8>\n";
        out += "datatype Boolean<1>\n";
        out += "datatype String<8>\n";
        result_.units.push_back({"datatypes.thingml", std::move(out)});
    }

    void emit_messages() {
        name_messages();
        std::string out;
        out += "// Generated by iotforge. Do not edit.\n";
        out += "thing fragment " + fragment_name_ + " {\n";
        for (const auto& p : model_.payloads) {
            out += "    message " + message_names_[p.name] + "(";
            const auto& params = message_params_[p.name];
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (i) out += ", ";
                out += params[i].name + " : " + mapped_type(params[i].type);
            }
            out += ")\n";
            provenance("messages.thingml", "message", message_names_[p.name], p.name);
        }
        out += "}\n";
        result_.units.push_back({"messages.thingml", std::move(out)});
    }

    ComponentNames compute_component_names(const Component& c, NameScope& scope) {
        ComponentNames names;
        for (const auto& prop : c.properties) names.properties[prop.name] = scope.claim(prop.name);
        for (const auto& port : c.ports) names.ports[port.name] = scope.claim(port.name);
        if (c.statemachine)
            for (const auto& state : c.statemachine->states)
                names.states[state.name] = scope.claim(state.name);
        return names;
    }

    void emit_thing(const Component& c) {
        std::string text;
        render_thing(c, text);
        std::string unit = c.name + ".thingml";
        provenance(unit, "thing", c.name, c.name);
        record_member_provenance(c, unit);
        result_.units.push_back({std::move(unit), std::move(text)});
    }

    void record_member_provenance(const Component& c, const std::string& unit) {
        for (const auto& prop : c.properties)
            provenance(unit, "property", prop.name, c.name + "." + prop.name);
        for (const auto& port : c.ports)
            provenance(unit, "port", port.name, c.name + "." + port.name);
        for (const auto& port : c.ports) {
            if (port.direction == PortDirection::Required) continue;
            const Interface* iface = model_.find_interface(port.interface);
            if (!iface) continue;
            for (const auto& op : iface->operations)
                provenance(unit, "function", op.name, port.interface + "." + op.name);
        }
        if (!c.statemachine) return;
        const StateMachine& sm = *c.statemachine;
        std::string sm_path = c.name + ".statemachine";
        for (const auto& state : sm.states)
            provenance(unit, "state", state.name, sm_path + "." + state.name);
        for (std::size_t i = 0; i < sm.transitions.size(); ++i) {
            const Transition& t = sm.transitions[i];
            std::string id = t.source + "->" + t.target + "[" + std::to_string(i) + "]";
            provenance(unit, "transition", id, sm_path + ".transition[" + std::to_string(i) + "]");
            if (t.guard)
                provenance(unit, "guard", id,
                           sm_path + ".transition[" + std::to_string(i) + "].guard");
        }
        for (const auto& state : sm.states) {
            if (const IoTEvent* ev = sm.find_event(state.on_entry))
                record_event_provenance(unit, c, *ev, state.name + ".entry");
            if (const IoTEvent* ev = sm.find_event(state.on_exit))
                record_event_provenance(unit, c, *ev, state.name + ".exit");
            for (const auto& name : state.internal_events)
                if (const IoTEvent* ev = sm.find_event(name))
                    record_event_provenance(unit, c, *ev, state.name + ".internal");
        }
        for (const auto& t : sm.transitions)
            if (!t.trigger.empty())
                if (const IoTEvent* ev = sm.find_event(t.trigger))
                    record_event_provenance(unit, c, *ev, "transition");
    }

    void record_event_provenance(const std::string& unit, const Component& c,
                                 const IoTEvent& event, const std::string& site) {
        provenance(unit, "event", site, c.name + "." + event.name);
        if (c.statemachine)
            if (const IoTAction* action = c.statemachine->find_action(event.action))
                provenance(unit, "action", site, c.name + "." + action->name);
    }

    // ---- thing rendering ----

    void render_thing(const Component& c, std::string& out) {
        name_messages();
        NameScope scope;
        std::string thing_name = c.name;  // component names are model-unique
        scope.claim(thing_name);
        ComponentNames names = compute_component_names(c, scope);

        out += "// Generated by iotforge. Do not edit.\n";
        out += "thing " + thing_name + " includes " + fragment_name_ + " {\n";
        for (const auto& prop : c.properties) render_property(prop, names, out);
        for (const auto& port : c.ports) render_port(c, port, names, out);
        render_functions(c, scope, out);
        if (c.statemachine) {
            std::string chart;
            render_statechart(c, *c.statemachine, names, "    ", chart, &scope);
            out += chart;
        }
        out += "}\n";
    }

    void render_property(const Property& prop, const ComponentNames& names, std::string& out) {
        if (prop.type.kind == TypeKind::PayloadRef) {
            // No message-typed properties in ThingML: expand to one property
            // per flattened attribute, zero-initialized.
            const auto& params = message_params_[prop.type.payload];
            for (const auto& p : params)
                out += "    property " + prop.name + "_" + p.name + " : " +
                       mapped_type(p.type) + " = " + zero_literal(p.type) + "\n";
            return;
        }
        out += "    property " + names.properties.at(prop.name) + " : " +
               mapped_type(prop.type.kind);
        if (prop.init) out += " = " + serialize_literal(*prop.init);
        out += "\n";
    }

    // sends: payloads of send actions on outgoing events bound to the port;
    // receives: payloads of receive actions on incoming events bound to it.
    void render_port(const Component& c, const Port& port, const ComponentNames& names,
                     std::string& out) {
        std::vector<std::string> sends, receives;
        if (c.statemachine) {
            for (const auto& event : c.statemachine->events) {
                if (event.port != port.name) continue;
                const IoTAction* action = c.statemachine->find_action(event.action);
                if (!action) continue;
                auto add_unique = [](std::vector<std::string>& list, const std::string& name) {
                    if (std::find(list.begin(), list.end(), name) == list.end())
                        list.push_back(name);
                };
                if (event.kind == EventKind::Outgoing && action->kind == ActionKind::SendPayload)
                    add_unique(sends, message_names_.at(action->payload));
                if (event.kind == EventKind::Incoming &&
                    action->kind == ActionKind::ReceivePayload)
                    add_unique(receives, message_names_.at(action->payload));
            }
        }
        const char* direction =
            port.direction == PortDirection::Required ? "required" : "provided";
        out += std::string("    ") + direction + " port " + names.ports.at(port.name);
        if (sends.empty() && receives.empty()) {
            out += " {}\n";
            return;
        }
        out += " {\n";
        auto render_list = [&](const char* kw, const std::vector<std::string>& list) {
            if (list.empty()) return;
            out += std::string("        ") + kw + " ";
            for (std::size_t i = 0; i < list.size(); ++i) {
                if (i) out += ", ";
                out += list[i];
            }
            out += "\n";
        };
        render_list("sends", sends);
        render_list("receives", receives);
        out += "    }\n";
    }

    // Operations of provided/bidirectional interfaces become functions.
    // Bodies are stubs: the model specifies signatures only.
    void render_functions(const Component& c, NameScope& scope, std::string& out) {
        std::set<std::string> emitted_ops;
        for (const auto& port : c.ports) {
            if (port.direction == PortDirection::Required) continue;
            const Interface* iface = model_.find_interface(port.interface);
            if (!iface) continue;
            for (const auto& op : iface->operations) {
                if (!emitted_ops.insert(op.name).second) continue;
                std::string fn_name = scope.claim(op.name);
                out += "    function " + fn_name + "(";
                std::vector<FlatParam> params;
                for (const auto& param : op.params) {
                    if (param.type.kind == TypeKind::PayloadRef) {
                        if (const Payload* p = model_.find_payload(param.type.payload)) {
                            std::vector<FlatParam> nested;
                            flatten_into(*p, param.name, nested);
                            for (auto& fp : nested) params.push_back(std::move(fp));
                        }
                    } else {
                        params.push_back({param.name, param.type.kind});
                    }
                }
                for (std::size_t i = 0; i < params.size(); ++i) {
                    if (i) out += ", ";
                    out += params[i].name + " : " + mapped_type(params[i].type);
                }
                out += ")";
                bool typed_return = op.return_type && op.return_type->kind != TypeKind::PayloadRef;
                if (typed_return) out += std::string(" : ") + mapped_type(op.return_type->kind);
                out += " do\n";
                out += "        // TODO: implement " + op.name +
                       " (the model specifies the signature only)\n";
                if (typed_return)
                    out += std::string("        return ") + zero_literal(op.return_type->kind) +
                           "\n";
                out += "    end\n";
            }
        }
    }

    // ---- statechart rendering ----

    void render_statechart(const Component& c, const StateMachine& sm,
                           const ComponentNames& names, const std::string& indent,
                           std::string& out, NameScope* scope) {
        std::string chart_name = c.name + "SM";
        if (scope) chart_name = scope->claim(chart_name);
        out += indent + "statechart " + chart_name + " init " +
               names.states.at(sm.initial()) + " {\n";
        for (const auto& state : sm.states) {
            out += indent + "    state " + names.states.at(state.name) + " {\n";
            render_handler(c, sm, names, indent + "        ", "entry", state.on_entry, out);
            render_handler(c, sm, names, indent + "        ", "exit", state.on_exit, out);
            for (const auto& internal : state.internal_events)
                render_internal(c, sm, names, indent + "        ", internal, out);
            for (const auto& t : sm.transitions) {
                if (t.source != state.name) continue;
                out += indent + "        transition -> " + names.states.at(t.target);
                if (!t.trigger.empty()) {
                    const IoTEvent* ev = sm.find_event(t.trigger);
                    if (ev && ev->kind == EventKind::Incoming) {
                        const IoTAction* action = sm.find_action(ev->action);
                        if (action && action->kind == ActionKind::ReceivePayload)
                            out += " event " + names.ports.at(ev->port) + "?" +
                                   message_names_.at(action->payload);
                    }
                }
                if (t.guard) out += " guard (" + render_guard(t.guard, names) + ")";
                out += "\n";
            }
            out += indent + "    }\n";
        }
        out += indent + "}\n";
    }

    void render_handler(const Component& c, const StateMachine& sm, const ComponentNames& names,
                        const std::string& indent, const char* kind,
                        const std::string& event_name, std::string& out) {
        if (event_name.empty()) return;
        out += indent + "on " + kind + " do\n";
        if (const IoTEvent* ev = sm.find_event(event_name))
            render_event_actions(c, sm, names, indent + "    ", *ev, out);
        out += indent + "end\n";
    }

    void render_internal(const Component& c, const StateMachine& sm, const ComponentNames& names,
                         const std::string& indent, const std::string& event_name,
                         std::string& out) {
        const IoTEvent* ev = sm.find_event(event_name);
        if (!ev) return;
        out += indent + "internal";
        if (ev->kind == EventKind::Incoming) {
            const IoTAction* action = sm.find_action(ev->action);
            if (action && action->kind == ActionKind::ReceivePayload)
                out += " event " + names.ports.at(ev->port) + "?" +
                       message_names_.at(action->payload);
        }
        out += " action do\n";
        render_event_actions(c, sm, names, indent + "    ", *ev, out);
        out += indent + "end\n";
    }

    void render_event_actions(const Component& c, const StateMachine& sm,
                              const ComponentNames& names, const std::string& indent,
                              const IoTEvent& event, std::string& out) {
        const IoTAction* action = sm.find_action(event.action);
        if (!action) return;
        switch (action->kind) {
            case ActionKind::SendPayload: {
                const auto& params = message_params_[action->payload];
                out += indent + names.ports.at(event.port) + "!" +
                       message_names_.at(action->payload) + "(";
                for (std::size_t i = 0; i < params.size(); ++i) {
                    if (i) out += ", ";
                    // Same-named component properties feed the message;
                    // anything else gets a zero value.
                    if (c.find_property(params[i].name))
                        out += names.properties.at(params[i].name);
                    else
                        out += zero_literal(params[i].type);
                }
                out += ")\n";
                break;
            }
            case ActionKind::ReceivePayload:
                // Receiving happens on transition triggers; an entry/exit
                // receive has no statement form in the subset.
                out += indent + "// receives " + message_names_.at(action->payload) + " on " +
                       names.ports.at(event.port) + "\n";
                break;
            case ActionKind::Generic:
                out += indent + names.properties.at(action->target_property) + " = ";
                if (action->value.kind == AssignExpr::Kind::Property)
                    out += names.properties.at(action->value.property);
                else
                    out += serialize_literal(action->value.literal);
                out += "\n";
                break;
        }
    }

    std::string render_guard(const GuardNode& guard, const ComponentNames& names) {
        // Canonical guard text already matches ThingML's expression syntax;
        // only property identifiers may differ after collision mangling.
        return serialize_guard(guard, [&names](const std::string& prop) {
            auto it = names.properties.find(prop);
            return it != names.properties.end() ? it->second : prop;
        });
    }

    // ---- configuration ----

    void emit_configuration() {
        InstanceModel instances = build_instance_model(model_);
        std::string cfg_name = unit_names_.claim(model_.name + "Cfg");
        std::string out;
        out += "// Generated by iotforge. Do not edit.\n";
        out += "configuration " + cfg_name + " {\n";
        NameScope scope;
        std::map<std::string, std::string> instance_names;
        for (const InstanceNode* node : instances.all_instances()) {
            std::string flat = node->path;
            std::replace(flat.begin(), flat.end(), '.', '_');
            std::string name = scope.claim(flat);
            instance_names[node->path] = name;
            out += "    instance " + name + " : " + node->component->name + "\n";
            provenance("configuration.thingml", "instance", name, node->path);
        }
        for (std::size_t i = 0; i < instances.connections.size(); ++i) {
            const ResolvedConnection& conn = instances.connections[i];
            // Required-facing side goes left, ThingML's client position.
            bool swap = false;
            if (const InstanceNode* to_node = instances.find(conn.to_path))
                if (const Port* p = to_node->component->find_port(conn.to_port))
                    if (p->direction == PortDirection::Required) swap = true;
            const std::string& left_path = swap ? conn.to_path : conn.from_path;
            const std::string& left_port = swap ? conn.to_port : conn.from_port;
            const std::string& right_path = swap ? conn.from_path : conn.to_path;
            const std::string& right_port = swap ? conn.from_port : conn.to_port;
            auto left = instance_names.find(left_path);
            auto right = instance_names.find(right_path);
            if (left == instance_names.end() || right == instance_names.end()) {
                // Entity-own ports have no thing instance behind them; such
                // connectors cannot be expressed in the configuration.
                out += "    // unmapped connector: " + conn.from_path + "." + conn.from_port +
                       " -> " + conn.to_path + "." + conn.to_port + "\n";
                continue;
            }
            std::string emitted = left->second + "." + left_port + "=>" + right->second + "." +
                                  right_port;
            out += "    connector " + left->second + "." + left_port + " => " + right->second +
                   "." + right_port + "\n";
            provenance("configuration.thingml", "connector", emitted,
                       "connection[" + std::to_string(i) + "]");
        }
        out += "}\n";
        result_.units.push_back({"configuration.thingml", std::move(out)});
    }
};

}  // namespace

const ThingMLUnit* GenerationResult::find_unit(std::string_view file_name) const {
    for (const auto& unit : units)
        if (unit.file_name == file_name) return &unit;
    return nullptr;
}

std::vector<const ProvenanceEntry*> GenerationResult::by_construct(
    std::string_view construct) const {
    std::vector<const ProvenanceEntry*> out;
    for (const auto& entry : provenance)
        if (entry.construct == construct) out.push_back(&entry);
    return out;
}

GenerationResult generate(const Model& model) {
    std::vector<Diagnostic> diagnostics = validate(model);
    if (has_errors(diagnostics))
        throw ModelError("refusing to generate from a model with validation errors");
    return Generator(model).run();
}

std::string map_component(const Model& model, const Component& component) {
    return Generator(model).thing_text(component);
}

std::string map_statemachine(const Model& model, const Component& component,
                             const StateMachine& sm) {
    (void)sm;
    return Generator(model).statechart_text(component);
}

std::string lower_camel(std::string_view name) {
    std::string out;
    bool upper_next = false;
    for (std::size_t i = 0; i < name.size(); ++i) {
        char c = name[i];
        if (c == '_') {
            upper_next = true;
            continue;
        }
        if (out.empty()) {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else if (upper_next) {
            out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        } else {
            out.push_back(c);
        }
        upper_next = false;
    }
    return out;
}

std::uint64_t generation_hash(const GenerationResult& result) {
    std::uint64_t hash = 1469598103934665603ull;  // FNV-1a
    auto mix = [&](std::string_view text) {
        for (unsigned char c : text) {
            hash ^= c;
            hash *= 1099511628211ull;
        }
    };
    for (const auto& unit : result.units) {
        mix(unit.file_name);
        mix(unit.text);
    }
    return hash;
}

}  // namespace iotforge
