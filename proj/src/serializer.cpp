#include "iotforge/serializer.hpp"

#include <charconv>
#include <sstream>

namespace iotforge {

namespace {

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
    std::string s(buf, end);
    if (s.find('.') == std::string::npos) s += ".0";
    return s;
}

std::string escape_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c); break;
        }
    }
    out += '"';
    return out;
}

// Binding strength for parenthesization: or < and < not < compare < atom.
int guard_precedence(const GuardExpr& e) {
    switch (e.kind) {
        case GuardExpr::Kind::Connective: return e.conn == BoolConn::Or ? 1 : 2;
        case GuardExpr::Kind::Not: return 3;
        case GuardExpr::Kind::Compare: return 4;
        default: return 5;
    }
}

const char* compare_text(CompareOp op) {
    switch (op) {
        case CompareOp::Eq: return "==";
        case CompareOp::Ne: return "!=";
        case CompareOp::Lt: return "<";
        case CompareOp::Le: return "<=";
        case CompareOp::Gt: return ">";
        case CompareOp::Ge: return ">=";
    }
    return "?";
}

using PropertyRename = std::function<std::string(const std::string&)>;

void print_guard(const GuardExpr& e, int min_prec, const PropertyRename& rename,
                 std::string& out) {
    bool parens = guard_precedence(e) < min_prec;
    if (parens) out += '(';
    switch (e.kind) {
        case GuardExpr::Kind::Literal:
            out += serialize_literal(e.literal);
            break;
        case GuardExpr::Kind::Property:
            out += rename ? rename(e.property) : e.property;
            break;
        case GuardExpr::Kind::Compare:
            print_guard(*e.lhs, 5, rename, out);
            out += ' ';
            out += compare_text(e.cmp);
            out += ' ';
            print_guard(*e.rhs, 5, rename, out);
            break;
        case GuardExpr::Kind::Connective: {
            int prec = guard_precedence(e);
            print_guard(*e.lhs, prec, rename, out);
            out += e.conn == BoolConn::Or ? " or " : " and ";
            print_guard(*e.rhs, prec + 1, rename, out);
            break;
        }
        case GuardExpr::Kind::Not:
            out += "not ";
            print_guard(*e.lhs, 3, rename, out);
            break;
    }
    if (parens) out += ')';
}

class Writer {
  public:
    explicit Writer(std::string& out) : out_(out) {}

    void line(const std::string& text) {
        for (int i = 0; i < indent_; ++i) out_ += "  ";
        out_ += text;
        out_ += '\n';
    }
    void open(const std::string& header) {
        line(header + " {");
        ++indent_;
    }
    void close() {
        --indent_;
        line("}");
    }

  private:
    std::string& out_;
    int indent_ = 0;
};

std::string attr_list(const std::vector<Payload::Attribute>& attrs) {
    std::string out;
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (i) out += ", ";
        out += attrs[i].name + ": " + type_name(attrs[i].type);
    }
    return out;
}

std::string param_list(const std::vector<Operation::Param>& params) {
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ", ";
        out += params[i].name + ": " + type_name(params[i].type);
    }
    return out;
}

std::string assign_text(const AssignExpr& value) {
    return value.kind == AssignExpr::Kind::Property ? value.property
                                                    : serialize_literal(value.literal);
}

void write_statemachine(Writer& w, const StateMachine& sm) {
    w.open("statemachine");
    for (const auto& a : sm.actions) {
        switch (a.kind) {
            case ActionKind::SendPayload:
                w.line("action " + a.name + " send " + a.payload);
                break;
            case ActionKind::ReceivePayload:
                w.line("action " + a.name + " receive " + a.payload);
                break;
            case ActionKind::Generic:
                w.line("action " + a.name + " set " + a.target_property + " = " +
                       assign_text(a.value));
                break;
        }
    }
    for (const auto& e : sm.events) {
        std::string text = "event " + e.name + " ";
        switch (e.kind) {
            case EventKind::Incoming: text += "incoming"; break;
            case EventKind::Outgoing: text += "outgoing"; break;
            case EventKind::Generic: text += "generic"; break;
        }
        if (!e.port.empty()) text += " via " + e.port;
        text += " does " + e.action;
        w.line(text);
    }
    for (const auto& s : sm.states) {
        bool initial = false;
        for (const auto& name : sm.initial_states)
            if (name == s.name) initial = true;
        std::string text = initial ? "initial state " : "state ";
        text += s.name + " {";
        if (!s.on_entry.empty()) text += " entry " + s.on_entry;
        if (!s.on_exit.empty()) text += " exit " + s.on_exit;
        for (const auto& ev : s.internal_events) text += " internal " + ev;
        text += " }";
        w.line(text);
    }
    for (const auto& t : sm.transitions) {
        std::string text = "transition " + t.source + " -> " + t.target;
        if (!t.trigger.empty()) text += " on " + t.trigger;
        if (t.guard) text += " [" + serialize_guard(t.guard) + "]";
        w.line(text);
    }
    w.close();
}

void write_component(Writer& w, const Component& c) {
    const char* keyword = nullptr;
    switch (c.kind) {
        case ComponentKind::Element: keyword = c.power_source ? "powersource" : "element"; break;
        case ComponentKind::Board: keyword = "board"; break;
        case ComponentKind::Entity: keyword = "entity"; break;
    }
    w.open(std::string(keyword) + " " + c.name);
    for (const auto& p : c.properties) {
        std::string text = "property " + p.name + ": " + type_name(p.type);
        if (p.init) text += " = " + serialize_literal(*p.init);
        w.line(text);
    }
    for (const auto& port : c.ports) {
        const char* dir = port.direction == PortDirection::Provided   ? "provides"
                          : port.direction == PortDirection::Required ? "requires"
                                                                      : "bidir";
        w.line(std::string(dir) + " port " + port.name + ": " + port.interface);
    }
    for (const auto& part : c.parts) w.line("part " + part.name + ": " + part.component);
    for (const auto& conn : c.connections)
        w.line("connect " + conn.from.str() + " -> " + conn.to.str());
    if (c.statemachine) write_statemachine(w, *c.statemachine);
    w.close();
}

}  // namespace

std::string type_name(const SemType& type) {
    switch (type.kind) {
        case TypeKind::Int: return "int";
        case TypeKind::Float: return "float";
        case TypeKind::Bool: return "bool";
        case TypeKind::String: return "string";
        case TypeKind::PayloadRef: return type.payload;
    }
    return "?";
}

std::string serialize_literal(const Literal& lit) {
    switch (lit.kind) {
        case Literal::Kind::Int: return std::to_string(lit.int_value);
        case Literal::Kind::Float: return format_double(lit.float_value);
        case Literal::Kind::Bool: return lit.bool_value ? "true" : "false";
        case Literal::Kind::String: return escape_string(lit.string_value);
    }
    return "?";
}

std::string serialize_guard(const GuardNode& guard) {
    return serialize_guard(guard, nullptr);
}

std::string serialize_guard(const GuardNode& guard,
                            const std::function<std::string(const std::string&)>& rename) {
    std::string out;
    if (guard) print_guard(*guard, 0, rename, out);
    return out;
}

std::string format_time_ms(Micros micros) {
    Micros ms = micros / 1000;
    Micros frac = micros % 1000;
    if (frac == 0) return std::to_string(ms) + " ms";
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%03lld", static_cast<long long>(frac));
    std::string digits(buf);
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    return std::to_string(ms) + "." + digits + " ms";
}

std::string serialize_model(const Model& model) {
    std::string out;
    Writer w(out);
    w.open("system " + model.name);
    for (const auto& p : model.payloads)
        w.line("payload " + p.name + " { " +
               (p.attributes.empty() ? std::string() : attr_list(p.attributes) + " ") + "}");
    for (const auto& iface : model.interfaces) {
        w.open("interface " + iface.name);
        for (const auto& op : iface.operations) {
            std::string text = "op " + op.name + "(" + param_list(op.params) + ")";
            if (op.return_type) text += " -> " + type_name(*op.return_type);
            w.line(text);
        }
        w.close();
    }
    for (const auto& c : model.elements) write_component(w, c);
    for (const auto& c : model.boards) write_component(w, c);
    for (const auto& c : model.entities) write_component(w, c);
    for (const auto& proc : model.hardware.processors) {
        std::string text = "processor " + proc.name + " {";
        for (const auto& core : proc.cores) text += " core " + core;
        text += " }";
        w.line(text);
    }
    for (const auto& alloc : model.allocations)
        w.line("allocate " + alloc.instance_path + " -> " + alloc.core.str());
    for (const auto& rt : model.rt_annotations) {
        std::string text = "rt " + rt.target_path + " { ";
        text += rt.pattern == ArrivalPattern::Periodic ? "periodic " : "sporadic ";
        text += format_time_ms(rt.period);
        text += " wcet " + format_time_ms(rt.wcet);
        text += " deadline " + format_time_ms(rt.deadline);
        text += " priority " + std::to_string(rt.priority);
        text += " }";
        w.line(text);
    }
    w.close();
    return out;
}

}  // namespace iotforge
