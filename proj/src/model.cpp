#include "iotforge/model.hpp"

#include <algorithm>

namespace iotforge {

Literal Literal::of_int(std::int64_t v) {
    Literal l;
    l.kind = Kind::Int;
    l.int_value = v;
    return l;
}

Literal Literal::of_float(double v) {
    Literal l;
    l.kind = Kind::Float;
    l.float_value = v;
    return l;
}

Literal Literal::of_bool(bool v) {
    Literal l;
    l.kind = Kind::Bool;
    l.bool_value = v;
    return l;
}

Literal Literal::of_string(std::string v) {
    Literal l;
    l.kind = Kind::String;
    l.string_value = std::move(v);
    return l;
}

bool guard_equal(const GuardNode& a, const GuardNode& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case GuardExpr::Kind::Literal:
            return a->literal == b->literal;
        case GuardExpr::Kind::Property:
            return a->property == b->property;
        case GuardExpr::Kind::Compare:
            return a->cmp == b->cmp && guard_equal(a->lhs, b->lhs) && guard_equal(a->rhs, b->rhs);
        case GuardExpr::Kind::Connective:
            return a->conn == b->conn && guard_equal(a->lhs, b->lhs) && guard_equal(a->rhs, b->rhs);
        case GuardExpr::Kind::Not:
            return guard_equal(a->lhs, b->lhs);
    }
    return false;
}

GuardNode make_guard_literal(Literal v, SourceLoc loc) {
    auto n = std::make_shared<GuardExpr>();
    n->kind = GuardExpr::Kind::Literal;
    n->literal = std::move(v);
    n->loc = loc;
    return n;
}

GuardNode make_guard_property(std::string name, SourceLoc loc) {
    auto n = std::make_shared<GuardExpr>();
    n->kind = GuardExpr::Kind::Property;
    n->property = std::move(name);
    n->loc = loc;
    return n;
}

GuardNode make_guard_compare(CompareOp op, GuardNode lhs, GuardNode rhs, SourceLoc loc) {
    auto n = std::make_shared<GuardExpr>();
    n->kind = GuardExpr::Kind::Compare;
    n->cmp = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    n->loc = loc;
    return n;
}

GuardNode make_guard_connective(BoolConn op, GuardNode lhs, GuardNode rhs, SourceLoc loc) {
    auto n = std::make_shared<GuardExpr>();
    n->kind = GuardExpr::Kind::Connective;
    n->conn = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    n->loc = loc;
    return n;
}

GuardNode make_guard_not(GuardNode operand, SourceLoc loc) {
    auto n = std::make_shared<GuardExpr>();
    n->kind = GuardExpr::Kind::Not;
    n->lhs = std::move(operand);
    n->loc = loc;
    return n;
}

namespace {

template <typename T>
const T* find_by_name(const std::vector<T>& items, std::string_view name) {
    for (const auto& item : items)
        if (item.name == name) return &item;
    return nullptr;
}

}  // namespace

const Operation* Interface::find_operation(std::string_view n) const {
    return find_by_name(operations, n);
}

const IoTState* StateMachine::find_state(std::string_view n) const {
    return find_by_name(states, n);
}

const IoTEvent* StateMachine::find_event(std::string_view n) const {
    return find_by_name(events, n);
}

const IoTAction* StateMachine::find_action(std::string_view n) const {
    return find_by_name(actions, n);
}

std::string StateMachine::initial() const {
    return initial_states.size() == 1 ? initial_states.front() : std::string();
}

const Port* Component::find_port(std::string_view n) const {
    return find_by_name(ports, n);
}

const Property* Component::find_property(std::string_view n) const {
    return find_by_name(properties, n);
}

const PartDecl* Component::find_part(std::string_view n) const {
    return find_by_name(parts, n);
}

bool HardwarePlatform::has_core(std::string_view processor, std::string_view core) const {
    const Processor* p = find_by_name(processors, processor);
    if (!p) return false;
    return std::find(p->cores.begin(), p->cores.end(), core) != p->cores.end();
}

const Payload* Model::find_payload(std::string_view n) const {
    return find_by_name(payloads, n);
}

const Interface* Model::find_interface(std::string_view n) const {
    return find_by_name(interfaces, n);
}

const Component* Model::find_component(std::string_view n) const {
    if (const Component* c = find_by_name(elements, n)) return c;
    if (const Component* c = find_by_name(boards, n)) return c;
    return find_by_name(entities, n);
}

std::vector<std::string> split_path(std::string_view path) {
    std::vector<std::string> segments;
    if (path.empty()) return segments;
    std::size_t start = 0;
    while (true) {
        std::size_t dot = path.find('.', start);
        if (dot == std::string_view::npos) {
            segments.emplace_back(path.substr(start));
            break;
        }
        segments.emplace_back(path.substr(start, dot - start));
        start = dot + 1;
    }
    return segments;
}

}  // namespace iotforge
