// In-memory representation of a component model: payloads, interfaces,
// components (elements/boards/entities) with state machines, hardware
// platform, allocations and real-time annotations. Values are immutable
// after construction and safe to share across threads.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iotforge {

/// All durations are stored as integer microseconds.
using Micros = std::int64_t;

/// Position inside a source file, 1-based.
///
/// Locations carry no model identity: equality always holds, so the
/// defaulted comparisons on model types compare semantic fields only
/// (round-tripping a model through the serializer preserves equality).
struct SourceLoc {
    int line = 0;
    int column = 0;
    friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }
};

enum class TypeKind { Int, Float, Bool, String, PayloadRef };

struct SemType {
    TypeKind kind = TypeKind::Int;
    std::string payload;  // referenced payload name when kind == PayloadRef

    bool operator==(const SemType&) const = default;
};

struct Literal {
    enum class Kind { Int, Float, Bool, String };
    Kind kind = Kind::Int;
    std::int64_t int_value = 0;
    double float_value = 0.0;
    bool bool_value = false;
    std::string string_value;

    static Literal of_int(std::int64_t v);
    static Literal of_float(double v);
    static Literal of_bool(bool v);
    static Literal of_string(std::string v);

    bool operator==(const Literal&) const = default;
};

// ---------------------------------------------------------------------------
// Guard expressions: comparisons and boolean connectives over component
// properties. No arithmetic.

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };
enum class BoolConn { And, Or };

struct GuardExpr;
using GuardNode = std::shared_ptr<const GuardExpr>;

struct GuardExpr {
    enum class Kind { Literal, Property, Compare, Connective, Not };
    Kind kind = Kind::Literal;
    SourceLoc loc;
    Literal literal;       // Kind::Literal
    std::string property;  // Kind::Property
    CompareOp cmp{};       // Kind::Compare
    BoolConn conn{};       // Kind::Connective
    GuardNode lhs, rhs;    // children; Not uses lhs only
};

bool guard_equal(const GuardNode& a, const GuardNode& b);

GuardNode make_guard_literal(Literal v, SourceLoc loc = {});
GuardNode make_guard_property(std::string name, SourceLoc loc = {});
GuardNode make_guard_compare(CompareOp op, GuardNode lhs, GuardNode rhs, SourceLoc loc = {});
GuardNode make_guard_connective(BoolConn op, GuardNode lhs, GuardNode rhs, SourceLoc loc = {});
GuardNode make_guard_not(GuardNode operand, SourceLoc loc = {});

// ---------------------------------------------------------------------------
// Structural layer

struct Payload {
    struct Attribute {
        std::string name;
        SemType type;
        SourceLoc loc;
        bool operator==(const Attribute&) const = default;
    };
    std::string name;
    std::vector<Attribute> attributes;
    SourceLoc loc;
    bool operator==(const Payload&) const = default;
};

struct Operation {
    struct Param {
        std::string name;
        SemType type;
        SourceLoc loc;
        bool operator==(const Param&) const = default;
    };
    std::string name;
    std::vector<Param> params;
    std::optional<SemType> return_type;
    SourceLoc loc;
    bool operator==(const Operation&) const = default;
};

struct Interface {
    std::string name;
    std::vector<Operation> operations;
    SourceLoc loc;
    bool operator==(const Interface&) const = default;

    const Operation* find_operation(std::string_view name) const;
};

enum class PortDirection { Provided, Required, Bidirectional };

struct Port {
    std::string name;
    PortDirection direction = PortDirection::Provided;
    std::string interface;
    SourceLoc loc;
    bool operator==(const Port&) const = default;
};

struct Property {
    std::string name;
    SemType type;
    std::optional<Literal> init;
    SourceLoc loc;
    bool operator==(const Property&) const = default;
};

struct PartDecl {
    std::string name;
    std::string component;  // referenced component type
    SourceLoc loc;
    bool operator==(const PartDecl&) const = default;
};

/// Endpoint of a connection: `part.port`, or an own port when part is empty.
struct PortPath {
    std::string part;
    std::string port;
    SourceLoc loc;
    bool operator==(const PortPath&) const = default;

    bool is_own() const { return part.empty(); }
    std::string str() const { return part.empty() ? port : part + "." + port; }
};

struct Connection {
    PortPath from;
    PortPath to;
    SourceLoc loc;
    bool operator==(const Connection&) const = default;
};

// ---------------------------------------------------------------------------
// Behavioural layer

enum class EventKind { Incoming, Outgoing, Generic };

struct IoTEvent {
    std::string name;
    EventKind kind = EventKind::Generic;
    std::string port;    // empty for generic events
    std::string action;  // referenced action
    SourceLoc loc;
    bool operator==(const IoTEvent&) const = default;
};

enum class ActionKind { SendPayload, ReceivePayload, Generic };

/// Right-hand side of a generic action's property assignment.
struct AssignExpr {
    enum class Kind { Literal, Property };
    Kind kind = Kind::Literal;
    Literal literal;
    std::string property;
    bool operator==(const AssignExpr&) const = default;
};

struct IoTAction {
    std::string name;
    ActionKind kind = ActionKind::Generic;
    std::string payload;          // send/receive
    std::string target_property;  // generic assignment target
    AssignExpr value;             // generic assignment value
    SourceLoc loc;
    bool operator==(const IoTAction&) const = default;
};

struct IoTState {
    std::string name;
    std::string on_entry;
    std::string on_exit;
    std::vector<std::string> internal_events;
    SourceLoc loc;
    bool operator==(const IoTState&) const = default;
};

struct Transition {
    std::string source;
    std::string target;
    std::string trigger;  // event name, empty for none
    GuardNode guard;      // null for none
    SourceLoc loc;

    friend bool operator==(const Transition& a, const Transition& b) {
        return a.source == b.source && a.target == b.target &&
               a.trigger == b.trigger && guard_equal(a.guard, b.guard);
    }
};

struct StateMachine {
    std::vector<IoTAction> actions;
    std::vector<IoTEvent> events;
    std::vector<IoTState> states;
    std::vector<Transition> transitions;
    std::vector<std::string> initial_states;  // states flagged `initial`, in order
    SourceLoc loc;
    bool operator==(const StateMachine&) const = default;

    const IoTState* find_state(std::string_view name) const;
    const IoTEvent* find_event(std::string_view name) const;
    const IoTAction* find_action(std::string_view name) const;
    /// The unique initial state name, empty unless exactly one is flagged.
    std::string initial() const;
};

// ---------------------------------------------------------------------------
// Components and deployment

enum class ComponentKind { Element, Board, Entity };

struct Component {
    std::string name;
    ComponentKind kind = ComponentKind::Element;
    bool power_source = false;  // element declared via `powersource`
    std::vector<Property> properties;
    std::vector<Port> ports;
    std::vector<PartDecl> parts;
    std::vector<Connection> connections;
    std::optional<StateMachine> statemachine;
    SourceLoc loc;
    bool operator==(const Component&) const = default;

    const Port* find_port(std::string_view name) const;
    const Property* find_property(std::string_view name) const;
    const PartDecl* find_part(std::string_view name) const;
};

struct Processor {
    std::string name;
    std::vector<std::string> cores;
    SourceLoc loc;
    bool operator==(const Processor&) const = default;
};

struct HardwarePlatform {
    std::vector<Processor> processors;
    bool operator==(const HardwarePlatform&) const = default;

    bool has_core(std::string_view processor, std::string_view core) const;
};

struct CoreRef {
    std::string processor;
    std::string core;
    bool operator==(const CoreRef&) const = default;
    bool operator<(const CoreRef& other) const {
        return processor != other.processor ? processor < other.processor : core < other.core;
    }
    std::string str() const { return processor + "." + core; }
};

struct Allocation {
    std::string instance_path;  // dotted, e.g. plant.n1
    CoreRef core;
    SourceLoc loc;
    bool operator==(const Allocation&) const = default;
};

enum class ArrivalPattern { Periodic, Sporadic };

struct RTAnnotation {
    std::string target_path;  // instance path + operation or action name
    ArrivalPattern pattern = ArrivalPattern::Periodic;
    Micros period = 0;  // period T or minimum inter-arrival, microseconds
    Micros wcet = 0;
    Micros deadline = 0;
    int priority = 0;  // larger = higher
    SourceLoc loc;
    bool operator==(const RTAnnotation&) const = default;
};

struct Model {
    std::string name;
    std::vector<Payload> payloads;
    std::vector<Interface> interfaces;
    std::vector<Component> elements;
    std::vector<Component> boards;
    std::vector<Component> entities;
    HardwarePlatform hardware;
    std::vector<Allocation> allocations;
    std::vector<RTAnnotation> rt_annotations;
    bool operator==(const Model&) const = default;

    const Payload* find_payload(std::string_view name) const;
    const Interface* find_interface(std::string_view name) const;
    /// Looks through elements, boards and entities, in that order.
    const Component* find_component(std::string_view name) const;
};

/// Splits a dotted path into segments. Empty input gives an empty list.
std::vector<std::string> split_path(std::string_view path);

}  // namespace iotforge
