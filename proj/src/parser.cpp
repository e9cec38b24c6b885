// Recursive-descent parser for the .ciot model language. Grammar reference:
// docs/grammar.ebnf.
#include "iotforge/parser.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>

#include "iotforge/lexer.hpp"

namespace iotforge {

namespace {

// Thrown to abandon the current declaration; the enclosing block loop
// resynchronizes and keeps going.
struct Bail {};

bool is_top_level_keyword(const Token& t) {
    if (t.type != TokenType::Keyword) return false;
    return t.text == "payload" || t.text == "interface" || t.text == "element" ||
           t.text == "board" || t.text == "entity" || t.text == "powersource" ||
           t.text == "processor" || t.text == "allocate" || t.text == "rt";
}

bool is_component_item_keyword(const Token& t) {
    if (t.type != TokenType::Keyword) return false;
    return t.text == "property" || t.text == "provides" || t.text == "requires" ||
           t.text == "bidir" || t.text == "part" || t.text == "connect" ||
           t.text == "statemachine";
}

bool is_sm_item_keyword(const Token& t) {
    if (t.type != TokenType::Keyword) return false;
    return t.text == "action" || t.text == "event" || t.text == "initial" ||
           t.text == "state" || t.text == "transition";
}

class Parser {
  public:
    Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diagnostics)
        : tokens_(std::move(tokens)), diags_(diagnostics) {}

    Model parse_file() {
        parse_version_header();
        Model model;
        expect_keyword("system");
        model.name = expect_identifier("system name");
        expect(TokenType::LBrace, "'{' after system name");
        while (!at(TokenType::RBrace) && !at(TokenType::EndOfFile)) {
            try {
                parse_top_item(model);
            } catch (const Bail&) {
                recover_top_level();
            }
        }
        expect(TokenType::RBrace, "'}' closing system block");
        if (!at(TokenType::EndOfFile))
            error(peek().loc, "unexpected content after system block");
        return model;
    }

  private:
    std::vector<Token> tokens_;
    std::vector<Diagnostic>& diags_;
    std::size_t idx_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = idx_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& advance() {
        const Token& t = tokens_[idx_];
        if (idx_ + 1 < tokens_.size()) ++idx_;
        return t;
    }
    bool at(TokenType type) const { return peek().type == type; }
    bool at_keyword(std::string_view kw) const { return peek().is_keyword(kw); }
    bool accept(TokenType type) {
        if (!at(type)) return false;
        advance();
        return true;
    }
    bool accept_keyword(std::string_view kw) {
        if (!at_keyword(kw)) return false;
        advance();
        return true;
    }

    [[noreturn]] void fail(SourceLoc loc, const std::string& message) {
        error(loc, message);
        throw Bail{};
    }
    void error(SourceLoc loc, const std::string& message) {
        diags_.push_back({Severity::Error, "E_SYNTAX", message, loc});
    }

    std::string describe(const Token& t) const {
        switch (t.type) {
            case TokenType::EndOfFile: return "end of file";
            case TokenType::Identifier: return "identifier '" + t.text + "'";
            case TokenType::Keyword: return "keyword '" + t.text + "'";
            case TokenType::Integer:
            case TokenType::Float: return "number '" + t.text + "'";
            case TokenType::String: return "string literal";
            default: return "'" + t.text + "'";
        }
    }

    const Token& expect(TokenType type, const std::string& what) {
        if (!at(type)) fail(peek().loc, "expected " + what + ", found " + describe(peek()));
        return advance();
    }
    void expect_keyword(std::string_view kw) {
        if (!at_keyword(kw))
            fail(peek().loc,
                 "expected '" + std::string(kw) + "', found " + describe(peek()));
        advance();
    }
    std::string expect_identifier(const std::string& what) {
        if (at(TokenType::Keyword))
            fail(peek().loc, "reserved word '" + peek().text + "' cannot be used as " + what);
        return expect(TokenType::Identifier, what).text;
    }

    // Skips to the next plausible declaration start, balancing braces. The
    // abandoned declaration may have left one brace open; the first
    // unmatched '}' is assumed to close it and is consumed. A second
    // unmatched '}' must belong to the enclosing block and is left alone.
    void recover(bool (*is_item_start)(const Token&)) {
        int depth = 0;
        bool closed_own_block = false;
        while (!at(TokenType::EndOfFile)) {
            const Token& t = peek();
            if (t.type == TokenType::LBrace) {
                ++depth;
            } else if (t.type == TokenType::RBrace) {
                if (depth > 0) {
                    --depth;
                } else if (!closed_own_block) {
                    closed_own_block = true;
                } else {
                    return;
                }
            } else if (depth == 0 && is_item_start(t)) {
                return;
            }
            advance();
        }
    }

    void recover_top_level() { recover(is_top_level_keyword); }
    void recover_in_block(bool (*is_item_start)(const Token&)) { recover(is_item_start); }

    void parse_version_header() {
        // Optional `dsl-version N` before the system block.
        if (peek().type == TokenType::Identifier && peek().text == "dsl" &&
            peek(1).type == TokenType::Minus && peek(2).type == TokenType::Identifier &&
            peek(2).text == "version") {
            SourceLoc loc = peek().loc;
            advance();
            advance();
            advance();
            const Token& v = expect(TokenType::Integer, "dsl version number");
            if (v.int_value != 1)
                error(loc, "unsupported dsl-version " + v.text + " (expected 1)");
        }
    }

    void parse_top_item(Model& model) {
        const Token& t = peek();
        if (accept_keyword("payload")) {
            model.payloads.push_back(parse_payload(t.loc));
        } else if (accept_keyword("interface")) {
            model.interfaces.push_back(parse_interface(t.loc));
        } else if (accept_keyword("element")) {
            model.elements.push_back(parse_component(ComponentKind::Element, false, t.loc));
        } else if (accept_keyword("powersource")) {
            model.elements.push_back(parse_component(ComponentKind::Element, true, t.loc));
        } else if (accept_keyword("board")) {
            model.boards.push_back(parse_component(ComponentKind::Board, false, t.loc));
        } else if (accept_keyword("entity")) {
            model.entities.push_back(parse_component(ComponentKind::Entity, false, t.loc));
        } else if (accept_keyword("processor")) {
            model.hardware.processors.push_back(parse_processor(t.loc));
        } else if (accept_keyword("allocate")) {
            model.allocations.push_back(parse_allocation(t.loc));
        } else if (accept_keyword("rt")) {
            model.rt_annotations.push_back(parse_rt(t.loc));
        } else {
            fail(t.loc, "expected a declaration (payload, interface, element, board, entity, "
                        "powersource, processor, allocate or rt), found " +
                            describe(t));
        }
    }

    SemType parse_type() {
        const Token& t = peek();
        if (accept_keyword("int")) return {TypeKind::Int, ""};
        if (accept_keyword("float")) return {TypeKind::Float, ""};
        if (accept_keyword("bool")) return {TypeKind::Bool, ""};
        if (accept_keyword("string")) return {TypeKind::String, ""};
        if (t.type == TokenType::Identifier) {
            advance();
            return {TypeKind::PayloadRef, t.text};
        }
        fail(t.loc, "expected a type, found " + describe(t));
    }

    Literal parse_literal() {
        const Token& t = peek();
        if (accept(TokenType::Minus)) {
            const Token& num = peek();
            if (accept(TokenType::Integer)) return Literal::of_int(-num.int_value);
            if (accept(TokenType::Float)) return Literal::of_float(-num.float_value);
            fail(num.loc, "expected a number after '-'");
        }
        if (accept(TokenType::Integer)) return Literal::of_int(t.int_value);
        if (accept(TokenType::Float)) return Literal::of_float(t.float_value);
        if (accept_keyword("true")) return Literal::of_bool(true);
        if (accept_keyword("false")) return Literal::of_bool(false);
        if (accept(TokenType::String)) return Literal::of_string(t.text);
        fail(t.loc, "expected a literal, found " + describe(t));
    }

    Payload parse_payload(SourceLoc loc) {
        Payload p;
        p.loc = loc;
        p.name = expect_identifier("payload name");
        expect(TokenType::LBrace, "'{' after payload name");
        if (!at(TokenType::RBrace)) {
            do {
                Payload::Attribute attr;
                attr.loc = peek().loc;
                attr.name = expect_identifier("attribute name");
                expect(TokenType::Colon, "':' after attribute name");
                attr.type = parse_type();
                p.attributes.push_back(std::move(attr));
            } while (accept(TokenType::Comma));
        }
        expect(TokenType::RBrace, "'}' closing payload");
        return p;
    }

    Interface parse_interface(SourceLoc loc) {
        Interface iface;
        iface.loc = loc;
        iface.name = expect_identifier("interface name");
        expect(TokenType::LBrace, "'{' after interface name");
        while (!at(TokenType::RBrace) && !at(TokenType::EndOfFile)) {
            SourceLoc op_loc = peek().loc;
            expect_keyword("op");
            Operation op;
            op.loc = op_loc;
            op.name = expect_identifier("operation name");
            expect(TokenType::LParen, "'(' after operation name");
            if (!at(TokenType::RParen)) {
                do {
                    Operation::Param param;
                    param.loc = peek().loc;
                    param.name = expect_identifier("parameter name");
                    expect(TokenType::Colon, "':' after parameter name");
                    param.type = parse_type();
                    op.params.push_back(std::move(param));
                } while (accept(TokenType::Comma));
            }
            expect(TokenType::RParen, "')' closing parameter list");
            if (accept(TokenType::Arrow)) op.return_type = parse_type();
            iface.operations.push_back(std::move(op));
        }
        expect(TokenType::RBrace, "'}' closing interface");
        return iface;
    }

    Component parse_component(ComponentKind kind, bool power, SourceLoc loc) {
        Component c;
        c.loc = loc;
        c.kind = kind;
        c.power_source = power;
        c.name = expect_identifier("component name");
        expect(TokenType::LBrace, "'{' after component name");
        while (!at(TokenType::RBrace) && !at(TokenType::EndOfFile)) {
            try {
                parse_component_item(c);
            } catch (const Bail&) {
                recover_in_block(is_component_item_keyword);
            }
        }
        expect(TokenType::RBrace, "'}' closing component");
        return c;
    }

    void parse_component_item(Component& c) {
        const Token& t = peek();
        if (accept_keyword("property")) {
            Property prop;
            prop.loc = t.loc;
            prop.name = expect_identifier("property name");
            expect(TokenType::Colon, "':' after property name");
            prop.type = parse_type();
            if (accept(TokenType::Assign)) prop.init = parse_literal();
            c.properties.push_back(std::move(prop));
            return;
        }
        if (at_keyword("provides") || at_keyword("requires") || at_keyword("bidir")) {
            Port port;
            port.loc = t.loc;
            port.direction = t.text == "provides"  ? PortDirection::Provided
                             : t.text == "requires" ? PortDirection::Required
                                                    : PortDirection::Bidirectional;
            advance();
            expect_keyword("port");
            port.name = expect_identifier("port name");
            expect(TokenType::Colon, "':' after port name");
            port.interface = expect_identifier("interface name");
            c.ports.push_back(std::move(port));
            return;
        }
        if (accept_keyword("part")) {
            PartDecl part;
            part.loc = t.loc;
            part.name = expect_identifier("part name");
            expect(TokenType::Colon, "':' after part name");
            part.component = expect_identifier("component type");
            c.parts.push_back(std::move(part));
            return;
        }
        if (accept_keyword("connect")) {
            Connection conn;
            conn.loc = t.loc;
            conn.from = parse_port_path();
            expect(TokenType::Arrow, "'->' between connection endpoints");
            conn.to = parse_port_path();
            c.connections.push_back(std::move(conn));
            return;
        }
        if (accept_keyword("statemachine")) {
            if (c.statemachine)
                error(t.loc, "component '" + c.name + "' already has a statemachine");
            c.statemachine = parse_statemachine(t.loc);
            return;
        }
        fail(t.loc, "expected a component item (property, provides, requires, bidir, part, "
                    "connect or statemachine), found " +
                        describe(t));
    }

    PortPath parse_port_path() {
        PortPath path;
        path.loc = peek().loc;
        std::string first = expect_identifier("port path");
        if (accept(TokenType::Dot)) {
            path.part = std::move(first);
            path.port = expect_identifier("port name");
        } else {
            path.port = std::move(first);
        }
        return path;
    }

    StateMachine parse_statemachine(SourceLoc loc) {
        StateMachine sm;
        sm.loc = loc;
        expect(TokenType::LBrace, "'{' after statemachine");
        while (!at(TokenType::RBrace) && !at(TokenType::EndOfFile)) {
            try {
                parse_sm_item(sm);
            } catch (const Bail&) {
                recover_in_block(is_sm_item_keyword);
            }
        }
        expect(TokenType::RBrace, "'}' closing statemachine");
        return sm;
    }

    void parse_sm_item(StateMachine& sm) {
        const Token& t = peek();
        if (accept_keyword("action")) {
            sm.actions.push_back(parse_action(t.loc));
            return;
        }
        if (accept_keyword("event")) {
            sm.events.push_back(parse_event(t.loc));
            return;
        }
        if (at_keyword("initial") || at_keyword("state")) {
            bool initial = accept_keyword("initial");
            expect_keyword("state");
            IoTState state = parse_state(t.loc);
            if (initial) sm.initial_states.push_back(state.name);
            sm.states.push_back(std::move(state));
            return;
        }
        if (accept_keyword("transition")) {
            sm.transitions.push_back(parse_transition(t.loc));
            return;
        }
        fail(t.loc, "expected a statemachine item (action, event, state or transition), "
                    "found " +
                        describe(t));
    }

    IoTAction parse_action(SourceLoc loc) {
        IoTAction action;
        action.loc = loc;
        action.name = expect_identifier("action name");
        if (accept_keyword("send")) {
            action.kind = ActionKind::SendPayload;
            action.payload = expect_identifier("payload name");
        } else if (accept_keyword("receive")) {
            action.kind = ActionKind::ReceivePayload;
            action.payload = expect_identifier("payload name");
        } else if (accept_keyword("set")) {
            action.kind = ActionKind::Generic;
            action.target_property = expect_identifier("property name");
            expect(TokenType::Assign, "'=' in assignment");
            if (at(TokenType::Identifier)) {
                action.value.kind = AssignExpr::Kind::Property;
                action.value.property = advance().text;
            } else {
                action.value.kind = AssignExpr::Kind::Literal;
                action.value.literal = parse_literal();
            }
        } else {
            fail(peek().loc, "expected 'send', 'receive' or 'set' in action, found " +
                                 describe(peek()));
        }
        return action;
    }

    IoTEvent parse_event(SourceLoc loc) {
        IoTEvent event;
        event.loc = loc;
        event.name = expect_identifier("event name");
        if (accept_keyword("incoming")) {
            event.kind = EventKind::Incoming;
        } else if (accept_keyword("outgoing")) {
            event.kind = EventKind::Outgoing;
        } else if (accept_keyword("generic")) {
            event.kind = EventKind::Generic;
        } else {
            fail(peek().loc, "expected 'incoming', 'outgoing' or 'generic', found " +
                                 describe(peek()));
        }
        if (accept_keyword("via")) event.port = expect_identifier("port name");
        expect_keyword("does");
        event.action = expect_identifier("action name");
        return event;
    }

    IoTState parse_state(SourceLoc loc) {
        IoTState state;
        state.loc = loc;
        state.name = expect_identifier("state name");
        expect(TokenType::LBrace, "'{' after state name");
        if (accept_keyword("entry")) state.on_entry = expect_identifier("entry event name");
        if (accept_keyword("exit")) state.on_exit = expect_identifier("exit event name");
        while (accept_keyword("internal"))
            state.internal_events.push_back(expect_identifier("internal event name"));
        expect(TokenType::RBrace, "'}' closing state");
        return state;
    }

    Transition parse_transition(SourceLoc loc) {
        Transition tr;
        tr.loc = loc;
        tr.source = expect_identifier("source state");
        expect(TokenType::Arrow, "'->' in transition");
        tr.target = expect_identifier("target state");
        if (accept_keyword("on")) tr.trigger = expect_identifier("trigger event name");
        if (accept(TokenType::LBracket)) {
            tr.guard = parse_guard();
            expect(TokenType::RBracket, "']' closing guard");
        }
        return tr;
    }

    // Guard grammar, loosest to tightest: or, and, not, comparison, primary.
    GuardNode parse_guard() { return parse_or(); }

    GuardNode parse_or() {
        GuardNode lhs = parse_and();
        while (at_keyword("or")) {
            SourceLoc loc = advance().loc;
            lhs = make_guard_connective(BoolConn::Or, std::move(lhs), parse_and(), loc);
        }
        return lhs;
    }

    GuardNode parse_and() {
        GuardNode lhs = parse_unary();
        while (at_keyword("and")) {
            SourceLoc loc = advance().loc;
            lhs = make_guard_connective(BoolConn::And, std::move(lhs), parse_unary(), loc);
        }
        return lhs;
    }

    GuardNode parse_unary() {
        if (at_keyword("not")) {
            SourceLoc loc = advance().loc;
            return make_guard_not(parse_unary(), loc);
        }
        return parse_comparison();
    }

    GuardNode parse_comparison() {
        GuardNode lhs = parse_primary();
        CompareOp op;
        switch (peek().type) {
            case TokenType::EqEq: op = CompareOp::Eq; break;
            case TokenType::NotEq: op = CompareOp::Ne; break;
            case TokenType::Less: op = CompareOp::Lt; break;
            case TokenType::LessEq: op = CompareOp::Le; break;
            case TokenType::Greater: op = CompareOp::Gt; break;
            case TokenType::GreaterEq: op = CompareOp::Ge; break;
            default: return lhs;
        }
        SourceLoc loc = advance().loc;
        return make_guard_compare(op, std::move(lhs), parse_primary(), loc);
    }

    GuardNode parse_primary() {
        const Token& t = peek();
        if (accept(TokenType::LParen)) {
            GuardNode inner = parse_guard();
            expect(TokenType::RParen, "')' closing guard group");
            return inner;
        }
        if (t.type == TokenType::Identifier) {
            advance();
            return make_guard_property(t.text, t.loc);
        }
        if (t.type == TokenType::Integer || t.type == TokenType::Float ||
            t.type == TokenType::String || t.type == TokenType::Minus ||
            t.is_keyword("true") || t.is_keyword("false")) {
            SourceLoc loc = t.loc;
            return make_guard_literal(parse_literal(), loc);
        }
        fail(t.loc, "expected a guard operand, found " + describe(t));
    }

    Processor parse_processor(SourceLoc loc) {
        Processor proc;
        proc.loc = loc;
        proc.name = expect_identifier("processor name");
        expect(TokenType::LBrace, "'{' after processor name");
        while (accept_keyword("core")) proc.cores.push_back(expect_identifier("core name"));
        expect(TokenType::RBrace, "'}' closing processor");
        return proc;
    }

    std::string parse_dotted_path(const std::string& what) {
        std::string path = expect_identifier(what);
        while (accept(TokenType::Dot)) {
            path += '.';
            path += expect_identifier(what + " segment");
        }
        return path;
    }

    Allocation parse_allocation(SourceLoc loc) {
        Allocation alloc;
        alloc.loc = loc;
        alloc.instance_path = parse_dotted_path("instance path");
        expect(TokenType::Arrow, "'->' in allocation");
        alloc.core.processor = expect_identifier("processor name");
        expect(TokenType::Dot, "'.' between processor and core");
        alloc.core.core = expect_identifier("core name");
        return alloc;
    }

    // `N ms` as integer microseconds; at most three decimal places.
    Micros parse_time() {
        const Token& t = peek();
        Micros micros = 0;
        if (t.type == TokenType::Integer) {
            advance();
            if (t.int_value > std::numeric_limits<Micros>::max() / 1000)
                fail(t.loc, "time value out of range");
            micros = t.int_value * 1000;
        } else if (t.type == TokenType::Float) {
            advance();
            std::string_view text = t.text;
            std::size_t dot = text.find('.');
            std::string_view whole = text.substr(0, dot);
            std::string_view frac = text.substr(dot + 1);
            if (frac.size() > 3)
                fail(t.loc, "time precision finer than 1 microsecond is not representable");
            std::int64_t whole_ms = 0;
            std::from_chars(whole.data(), whole.data() + whole.size(), whole_ms);
            std::int64_t frac_us = 0;
            std::from_chars(frac.data(), frac.data() + frac.size(), frac_us);
            for (std::size_t i = frac.size(); i < 3; ++i) frac_us *= 10;
            if (whole_ms > (std::numeric_limits<Micros>::max() - frac_us) / 1000)
                fail(t.loc, "time value out of range");
            micros = whole_ms * 1000 + frac_us;
        } else {
            fail(t.loc, "expected a time value, found " + describe(t));
        }
        expect_keyword("ms");
        return micros;
    }

    RTAnnotation parse_rt(SourceLoc loc) {
        RTAnnotation rt;
        rt.loc = loc;
        rt.target_path = parse_dotted_path("operation path");
        expect(TokenType::LBrace, "'{' after rt target");
        bool have_pattern = false, have_wcet = false, have_deadline = false,
             have_priority = false;
        while (!at(TokenType::RBrace) && !at(TokenType::EndOfFile)) {
            const Token& t = peek();
            if (at_keyword("periodic") || at_keyword("sporadic")) {
                if (have_pattern) error(t.loc, "duplicate arrival pattern");
                rt.pattern = t.text == "periodic" ? ArrivalPattern::Periodic
                                                  : ArrivalPattern::Sporadic;
                advance();
                rt.period = parse_time();
                have_pattern = true;
            } else if (accept_keyword("wcet")) {
                if (have_wcet) error(t.loc, "duplicate wcet");
                rt.wcet = parse_time();
                have_wcet = true;
            } else if (accept_keyword("deadline")) {
                if (have_deadline) error(t.loc, "duplicate deadline");
                rt.deadline = parse_time();
                have_deadline = true;
            } else if (accept_keyword("priority")) {
                if (have_priority) error(t.loc, "duplicate priority");
                const Token& v = expect(TokenType::Integer, "priority value");
                rt.priority = static_cast<int>(v.int_value);
                have_priority = true;
            } else {
                fail(t.loc, "expected 'periodic', 'sporadic', 'wcet', 'deadline' or "
                            "'priority', found " +
                                describe(t));
            }
        }
        expect(TokenType::RBrace, "'}' closing rt block");
        if (!have_pattern) error(loc, "rt block is missing an arrival pattern");
        if (!have_wcet) error(loc, "rt block is missing wcet");
        if (!have_deadline) error(loc, "rt block is missing deadline");
        if (!have_priority) error(loc, "rt block is missing priority");
        return rt;
    }
};

}  // namespace

ParseResult parse_model(const SourceFile& source) {
    ParseResult result;
    std::vector<Token> tokens = tokenize(source.text, result.diagnostics);
    Parser parser(std::move(tokens), result.diagnostics);
    try {
        Model model = parser.parse_file();
        if (!has_errors(result.diagnostics)) result.model = std::move(model);
    } catch (const Bail&) {
        // Unrecoverable at file level; diagnostics already recorded.
    }
    return result;
}

}  // namespace iotforge
