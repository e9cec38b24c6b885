// Model-to-text transformation producing ThingML source: one datatype
// prelude, one message fragment, one thing per element/board and one
// configuration wiring the flattened instances. Byte-stable across runs.
#pragma once

#include <string>
#include <vector>

#include "iotforge/instance.hpp"
#include "iotforge/model.hpp"

namespace iotforge {

struct ThingMLUnit {
    std::string file_name;
    std::string text;
};

/// Links an emitted construct back to the model element it came from. Every
/// mapped model element gets exactly one entry (its primary emission site).
struct ProvenanceEntry {
    std::string unit;        // file the construct was emitted into
    std::string construct;   // thing, message, state, transition, port, ...
    std::string emitted;     // emitted identifier or positional id
    std::string model_path;  // dotted path of the source model element
};

struct GenerationResult {
    std::vector<ThingMLUnit> units;
    std::vector<ProvenanceEntry> provenance;

    const ThingMLUnit* find_unit(std::string_view file_name) const;
    std::vector<const ProvenanceEntry*> by_construct(std::string_view construct) const;
};

/// Transforms a validated model. Refuses models with validation errors
/// (throws ModelError). Output is deterministic: equal models give
/// byte-identical units.
GenerationResult generate(const Model& model);

/// The thing declaration for a single component, as emitted by generate().
std::string map_component(const Model& model, const Component& component);

/// The statechart block for a component's state machine, as emitted inside
/// its thing declaration.
std::string map_statemachine(const Model& model, const Component& component,
                             const StateMachine& sm);

/// lowerCamelCase form used for message names.
std::string lower_camel(std::string_view name);

/// FNV-1a over all unit texts; the determinism checks compare this.
std::uint64_t generation_hash(const GenerationResult& result);

}  // namespace iotforge
