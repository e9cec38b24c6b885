#pragma once

#include <map>
#include <string>
#include <vector>

#include "iotforge/model.hpp"

namespace iotforge {

/// One node of the flattened component-instance tree. Component pointers
/// refer into the Model the tree was built from and must not outlive it.
struct InstanceNode {
    std::string name;              // part name (or entity name at the root)
    std::string path;              // dotted absolute path, e.g. plant.n1.s1
    const Component* component = nullptr;
    std::vector<InstanceNode> children;

    bool is_leaf() const { return children.empty(); }
};

struct ResolvedConnection {
    std::string from_path;  // instance path of the endpoint owner
    std::string from_port;
    std::string to_path;
    std::string to_port;
    std::string interface;
};

/// Flattened design: entity instance trees, absolute-path connections and
/// the allocation map. Immutable once built.
struct InstanceModel {
    std::vector<InstanceNode> roots;
    std::vector<ResolvedConnection> connections;
    std::map<std::string, CoreRef> allocations;  // instance path -> core

    const InstanceNode* find(std::string_view path) const;
    /// Core of the instance itself or its nearest allocated ancestor.
    const CoreRef* allocated_core(std::string_view path) const;
    /// All instances in deterministic pre-order, roots excluded.
    std::vector<const InstanceNode*> all_instances() const;
    std::vector<const InstanceNode*> leaf_instances() const;
};

/// Raised by build_instance_model on models that did not go through
/// validation (dangling part references, containment cycles, bad
/// allocation paths).
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Expands entity parts recursively into named instances with dotted paths,
/// rewrites connections to absolute instance ports and attaches allocations.
/// Deterministic: declaration order throughout.
InstanceModel build_instance_model(const Model& model);

struct LookupResult {
    enum class Kind { NotFound, ModelRoot, Component, Part };
    Kind kind = Kind::NotFound;
    const Component* component = nullptr;  // resolved component (or part type)
    std::string path;

    bool found() const { return kind != Kind::NotFound; }
};

/// Resolves a dotted path against the declaration structure: the empty path
/// is the model root, the first segment names a component, later segments
/// descend through parts. Pure; absent names give NotFound.
LookupResult lookup(const Model& model, std::string_view path);

}  // namespace iotforge
