#include "iotforge/instance.hpp"

#include <algorithm>

namespace iotforge {

namespace {

void collect(const InstanceNode& node, bool leaves_only,
             std::vector<const InstanceNode*>& out) {
    for (const auto& child : node.children) {
        if (!leaves_only || child.is_leaf()) out.push_back(&child);
        collect(child, leaves_only, out);
    }
}

class Builder {
  public:
    explicit Builder(const Model& model) : model_(model) {}

    InstanceModel build() {
        InstanceModel result;
        for (const auto& entity : model_.entities) {
            InstanceNode root;
            root.name = entity.name;
            root.path = entity.name;
            root.component = &entity;
            expand(root, entity, result);
            result.roots.push_back(std::move(root));
        }
        for (const auto& alloc : model_.allocations) {
            if (!find_in(result, alloc.instance_path))
                throw ModelError("allocation path not found: " + alloc.instance_path);
            result.allocations[alloc.instance_path] = alloc.core;
        }
        return result;
    }

  private:
    const Model& model_;
    std::vector<const Component*> stack_;

    void expand(InstanceNode& node, const Component& component, InstanceModel& result) {
        if (std::find(stack_.begin(), stack_.end(), &component) != stack_.end())
            throw ModelError("cyclic component containment through '" + component.name + "'");
        stack_.push_back(&component);
        for (const auto& conn : component.connections)
            result.connections.push_back(resolve_connection(node.path, component, conn));
        for (const auto& part : component.parts) {
            const Component* type = model_.find_component(part.component);
            if (!type)
                throw ModelError("unresolved part reference '" + part.component + "' in '" +
                                 component.name + "'");
            InstanceNode child;
            child.name = part.name;
            child.path = node.path + "." + part.name;
            child.component = type;
            expand(child, *type, result);
            node.children.push_back(std::move(child));
        }
        stack_.pop_back();
    }

    ResolvedConnection resolve_connection(const std::string& base, const Component& owner,
                                          const Connection& conn) const {
        ResolvedConnection rc;
        resolve_endpoint(base, owner, conn.from, rc.from_path, rc.from_port, rc.interface);
        std::string iface_to;
        resolve_endpoint(base, owner, conn.to, rc.to_path, rc.to_port, iface_to);
        if (rc.interface.empty()) rc.interface = iface_to;
        return rc;
    }

    void resolve_endpoint(const std::string& base, const Component& owner,
                          const PortPath& endpoint, std::string& out_path,
                          std::string& out_port, std::string& out_iface) const {
        out_port = endpoint.port;
        if (endpoint.is_own()) {
            out_path = base;
            if (const Port* p = owner.find_port(endpoint.port)) out_iface = p->interface;
            return;
        }
        out_path = base + "." + endpoint.part;
        const PartDecl* part = owner.find_part(endpoint.part);
        if (!part)
            throw ModelError("connection endpoint '" + endpoint.str() +
                             "' names an unknown part in '" + owner.name + "'");
        if (const Component* type = model_.find_component(part->component))
            if (const Port* p = type->find_port(endpoint.port)) out_iface = p->interface;
    }

    static const InstanceNode* find_in(const InstanceModel& im, std::string_view path) {
        return im.find(path);
    }
};

}  // namespace

const InstanceNode* InstanceModel::find(std::string_view path) const {
    std::vector<std::string> segments = split_path(path);
    if (segments.empty()) return nullptr;
    const InstanceNode* node = nullptr;
    for (const auto& root : roots)
        if (root.name == segments.front()) node = &root;
    if (!node) return nullptr;
    for (std::size_t i = 1; i < segments.size(); ++i) {
        const InstanceNode* next = nullptr;
        for (const auto& child : node->children)
            if (child.name == segments[i]) next = &child;
        if (!next) return nullptr;
        node = next;
    }
    return node;
}

const CoreRef* InstanceModel::allocated_core(std::string_view path) const {
    std::string current(path);
    while (!current.empty()) {
        auto it = allocations.find(current);
        if (it != allocations.end()) return &it->second;
        std::size_t dot = current.rfind('.');
        if (dot == std::string::npos) break;
        current.resize(dot);
    }
    return nullptr;
}

std::vector<const InstanceNode*> InstanceModel::all_instances() const {
    std::vector<const InstanceNode*> out;
    for (const auto& root : roots) collect(root, false, out);
    return out;
}

std::vector<const InstanceNode*> InstanceModel::leaf_instances() const {
    std::vector<const InstanceNode*> out;
    for (const auto& root : roots) collect(root, true, out);
    return out;
}

InstanceModel build_instance_model(const Model& model) {
    return Builder(model).build();
}

LookupResult lookup(const Model& model, std::string_view path) {
    LookupResult result;
    if (path.empty()) {
        result.kind = LookupResult::Kind::ModelRoot;
        return result;
    }
    std::vector<std::string> segments = split_path(path);
    const Component* current = model.find_component(segments.front());
    if (!current) return result;
    result.kind = LookupResult::Kind::Component;
    for (std::size_t i = 1; i < segments.size(); ++i) {
        const PartDecl* part = current->find_part(segments[i]);
        if (!part) return LookupResult{};
        current = model.find_component(part->component);
        if (!current) return LookupResult{};
        result.kind = LookupResult::Kind::Part;
    }
    result.component = current;
    result.path = std::string(path);
    return result;
}

}  // namespace iotforge
