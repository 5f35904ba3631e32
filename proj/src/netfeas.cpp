#include "nwalk/netfeas.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nwalk/dyck.hpp"

namespace nwalk {

NodeCapability capability_from_string(const std::string& s) {
    if (s == "ENCAP" || s == "encap" || s == "Encap") return NodeCapability::Encap;
    if (s == "DECAP" || s == "decap" || s == "Decap") return NodeCapability::Decap;
    if (s == "BOTH" || s == "both" || s == "Both") return NodeCapability::Both;
    if (s == "PASSIVE" || s == "passive" || s == "Passive")
        return NodeCapability::Passive;
    throw std::invalid_argument("unknown capability: " + s);
}

IntSet capability_step(NodeCapability c) {
    switch (c) {
        case NodeCapability::Encap: return IntSet{1};
        case NodeCapability::Decap: return IntSet{-1};
        case NodeCapability::Both: return IntSet{-1, 1};
        case NodeCapability::Passive: return IntSet{0};
    }
    throw std::logic_error("bad capability");
}

Walk path_to_nsteps(const NetworkPath& path) {
    if (path.capabilities.empty())
        throw std::invalid_argument("network path must be nonempty");
    Walk w;
    w.reserve(path.capabilities.size());
    for (auto c : path.capabilities) w.push_back(capability_step(c));
    return w;
}

bool feasibility_check(const NetworkPath& path) {
    return classify_walk(path_to_nsteps(path)).is_excursion;
}

Topology Topology::from_strings(const std::string& edges_text,
                                const std::string& caps_text) {
    Topology t;
    std::istringstream ein(edges_text);
    std::string a, b;
    while (ein >> a >> b) {
        t.adj_[a].push_back(b);
        t.adj_[b].push_back(a);
    }
    std::istringstream cin_(caps_text);
    std::string node, kind;
    while (cin_ >> node >> kind) t.caps_[node] = capability_from_string(kind);
    return t;
}

Topology Topology::from_files(const std::string& edges_path,
                              const std::string& caps_path) {
    std::ifstream e(edges_path), c(caps_path);
    if (!e) throw std::runtime_error("cannot open topology file " + edges_path);
    if (!c) throw std::runtime_error("cannot open capability file " + caps_path);
    std::stringstream es, cs;
    es << e.rdbuf();
    cs << c.rdbuf();
    return from_strings(es.str(), cs.str());
}

bool Topology::has_edge(const std::string& a, const std::string& b) const {
    auto it = adj_.find(a);
    if (it == adj_.end()) return false;
    for (auto& n : it->second)
        if (n == b) return true;
    return false;
}

NodeCapability Topology::capability(const std::string& node) const {
    auto it = caps_.find(node);
    if (it == caps_.end())
        throw std::invalid_argument("node without capability label: " + node);
    return it->second;
}

NetworkPath Topology::path(const std::vector<std::string>& nodes) const {
    if (nodes.empty()) throw std::invalid_argument("empty node sequence");
    NetworkPath p;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i && !has_edge(nodes[i - 1], nodes[i]))
            throw std::invalid_argument("no edge " + nodes[i - 1] + " -- " + nodes[i]);
        p.capabilities.push_back(capability(nodes[i]));
        p.node_names.push_back(nodes[i]);
    }
    return p;
}

FeasibilityRate random_feasibility_rate(const std::map<NodeCapability, Rat>& dist,
                                        std::int64_t path_length,
                                        std::uint64_t runs, std::uint64_t seed) {
    Rat total = 0;
    for (auto& [c, p] : dist) total += p;
    if (total != 1)
        throw std::invalid_argument("capability distribution must sum to 1");

    std::vector<std::pair<IntSet, Rat>> steps;
    for (auto& [c, p] : dist)
        if (p > 0) steps.emplace_back(capability_step(c), p);
    SimConfig cfg{NStepSet(steps), path_length, runs, seed};
    FeasibilityRate out;
    out.estimate = estimate_class_probability(cfg, SimFamily::Excursion);

    auto get = [&](NodeCapability c) {
        auto it = dist.find(c);
        return it == dist.end() ? Rat(0) : it->second;
    };
    if (get(NodeCapability::Passive) == 0) {
        DyckWeights w{get(NodeCapability::Decap), get(NodeCapability::Encap),
                      get(NodeCapability::Both)};
        int regime = dyck_excursion_regime(w);
        out.theory_reference = "dyck excursion regime " + std::to_string(regime);
        out.theory_value = dyck_excursion_prob_asym(w, path_length);
    } else {
        out.theory_reference = "none (step distribution is not Dyck-shaped)";
    }
    return out;
}

}  // namespace nwalk
