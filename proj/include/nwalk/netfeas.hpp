#ifndef NWALK_NETFEAS_HPP
#define NWALK_NETFEAS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nwalk/simulate.hpp"
#include "nwalk/walk.hpp"

namespace nwalk {

// Node capabilities of the encapsulation model: Encap adds a header ({1}),
// Decap strips one ({-1}), Both can do either ({-1,1}), Passive forwards
// unchanged ({0}).
enum class NodeCapability { Encap, Decap, Both, Passive };

NodeCapability capability_from_string(const std::string& s);
IntSet capability_step(NodeCapability c);

struct NetworkPath {
    std::vector<NodeCapability> capabilities;
    std::vector<std::string> node_names;  // optional, same length when present
};

// Capability-by-capability translation; rejects empty paths.
Walk path_to_nsteps(const NetworkPath& path);

// Feasible iff some compatible protocol stack depth profile starts and ends
// empty without going negative, i.e. the walk is an N-excursion.
bool feasibility_check(const NetworkPath& path);

// Undirected topology with per-node capabilities, read from edge-list and
// label files.
class Topology {
public:
    static Topology from_files(const std::string& edges_path,
                               const std::string& caps_path);
    static Topology from_strings(const std::string& edges_text,
                                 const std::string& caps_text);

    bool has_edge(const std::string& a, const std::string& b) const;
    NodeCapability capability(const std::string& node) const;

    // Builds the path through the listed nodes, checking adjacency.
    NetworkPath path(const std::vector<std::string>& nodes) const;

private:
    std::map<std::string, NodeCapability> caps_;
    std::map<std::string, std::vector<std::string>> adj_;
};

struct FeasibilityRate {
    Estimate estimate;
    std::string theory_reference;  // matching regime note, when Dyck-shaped
    double theory_value = 0;       // 0 when no reference applies
};

// Monte Carlo feasibility rate for i.i.d. capabilities; distribution over
// {Encap, Decap, Both, Passive} must sum to 1.
FeasibilityRate random_feasibility_rate(const std::map<NodeCapability, Rat>& dist,
                                        std::int64_t path_length,
                                        std::uint64_t runs, std::uint64_t seed);

}  // namespace nwalk

#endif
