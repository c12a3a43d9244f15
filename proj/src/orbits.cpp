#include "smallgraph/orbits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace smallgraph {

Cycle act_on_cycle(const Permutation& p, const Cycle& c) {
    std::vector<int> mapped;
    mapped.reserve(c.vertices().size());
    for (int l : c.vertices()) mapped.push_back(p.apply_label(l));
    return Cycle(std::move(mapped));
}

DisjointPair act_on_pair(const Permutation& p, const DisjointPair& pr) {
    return DisjointPair(act_on_cycle(p, pr.first), act_on_cycle(p, pr.second));
}

std::vector<std::size_t> OrbitPartition::orbit_sizes() const {
    std::vector<std::size_t> sizes;
    sizes.reserve(orbits.size());
    for (const auto& o : orbits) sizes.push_back(o.size());
    return sizes;
}

namespace {

template <typename T, typename Act>
OrbitPartition partition_impl(const PermGroup& grp, const std::vector<T>& family,
                              const std::string& family_kind, Act act) {
    std::map<T, std::size_t> index;
    for (std::size_t i = 0; i < family.size(); ++i) index.emplace(family[i], i);

    OrbitPartition part;
    part.family_kind = family_kind;
    part.group_order = grp.order();

    std::vector<char> seen(family.size(), 0);
    for (std::size_t start = 0; start < family.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> orbit{start};
        seen[start] = 1;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            const T& obj = family[orbit[head]];
            for (const auto& g : grp.generators) {
                T image = act(g, obj);
                auto it = index.find(image);
                if (it == index.end())
                    throw std::logic_error("group maps a " + family_kind +
                                           " member outside the family; enumeration bug");
                if (!seen[it->second]) {
                    seen[it->second] = 1;
                    orbit.push_back(it->second);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        part.orbits.push_back(std::move(orbit));
    }
    return part;
}

}  // namespace

OrbitPartition orbit_partition(const PermGroup& grp, const std::vector<Cycle>& family,
                               const std::string& family_kind) {
    return partition_impl(grp, family, family_kind,
                          [](const Permutation& p, const Cycle& c) { return act_on_cycle(p, c); });
}

OrbitPartition orbit_partition(const PermGroup& grp, const std::vector<DisjointPair>& family,
                               const std::string& family_kind) {
    return partition_impl(grp, family, family_kind,
                          [](const Permutation& p, const DisjointPair& pr) { return act_on_pair(p, pr); });
}

bool is_transitive(const PermGroup& grp, const std::vector<Cycle>& family) {
    return orbit_partition(grp, family, "cycles").transitive();
}

bool is_transitive(const PermGroup& grp, const std::vector<DisjointPair>& family) {
    return orbit_partition(grp, family, "pairs").transitive();
}

}  // namespace smallgraph
