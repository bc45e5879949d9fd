#include "chains/enumerate.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "chains/errors.hpp"

namespace chains {

namespace {

class Enumerator {
public:
    using Visit = std::function<void(const Formula&)>;

    // Chains with `size` edges that may appear directly under a `parent`
    // node: E, or chains rooted in the opposite kind.
    const std::vector<Formula>& summands(NodeKind parent, std::uint64_t size) {
        auto key = std::make_pair(parent, size);
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
        std::vector<Formula> list;
        if (size == 1) {
            list.push_back(prim());
        } else {
            rooted(size, parent == NodeKind::vee ? NodeKind::wedge : NodeKind::vee,
                   [&](const Formula& f) { list.push_back(f); });
        }
        return cache_.emplace(key, std::move(list)).first->second;
    }

    void rooted(std::uint64_t size, NodeKind kind, const Visit& visit) {
        std::vector<std::uint64_t> parts;
        compositions(size, kind, parts, visit);
    }

private:
    void compositions(std::uint64_t remaining, NodeKind kind, std::vector<std::uint64_t>& parts,
                      const Visit& visit) {
        for (std::uint64_t first = 1; first <= remaining; ++first) {
            parts.push_back(first);
            if (first == remaining) {
                if (parts.size() >= 2) {
                    std::vector<Formula> chosen;
                    chosen.reserve(parts.size());
                    product(kind, parts, chosen, visit);
                }
            } else {
                compositions(remaining - first, kind, parts, visit);
            }
            parts.pop_back();
        }
    }

    void product(NodeKind kind, const std::vector<std::uint64_t>& parts, std::vector<Formula>& chosen,
                 const Visit& visit) {
        if (chosen.size() == parts.size()) {
            visit(make_sum(kind, chosen));
            return;
        }
        // std::map keeps references stable while deeper levels extend the cache.
        const auto& options = summands(kind, parts[chosen.size()]);
        for (const auto& option : options) {
            chosen.push_back(option);
            product(kind, parts, chosen, visit);
            chosen.pop_back();
        }
    }

    std::map<std::pair<NodeKind, std::uint64_t>, std::vector<Formula>> cache_;
};

}  // namespace

std::uint64_t for_each_chain(std::uint64_t edges, const std::function<void(const Formula&)>& visit,
                             std::uint64_t cap) {
    if (edges == 0) {
        throw std::invalid_argument("enumerate: a chain has at least one edge");
    }
    if (edges > cap) {
        throw CapExceeded("enumerate: " + std::to_string(edges) + " edges exceeds cap " + std::to_string(cap));
    }
    std::uint64_t count = 0;
    auto counted = [&](const Formula& f) {
        ++count;
        visit(f);
    };
    if (edges == 1) {
        counted(prim());
        return count;
    }
    Enumerator e;
    e.rooted(edges, NodeKind::vee, counted);
    e.rooted(edges, NodeKind::wedge, counted);
    return count;
}

std::vector<Formula> enumerate_chains(std::uint64_t edges, std::uint64_t cap) {
    std::vector<Formula> out;
    for_each_chain(edges, [&](const Formula& f) { out.push_back(f); }, cap);
    return out;
}

ChainTally tally_chains(std::uint64_t edges, std::uint64_t cap) {
    ChainTally t;
    for_each_chain(
        edges,
        [&](const Formula& f) {
            ++t.total;
            t.upward += f.is_upward() ? 1 : 0;
            t.downward += f.is_downward() ? 1 : 0;
        },
        cap);
    return t;
}

}  // namespace chains
