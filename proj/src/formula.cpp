#include "chains/formula.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace chains {

namespace detail {

struct FormulaNode {
    NodeKind kind;
    std::vector<Formula> children;
    std::uint64_t edges;
    std::size_t hash;
};

}  // namespace detail

namespace {

using detail::FormulaNode;

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct NodeKey {
    NodeKind kind;
    std::vector<const void*> children;
    std::size_t hash;

    bool operator==(const NodeKey& o) const { return kind == o.kind && children == o.children; }
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const noexcept { return k.hash; }
};

// Process-wide intern table. Entries are weak so unused formulas are
// reclaimed; the table itself is never destroyed.
class InternPool {
public:
    static InternPool& instance() {
        static auto* pool = new InternPool;
        return *pool;
    }

    std::shared_ptr<const FormulaNode> intern(NodeKind kind, std::vector<Formula> children) {
        NodeKey key{kind, {}, 0};
        std::uint64_t edges = 0;
        std::size_t h = static_cast<std::size_t>(kind) + 1;
        key.children.reserve(children.size());
        for (const auto& c : children) {
            key.children.push_back(c.id());
            edges += c.edges();
            h = mix(h, c.hash());
        }
        key.hash = h;

        std::lock_guard lock(mutex_);
        if (auto it = table_.find(key); it != table_.end()) {
            if (auto existing = it->second.lock()) {
                return existing;
            }
        }
        auto* raw = new FormulaNode{kind, std::move(children), edges, h};
        std::shared_ptr<const FormulaNode> node(raw, [this, key](const FormulaNode* p) { release(key, p); });
        table_.insert_or_assign(key, node);
        return node;
    }

private:
    void release(const NodeKey& key, const FormulaNode* p) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = table_.find(key); it != table_.end() && it->second.expired()) {
                table_.erase(it);
            }
        }
        // Deleting drops child references, which may re-enter release().
        delete p;
    }

    std::mutex mutex_;
    std::unordered_map<NodeKey, std::weak_ptr<const FormulaNode>, NodeKeyHash> table_;
};

const std::shared_ptr<const FormulaNode>& prim_node() {
    static const auto* node = new std::shared_ptr<const FormulaNode>(
        std::make_shared<const FormulaNode>(FormulaNode{NodeKind::prim, {}, 1, 0x51ed270b27a8f3c1ULL}));
    return *node;
}

void append_text(const Formula& f, std::string& out) {
    if (f.is_prim()) {
        out += 'E';
        return;
    }
    const char* op = f.kind() == NodeKind::vee ? " v " : " ^ ";
    bool first = true;
    for (const auto& c : f.children()) {
        if (!first) {
            out += op;
        }
        first = false;
        if (c.is_prim()) {
            out += 'E';
        } else {
            out += '(';
            append_text(c, out);
            out += ')';
        }
    }
}

Formula flip_memo(const Formula& f, std::unordered_map<const void*, Formula>& memo) {
    if (f.is_prim()) {
        return f;
    }
    if (auto it = memo.find(f.id()); it != memo.end()) {
        return it->second;
    }
    std::vector<Formula> parts;
    parts.reserve(f.children().size());
    for (const auto& c : f.children()) {
        parts.push_back(flip_memo(c, memo));
    }
    auto flipped = make_sum(f.kind() == NodeKind::vee ? NodeKind::wedge : NodeKind::vee, std::move(parts));
    memo.emplace(f.id(), flipped);
    return flipped;
}

}  // namespace

Formula::Formula() : node_(prim_node()) {}

NodeKind Formula::kind() const noexcept { return node_->kind; }
std::span<const Formula> Formula::children() const noexcept { return node_->children; }
std::uint64_t Formula::edges() const noexcept { return node_->edges; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

std::string Formula::to_string() const {
    std::string out;
    append_text(*this, out);
    return out;
}

Formula make_sum(NodeKind kind, std::vector<Formula> parts) {
    if (kind == NodeKind::prim) {
        throw std::invalid_argument("make_sum: kind must be vee or wedge");
    }
    std::vector<Formula> flat;
    flat.reserve(parts.size());
    for (auto& p : parts) {
        if (p.kind() == kind) {
            auto cs = p.children();
            flat.insert(flat.end(), cs.begin(), cs.end());
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (flat.size() < 2) {
        throw std::invalid_argument("make_sum: a sum needs at least two summands");
    }
    return Formula(InternPool::instance().intern(kind, std::move(flat)));
}

Formula prim() { return Formula(); }

Formula vee(const Formula& a, const Formula& b) { return make_sum(NodeKind::vee, {a, b}); }

Formula wedge(const Formula& a, const Formula& b) { return make_sum(NodeKind::wedge, {a, b}); }

Formula flip(const Formula& f) {
    std::unordered_map<const void*, Formula> memo;
    return flip_memo(f, memo);
}

}  // namespace chains
