#pragma once

// Canonical chain formulas.
//
// A formula is a tree over the one-edge chain E and n-ary convex (Vee) and
// concave (Wedge) sums. Canonical form never nests a Vee directly inside a
// Vee (or Wedge inside Wedge) and contains no flips, so two formulas denote
// the same chain exactly when they are structurally equal. Nodes are
// hash-consed: structurally equal formulas share one node, which makes
// equality a pointer comparison and lets evaluators memoize per node.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace chains {

enum class NodeKind : std::uint8_t { prim, vee, wedge };

namespace detail {
struct FormulaNode;
}

class Formula {
public:
    // The primitive chain E.
    Formula();

    NodeKind kind() const noexcept;
    std::span<const Formula> children() const noexcept;
    // Number of chain edges (E leaves).
    std::uint64_t edges() const noexcept;
    std::size_t hash() const noexcept;
    // Stable identity of the shared node, valid while any copy is alive.
    const void* id() const noexcept { return node_.get(); }

    bool is_prim() const noexcept { return kind() == NodeKind::prim; }
    // E is both upward and downward.
    bool is_upward() const noexcept { return kind() != NodeKind::wedge; }
    bool is_downward() const noexcept { return kind() != NodeKind::vee; }

    // Canonical text: E, sums joined by " v " / " ^ ", nested sums in parentheses.
    std::string to_string() const;

    friend bool operator==(const Formula& a, const Formula& b) noexcept { return a.node_ == b.node_; }

private:
    friend struct detail::FormulaNode;
    friend Formula make_sum(NodeKind kind, std::vector<Formula> parts);
    explicit Formula(std::shared_ptr<const detail::FormulaNode> node) : node_(std::move(node)) {}

    std::shared_ptr<const detail::FormulaNode> node_;
};

// Sum of `parts` with associativity flattened: parts whose root already has
// `kind` contribute their children. Requires kind != prim and at least two
// chain components after flattening.
Formula make_sum(NodeKind kind, std::vector<Formula> parts);

Formula prim();
Formula vee(const Formula& a, const Formula& b);
Formula wedge(const Formula& a, const Formula& b);
// Reflection across the x-axis: swaps Vee and Wedge everywhere.
Formula flip(const Formula& f);

}  // namespace chains

template <>
struct std::hash<chains::Formula> {
    std::size_t operator()(const chains::Formula& f) const noexcept { return f.hash(); }
};
