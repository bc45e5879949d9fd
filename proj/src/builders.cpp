#include "chains/builders.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace chains {

namespace {

void require_positive(std::uint64_t v, const char* what) {
    if (v == 0) {
        throw std::invalid_argument(std::string(what) + ": parameter must be at least 1");
    }
}

// Guards against building sums whose child list alone would exhaust memory.
constexpr std::uint64_t kMaxCopies = std::uint64_t{1} << 26;

Formula repeated(NodeKind kind, const Formula& part, std::uint64_t copies, const char* what) {
    require_positive(copies, what);
    if (copies > kMaxCopies) {
        throw std::invalid_argument(std::string(what) + ": too many copies");
    }
    if (copies == 1) {
        return part;
    }
    return make_sum(kind, std::vector<Formula>(copies, part));
}

}  // namespace

Formula vex(std::uint64_t n) { return repeated(NodeKind::vee, prim(), n, "vex"); }

Formula cave(std::uint64_t n) { return repeated(NodeKind::wedge, prim(), n, "cave"); }

Formula double_chain(std::uint64_t k) {
    require_positive(k, "dc");
    const auto side = cave(k);
    return make_sum(NodeKind::vee, {side, prim(), side});
}

Formula zigzag(std::uint64_t k) { return repeated(NodeKind::vee, cave(2), k, "zz"); }

Formula double_zigzag(std::uint64_t k) {
    require_positive(k, "dzz");
    const auto side = flip(zigzag(k));
    return make_sum(NodeKind::vee, {side, prim(), side});
}

Formula koch(unsigned s) {
    if (s > 62) {
        throw std::invalid_argument("koch: level too large");
    }
    Formula k = prim();
    for (unsigned i = 0; i < s; ++i) {
        const auto f = flip(k);
        k = vee(f, f);
    }
    return k;
}

Formula poly(const Formula& base, std::uint64_t copies) {
    return repeated(NodeKind::vee, flip(base), copies, "poly");
}

Formula twin(const Formula& base, std::uint64_t copies) {
    const auto side = flip(poly(base, copies));
    return make_sum(NodeKind::vee, {side, prim(), side});
}

Formula gdc(std::span<const std::uint64_t> counts) {
    std::vector<Formula> parts;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] != 0) {
            parts.push_back(poly(vex(k + 1), counts[k]));
        }
    }
    if (parts.empty()) {
        throw std::invalid_argument("gdc: at least one count must be nonzero");
    }
    if (parts.size() == 1) {
        return parts.front();
    }
    return make_sum(NodeKind::vee, std::move(parts));
}

}  // namespace chains
