#include "chains/realize.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "chains/errors.hpp"

namespace chains {

namespace {

using Points = std::vector<RationalPoint>;

// Normalized realization: first point (0, 0), last (1, 0), |y| <= 1.
class Realizer {
public:
    const Points& run(const Formula& f) {
        if (auto it = memo_.find(f.id()); it != memo_.end()) {
            return it->second.points;
        }
        Points pts = f.is_prim() ? Points{{0, 0}, {1, 0}} : combine(f);
        return memo_.emplace(f.id(), Entry{f, std::move(pts)}).first->second.points;
    }

private:
    struct Entry {
        Formula formula;
        Points points;
    };

    Points combine(const Formula& f) {
        const auto children = f.children();
        const auto k = static_cast<long>(children.size());
        const int sign = f.kind() == NodeKind::vee ? 1 : -1;
        // Joints at x = a/k on the parabola y = -sign * a (k - a) / k^2.
        std::vector<RationalPoint> joints;
        for (long a = 0; a <= k; ++a) {
            mpq_class x{mpz_class(a), mpz_class(k)};
            mpq_class y{mpz_class(-sign * a * (k - a)), mpz_class(k * k)};
            x.canonicalize();
            y.canonicalize();
            joints.push_back({x, y});
        }
        const auto v = visibility(f);
        mpq_class eps(1, 4);
        for (int attempt = 0; attempt < 256; ++attempt) {
            Points pts{joints.front()};
            for (long a = 0; a < k; ++a) {
                const auto& local = run(children[a]);
                const mpq_class slope = joints[a + 1].y - joints[a].y;
                for (std::size_t i = 1; i < local.size(); ++i) {
                    const auto& p = local[i];
                    mpq_class x = (mpq_class(a) + p.x) / k;
                    mpq_class y = joints[a].y + p.x * slope + eps * p.y;
                    pts.push_back({x, y});
                }
            }
            if (realizes(RationalPointSet{pts}, v)) {
                return pts;
            }
            eps /= 2;
        }
        throw std::logic_error("realize: flattening search did not converge");
    }

    std::unordered_map<const void*, Entry> memo_;
};

}  // namespace

int orientation(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r) {
    const mpq_class cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(cross);
}

bool realizes(const RationalPointSet& set, const VisibilityTriangle& v) {
    const auto& pts = set.points;
    if (pts.size() != v.edges() + 1) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i].x < pts[i + 1].x)) {
            return false;
        }
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t k = i + 2; k < pts.size(); ++k) {
            const int want = v.at(i, k);
            for (std::size_t j = i + 1; j < k; ++j) {
                if (orientation(pts[i], pts[j], pts[k]) != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

RationalPointSet realize(const Formula& f) {
    if (f.edges() > kRealizeMaxEdges) {
        throw CapExceeded("realize: " + std::to_string(f.edges()) + " edges exceeds cap " +
                          std::to_string(kRealizeMaxEdges));
    }
    Realizer realizer;
    RationalPointSet out{realizer.run(f)};
    for (auto& p : out.points) {
        p.x = 2 * p.x - 1;
    }
    return out;
}

std::string to_csv(const RationalPointSet& set) {
    std::string out = "x_num,x_den,y_num,y_den\n";
    for (const auto& p : set.points) {
        out += p.x.get_num().get_str() + ',' + p.x.get_den().get_str() + ',' + p.y.get_num().get_str() + ',' +
               p.y.get_den().get_str() + '\n';
    }
    return out;
}

RationalPointSet from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "x_num,x_den,y_num,y_den") {
        throw std::invalid_argument("point CSV: missing header");
    }
    RationalPointSet out;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 4) {
            throw std::invalid_argument("point CSV: expected 4 fields in '" + line + "'");
        }
        const mpz_class x_den(fields[1]);
        const mpz_class y_den(fields[3]);
        if (sgn(x_den) == 0 || sgn(y_den) == 0) {
            throw std::invalid_argument("point CSV: zero denominator in '" + line + "'");
        }
        mpq_class x{mpz_class(fields[0]), x_den};
        mpq_class y{mpz_class(fields[2]), y_den};
        x.canonicalize();
        y.canonicalize();
        out.points.push_back({x, y});
    }
    return out;
}

mpz_class count_triangulations_points(const RationalPointSet& set) {
    const auto& pts = set.points;
    const std::size_t n = pts.size();
    if (n > kCountMaxPoints) {
        throw CapExceeded("count_triangulations_points: at most " + std::to_string(kCountMaxPoints) + " points");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (pts[i] == pts[j]) {
                throw DegenerateInput("count_triangulations_points: repeated point");
            }
            for (std::size_t k = j + 1; k < n; ++k) {
                if (orientation(pts[i], pts[j], pts[k]) == 0) {
                    throw DegenerateInput("count_triangulations_points: collinear triple");
                }
            }
        }
    }
    if (n < 3) {
        return 1;
    }

    struct Segment {
        std::size_t a;
        std::size_t b;
    };
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            segs.push_back({i, j});
        }
    }
    const std::size_t m = segs.size();
    std::vector<std::uint64_t> crossing(m, 0);
    for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t g = e + 1; g < m; ++g) {
            const auto [a, b] = segs[e];
            const auto [c, d] = segs[g];
            if (a == c || a == d || b == c || b == d) {
                continue;
            }
            if (orientation(pts[a], pts[b], pts[c]) * orientation(pts[a], pts[b], pts[d]) < 0 &&
                orientation(pts[c], pts[d], pts[a]) * orientation(pts[c], pts[d], pts[b]) < 0) {
                crossing[e] |= std::uint64_t{1} << g;
                crossing[g] |= std::uint64_t{1} << e;
            }
        }
    }

    mpz_class total = 0;
    // Segments are decided in index order. An excluded segment must end up
    // crossed by an included one, otherwise the set is not maximal.
    auto search = [&](auto&& self, std::size_t idx, std::uint64_t included) -> void {
        if (idx == m) {
            for (std::size_t e = 0; e < m; ++e) {
                if ((included >> e & 1U) == 0 && (crossing[e] & included) == 0) {
                    return;
                }
            }
            ++total;
            return;
        }
        const std::uint64_t bit = std::uint64_t{1} << idx;
        if ((crossing[idx] & included) != 0) {
            self(self, idx + 1, included);
            return;
        }
        self(self, idx + 1, included | bit);
        // Excluding only makes sense if a later, still compatible segment
        // could block this one.
        const std::uint64_t later = ~((bit << 1) - 1);
        std::uint64_t blockers = crossing[idx] & later;
        while (blockers != 0) {
            const auto g = static_cast<std::size_t>(__builtin_ctzll(blockers));
            blockers &= blockers - 1;
            if ((crossing[g] & included) == 0) {
                self(self, idx + 1, included);
                return;
            }
        }
    };
    search(search, 0, 0);
    return total;
}

}  // namespace chains
