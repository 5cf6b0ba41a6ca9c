#include "delzant/reconstruct.hpp"

#include "delzant/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace delzant {

namespace {

Vec2 rot_cw(const Vec2& v) { return {v.y, -v.x}; }

// Signed primitive edge direction for the unsigned normal u: rotating it
// clockwise gives back +u.
IntVec2 direction_of(const IntVec2& u) { return {-u.y, u.x}; }

IntVec2 scaled(int sign, const IntVec2& v) { return sign > 0 ? v : -v; }

// True when `a` makes a strictly smaller turn away from `current` than `b`,
// i.e. dot(current, a)/|a| > dot(current, b)/|b|. Exact: compares squares.
int compare_obtuse(const Vec2& current, const Vec2& a, const Vec2& b) {
    const Rational da = dot(current, a);
    const Rational db = dot(current, b);
    if (da >= 0 && db < 0) return 1;
    if (da < 0 && db >= 0) return -1;
    const Rational lhs = da * da * dot(b, b);
    const Rational rhs = db * db * dot(a, a);
    if (lhs == rhs) return 0;
    const bool a_larger = lhs > rhs;
    if (da >= 0) return a_larger ? 1 : -1;
    return a_larger ? -1 : 1;
}

}  // namespace

DelzantPolygon build_most_obtuse(const SignedEdgeList& input) {
    const auto& edges = input.edges;
    const std::size_t n = edges.size();
    if (n < 3) throw Error(ErrorKind::Infeasible, "need at least 3 edges");
    for (const auto& e : edges) {
        if (e.x == 0 && e.y == 0) throw Error(ErrorKind::Infeasible, "zero edge vector");
    }
    const Vec2 anchor = to_vec(input.anchor_normal);
    if (dot(anchor, edges[0]) != 0 || (anchor.x == 0 && anchor.y == 0)) {
        throw Error(ErrorKind::InvalidInput, "anchor normal is not a nonzero normal of the first edge");
    }
    // +1: anchor is the counterclockwise outward normal, traverse CCW.
    const int orientation = dot(anchor, rot_cw(edges[0])) > 0 ? 1 : -1;

    Vec2 closure{0, 0};
    for (const auto& e : edges) closure += e;
    if (closure.x != 0 || closure.y != 0) throw Error(ErrorKind::Infeasible, "edge vectors do not sum to zero");

    std::vector<bool> used(n, false);
    used[0] = true;
    std::vector<Vec2> vertices{Vec2{0, 0}, edges[0]};
    vertices.reserve(n);
    Vec2 current = edges[0];
    Vec2 position = edges[0];
    for (std::size_t step = 1; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t i = 1; i < n; ++i) {
            if (used[i]) continue;
            const Rational turn = cross(current, edges[i]);
            if ((orientation > 0 && turn <= 0) || (orientation < 0 && turn >= 0)) continue;
            if (best == n) {
                best = i;
                continue;
            }
            const int cmp = compare_obtuse(current, edges[i], edges[best]);
            if (cmp == 0) throw Error(ErrorKind::Infeasible, "two edges point the same way");
            if (cmp > 0) best = i;
        }
        if (best == n) throw Error(ErrorKind::Infeasible, "no edge continues the convex chain");
        used[best] = true;
        current = edges[best];
        position += current;
        if (step + 1 < n) vertices.push_back(position);
    }
    const Rational closing_turn = cross(current, edges[0]);
    if ((orientation > 0 && closing_turn <= 0) || (orientation < 0 && closing_turn >= 0)) {
        throw Error(ErrorKind::Infeasible, "edges do not form a convex polygon");
    }
    try {
        return DelzantPolygon(std::move(vertices));
    } catch (const Error& e) {
        throw Error(ErrorKind::Infeasible, std::string("edges do not form a convex polygon: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Three parallel pairs

std::vector<Vec2> ThreePairFamily::edges_at(const Rational& t) const {
    std::vector<Vec2> out = fixed_edges;
    for (std::size_t j = 0; j < 3; ++j) {
        const Rational split = base_splits[j] + t * kernel[j];
        const Vec2 w = to_vec(directions[j]);
        out.push_back(((length_sums[j] + split) / 2) * w);
        out.push_back(-(((length_sums[j] - split) / 2) * w));
    }
    return out;
}

DelzantPolygon ThreePairFamily::polygon_at(const Rational& t) const {
    if (!admissible(t)) {
        throw Error(ErrorKind::InvalidInput, "family parameter " + to_string(t) + " outside (" + to_string(lower) +
                                                 ", " + to_string(upper) + ")");
    }
    auto edges = edges_at(t);
    IntVec2 anchor = primitive_decomposition(rot_cw(edges[0])).first;
    return build_most_obtuse({std::move(edges), std::move(anchor)});
}

namespace {

// Open interval of t keeping every split strictly inside (-L, L).
std::pair<Rational, Rational> split_interval(const std::array<Rational, 3>& sums, const std::array<Rational, 3>& base,
                                             const std::array<Rational, 3>& kernel) {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (std::size_t j = 0; j < 3; ++j) {
        Rational a = (-sums[j] - base[j]) / kernel[j];
        Rational b = (sums[j] - base[j]) / kernel[j];
        if (b < a) std::swap(a, b);
        if (!lo || a > *lo) lo = a;
        if (!hi || b < *hi) hi = b;
    }
    return {*lo, *hi};
}

std::array<Rational, 3> kernel_of(const std::array<IntVec2, 3>& w) {
    return {Rational(cross(w[1], w[2])), Rational(cross(w[2], w[0])), Rational(cross(w[0], w[1]))};
}

struct RootSearch {
    std::vector<Rational> roots;
    bool irrational = false;
};

std::optional<Rational> rational_sqrt(const Rational& value) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const Integer num = numerator(value);
    const Integer den = denominator(value);
    const Integer sn = boost::multiprecision::sqrt(num);
    const Integer sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

RootSearch search_roots(const ThreePairFamily& family, const Rational& target_area) {
    RootSearch out;
    const Rational& a = family.linear;
    const Rational& b = family.quadratic;
    const Rational c = family.base_area - target_area;
    std::vector<Rational> raw;
    if (b == 0) {
        if (a == 0) {
            if (c == 0) {
                throw Error(ErrorKind::Unsupported, "degenerate three-pair family: area is constant on (" +
                                                        to_string(family.lower) + ", " + to_string(family.upper) + ")");
            }
            return out;
        }
        raw.push_back(-c / a);
    } else {
        const Rational disc = a * a - 4 * b * c;
        if (disc < 0) return out;
        auto root = rational_sqrt(disc);
        if (!root) {
            out.irrational = true;
            return out;
        }
        raw.push_back((-a - *root) / (2 * b));
        raw.push_back((-a + *root) / (2 * b));
    }
    for (auto& t : raw) {
        if (family.admissible(t)) out.roots.push_back(t);
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    return out;
}

}  // namespace

ThreePairFamily make_three_pair_family(std::vector<Vec2> fixed_edges, const std::array<IntVec2, 3>& directions,
                                       const std::array<Rational, 3>& length_sums,
                                       const std::array<Rational, 3>& base_splits) {
    ThreePairFamily family;
    family.fixed_edges = std::move(fixed_edges);
    family.directions = directions;
    family.length_sums = length_sums;
    family.base_splits = base_splits;
    family.kernel = kernel_of(directions);
    for (const auto& k : family.kernel) {
        if (k == 0) throw Error(ErrorKind::InvalidInput, "three-pair family needs pairwise independent directions");
    }
    std::tie(family.lower, family.upper) = split_interval(length_sums, base_splits, family.kernel);
    if (!family.admissible(Rational(0))) {
        throw Error(ErrorKind::InvalidInput, "base splits of a three-pair family must be admissible");
    }

    const Rational radius = std::min(-family.lower, family.upper);
    const Rational delta = radius / 2;
    const Rational a0 = area(family.polygon_at(Rational(0)));
    const Rational ap = area(family.polygon_at(delta));
    const Rational am = area(family.polygon_at(-delta));
    family.base_area = a0;
    family.linear = (ap - am) / (2 * delta);
    family.quadratic = (ap + am - 2 * a0) / (2 * delta * delta);
    return family;
}

ThreePairFamily three_pair_family_of(const DelzantPolygon& polygon) {
    const SpectralData data = spectral_data(polygon);
    if (data.parallel_pairs() != 3) {
        throw Error(ErrorKind::InvalidInput,
                    "polygon has " + std::to_string(data.parallel_pairs()) + " parallel pairs, expected 3");
    }
    std::vector<Vec2> fixed;
    std::array<IntVec2, 3> dirs;
    std::array<Rational, 3> sums;
    std::array<Rational, 3> splits;
    std::size_t j = 0;
    for (const auto& cls : data.classes) {
        const IntVec2 w = direction_of(cls.normal);
        if (cls.edge_count == 1) {
            for (const auto& e : polygon.edges()) {
                if (canonical_unsigned(e.outward_normal) == cls.normal) fixed.push_back(e.vector);
            }
            continue;
        }
        Rational plus = 0;
        Rational minus = 0;
        for (const auto& e : polygon.edges()) {
            if (e.outward_normal == cls.normal) plus = e.lattice_length;
            if (e.outward_normal == -cls.normal) minus = e.lattice_length;
        }
        dirs[j] = w;
        sums[j] = cls.length_sum;
        splits[j] = plus - minus;
        ++j;
    }
    return make_three_pair_family(std::move(fixed), dirs, sums, splits);
}

std::vector<Rational> solve_three_pair_parameter(const ThreePairFamily& family, const Rational& target_area) {
    return search_roots(family, target_area).roots;
}

// ---------------------------------------------------------------------------
// Candidate enumeration

namespace {

struct ResolvedBranch {
    AssignmentTrace trace;
    std::vector<Vec2> edges;
};

struct EnumerationRun {
    CandidateSet result;
    // (doubled set, single-class signs normalized so the first is +1)
    std::set<std::pair<std::vector<std::size_t>, std::vector<int>>> productive;
};

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (current.size() == k) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Vec2> assemble_edges(const SpectralData& data, const std::vector<bool>& is_doubled,
                                 const std::vector<int>& signs, const std::vector<Rational>& splits) {
    std::vector<Vec2> edges;
    std::size_t j = 0;
    for (std::size_t i = 0; i < data.classes.size(); ++i) {
        const auto& cls = data.classes[i];
        const Vec2 w = to_vec(scaled(signs[i], direction_of(cls.normal)));
        if (!is_doubled[i]) {
            edges.push_back(cls.length_sum * w);
        } else {
            edges.push_back(((cls.length_sum + splits[j]) / 2) * w);
            edges.push_back(-(((cls.length_sum - splits[j]) / 2) * w));
            ++j;
        }
    }
    return edges;
}

std::vector<int> single_sign_key(const std::vector<bool>& is_doubled, const std::vector<int>& signs) {
    std::vector<int> key;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (!is_doubled[i]) key.push_back(signs[i]);
    }
    if (!key.empty() && key.front() < 0) {
        for (auto& s : key) s = -s;
    }
    return key;
}

EnumerationRun run_enumeration(const SpectralData& data, const EnumerateOptions& options) {
    const std::size_t r = data.classes.size();
    if (data.vertex_count < 3 || r > data.vertex_count || data.vertex_count > 2 * r) {
        throw Error(ErrorKind::Infeasible, "spectral data is inconsistent: " + std::to_string(data.vertex_count) +
                                               " vertices with " + std::to_string(r) + " normal classes");
    }
    const std::size_t p = data.vertex_count - r;
    const auto max_pairs = static_cast<std::size_t>(std::clamp(options.max_parallel_pairs, 0, 3));
    if (p > max_pairs) {
        throw Error(ErrorKind::Unsupported, std::to_string(p) + " parallel pairs; reconstruction is finite only up to " +
                                                std::to_string(max_pairs));
    }
    if (r > 24) throw Error(ErrorKind::Budget, "too many normal classes for sign enumeration");

    std::vector<std::vector<std::size_t>> doubled_sets;
    if (options.trust_counts) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < r; ++i) {
            if (data.classes[i].edge_count == 2) s.push_back(i);
        }
        if (s.size() != p) throw Error(ErrorKind::Infeasible, "per-class edge counts disagree with the vertex count");
        doubled_sets.push_back(std::move(s));
    } else {
        doubled_sets = combinations(r, p);
    }

    EnumerationRun run;
    std::map<std::vector<Vec2>, std::size_t, decltype([](const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
                 return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const Vec2& x, const Vec2& y) {
                     return lex_less(x, y);
                 });
             })>
        seen;
    std::vector<std::pair<DelzantPolygon, AssignmentTrace>> accepted;

    auto try_branch = [&](const ResolvedBranch& branch, const std::vector<bool>& is_doubled) {
        for (bool flip : {false, true}) {
            AssignmentTrace trace = branch.trace;
            trace.anchor_flipped = flip;
            IntVec2 anchor = primitive_decomposition(rot_cw(branch.edges[0])).first;
            if (flip) anchor = -anchor;
            std::optional<DelzantPolygon> built;
            try {
                built.emplace(build_most_obtuse({branch.edges, anchor}));
            } catch (const Error& e) {
                run.result.dropped.push_back({trace, e.what()});
                continue;
            }
            auto report = validate_delzant(*built);
            if (!report.valid) {
                run.result.dropped.push_back(
                    {trace, "not Delzant at vertex " + std::to_string(report.defects.front().vertex_index) +
                                " (det " + report.defects.front().determinant.str() + ")"});
                continue;
            }
            if (!same_hearable_data(spectral_data(*built), data, options.trust_counts)) {
                run.result.dropped.push_back({trace, "does not reproduce the spectral data"});
                continue;
            }
            run.productive.insert({trace.doubled, single_sign_key(is_doubled, trace.signs)});
            DelzantPolygon canon = normalize_translation(*built);
            if (seen.emplace(canon.vertices(), accepted.size()).second) accepted.emplace_back(std::move(canon), trace);
        }
    };

    for (const auto& doubled : doubled_sets) {
        std::vector<bool> is_doubled(r, false);
        for (auto i : doubled) is_doubled[i] = true;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask) {
            std::vector<int> signs(r);
            for (std::size_t i = 0; i < r; ++i) signs[i] = (mask >> i) & 1U ? -1 : 1;

            Vec2 rhs{0, 0};
            for (std::size_t i = 0; i < r; ++i) {
                if (is_doubled[i]) continue;
                rhs = rhs - data.classes[i].length_sum * to_vec(scaled(signs[i], direction_of(data.classes[i].normal)));
            }
            std::vector<Vec2> w;
            std::vector<Rational> sums;
            for (auto i : doubled) {
                w.push_back(to_vec(scaled(signs[i], direction_of(data.classes[i].normal))));
                sums.push_back(data.classes[i].length_sum);
            }

            AssignmentTrace trace{doubled, signs, {}, false, std::nullopt};
            auto inside = [&](const std::vector<Rational>& splits) {
                for (std::size_t j = 0; j < splits.size(); ++j) {
                    if (!(-sums[j] < splits[j] && splits[j] < sums[j])) return false;
                }
                return true;
            };

            if (p == 0) {
                if (rhs.x != 0 || rhs.y != 0) continue;
            } else if (p == 1) {
                if (cross(w[0], rhs) != 0) continue;
                trace.splits = {dot(rhs, w[0]) / dot(w[0], w[0])};
                if (!inside(trace.splits)) continue;
            } else if (p == 2) {
                const Rational det = cross(w[0], w[1]);
                trace.splits = {cross(rhs, w[1]) / det, cross(w[0], rhs) / det};
                if (!inside(trace.splits)) continue;
            } else {
                // One-parameter family: particular solution with the third split zero.
                const Rational det = cross(w[0], w[1]);
                std::array<Rational, 3> particular{cross(rhs, w[1]) / det, cross(w[0], rhs) / det, Rational(0)};
                std::array<IntVec2, 3> dirs;
                std::array<Rational, 3> sum3;
                for (std::size_t j = 0; j < 3; ++j) {
                    dirs[j] = scaled(signs[doubled[j]], direction_of(data.classes[doubled[j]].normal));
                    sum3[j] = sums[j];
                }
                const auto kernel = kernel_of(dirs);
                auto [lo, hi] = split_interval(sum3, particular, kernel);
                if (!(lo < hi)) continue;
                const Rational mid = (lo + hi) / 2;
                std::array<Rational, 3> base;
                for (std::size_t j = 0; j < 3; ++j) base[j] = particular[j] + mid * kernel[j];

                std::vector<Vec2> fixed;
                for (std::size_t i = 0; i < r; ++i) {
                    if (!is_doubled[i]) {
                        fixed.push_back(data.classes[i].length_sum *
                                        to_vec(scaled(signs[i], direction_of(data.classes[i].normal))));
                    }
                }
                ThreePairFamily family = make_three_pair_family(std::move(fixed), dirs, sum3, base);
                RootSearch roots = search_roots(family, data.area);
                if (roots.irrational) {
                    AssignmentTrace dropped = trace;
                    dropped.splits.assign(base.begin(), base.end());
                    run.result.dropped.push_back({dropped, "area equation has only irrational roots"});
                }
                for (const auto& t : roots.roots) {
                    ResolvedBranch branch{trace, {}};
                    branch.trace.family_parameter = t;
                    for (std::size_t j = 0; j < 3; ++j) branch.trace.splits.push_back(base[j] + t * kernel[j]);
                    branch.edges = assemble_edges(data, is_doubled, signs, branch.trace.splits);
                    try_branch(branch, is_doubled);
                }
                continue;
            }
            ResolvedBranch branch{trace, assemble_edges(data, is_doubled, signs, trace.splits)};
            try_branch(branch, is_doubled);
        }
    }

    std::sort(accepted.begin(), accepted.end(),
              [](const auto& a, const auto& b) { return polygon_less(a.first, b.first); });
    for (auto& [polygon, trace] : accepted) {
        run.result.candidates.push_back(std::move(polygon));
        run.result.traces.push_back(std::move(trace));
    }
    return run;
}

}  // namespace

CandidateSet enumerate_candidates(const SpectralData& data, const EnumerateOptions& options) {
    EnumerationRun run = run_enumeration(data, options);
    if (run.result.candidates.empty()) {
        throw Error(ErrorKind::Infeasible, "no Delzant polygon reproduces the spectral data");
    }
    return std::move(run.result);
}

GenericityReport is_generic(const DelzantPolygon& polygon) {
    GenericityReport report;
    const SpectralData data = spectral_data(polygon);
    const std::size_t pairs = data.parallel_pairs();
    if (pairs > 3) {
        throw Error(ErrorKind::Unsupported, "genericity is defined for at most 3 parallel pairs, polygon has " +
                                                std::to_string(pairs));
    }
    if (data.vertex_count == 4 && data.classes.size() == 2) {
        report.generic = true;
        report.diagnosis = "rectangle (treated as generic)";
        report.productive_assignments = 1;
        return report;
    }
    report.subpolygons = detect_subpolygons(polygon);
    if (!report.subpolygons.empty()) {
        std::string subset;
        for (auto i : report.subpolygons.subsets.front()) subset += (subset.empty() ? "" : ",") + std::to_string(i);
        report.diagnosis = "edges {" + subset + "} form a subpolygon";
        return report;
    }
    EnumerationRun run = run_enumeration(data, {3, false});
    report.productive_assignments = run.productive.size();
    std::set<std::vector<std::size_t>> doubled_sets;
    for (const auto& key : run.productive) doubled_sets.insert(key.first);
    if (doubled_sets.size() > 1) {
        report.diagnosis = std::to_string(doubled_sets.size()) + " choices of repeated normals fit the data";
        return report;
    }
    report.generic = true;
    report.diagnosis = "generic";
    return report;
}

// ---------------------------------------------------------------------------
// Line-bundle reconstruction

namespace {

struct Line2 {
    Vec2 normal;
    Rational offset;
    std::size_t entry;
};

std::optional<Vec2> intersect(const Line2& a, const Line2& b) {
    const Rational det = cross(a.normal, b.normal);
    if (det == 0) return std::nullopt;
    return Vec2{(a.offset * b.normal.y - b.offset * a.normal.y) / det,
                (a.normal.x * b.offset - b.normal.x * a.offset) / det};
}

bool satisfies_all(const std::vector<Line2>& lines, const Vec2& x) {
    return std::all_of(lines.begin(), lines.end(), [&](const Line2& l) { return dot(l.normal, x) <= l.offset; });
}

// Brute-force classification used only to name the failure: is the feasible
// region a genuine polygon (then some half-space must be redundant) or not?
[[noreturn]] void classify_failure_2d(const std::vector<Line2>& lines) {
    std::vector<Vec2> points;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            auto x = intersect(lines[i], lines[j]);
            if (x && satisfies_all(lines, *x)) points.push_back(*x);
        }
    }
    std::sort(points.begin(), points.end(), [](const Vec2& a, const Vec2& b) { return lex_less(a, b); });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) throw Error(ErrorKind::Infeasible, "half-planes have empty or degenerate intersection");
    for (const auto& l : lines) {
        auto on_line = std::count_if(points.begin(), points.end(),
                                     [&](const Vec2& x) { return dot(l.normal, x) == l.offset; });
        if (on_line < 2) {
            throw Error(ErrorKind::Inconsistent,
                        "half-space " + std::to_string(l.entry) + " is redundant (its facet would have zero volume)");
        }
    }
    throw Error(ErrorKind::Inconsistent, "half-space system does not describe a convex polygon");
}

void check_normals_distinct(const HalfSpaceSystem& system) {
    std::set<std::vector<Integer>> normals;
    for (const auto& e : system.entries) {
        if (static_cast<int>(e.normal.size()) != system.dim) {
            throw Error(ErrorKind::InvalidInput, "normal length does not match dimension " + std::to_string(system.dim));
        }
        if (std::all_of(e.normal.begin(), e.normal.end(), [](const Integer& c) { return c == 0; })) {
            throw Error(ErrorKind::InvalidInput, "zero normal in half-space system");
        }
        if (!normals.insert(e.normal).second) throw Error(ErrorKind::Inconsistent, "repeated normal in half-space system");
    }
}

}  // namespace

DelzantPolygon bundle_reconstruct_2d(const HalfSpaceSystem& system) {
    if (system.dim != 2) throw Error(ErrorKind::InvalidInput, "expected a 2D half-space system");
    check_normals_distinct(system);
    const std::size_t n = system.entries.size();
    if (n < 3) throw Error(ErrorKind::Infeasible, "fewer than 3 half-planes cannot bound a polygon");

    std::vector<Line2> lines;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& e = system.entries[i];
        lines.push_back({Vec2{Rational(e.normal[0]), Rational(e.normal[1])}, e.offset, i});
    }
    std::sort(lines.begin(), lines.end(), [](const Line2& a, const Line2& b) { return angle_less(a.normal, b.normal); });
    for (std::size_t i = 0; i < n; ++i) {
        if (cross(lines[i].normal, lines[(i + 1) % n].normal) <= 0) {
            throw Error(ErrorKind::Infeasible, "half-planes do not bound a region (normals miss an open half-plane)");
        }
    }

    // Vertex i closes edge i and opens edge i+1.
    std::vector<Vec2> vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.push_back(*intersect(lines[i], lines[(i + 1) % n]));
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 along = vertices[i] - vertices[(i + n - 1) % n];
        const Vec2 dir{-lines[i].normal.y, lines[i].normal.x};
        if (dot(along, dir) <= 0) classify_failure_2d(lines);
    }
    for (const auto& v : vertices) {
        if (!satisfies_all(lines, v)) classify_failure_2d(lines);
    }

    // Rotate so vertex order starts at the vertex opening the first entry's facet.
    std::vector<Vec2> ordered;
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (lines[i].entry == 0) start = (i + n - 1) % n;
    }
    for (std::size_t k = 0; k < n; ++k) ordered.push_back(vertices[(start + k) % n]);
    DelzantPolygon polygon(std::move(ordered));

    for (const auto& edge : polygon.edges()) {
        auto entry = std::find_if(system.entries.begin(), system.entries.end(), [&](const HalfSpace& h) {
            return h.normal[0] == edge.outward_normal.x && h.normal[1] == edge.outward_normal.y;
        });
        if (entry == system.entries.end()) {
            throw Error(ErrorKind::Inconsistent, "half-space normals are not primitive");
        }
        if (entry->volume != edge.lattice_length) {
            throw Error(ErrorKind::Inconsistent, "facet volume " + to_string(entry->volume) +
                                                     " disagrees with edge length " + to_string(edge.lattice_length));
        }
    }
    return polygon;
}

namespace {

std::optional<Vec3> solve3(const std::array<Vec3, 3>& rows, const std::array<Rational, 3>& rhs) {
    auto det3 = [](const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); };
    const Rational det = det3(rows[0], rows[1], rows[2]);
    if (det == 0) return std::nullopt;
    // x = (rhs0 (r1 x r2) + rhs1 (r2 x r0) + rhs2 (r0 x r1)) / det
    Vec3 x = rhs[0] * cross(rows[1], rows[2]) + rhs[1] * cross(rows[2], rows[0]) + rhs[2] * cross(rows[0], rows[1]);
    return (Rational(1) / det) * x;
}

}  // namespace

Polytope3 bundle_reconstruct_3d(const HalfSpaceSystem& system) {
    if (system.dim != 3) throw Error(ErrorKind::InvalidInput, "expected a 3D half-space system");
    check_normals_distinct(system);
    const std::size_t n = system.entries.size();
    if (n < 4) throw Error(ErrorKind::Infeasible, "fewer than 4 half-spaces cannot bound a polytope");

    std::vector<Vec3> normals;
    for (const auto& e : system.entries) normals.push_back({Rational(e.normal[0]), Rational(e.normal[1]), Rational(e.normal[2])});

    // A nonzero recession direction of a pointed cone lies on two tight planes.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec3 ray = cross(normals[i], normals[j]);
            if (ray == Vec3{0, 0, 0}) continue;
            for (const Vec3& x : {ray, Rational(-1) * ray}) {
                if (std::all_of(normals.begin(), normals.end(), [&](const Vec3& u) { return dot(u, x) <= 0; })) {
                    throw Error(ErrorKind::Infeasible, "half-spaces do not bound a region");
                }
            }
        }
    }

    std::vector<Vec3> points;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                auto x = solve3({normals[i], normals[j], normals[k]},
                                {system.entries[i].offset, system.entries[j].offset, system.entries[k].offset});
                if (!x) continue;
                bool feasible = true;
                for (std::size_t m = 0; m < n && feasible; ++m) feasible = dot(normals[m], *x) <= system.entries[m].offset;
                if (feasible) points.push_back(*x);
            }
        }
    }
    std::sort(points.begin(), points.end(), [](const Vec3& a, const Vec3& b) { return lex_less(a, b); });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 4) throw Error(ErrorKind::Infeasible, "half-spaces have empty or degenerate intersection");

    std::vector<std::vector<std::size_t>> facets;
    for (std::size_t f = 0; f < n; ++f) {
        std::vector<std::size_t> on;
        for (std::size_t v = 0; v < points.size(); ++v) {
            if (dot(normals[f], points[v]) == system.entries[f].offset) on.push_back(v);
        }
        if (on.size() < 3) {
            throw Error(ErrorKind::Inconsistent,
                        "half-space " + std::to_string(f) + " is redundant (its facet would have zero volume)");
        }
        // Order around the centroid in the projection dropping a coordinate
        // where the normal is nonzero; convexity makes this the facet cycle.
        const auto& u = system.entries[f].normal;
        const std::size_t drop = u[0] != 0 ? 0 : (u[1] != 0 ? 1 : 2);
        auto project = [&](const Vec3& p) {
            const Rational c[3] = {p.x, p.y, p.z};
            return Vec2{c[(drop + 1) % 3], c[(drop + 2) % 3]};
        };
        Vec2 centroid{0, 0};
        for (auto v : on) centroid += project(points[v]);
        centroid = Rational(1, static_cast<long>(on.size())) * centroid;
        std::sort(on.begin(), on.end(), [&](std::size_t a, std::size_t b) {
            return angle_less(project(points[a]) - centroid, project(points[b]) - centroid);
        });
        facets.push_back(std::move(on));
    }

    Polytope3 polytope(std::move(points), std::move(facets));
    for (std::size_t f = 0; f < n; ++f) {
        const auto& u = polytope.facets()[f].normal;
        if (std::vector<Integer>{u.x, u.y, u.z} != system.entries[f].normal) {
            throw Error(ErrorKind::Inconsistent, "half-space normal " + std::to_string(f) + " is not primitive");
        }
        if (polytope.facet_lattice_area(f) != system.entries[f].volume) {
            throw Error(ErrorKind::Inconsistent, "facet " + std::to_string(f) + " volume " +
                                                     to_string(system.entries[f].volume) + " disagrees with the polytope (" +
                                                     to_string(polytope.facet_lattice_area(f)) + ")");
        }
    }
    return polytope;
}

Polytope bundle_reconstruct(const HalfSpaceSystem& system) {
    if (system.dim == 2) return bundle_reconstruct_2d(system);
    if (system.dim == 3) return bundle_reconstruct_3d(system);
    throw Error(ErrorKind::Unsupported, "only dimensions 2 and 3 are supported");
}

}  // namespace delzant
