#include "delzant/zoo.hpp"

#include "delzant/reconstruct.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace delzant {

DelzantPolygon hirzebruch(unsigned m, const Rational& w, const Rational& h) {
    if (w <= 0 || h <= 0) throw Error(ErrorKind::InvalidInput, "Hirzebruch widths must be positive");
    return DelzantPolygon({{0, 0}, {w, 0}, {w, h}, {0, h + Rational(m) * w}});
}

DelzantPolygon chop(const DelzantPolygon& polygon, const ChopSpec& spec) {
    const std::size_t n = polygon.size();
    if (spec.vertex_index >= n) {
        throw Error(ErrorKind::InvalidInput, "chop vertex " + std::to_string(spec.vertex_index) + " out of range");
    }
    if (!validate_delzant(polygon).valid) throw Error(ErrorKind::Validation, "chop needs a Delzant polygon");
    const Rational& t = spec.lattice_depth;
    if (t <= 0) throw Error(ErrorKind::InvalidInput, "chop depth must be positive");

    const std::size_t i = spec.vertex_index;
    const std::size_t in = (i + n - 1) % n;
    const Edge& incoming = polygon.edges()[in];
    const Edge& outgoing = polygon.edges()[i];
    for (auto [edge, idx] : {std::pair{&incoming, in}, std::pair{&outgoing, i}}) {
        if (t >= edge->lattice_length) {
            throw Error(ErrorKind::InvalidInput, "chop depth " + to_string(t) + " is not below the lattice length " +
                                                     to_string(edge->lattice_length) + " of edge " + std::to_string(idx));
        }
    }
    const Vec2& v = polygon.vertices()[i];
    std::vector<Vec2> out;
    out.reserve(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i) {
            out.push_back(v - t * to_vec(incoming.direction));
            out.push_back(v + t * to_vec(outgoing.direction));
        } else {
            out.push_back(polygon.vertices()[k]);
        }
    }
    return DelzantPolygon(std::move(out));
}

namespace {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [lo, hi]; plain modulo keeps the stream portable across
    // standard libraries.
    long uniform(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

    Rational fraction(long bound) {
        const long p = uniform(1, bound);
        const long q = uniform(1, bound);
        return Rational(p, q);
    }

    IntMatrix2 unimodular(long bound) {
        IntMatrix2 m = IntMatrix2::identity();
        const long factors = uniform(1, 3);
        for (long k = 0; k < factors; ++k) {
            const long a = uniform(-bound, bound);
            m = (uniform(0, 1) == 0 ? IntMatrix2{1, a, 0, 1} : IntMatrix2{1, 0, a, 1}) * m;
        }
        return m;
    }

    Vec2 offset(long bound) {
        return {Rational(uniform(-bound, bound), uniform(1, bound)), Rational(uniform(-bound, bound), uniform(1, bound))};
    }

private:
    std::mt19937_64 engine_;
};

DelzantPolygon random_chop(const DelzantPolygon& polygon, Sampler& rng, long bound) {
    const auto n = static_cast<long>(polygon.size());
    for (int attempt = 0; attempt < kMaxChopAttempts; ++attempt) {
        const auto i = static_cast<std::size_t>(rng.uniform(0, n - 1));
        const long q = rng.uniform(1, bound);
        const long p = rng.uniform(1, q);
        const Rational depth = Rational(p, q) / Rational(Integer(1) << (attempt / 16));
        const std::size_t in = (i + polygon.size() - 1) % polygon.size();
        if (depth < polygon.edges()[in].lattice_length && depth < polygon.edges()[i].lattice_length) {
            return chop(polygon, {i, depth});
        }
    }
    throw Error(ErrorKind::Budget, "no admissible chop found in " + std::to_string(kMaxChopAttempts) + " attempts");
}

}  // namespace

DelzantPolygon random_delzant(int d, std::uint64_t seed, int bound, const RandomOptions& options) {
    if (d < 3) throw Error(ErrorKind::InvalidInput, "a polygon has at least 3 edges");
    if (bound < 1) throw Error(ErrorKind::InvalidInput, "parameter bound must be at least 1");
    Sampler rng(seed);
    if (d == 3) {
        const Rational s = rng.fraction(bound);
        DelzantPolygon simplex({{0, 0}, {s, 0}, {0, s}});
        return translate(transform(simplex, rng.unimodular(bound)), rng.offset(bound));
    }
    const auto m = static_cast<unsigned>(rng.uniform(0, bound));
    const Rational w = rng.fraction(bound);
    const Rational h = rng.fraction(bound);
    DelzantPolygon polygon = hirzebruch(m, w, h);
    for (int k = 4; k < d; ++k) polygon = random_chop(polygon, rng, bound);
    if (options.sl2z_twist) polygon = translate(transform(polygon, rng.unimodular(bound)), rng.offset(bound));
    return polygon;
}

DelzantPolygon perturb_generic(const DelzantPolygon& polygon, int budget) {
    if (is_generic(polygon).generic) return polygon;
    const std::size_t n = polygon.size();
    std::vector<Vec2> normals;
    std::vector<Rational> offsets;
    for (std::size_t i = 0; i < n; ++i) {
        normals.push_back(to_vec(polygon.edges()[i].outward_normal));
        offsets.push_back(dot(normals.back(), polygon.vertices()[i]));
    }

    std::optional<DelzantPolygon> last;
    for (int k = 0; k < budget; ++k) {
        const Integer base = k + 2;
        const Rational step = Rational(1, kPerturbDenominator) / Rational(Integer(1) << k);
        std::vector<Rational> shifted(n);
        Integer power = 1;
        for (std::size_t i = 0; i < n; ++i) {
            shifted[i] = offsets[i] + step * Rational(power, boost::multiprecision::pow(base, static_cast<unsigned>(n - 1)));
            power *= base;
        }
        // Vertex i opens edge i: intersection of support lines i-1 and i.
        std::vector<Vec2> vertices;
        vertices.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = (i + n - 1) % n;
            const Vec2& a = normals[j];
            const Vec2& b = normals[i];
            const Rational det = cross(a, b);
            vertices.push_back({(shifted[j] * b.y - shifted[i] * a.y) / det, (a.x * shifted[i] - b.x * shifted[j]) / det});
        }
        std::optional<DelzantPolygon> candidate;
        try {
            candidate.emplace(std::move(vertices));
        } catch (const Error&) {
            continue;
        }
        bool same_fan = candidate->size() == n;
        for (std::size_t i = 0; same_fan && i < n; ++i) {
            same_fan = candidate->edges()[i].outward_normal == polygon.edges()[i].outward_normal;
        }
        if (!same_fan) continue;
        last = candidate;
        if (is_generic(*candidate).generic) return *candidate;
    }
    throw PerturbationError("no generic perturbation within " + std::to_string(budget) + " attempts", last);
}

double ZooCensus::fraction_at_most(std::size_t pairs) const {
    if (total == 0) return 0.0;
    std::uint64_t count = 0;
    for (const auto& [p, c] : histogram) {
        if (p <= pairs) count += c;
    }
    return static_cast<double>(count) / static_cast<double>(total);
}

namespace {

// Lattice-length picture of a polygon: cyclic (normal, length) pairs with
// lengths scaled to integers by a common denominator.
struct Side {
    std::int64_t nx;
    std::int64_t ny;
    std::int64_t length;
};

std::size_t pair_count(const std::vector<Side>& sides) {
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < sides.size(); ++a) {
        for (std::size_t b = a + 1; b < sides.size(); ++b) {
            if (sides[a].nx == -sides[b].nx && sides[a].ny == -sides[b].ny) ++pairs;
        }
    }
    return pairs;
}

struct CensusWalker {
    int remaining_chops;
    const std::vector<std::int64_t>& depths;
    std::atomic<std::uint64_t>& nodes;
    std::uint64_t budget;
    std::map<std::size_t, std::uint64_t> histogram;
    bool exhausted = false;

    void walk(std::vector<Side>& sides, int level) {
        if (exhausted) return;
        if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget) {
            exhausted = true;
            return;
        }
        if (level == remaining_chops) {
            ++histogram[pair_count(sides)];
            return;
        }
        const std::size_t n = sides.size();
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t prev = (i + n - 1) % n;
            const std::int64_t limit = std::min(sides[prev].length, sides[i].length);
            for (std::int64_t t : depths) {
                if (t >= limit) break;
                std::vector<Side> next = sides;
                next[prev].length -= t;
                next[i].length -= t;
                next.insert(next.begin() + static_cast<std::ptrdiff_t>(i),
                            Side{sides[prev].nx + sides[i].nx, sides[prev].ny + sides[i].ny, t});
                walk(next, level + 1);
                if (exhausted) return;
            }
        }
    }
};

}  // namespace

ZooCensus parallel_pair_census(int d, int bound, const CensusOptions& options) {
    if (d < 4) throw Error(ErrorKind::InvalidInput, "census needs d >= 4");
    if (bound < 1 || bound > kMaxCensusBound) {
        throw Error(ErrorKind::InvalidInput, "census bound must lie in [1, " + std::to_string(kMaxCensusBound) + "]");
    }
    std::int64_t scale = 1;
    for (std::int64_t k = 2; k <= bound; ++k) scale = std::lcm(scale, k);

    std::vector<std::int64_t> depths;
    for (std::int64_t p = 1; p <= bound; ++p) {
        for (std::int64_t q = 1; q <= bound; ++q) depths.push_back(p * scale / q);
    }
    std::sort(depths.begin(), depths.end());
    depths.erase(std::unique(depths.begin(), depths.end()), depths.end());

    struct Base {
        std::int64_t m, w, h;
    };
    std::vector<Base> bases;
    for (std::int64_t m = 0; m <= bound; ++m) {
        for (std::int64_t w = 1; w <= bound; ++w) {
            for (std::int64_t h = 1; h <= bound; ++h) bases.push_back({m, w, h});
        }
    }

    std::atomic<std::uint64_t> nodes{0};
    std::vector<std::map<std::size_t, std::uint64_t>> per_base(bases.size());
    std::atomic<bool> exhausted{false};
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t b = first; b < bases.size(); b += stride) {
            const Base& base = bases[b];
            std::vector<Side> sides{{0, -1, base.w * scale},
                                    {1, 0, base.h * scale},
                                    {base.m, 1, base.w * scale},
                                    {-1, 0, (base.h + base.m * base.w) * scale}};
            CensusWalker walker{d - 4, depths, nodes, options.node_budget, {}, false};
            walker.walk(sides, 0);
            per_base[b] = std::move(walker.histogram);
            if (walker.exhausted) {
                exhausted = true;
                return;
            }
        }
    };
    const unsigned threads = std::max(1U, options.threads);
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        for (auto& th : pool) th.join();
    }

    // Merge in base order so the result does not depend on scheduling.
    ZooCensus census{d, bound, {}, 0};
    for (const auto& h : per_base) {
        for (const auto& [pairs, count] : h) {
            census.histogram[pairs] += count;
            census.total += count;
        }
    }
    if (exhausted) {
        throw CensusBudgetError("census node budget of " + std::to_string(options.node_budget) + " exhausted", census);
    }
    return census;
}

}  // namespace delzant
