#include "surfcyc/fatgraph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include <boost/rational.hpp>

namespace surfcyc {

namespace {

struct Perms {
    std::vector<int> sigma; // next half-edge in the vertex rotation
    std::vector<int> alpha; // other half of the same edge
    std::vector<int> vertex_of;
    std::vector<int> edge_of;
};

Perms permutations_of(const FatGraph& g) {
    const int H = 2 * static_cast<int>(g.edges.size());
    Perms p;
    p.sigma.assign(static_cast<std::size_t>(H), -1);
    p.alpha.assign(static_cast<std::size_t>(H), -1);
    p.vertex_of.assign(static_cast<std::size_t>(H), -1);
    p.edge_of.assign(static_cast<std::size_t>(H), -1);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const auto& rot = g.vertices[v];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            p.sigma[static_cast<std::size_t>(rot[i])] = rot[(i + 1) % rot.size()];
            p.vertex_of[static_cast<std::size_t>(rot[i])] = static_cast<int>(v);
        }
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        p.alpha[static_cast<std::size_t>(g.edges[e].first)] = g.edges[e].second;
        p.alpha[static_cast<std::size_t>(g.edges[e].second)] = g.edges[e].first;
        p.edge_of[static_cast<std::size_t>(g.edges[e].first)] = static_cast<int>(e);
        p.edge_of[static_cast<std::size_t>(g.edges[e].second)] = static_cast<int>(e);
    }
    return p;
}

void require_connected(const FatGraph& g, const Perms& p) {
    const int H = 2 * static_cast<int>(g.edges.size());
    if (H == 0 || g.vertices.empty()) {
        throw DomainError(errc::invalid_input, "graph has no half-edges");
    }
    for (const auto& rot : g.vertices) {
        if (rot.empty()) {
            throw DomainError(errc::disconnected_graph,
                              "a vertex carries no half-edges");
        }
    }
    std::vector<bool> seen(static_cast<std::size_t>(H), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 0;
    while (!stack.empty()) {
        const int h = stack.back();
        stack.pop_back();
        ++count;
        for (int next : {p.sigma[static_cast<std::size_t>(h)],
                         p.alpha[static_cast<std::size_t>(h)]}) {
            if (!seen[static_cast<std::size_t>(next)]) {
                seen[static_cast<std::size_t>(next)] = true;
                stack.push_back(next);
            }
        }
    }
    if (count != H) {
        throw DomainError(errc::disconnected_graph,
                          "half-edge connectivity fails: reached " +
                              std::to_string(count) + " of " + std::to_string(H));
    }
}

// Boundary operator: follow the other half of the edge, then step backwards
// in that vertex's rotation.
std::vector<int> boundary_perm(const Perms& p) {
    const std::size_t H = p.sigma.size();
    std::vector<int> sigma_inv(H, -1);
    for (std::size_t h = 0; h < H; ++h) {
        sigma_inv[static_cast<std::size_t>(p.sigma[h])] = static_cast<int>(h);
    }
    std::vector<int> b(H, -1);
    for (std::size_t h = 0; h < H; ++h) {
        b[h] = sigma_inv[static_cast<std::size_t>(p.alpha[h])];
    }
    return b;
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        int h = static_cast<int>(start);
        while (!seen[static_cast<std::size_t>(h)]) {
            seen[static_cast<std::size_t>(h)] = true;
            cyc.push_back(h);
            h = perm[static_cast<std::size_t>(h)];
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

} // namespace

FatGraph build_graph(std::vector<std::vector<int>> rotations,
                     std::vector<std::pair<int, int>> edges) {
    const int H = 2 * static_cast<int>(edges.size());
    std::vector<int> edge_count(static_cast<std::size_t>(H), 0);
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= H || b < 0 || b >= H || a == b) {
            throw DomainError(errc::dangling_half_edge,
                              "edge endpoints must be distinct half-edge ids in range");
        }
        edge_count[static_cast<std::size_t>(a)] += 1;
        edge_count[static_cast<std::size_t>(b)] += 1;
    }
    for (int h = 0; h < H; ++h) {
        if (edge_count[static_cast<std::size_t>(h)] != 1) {
            throw DomainError(errc::dangling_half_edge,
                              "half-edge " + std::to_string(h) +
                                  " is covered by " +
                                  std::to_string(edge_count[static_cast<std::size_t>(h)]) +
                                  " edges instead of 1");
        }
    }
    std::vector<int> rot_count(static_cast<std::size_t>(H), 0);
    for (const auto& rot : rotations) {
        for (int h : rot) {
            if (h < 0 || h >= H) {
                throw DomainError(errc::inconsistent_rotation,
                                  "rotation mentions unknown half-edge " +
                                      std::to_string(h));
            }
            rot_count[static_cast<std::size_t>(h)] += 1;
        }
    }
    for (int h = 0; h < H; ++h) {
        if (rot_count[static_cast<std::size_t>(h)] != 1) {
            throw DomainError(errc::inconsistent_rotation,
                              "half-edge " + std::to_string(h) + " appears in " +
                                  std::to_string(rot_count[static_cast<std::size_t>(h)]) +
                                  " rotation slots instead of 1");
        }
    }
    return FatGraph{std::move(rotations), std::move(edges)};
}

FatGraph from_boundary_word(const std::vector<SignedLabel>& word) {
    if (word.size() < 2 || word.size() % 2 != 0) {
        throw DomainError(errc::invalid_input,
                          "boundary word must have positive even length");
    }
    const int E = static_cast<int>(word.size()) / 2;
    std::map<int, std::pair<int, int>> occurrences; // label -> (plain, inverse) counts
    for (const auto& s : word) {
        if (s.label < 1 || s.label > E) {
            throw DomainError(errc::invalid_input,
                              "boundary word labels must be 1.." + std::to_string(E));
        }
        auto& occ = occurrences[s.label];
        (s.inverse ? occ.second : occ.first) += 1;
    }
    for (int l = 1; l <= E; ++l) {
        const auto occ = occurrences[l];
        if (occ.first != 1 || occ.second != 1) {
            throw DomainError(errc::invalid_input,
                              "label " + std::to_string(l) +
                                  " must occur exactly once plain and once inverted");
        }
    }

    const int H = 2 * E;
    auto half_of = [](const SignedLabel& s) {
        return 2 * (s.label - 1) + (s.inverse ? 1 : 0);
    };
    // The walk visits word[i] then word[i+1]; the vertex rotation is
    // recovered as sigma = alpha composed with the inverse of that step.
    std::vector<int> w_next(static_cast<std::size_t>(H), -1);
    for (std::size_t i = 0; i < word.size(); ++i) {
        w_next[static_cast<std::size_t>(half_of(word[i]))] =
            half_of(word[(i + 1) % word.size()]);
    }
    std::vector<int> w_prev(static_cast<std::size_t>(H), -1);
    for (int h = 0; h < H; ++h) {
        w_prev[static_cast<std::size_t>(w_next[static_cast<std::size_t>(h)])] = h;
    }
    std::vector<int> alpha(static_cast<std::size_t>(H));
    for (int h = 0; h < H; ++h) alpha[static_cast<std::size_t>(h)] = h ^ 1;
    std::vector<int> sigma(static_cast<std::size_t>(H));
    for (int h = 0; h < H; ++h) {
        sigma[static_cast<std::size_t>(h)] =
            alpha[static_cast<std::size_t>(w_prev[static_cast<std::size_t>(h)])];
    }

    std::vector<std::vector<int>> rotations;
    std::vector<bool> seen(static_cast<std::size_t>(H), false);
    for (int start = 0; start < H; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> rot;
        int h = start;
        while (!seen[static_cast<std::size_t>(h)]) {
            seen[static_cast<std::size_t>(h)] = true;
            rot.push_back(h);
            h = sigma[static_cast<std::size_t>(h)];
        }
        rotations.push_back(std::move(rot));
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(E));
    for (int e = 0; e < E; ++e) edges.emplace_back(2 * e, 2 * e + 1);
    return build_graph(std::move(rotations), std::move(edges));
}

GraphShape shape(const FatGraph& g) {
    const Perms p = permutations_of(g);
    require_connected(g, p);
    GraphShape s;
    s.vertices = static_cast<long long>(g.vertices.size());
    s.edges = static_cast<long long>(g.edges.size());
    s.boundaries = static_cast<long long>(cycles_of(boundary_perm(p)).size());
    const long long chi = s.vertices - s.edges + s.boundaries;
    if ((2 - chi) % 2 != 0) {
        throw DomainError(errc::non_orientable_or_invalid,
                          "Euler count " + std::to_string(chi) +
                              " does not close to an orientable surface");
    }
    s.genus = (2 - chi) / 2;
    for (const auto& rot : g.vertices) {
        s.degrees.push_back(static_cast<long long>(rot.size()));
    }
    return s;
}

std::vector<std::vector<SignedLabel>> boundary_walks(const FatGraph& g) {
    const Perms p = permutations_of(g);
    require_connected(g, p);
    auto as_label = [&](int h) {
        const int e = p.edge_of[static_cast<std::size_t>(h)];
        return SignedLabel{e + 1, g.edges[static_cast<std::size_t>(e)].second == h};
    };
    std::vector<std::vector<SignedLabel>> walks;
    for (const auto& cyc : cycles_of(boundary_perm(p))) {
        std::vector<SignedLabel> word;
        word.reserve(cyc.size());
        for (int h : cyc) word.push_back(as_label(h));
        // Rotate to the lexicographically least form.
        std::size_t best = 0;
        for (std::size_t r = 1; r < word.size(); ++r) {
            for (std::size_t i = 0; i < word.size(); ++i) {
                const auto& a = word[(r + i) % word.size()];
                const auto& b = word[(best + i) % word.size()];
                if (a != b) {
                    if (a < b) best = r;
                    break;
                }
            }
        }
        std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(best),
                    word.end());
        walks.push_back(std::move(word));
    }
    std::sort(walks.begin(), walks.end());
    return walks;
}

std::vector<HalfEdgePerm> automorphisms(const FatGraph& g) {
    const Perms p = permutations_of(g);
    require_connected(g, p);
    const int H = 2 * static_cast<int>(g.edges.size());
    std::vector<HalfEdgePerm> out;
    for (int target = 0; target < H; ++target) {
        HalfEdgePerm phi(static_cast<std::size_t>(H), -1);
        phi[0] = target;
        std::vector<int> stack{0};
        bool ok = true;
        while (!stack.empty() && ok) {
            const int h = stack.back();
            stack.pop_back();
            const int image = phi[static_cast<std::size_t>(h)];
            const std::array<std::pair<int, int>, 2> steps{
                std::pair<int, int>{p.sigma[static_cast<std::size_t>(h)],
                                    p.sigma[static_cast<std::size_t>(image)]},
                std::pair<int, int>{p.alpha[static_cast<std::size_t>(h)],
                                    p.alpha[static_cast<std::size_t>(image)]}};
            for (const auto& [src, dst] : steps) {
                int& slot = phi[static_cast<std::size_t>(src)];
                if (slot == -1) {
                    slot = dst;
                    stack.push_back(src);
                } else if (slot != dst) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::vector<bool> hit(static_cast<std::size_t>(H), false);
        for (int h = 0; h < H && ok; ++h) {
            const int v = phi[static_cast<std::size_t>(h)];
            if (v < 0 || hit[static_cast<std::size_t>(v)]) ok = false;
            else hit[static_cast<std::size_t>(v)] = true;
        }
        for (int h = 0; h < H && ok; ++h) {
            if (phi[static_cast<std::size_t>(p.sigma[static_cast<std::size_t>(h)])] !=
                    p.sigma[static_cast<std::size_t>(phi[static_cast<std::size_t>(h)])] ||
                phi[static_cast<std::size_t>(p.alpha[static_cast<std::size_t>(h)])] !=
                    p.alpha[static_cast<std::size_t>(phi[static_cast<std::size_t>(h)])]) {
                ok = false;
            }
        }
        if (ok) out.push_back(std::move(phi));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int perm_order(const HalfEdgePerm& p) {
    long long order = 1;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (seen[start]) continue;
        long long len = 0;
        std::size_t h = start;
        while (!seen[h]) {
            seen[h] = true;
            h = static_cast<std::size_t>(p[h]);
            ++len;
        }
        order = std::lcm(order, len);
    }
    return static_cast<int>(order);
}

InducedSignature induced_signature(const FatGraph& g, const HalfEdgePerm& h) {
    const Perms p = permutations_of(g);
    require_connected(g, p);
    const std::size_t H = p.sigma.size();
    if (h.size() != H) {
        throw DomainError(errc::invalid_input,
                          "symmetry must permute all half-edges");
    }
    for (std::size_t i = 0; i < H; ++i) {
        if (h[static_cast<std::size_t>(p.sigma[i])] !=
                p.sigma[static_cast<std::size_t>(h[i])] ||
            h[static_cast<std::size_t>(p.alpha[i])] !=
                p.alpha[static_cast<std::size_t>(h[i])]) {
            throw DomainError(errc::invalid_input,
                              "permutation does not preserve the ribbon structure");
        }
    }
    const long long n = perm_order(h);
    if (n < 2) {
        throw DomainError(errc::invalid_input,
                          "signature requires a symmetry of order >= 2");
    }

    const GraphShape sh = shape(g);

    // Cell labelling: vertices, edges, and boundary faces indexed by any of
    // their half-edges.
    std::vector<int> face_of(H, -1);
    {
        const auto faces = cycles_of(boundary_perm(p));
        for (std::size_t f = 0; f < faces.size(); ++f) {
            for (int half : faces[f]) {
                face_of[static_cast<std::size_t>(half)] = static_cast<int>(f);
            }
        }
    }

    InducedSignature sig;
    sig.order = n;

    auto collect_orbits = [&](const std::vector<int>& cell_of, long long cell_count) {
        std::vector<int> rep(static_cast<std::size_t>(cell_count), -1);
        for (std::size_t i = 0; i < H; ++i) {
            const auto c = static_cast<std::size_t>(cell_of[i]);
            if (rep[c] == -1) rep[c] = static_cast<int>(i);
        }
        std::vector<bool> visited(static_cast<std::size_t>(cell_count), false);
        for (long long c = 0; c < cell_count; ++c) {
            if (visited[static_cast<std::size_t>(c)]) continue;
            long long orbit = 0;
            long long cur = c;
            while (!visited[static_cast<std::size_t>(cur)]) {
                visited[static_cast<std::size_t>(cur)] = true;
                ++orbit;
                cur = cell_of[static_cast<std::size_t>(
                    h[static_cast<std::size_t>(rep[static_cast<std::size_t>(cur)])])];
            }
            const long long stab = n / orbit;
            if (stab >= 2) sig.cone_orders.push_back(stab);
        }
    };
    collect_orbits(p.vertex_of, sh.vertices);
    collect_orbits(p.edge_of, sh.edges);
    collect_orbits(face_of, sh.boundaries);
    std::sort(sig.cone_orders.begin(), sig.cone_orders.end());

    // (2 - 2g)/n = 2 - 2*g0 - sum(1 - 1/m_i), solved exactly.
    using Rat = boost::rational<long long>;
    Rat rhs(2 - 2 * sh.genus, n);
    for (long long m : sig.cone_orders) rhs += Rat(m - 1, m);
    const Rat g0 = (Rat(2) - rhs) / 2;
    if (g0.denominator() != 1 || g0.numerator() < 0) {
        std::ostringstream os;
        os << "quotient genus would be " << g0.numerator() << "/" << g0.denominator();
        throw DomainError(errc::non_integral_quotient, os.str());
    }
    sig.quotient_genus = g0.numerator();
    return sig;
}

FeasibilityReport minimal_filling_vertex_feasibility(long long n, long long g,
                                                     long long b,
                                                     std::vector<long long> cone_orders) {
    FeasibilityReport rep;
    rep.required_vertices = 2 * g - 2 + b;
    std::sort(cone_orders.begin(), cone_orders.end());
    std::vector<long long> orbit_sizes;
    for (long long m : cone_orders) {
        if (m < 2 || n % m != 0) {
            throw DomainError(errc::invalid_input,
                              "cone orders must divide the symmetry order");
        }
        orbit_sizes.push_back(n / m);
    }

    const std::size_t ell = orbit_sizes.size();
    std::vector<std::string> lines;
    std::string witness;
    long long witness_t = -1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << ell); ++mask) {
        long long sum = 0;
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < ell; ++i) {
            if (!(mask >> i & 1)) continue;
            sum += orbit_sizes[i];
            if (!first) os << "+";
            os << n << "/" << cone_orders[i];
            first = false;
        }
        os << "=" << sum;
        if (mask != 0) {
            const std::string line = os.str();
            if (std::find(lines.begin(), lines.end(), line) == lines.end()) {
                lines.push_back(line);
            }
        }
        const long long rest = rep.required_vertices - sum;
        if (!rep.feasible && rest >= 0 && rest % n == 0) {
            rep.feasible = true;
            witness = mask == 0 ? "0" : os.str();
            witness_t = rest / n;
        }
    }
    rep.subset_sums = std::move(lines);

    std::ostringstream ex;
    if (rep.feasible) {
        ex << "required vertex count " << rep.required_vertices
           << " = (" << witness << ") + " << witness_t << "*" << n;
    } else {
        long long max_sum = 0;
        for (long long s : orbit_sizes) max_sum += s;
        ex << "required vertex count " << rep.required_vertices
           << " is not a sum of distinct cone orbits (max " << max_sum
           << ") plus free orbits of size " << n;
    }
    rep.explanation = ex.str();
    return rep;
}

IrreducibilityReport filling_irreducibility_check(const FatGraph& g,
                                                  const HalfEdgePerm& h) {
    const GraphShape sh = shape(g);
    for (long long d : sh.degrees) {
        if (d != 4) {
            throw DomainError(errc::not_four_regular,
                              "filling analysis requires a 4-regular graph");
        }
    }
    IrreducibilityReport rep;
    rep.signature = induced_signature(g, h);
    rep.genus = sh.genus;
    rep.boundaries = sh.boundaries;
    rep.irreducible =
        rep.signature.quotient_genus == 0 && rep.signature.cone_orders.size() == 3;
    rep.divisibility_ok =
        (4 * (2 * sh.genus - 2 + sh.boundaries)) % rep.signature.order == 0;
    rep.order_bounds_ok = 2 * sh.genus + 1 <= rep.signature.order &&
                          rep.signature.order <= 4 * sh.genus + 2;
    rep.vertex_feasibility = minimal_filling_vertex_feasibility(
        rep.signature.order, sh.genus, sh.boundaries, rep.signature.cone_orders);
    return rep;
}

} // namespace surfcyc
