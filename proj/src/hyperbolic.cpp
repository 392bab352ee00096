#include "surfcyc/hyperbolic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace surfcyc {

namespace {

constexpr double kPi = 3.14159265358979323846;

double acosh_at_least_one(double x) { return std::acosh(std::max(x, 1.0)); }

double acos_clamped(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

} // namespace

PolygonSpec polygon_spec(const DataSet& input) {
    auto d = canonicalize(input);
    require_valid(d);
    if (d.g0 != 0 || d.pairs.size() != 3 || d.pairs[2].m != d.n) {
        throw DomainError(errc::not_spherical_type1,
                          "polygon model requires a sphere quotient with three cone "
                          "points, one of full order; got " + to_string(d));
    }
    PolygonSpec spec;
    spec.n = d.n;
    spec.n1 = d.pairs[0].m;
    spec.n2 = d.pairs[1].m;
    spec.n3 = d.pairs[2].m;
    spec.genus = genus(d);
    if (spec.genus < 2) {
        throw DomainError(errc::non_hyperbolic,
                          "cone orders (" + std::to_string(spec.n1) + "," +
                              std::to_string(spec.n2) + "," + std::to_string(spec.n3) +
                              ") give total genus " + std::to_string(spec.genus) +
                              ", which is not hyperbolic");
    }
    spec.theta = 2.0 * kPi / static_cast<double>(spec.n);
    if (spec.n1 == 2) {
        // The order-2 points sit at side midpoints; one corner class.
        spec.sides = spec.n;
        spec.rotation_steps = 1;
        spec.corner_angles.assign(static_cast<std::size_t>(spec.sides),
                                  2.0 * kPi / static_cast<double>(spec.n2));
    } else {
        spec.sides = 2 * spec.n;
        spec.rotation_steps = 2;
        spec.corner_angles.resize(static_cast<std::size_t>(spec.sides));
        for (long long v = 0; v < spec.sides; ++v) {
            const long long order = (v % 2 == 0) ? spec.n1 : spec.n2;
            spec.corner_angles[static_cast<std::size_t>(v)] =
                2.0 * kPi / static_cast<double>(order);
        }
    }
    return spec;
}

PolygonMetrics solve_metrics(const PolygonSpec& spec) {
    const long long k = spec.sides;
    // Central isoceles triangles: apex 2*pi/k at the centre, base angles
    // half the interior corner angles.
    const double C = 2.0 * kPi / static_cast<double>(k);
    const double A = spec.corner_angles[0] / 2.0;
    const double B = (k == 2 * spec.n) ? spec.corner_angles[1] / 2.0 : A;

    PolygonMetrics m;
    m.side_length = acosh_at_least_one(
        (std::cos(A) * std::cos(B) + std::cos(C)) / (std::sin(A) * std::sin(B)));
    const double ra = acosh_at_least_one(
        (std::cos(B) + std::cos(A) * std::cos(C)) / (std::sin(A) * std::sin(C)));
    const double rb = acosh_at_least_one(
        (std::cos(A) + std::cos(B) * std::cos(C)) / (std::sin(B) * std::sin(C)));
    m.radii.push_back(ra);
    if (k == 2 * spec.n) m.radii.push_back(rb);

    double angle_sum = 0.0;
    for (double a : spec.corner_angles) angle_sum += a;
    m.area = static_cast<double>(k - 2) * kPi - angle_sum;

    const double apex = acos_clamped(
        (std::cosh(ra) * std::cosh(rb) - std::cosh(m.side_length)) /
        (std::sinh(ra) * std::sinh(rb)));
    m.apex_angle_sum = static_cast<double>(k) * apex;
    m.side_length_check = acosh_at_least_one(
        std::cosh(ra) * std::cosh(rb) - std::sinh(ra) * std::sinh(rb) * std::cos(C));
    return m;
}

namespace {

PairingWord word_from_step(const PolygonSpec& spec, long long q, long long j) {
    const long long n = spec.n;
    PairingWord w;
    w.sides = spec.sides;
    w.rotation_steps = spec.rotation_steps;
    w.partner.assign(static_cast<std::size_t>(spec.sides), 0);
    if (spec.sides == 2 * n) {
        // Odd side 2m+1 glues to even side 2z with z = m + q*j (mod n).
        for (long long m = 0; m < n; ++m) {
            long long z = (m + q * j) % n;
            if (z == 0) z = n;
            const long long odd = 2 * m + 1;
            const long long even = 2 * z;
            w.partner[static_cast<std::size_t>(odd - 1)] = even;
            w.partner[static_cast<std::size_t>(even - 1)] = odd;
        }
        return w;
    }
    // n-gon: side s glues to s + (q*j - 1) (mod n).
    const long long step = ((q * j - 1) % n + n) % n;
    if (step == 0) {
        throw DomainError(errc::no_valid_interpretation,
                          "side pairing step is the identity");
    }
    if ((2 * step) % n != 0) {
        throw DomainError(errc::no_valid_interpretation,
                          "side pairing step is not an involution");
    }
    for (long long s = 1; s <= n; ++s) {
        w.partner[static_cast<std::size_t>(s - 1)] = (s - 1 + step) % n + 1;
    }
    return w;
}

} // namespace

PairingWord pairing_word(const DataSet& input) {
    auto d = canonicalize(input);
    const PolygonSpec spec = polygon_spec(d);
    const long long n = d.n;
    const long long n2 = spec.n2;
    const long long c1 = d.pairs[0].c;
    const long long c2 = d.pairs[1].c;
    const long long c3 = d.pairs[2].c;
    const long long j = n2 - c2;
    const long long expected_genus = spec.genus;

    struct Candidate {
        long long residue;
        long long modulus;
        const char* name;
    };
    const std::array<Candidate, 6> candidates{{
        {c3, n2, "c3 mod n2"},
        {c2, n2, "c2 mod n2"},
        {c1, n2, "c1 mod n2"},
        {c3, n, "c3 mod n"},
        {c2, n, "c2 mod n"},
        {c1, n, "c1 mod n"},
    }};

    for (const auto& cand : candidates) {
        const long long r = ((cand.residue % cand.modulus) + cand.modulus) % cand.modulus;
        if (std::gcd(r, cand.modulus) != 1) continue;
        const long long q = (n / n2) * mod_inverse(r, cand.modulus);
        try {
            PairingWord w = word_from_step(spec, q, j);
            if (quotient_check(w).genus != expected_genus) continue;
            w.interpretation = cand.name;
            return w;
        } catch (const DomainError&) {
            continue;
        }
    }
    throw DomainError(errc::no_valid_interpretation,
                      "no residue interpretation produces a side pairing whose "
                      "quotient has genus " + std::to_string(expected_genus));
}

namespace {

struct Dsu {
    std::vector<long long> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    long long find(long long v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }
    void unite(long long a, long long b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(b)] = a;
    }
};

} // namespace

QuotientCheck quotient_check(const PairingWord& w) {
    const long long k = w.sides;
    if (k <= 0 || k % 2 != 0 ||
        w.partner.size() != static_cast<std::size_t>(k)) {
        throw DomainError(errc::invalid_input, "side pairing has a malformed shape");
    }
    for (long long i = 1; i <= k; ++i) {
        const long long p = w.partner[static_cast<std::size_t>(i - 1)];
        if (p < 1 || p > k || p == i ||
            w.partner[static_cast<std::size_t>(p - 1)] != i) {
            throw DomainError(errc::invalid_input,
                              "side pairing is not a fixed-point-free involution");
        }
    }

    // Side i runs from vertex i-1 to vertex i (mod k); gluing reverses
    // orientation, so ends match crosswise.
    Dsu dsu(static_cast<std::size_t>(k));
    for (long long i = 1; i <= k; ++i) {
        const long long jj = w.partner[static_cast<std::size_t>(i - 1)];
        if (i > jj) continue;
        dsu.unite(i - 1, jj % k);
        dsu.unite(i % k, jj - 1);
    }
    std::vector<long long> class_size(static_cast<std::size_t>(k), 0);
    for (long long v = 0; v < k; ++v) {
        class_size[static_cast<std::size_t>(dsu.find(v))] += 1;
    }
    QuotientCheck qc;
    long long vertices = 0;
    for (long long s : class_size) {
        if (s > 0) {
            ++vertices;
            qc.vertex_classes.push_back(s);
        }
    }
    std::sort(qc.vertex_classes.rbegin(), qc.vertex_classes.rend());
    const long long euler = vertices - k / 2 + 1;
    if ((2 - euler) % 2 != 0) {
        throw DomainError(errc::non_orientable_or_invalid,
                          "identification space has odd Euler characteristic " +
                              std::to_string(euler));
    }
    qc.genus = (2 - euler) / 2;
    return qc;
}

// ---------------------------------------------------------------------------
// Poincare-disk rendering
// ---------------------------------------------------------------------------

namespace {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

std::string fmt(double v) {
    if (std::fabs(v) < 5e-7) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Centre of the circle through p and q orthogonal to the unit circle;
// returns false when the geodesic is a diameter (straight segment).
bool orthocircle(const Vec2& p, const Vec2& q, Vec2& centre, double& radius) {
    const double a11 = 2.0 * p.x, a12 = 2.0 * p.y, b1 = p.x * p.x + p.y * p.y + 1.0;
    const double a21 = 2.0 * q.x, a22 = 2.0 * q.y, b2 = q.x * q.x + q.y * q.y + 1.0;
    const double det = a11 * a22 - a12 * a21;
    if (std::fabs(det) < 1e-12) return false;
    centre.x = (b1 * a22 - b2 * a12) / det;
    centre.y = (a11 * b2 - a21 * b1) / det;
    radius = std::sqrt(
        std::max(centre.x * centre.x + centre.y * centre.y - 1.0, 0.0));
    return true;
}

} // namespace

std::string render_svg(const PolygonSpec& spec, const PolygonMetrics& metrics,
                       const PairingWord& pairing) {
    const long long k = spec.sides;
    std::vector<Vec2> vertex(static_cast<std::size_t>(k));
    for (long long v = 0; v < k; ++v) {
        const std::size_t cls =
            (k == 2 * spec.n && v % 2 == 1 && metrics.radii.size() > 1) ? 1 : 0;
        const double euclid = std::tanh(metrics.radii[cls] / 2.0);
        const double phi = 2.0 * kPi * static_cast<double>(v) / static_cast<double>(k);
        vertex[static_cast<std::size_t>(v)] = {euclid * std::cos(phi),
                                               euclid * std::sin(phi)};
    }

    // One colour and label per glued side pair, in first-occurrence order.
    std::vector<long long> pair_label(static_cast<std::size_t>(k), 0);
    long long labels = 0;
    for (long long s = 1; s <= k; ++s) {
        const long long t = pairing.partner[static_cast<std::size_t>(s - 1)];
        if (s < t) {
            ++labels;
            pair_label[static_cast<std::size_t>(s - 1)] = labels;
            pair_label[static_cast<std::size_t>(t - 1)] = labels;
        }
    }
    auto colour = [&](long long label) {
        const long long hue = ((label - 1) * 360) / std::max<long long>(labels, 1);
        return "hsl(" + std::to_string(hue) + ",70%,45%)";
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.25 -1.25 2.5 2.5\" "
           "width=\"640\" height=\"640\">\n";
    svg << "<title>" << k << "-gon, rotation step " << spec.rotation_steps
        << " of " << spec.n << "</title>\n";
    svg << "<rect x=\"-1.25\" y=\"-1.25\" width=\"2.5\" height=\"2.5\" fill=\"#ffffff\"/>\n";
    svg << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#999999\" "
           "stroke-width=\"0.005\"/>\n";

    std::vector<Vec2> mid(static_cast<std::size_t>(k));
    for (long long s = 1; s <= k; ++s) {
        const Vec2 p = vertex[static_cast<std::size_t>(s - 1)];
        const Vec2 q = vertex[static_cast<std::size_t>(s % k)];
        Vec2 o;
        double rho = 0.0;
        svg << "<path d=\"M " << fmt(p.x) << " " << fmt(p.y) << " ";
        if (orthocircle(p, q, o, rho)) {
            const double cross =
                (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
            const int sweep = cross > 0 ? 1 : 0;
            svg << "A " << fmt(rho) << " " << fmt(rho) << " 0 0 " << sweep << " "
                << fmt(q.x) << " " << fmt(q.y);
            const double cx = (p.x + q.x) / 2.0 - o.x;
            const double cy = (p.y + q.y) / 2.0 - o.y;
            const double norm = std::sqrt(cx * cx + cy * cy);
            mid[static_cast<std::size_t>(s - 1)] = {o.x + rho * cx / norm,
                                                    o.y + rho * cy / norm};
        } else {
            svg << "L " << fmt(q.x) << " " << fmt(q.y);
            mid[static_cast<std::size_t>(s - 1)] = {(p.x + q.x) / 2.0,
                                                    (p.y + q.y) / 2.0};
        }
        const long long label = pair_label[static_cast<std::size_t>(s - 1)];
        svg << "\" fill=\"none\" stroke=\"" << colour(label)
            << "\" stroke-width=\"0.012\"/>\n";
    }

    for (long long s = 1; s <= k; ++s) {
        const Vec2 m = mid[static_cast<std::size_t>(s - 1)];
        const long long label = pair_label[static_cast<std::size_t>(s - 1)];
        svg << "<text x=\"" << fmt(m.x * 1.14) << "\" y=\"" << fmt(m.y * 1.14)
            << "\" font-size=\"0.09\" font-family=\"sans-serif\" "
               "text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\""
            << colour(label) << "\">" << label << "</text>\n";
    }

    for (long long v = 0; v < k; ++v) {
        const Vec2 p = vertex[static_cast<std::size_t>(v)];
        svg << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
            << "\" r=\"0.015\" fill=\"#222222\"/>\n";
    }
    svg << "<circle cx=\"0\" cy=\"0\" r=\"0.02\" fill=\"#000000\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace surfcyc
