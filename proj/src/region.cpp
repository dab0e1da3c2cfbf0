#include "polydisc/region.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace polydisc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_angles(double alpha, double beta) {
    if (!(alpha >= 0.0 && alpha < beta && beta <= kTwoPi))
        throw std::invalid_argument("sector needs 0 <= alpha < beta <= 2pi");
}

void check_inner_radius(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("radius must lie in (0,1)");
}

double num(const std::string& s) {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
    return v;
}

// "k1=v1,k2=v2" -> value of the requested key.
double keyed(const std::string& body, const std::string& key) {
    size_t at = 0;
    while (at < body.size()) {
        size_t end = body.find(',', at);
        if (end == std::string::npos) end = body.size();
        const std::string item = body.substr(at, end - at);
        const size_t eq = item.find('=');
        if (eq != std::string::npos && item.substr(0, eq) == key)
            return num(item.substr(eq + 1));
        at = end + 1;
    }
    throw std::invalid_argument("missing parameter '" + key + "' in: " + body);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

double arg_in_2pi(Complex z) {
    double a = std::atan2(z.imag(), z.real());
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;  // rounding of tiny negative angles
    return a;
}

Region Region::sector(double alpha, double beta) {
    check_angles(alpha, beta);
    return Region(Sector{alpha, beta});
}

Region Region::annular_sector(double r, double alpha, double beta) {
    check_inner_radius(r);
    check_angles(alpha, beta);
    return Region(AnnularSector{r, alpha, beta});
}

Region Region::origin_disk(double r) {
    if (!(r > 0.0)) throw std::invalid_argument("origin disk needs r > 0");
    return Region(OriginDisk{r});
}

Region Region::annulus_complement(double r) {
    check_inner_radius(r);
    return Region(AnnulusComplement{r});
}

Region Region::point_disk(Complex center, double r) {
    if (std::abs(std::abs(center) - 1.0) > 1e-9)
        throw std::invalid_argument("point disk center must lie on the unit circle");
    if (!(r > 0.0 && r < 2.0))
        throw std::invalid_argument("point disk needs 0 < r < 2");
    return Region(PointDisk{center, r});
}

Region Region::inscribed_polygon(std::vector<double> angles) {
    if (angles.size() < 3)
        throw std::invalid_argument("polygon needs at least 3 vertices");
    for (size_t j = 0; j < angles.size(); ++j) {
        if (!(angles[j] >= 0.0 && angles[j] < kTwoPi))
            throw std::invalid_argument("polygon angles must lie in [0, 2pi)");
        if (j > 0 && !(angles[j] > angles[j - 1]))
            throw std::invalid_argument("polygon angles must be strictly increasing");
    }
    InscribedPolygon poly;
    poly.angles = std::move(angles);
    poly.vertices.reserve(poly.angles.size());
    for (double a : poly.angles) poly.vertices.push_back(std::polar(1.0, a));
    return Region(std::move(poly));
}

bool Region::contains(Complex z) const {
    return std::visit(
        [&](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Sector>) {
                const double a = arg_in_2pi(z);
                return a >= r.alpha && a < r.beta;
            } else if constexpr (std::is_same_v<T, AnnularSector>) {
                const double m = std::abs(z);
                if (!(m > r.r && m < 1.0 / r.r)) return false;
                const double a = arg_in_2pi(z);
                return a >= r.alpha && a < r.beta;
            } else if constexpr (std::is_same_v<T, OriginDisk>) {
                return std::abs(z) <= r.r;
            } else if constexpr (std::is_same_v<T, AnnulusComplement>) {
                const double m = std::abs(z);
                return m <= r.r || m >= 1.0 / r.r;
            } else if constexpr (std::is_same_v<T, PointDisk>) {
                return std::abs(z - r.center) < r.r;
            } else {
                // Convex (vertices on the circle in angular order, CCW):
                // inside iff on the left of every directed edge.
                const auto& vs = r.vertices;
                for (size_t j = 0; j < vs.size(); ++j) {
                    const Complex a = vs[j];
                    const Complex b = vs[(j + 1) % vs.size()];
                    const Complex e = b - a, d = z - a;
                    if (e.real() * d.imag() - e.imag() * d.real() < 0.0) return false;
                }
                return true;
            }
        },
        v_);
}

std::string Region::describe() const {
    return std::visit(
        [&](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Sector>) {
                return "sector:alpha=" + fmt(r.alpha) + ",beta=" + fmt(r.beta);
            } else if constexpr (std::is_same_v<T, AnnularSector>) {
                return "annular-sector:r=" + fmt(r.r) + ",alpha=" + fmt(r.alpha) +
                       ",beta=" + fmt(r.beta);
            } else if constexpr (std::is_same_v<T, OriginDisk>) {
                return "origin-disk:r=" + fmt(r.r);
            } else if constexpr (std::is_same_v<T, AnnulusComplement>) {
                return "annulus-complement:r=" + fmt(r.r);
            } else if constexpr (std::is_same_v<T, PointDisk>) {
                return "disk@" + fmt(arg_in_2pi(r.center)) + ":r=" + fmt(r.r);
            } else {
                std::string s = "polygon:";
                for (size_t j = 0; j < r.angles.size(); ++j)
                    s += (j ? "," : "") + fmt(r.angles[j]);
                return s;
            }
        },
        v_);
}

Region Region::parse(const std::string& spec) {
    const size_t colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "origin-disk") return origin_disk(keyed(body, "r"));
    if (head == "annulus-complement") return annulus_complement(keyed(body, "r"));
    if (head == "sector") return sector(keyed(body, "alpha"), keyed(body, "beta"));
    if (head == "annular-sector")
        return annular_sector(keyed(body, "r"), keyed(body, "alpha"),
                              keyed(body, "beta"));
    if (head.rfind("disk@", 0) == 0) {
        const double angle = num(head.substr(5));
        return point_disk(std::polar(1.0, angle), keyed(body, "r"));
    }
    if (head == "polygon") {
        std::vector<double> angles;
        size_t at = 0;
        while (at <= body.size() && !body.empty()) {
            size_t end = body.find(',', at);
            if (end == std::string::npos) end = body.size();
            angles.push_back(num(body.substr(at, end - at)));
            at = end + 1;
            if (end == body.size()) break;
        }
        return inscribed_polygon(std::move(angles));
    }
    throw std::invalid_argument("unknown region spec: " + spec);
}

double tau(const RootMultiset& roots, const Region& region) {
    if (roots.roots.empty())
        throw std::invalid_argument("tau of an empty root multiset");
    size_t count = 0;
    for (const Complex& z : roots.roots)
        if (region.contains(z)) ++count;
    return static_cast<double>(count) / static_cast<double>(roots.roots.size());
}

double sector_discrepancy(const RootMultiset& roots, double alpha, double beta) {
    return std::abs(tau(roots, Region::sector(alpha, beta)) -
                    (beta - alpha) / kTwoPi);
}

double annular_discrepancy(const RootMultiset& roots, double r, double alpha,
                           double beta) {
    return std::abs(tau(roots, Region::annular_sector(r, alpha, beta)) -
                    (beta - alpha) / kTwoPi);
}

}  // namespace polydisc
