#include "geonets/manifold.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "json.hpp"

namespace geonets {

namespace {
constexpr double kPi = std::numbers::pi;
}

bool Manifold::same_point(const Point& p, const Point& q, double tol) const {
    return distance(canonical(p).x, canonical(q).x) <= tol;
}

Point Manifold::point_from_chart(const Vec2&) const {
    throw DomainError(name() + ": no (u,v) chart; construct points from embedded coordinates");
}

Point Manifold::exp(const Point& p, const TangentVector& dir, double length) const {
    if (length == 0.0) return p;
    return geodesic(p, dir, length).end();
}

TangentVector Manifold::random_tangent(std::mt19937_64& rng, const Point& p) const {
    auto [e1, e2] = tangent_basis(p);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    double a = ang(rng);
    return tangent(p, e1 * std::cos(a) + e2 * std::sin(a));
}

std::vector<TangentVector> DirectionSet::sample() const {
    if (!full_sphere) return directions;
    std::vector<TangentVector> out;
    out.reserve(static_cast<size_t>(sample_resolution));
    auto [e1, e2] = manifold->tangent_basis(base);
    for (int i = 0; i < sample_resolution; ++i) {
        double a = 2.0 * kPi * i / sample_resolution;
        out.push_back(manifold->tangent(base, e1 * std::cos(a) + e2 * std::sin(a)));
    }
    return out;
}

GeodesicSegment GeodesicSegment::reversed() const {
    GeodesicSegment rev;
    rev.manifold = manifold;
    rev.start = end();
    rev.length = length;
    rev.samples.assign(samples.rbegin(), samples.rend());
    rev.initial_dir = manifold->tangent(rev.start, -final_dir.dir);
    rev.final_dir = manifold->tangent(start, -initial_dir.dir);
    rev.minimal = minimal;
    return rev;
}

ManifoldPtr make_manifold(const std::string& id) {
    if (id == "s2" || id == "sphere") return make_sphere();
    if (id == "rp2") return make_projective_plane();
    if (id == "plane") return make_plane();
    if (id == "paraboloid") return make_paraboloid();
    if (id.rfind("revolution:", 0) == 0) {
        return make_revolution(load_profile(id.substr(std::string("revolution:").size())));
    }
    throw DomainError("unknown manifold id: " + id +
                      " (expected s2, rp2, plane, paraboloid, or revolution:<profile-file>)");
}

RevolutionProfile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open profile file: " + path);
    nlohmann::json j;
    in >> j;
    const std::string type = j.at("type").get<std::string>();
    if (type == "spheroid") {
        double a = j.at("a").get<double>();
        double c = j.at("c").get<double>();
        if (a <= 0.0 || c <= 0.0) throw DomainError("spheroid axes must be positive");
        RevolutionProfile prof;
        prof.name = "spheroid(" + std::to_string(a) + "," + std::to_string(c) + ")";
        prof.f = [a](double t) { return a * std::sin(t); };
        prof.df = [a](double t) { return a * std::cos(t); };
        prof.ddf = [a](double t) { return -a * std::sin(t); };
        prof.g = [c](double t) { return c * std::cos(t); };
        prof.dg = [c](double t) { return -c * std::sin(t); };
        prof.ddg = [c](double t) { return -c * std::cos(t); };
        prof.t_min = 0.0;
        prof.t_max = kPi;
        prof.pole_min = prof.pole_max = true;
        // K = c^2 / (a^2 cos^2 t + c^2 sin^2 t)^2, extremal at pole and equator.
        double e_max = std::max(a * a, c * c);
        prof.curvature_lower_bound = (c * c) / (e_max * e_max);
        return prof;
    }
    if (type == "poly_r_of_z") {
        auto coeffs = j.at("coeffs").get<std::vector<double>>();
        double z_min = j.at("z_min").get<double>();
        double z_max = j.at("z_max").get<double>();
        if (coeffs.empty() || z_min >= z_max) throw DomainError("poly_r_of_z needs coeffs and z_min < z_max");
        auto eval = [coeffs](double z, int deriv) {
            double acc = 0.0;
            for (size_t i = coeffs.size(); i-- > 0;) {
                int expo = static_cast<int>(i) - deriv;
                if (expo < 0) continue;
                double c = coeffs[i];
                for (int d = 0; d < deriv; ++d) c *= static_cast<double>(i - d);
                acc += c * std::pow(z, expo);
            }
            return acc;
        };
        RevolutionProfile prof;
        prof.name = "poly_r_of_z";
        prof.f = [eval](double t) { return eval(t, 0); };
        prof.df = [eval](double t) { return eval(t, 1); };
        prof.ddf = [eval](double t) { return eval(t, 2); };
        prof.g = [](double t) { return t; };
        prof.dg = [](double) { return 1.0; };
        prof.ddg = [](double) { return 0.0; };
        prof.t_min = z_min;
        prof.t_max = z_max;
        prof.pole_min = prof.pole_max = false;
        prof.curvature_lower_bound = j.value("curvature_lower_bound", 0.0);
        return prof;
    }
    throw DomainError("unknown profile type: " + type);
}

}  // namespace geonets
