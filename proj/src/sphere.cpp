#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "geonets/manifold.hpp"

namespace geonets {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAntipodalTol = 1e-9;

int sample_count(double length, double step) {
    if (length <= 0.0) return 2;
    double h = step > 0.0 ? step : std::min(1e-2, length / 1024.0);
    h = std::min(h, length);
    return std::max(2, static_cast<int>(std::ceil(length / h)) + 1);
}

// Deterministic orthonormal frame of the tangent plane at a unit vector.
std::pair<Vec3, Vec3> unit_sphere_basis(const Vec3& p) {
    Vec3 pick = std::abs(p.x) < 0.7 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 e1 = normalized(cross(p, pick));
    Vec3 e2 = cross(p, e1);
    return {e1, e2};
}

Vec3 great_circle(const Vec3& p, const Vec3& w, double t) {
    return p * std::cos(t) + w * std::sin(t);
}

Vec3 great_circle_tangent(const Vec3& p, const Vec3& w, double t) {
    return p * -std::sin(t) + w * std::cos(t);
}

class RoundSphere final : public Manifold {
  public:
    ManifoldKind kind() const override { return ManifoldKind::Sphere; }
    std::string name() const override { return "s2"; }
    double curvature_lower_bound() const override { return 1.0; }
    std::optional<double> injectivity_radius() const override { return kPi; }
    double diameter_estimate() const override { return kPi; }

    Point point_from_embedded(const Vec3& x) const override {
        if (std::abs(norm(x) - 1.0) > 1e-12) {
            std::ostringstream os;
            os << "sphere point must be a unit 3-vector, got |x| = " << norm(x);
            throw DomainError(os.str());
        }
        return Point{x, {}};
    }

    Point project(const Vec3& x) const override {
        double n = norm(x);
        if (n < 1e-14) throw DomainError("cannot project the origin onto the sphere");
        return Point{x / n, {}};
    }

    bool on_manifold(const Point& p, double tol) const override {
        return std::abs(norm(p.x) - 1.0) <= tol;
    }

    TangentVector tangent(const Point& p, const Vec3& dir) const override {
        Vec3 w = dir - p.x * dot(dir, p.x);
        double n = norm(w);
        if (n < 1e-14) throw DomainError("direction is normal to the sphere at the base point");
        return TangentVector{p, w / n, {}};
    }

    std::pair<Vec3, Vec3> tangent_basis(const Point& p) const override {
        return unit_sphere_basis(p.x);
    }

    double distance(const Point& p, const Point& q) const override {
        return std::acos(clamp_unit(dot(p.x, q.x)));
    }

    DirectionSet minimal_directions(const Point& q, const Point& p) const override {
        if (norm(p.x - q.x) <= kAntipodalTol) {
            throw DomainError("minimal_directions requires distinct points");
        }
        DirectionSet set;
        set.manifold = shared_from_this();
        set.base = q;
        if (norm(p.x + q.x) <= kAntipodalTol) {
            set.full_sphere = true;  // antipodal cut locus: the whole tangent circle
            return set;
        }
        set.directions.push_back(tangent(q, p.x - q.x * dot(p.x, q.x)));
        return set;
    }

    double gaussian_curvature(const Point&) const override { return 1.0; }

    GeodesicSegment geodesic(const Point& p, const TangentVector& dir, double length,
                             double step) const override {
        if (length < 0.0) throw DomainError("geodesic length must be >= 0");
        Vec3 w = dir.dir;
        if (std::abs(norm(w) - 1.0) > 1e-10) throw DomainError("initial direction must be a unit tangent");
        GeodesicSegment seg;
        seg.manifold = shared_from_this();
        seg.start = p;
        seg.initial_dir = TangentVector{p, w, {}};
        seg.length = length;
        int n = sample_count(length, step);
        seg.samples.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            double t = length * i / (n - 1);
            seg.samples.push_back(Point{great_circle(p.x, w, t), {}});
        }
        seg.final_dir = TangentVector{seg.samples.back(), great_circle_tangent(p.x, w, length), {}};
        return seg;
    }

    Point exp(const Point& p, const TangentVector& dir, double length) const override {
        return Point{great_circle(p.x, dir.dir, length), {}};
    }

    BvpResult connecting_geodesics(const Point& p, const Point& q,
                                   const SolveConfig& config) const override {
        if (norm(p.x - q.x) <= kAntipodalTol) {
            throw DomainError("connecting_geodesics requires distinct endpoints");
        }
        double cap = config.length_cap > 0.0 ? config.length_cap : default_length_cap();
        BvpResult res;
        if (norm(p.x + q.x) <= kAntipodalTol) {
            // Continuum of minimizing semicircles; return one representative per wrap.
            auto [e1, e2] = tangent_basis(p);
            (void)e2;
            for (double len = kPi; len <= cap; len += 2.0 * kPi) {
                res.segments.push_back(geodesic(p, tangent(p, e1), len, config.integrate_step));
            }
            res.diagnostics =
                "antipodal endpoints: every tangent direction yields a minimizing geodesic; "
                "one representative returned per wrap";
            return res;
        }
        double d = distance(p, q);
        TangentVector u = tangent(p, q.x - p.x * dot(q.x, p.x));
        TangentVector ubar = tangent(p, -u.dir);
        for (int k = 0;; ++k) {
            double fwd = d + 2.0 * kPi * k;
            double bwd = (2.0 * kPi - d) + 2.0 * kPi * k;
            bool any = false;
            if (fwd <= cap) {
                res.segments.push_back(geodesic(p, u, fwd, config.integrate_step));
                any = true;
            }
            if (bwd <= cap) {
                res.segments.push_back(geodesic(p, ubar, bwd, config.integrate_step));
                any = true;
            }
            if (!any) break;
        }
        std::sort(res.segments.begin(), res.segments.end(),
                  [](const GeodesicSegment& a, const GeodesicSegment& b) { return a.length < b.length; });
        return res;
    }

    GeodesicSegment resolve_edge(const Point& p, const Point& q, const TangentVector& warm_dir,
                                 double warm_length, const SolveConfig& config) const override {
        if (norm(p.x - q.x) <= kAntipodalTol) {
            throw DomainError("resolve_edge requires distinct endpoints");
        }
        if (norm(p.x + q.x) <= kAntipodalTol) {
            // Antipodal continuum: keep the warm direction, snap length to an odd
            // multiple of pi nearest the warm length.
            Vec3 w = warm_dir.dir - p.x * dot(warm_dir.dir, p.x);
            TangentVector dir = norm(w) > 1e-12 ? tangent(p, w) : tangent(p, tangent_basis(p).first);
            double k = std::max(0.0, std::round((warm_length - kPi) / (2.0 * kPi)));
            return geodesic(p, dir, kPi + 2.0 * kPi * k, config.integrate_step);
        }
        double d = distance(p, q);
        TangentVector u = tangent(p, q.x - p.x * dot(q.x, p.x));
        bool aligned = dot(warm_dir.dir, u.dir) >= 0.0;
        TangentVector dir = aligned ? u : tangent(p, -u.dir);
        double base = aligned ? d : 2.0 * kPi - d;
        double k = std::max(0.0, std::round((warm_length - base) / (2.0 * kPi)));
        return geodesic(p, dir, base + 2.0 * kPi * k, config.integrate_step);
    }

    Point random_point(std::mt19937_64& rng) const override {
        std::normal_distribution<double> n01;
        Vec3 x{n01(rng), n01(rng), n01(rng)};
        while (norm(x) < 1e-6) x = Vec3{n01(rng), n01(rng), n01(rng)};
        return Point{normalized(x), {}};
    }
};

// RP^2 as the sphere quotient: every operation lifts to S^2 and projects back.
// The canonical representative has its first nonzero coordinate positive.
class ProjectivePlane final : public Manifold {
  public:
    ProjectivePlane() : sphere_(make_sphere()) {}

    ManifoldKind kind() const override { return ManifoldKind::ProjectivePlane; }
    std::string name() const override { return "rp2"; }
    double curvature_lower_bound() const override { return 1.0; }
    std::optional<double> injectivity_radius() const override { return kPi / 2.0; }
    double diameter_estimate() const override { return kPi / 2.0; }

    Point canonical(const Point& p) const override {
        Vec3 x = p.x;
        double lead = 0.0;
        for (int i = 0; i < 3; ++i) {
            if (std::abs(x[i]) > 1e-9) {
                lead = x[i];
                break;
            }
        }
        if (lead < 0.0) x = -x;
        return Point{x, {}};
    }

    Point point_from_embedded(const Vec3& x) const override {
        if (std::abs(norm(x) - 1.0) > 1e-12) {
            throw DomainError("rp2 representative must be a unit 3-vector");
        }
        return canonical(Point{x, {}});
    }

    Point project(const Vec3& x) const override { return canonical(sphere_->project(x)); }

    bool on_manifold(const Point& p, double tol) const override {
        return std::abs(norm(p.x) - 1.0) <= tol;
    }

    TangentVector tangent(const Point& p, const Vec3& dir) const override {
        Vec3 w = dir - p.x * dot(dir, p.x);
        double n = norm(w);
        if (n < 1e-14) throw DomainError("direction is normal to rp2 at the base point");
        return TangentVector{p, w / n, {}};
    }

    std::pair<Vec3, Vec3> tangent_basis(const Point& p) const override {
        return unit_sphere_basis(p.x);
    }

    double distance(const Point& p, const Point& q) const override {
        // min over the two lifts = arccos |<p, q>|.
        return std::acos(clamp_unit(std::abs(dot(p.x, q.x))));
    }

    DirectionSet minimal_directions(const Point& q, const Point& p) const override {
        double c = dot(q.x, p.x);
        if (1.0 - std::abs(c) <= 1e-12) throw DomainError("minimal_directions requires distinct points");
        DirectionSet set;
        set.manifold = shared_from_this();
        set.base = q;
        double d_near = std::acos(clamp_unit(std::abs(c)));
        if (std::abs(distance(q, p) - kPi / 2.0) <= 1e-9 || std::abs(c) <= 1e-12) {
            // Exactly halfway: both lifted directions minimize (two antipodal tangents).
            TangentVector w = tangent(q, p.x - q.x * c);
            set.directions.push_back(w);
            set.directions.push_back(tangent(q, -w.dir));
            return set;
        }
        Vec3 target = c >= 0.0 ? p.x : -p.x;
        set.directions.push_back(tangent(q, target - q.x * dot(target, q.x)));
        (void)d_near;
        return set;
    }

    double gaussian_curvature(const Point&) const override { return 1.0; }

    GeodesicSegment geodesic(const Point& p, const TangentVector& dir, double length,
                             double step) const override {
        if (length < 0.0) throw DomainError("geodesic length must be >= 0");
        Vec3 w = dir.dir;
        if (std::abs(norm(w) - 1.0) > 1e-10) throw DomainError("initial direction must be a unit tangent");
        GeodesicSegment seg;
        seg.manifold = shared_from_this();
        seg.start = canonical(p);
        Vec3 p0 = seg.start.x;
        Vec3 w0 = dot(p.x, p0) >= 0.0 ? w : -w;  // transport the direction to the canonical lift
        seg.initial_dir = TangentVector{seg.start, w0, {}};
        seg.length = length;
        int n = sample_count(length, step);
        seg.samples.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            double t = length * i / (n - 1);
            seg.samples.push_back(canonical(Point{great_circle(p0, w0, t), {}}));
        }
        Vec3 lift_end = great_circle(p0, w0, length);
        Vec3 tan_end = great_circle_tangent(p0, w0, length);
        bool flipped = dot(lift_end, seg.samples.back().x) < 0.0;
        seg.final_dir = TangentVector{seg.samples.back(), flipped ? -tan_end : tan_end, {}};
        return seg;
    }

    Point exp(const Point& p, const TangentVector& dir, double length) const override {
        return canonical(Point{great_circle(p.x, dir.dir, length), {}});
    }

    BvpResult connecting_geodesics(const Point& p, const Point& q,
                                   const SolveConfig& config) const override {
        double c = dot(p.x, q.x);
        if (1.0 - std::abs(c) <= 1e-12) {
            throw DomainError("connecting_geodesics requires distinct endpoints");
        }
        double cap = config.length_cap > 0.0 ? config.length_cap : default_length_cap();
        // Lifted great circle from p hits q every pi along both prongs:
        // lengths d + k*pi toward the nearer lift and (pi - d) + k*pi away.
        double d_near = std::acos(clamp_unit(std::abs(c)));
        Vec3 target = c >= 0.0 ? q.x : -q.x;
        TangentVector u = tangent(p, target - p.x * dot(target, p.x));
        TangentVector ubar = tangent(p, -u.dir);
        BvpResult res;
        for (int k = 0;; ++k) {
            double fwd = d_near + kPi * k;
            double bwd = (kPi - d_near) + kPi * k;
            bool any = false;
            if (fwd <= cap) {
                res.segments.push_back(geodesic(p, u, fwd, config.integrate_step));
                any = true;
            }
            if (bwd <= cap) {
                res.segments.push_back(geodesic(p, ubar, bwd, config.integrate_step));
                any = true;
            }
            if (!any) break;
        }
        std::sort(res.segments.begin(), res.segments.end(),
                  [](const GeodesicSegment& a, const GeodesicSegment& b) { return a.length < b.length; });
        return res;
    }

    GeodesicSegment resolve_edge(const Point& p, const Point& q, const TangentVector& warm_dir,
                                 double warm_length, const SolveConfig& config) const override {
        double c = dot(p.x, q.x);
        if (1.0 - std::abs(c) <= 1e-12) throw DomainError("resolve_edge requires distinct endpoints");
        double d_near = std::acos(clamp_unit(std::abs(c)));
        Vec3 target = c >= 0.0 ? q.x : -q.x;
        TangentVector u = tangent(p, target - p.x * dot(target, p.x));
        bool aligned = dot(warm_dir.dir, u.dir) >= 0.0;
        TangentVector dir = aligned ? u : tangent(p, -u.dir);
        double base = aligned ? d_near : kPi - d_near;
        double k = std::max(0.0, std::round((warm_length - base) / kPi));
        return geodesic(p, dir, base + kPi * k, config.integrate_step);
    }

    Point random_point(std::mt19937_64& rng) const override {
        return canonical(sphere_->random_point(rng));
    }

  private:
    ManifoldPtr sphere_;
};

}  // namespace

ManifoldPtr make_sphere() { return std::make_shared<RoundSphere>(); }
ManifoldPtr make_projective_plane() { return std::make_shared<ProjectivePlane>(); }

}  // namespace geonets
