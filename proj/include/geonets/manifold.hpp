#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "geonets/vec.hpp"

namespace geonets {

class Manifold;
using ManifoldPtr = std::shared_ptr<const Manifold>;

enum class ManifoldKind { Sphere, ProjectivePlane, Plane, Revolution };

// A point on a model manifold. Every supported manifold embeds in R^3, so the
// embedded position is always available; chart manifolds (plane, surfaces of
// revolution) additionally carry (u, v) chart coordinates, which are the
// authoritative representation there.
struct Point {
    Vec3 x;
    Vec2 uv;
};

// Tangent vector at a base point, stored in embedded coordinates (tangent to
// the surface) with chart components alongside on chart manifolds.
struct TangentVector {
    Point base;
    Vec3 dir;
    Vec2 duv;
};

enum class Minimality { Yes, No, Unchecked };

// A solved geodesic: start point, unit initial direction, arc length, and an
// arc-length spaced sample polyline. samples.front() == start.
struct GeodesicSegment {
    ManifoldPtr manifold;
    Point start;
    TangentVector initial_dir;
    double length = 0.0;
    std::vector<Point> samples;
    TangentVector final_dir;  // unit tangent at the endpoint, pointing forward
    Minimality minimal = Minimality::Unchecked;

    const Point& end() const { return samples.back(); }
    GeodesicSegment reversed() const;
};

// The set W of unit initial directions at `base` of minimizing geodesics to a
// target. At a spherical antipode W is the whole unit tangent circle; that
// case is kept symbolic and sampled on demand.
struct DirectionSet {
    ManifoldPtr manifold;
    Point base;
    bool full_sphere = false;
    std::vector<TangentVector> directions;
    int sample_resolution = 64;

    std::vector<TangentVector> sample() const;
    bool empty() const { return !full_sphere && directions.empty(); }
};

// Shooting/BVP solver knobs. Defaults follow the fan-shooting scheme: a fan of
// initial directions, closest-approach capture, clustering by initial angle,
// damped Gauss-Newton refinement.
struct SolveConfig {
    int fan_count = 720;
    double capture_delta = 1e-3;   // endpoint capture radius; widened with arc length so a
                                   // coarse fan cannot drop a root between adjacent rays
    int cluster_gap = 3;           // cluster break threshold, in fan spacings
    double newton_tol = 1e-9;
    int newton_max_iter = 60;
    double integrate_step = 1e-2;
    double length_cap = 0.0;       // 0 = manifold default (2 x diameter estimate)
    double multiplicity_tol = 1e-7;
    double dedup_angle = 1e-6;
};

struct BvpResult {
    std::vector<GeodesicSegment> segments;  // sorted by length
    bool complete = true;                   // false when fan enumeration may have missed solutions
    std::string diagnostics;
};

// Solver failures carry diagnostics; a wrong value is never returned silently.
class SolveError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Profile curve (f(t), g(t)) of a surface of revolution
// X(t, v) = (f(t) cos v, f(t) sin v, g(t)), with f >= 0 on [t_min, t_max].
// Ends where f -> 0 are rotation poles; geodesics may pass through them.
struct RevolutionProfile {
    std::string name;
    std::function<double(double)> f, df, ddf;
    std::function<double(double)> g, dg, ddg;
    double t_min = 0.0;
    double t_max = 1.0;
    bool pole_min = false;
    bool pole_max = false;
    double curvature_lower_bound = 0.0;
};

class Manifold : public std::enable_shared_from_this<Manifold> {
  public:
    virtual ~Manifold() = default;

    virtual ManifoldKind kind() const = 0;
    virtual std::string name() const = 0;

    virtual double curvature_lower_bound() const = 0;
    // nullopt = no analytic value (revolution surfaces report an estimate separately).
    virtual std::optional<double> injectivity_radius() const = 0;
    virtual double diameter_estimate() const = 0;

    // --- points and tangents ---------------------------------------------
    virtual Point point_from_embedded(const Vec3& x) const = 0;
    virtual Point point_from_chart(const Vec2& uv) const;
    virtual Point canonical(const Point& p) const { return p; }
    // Nearest surface point to an off-surface position (used by flows).
    virtual Point project(const Vec3& x) const = 0;
    virtual bool on_manifold(const Point& p, double tol = 1e-9) const = 0;

    // Unit tangent at p with the given embedded direction (projected onto the
    // tangent plane and normalized).
    virtual TangentVector tangent(const Point& p, const Vec3& dir) const = 0;
    // Orthonormal embedded basis of the tangent plane at p.
    virtual std::pair<Vec3, Vec3> tangent_basis(const Point& p) const = 0;

    bool same_point(const Point& p, const Point& q, double tol = 1e-9) const;

    // --- geometry ----------------------------------------------------------
    virtual double distance(const Point& p, const Point& q) const = 0;
    virtual DirectionSet minimal_directions(const Point& q, const Point& p) const = 0;
    virtual double gaussian_curvature(const Point& p) const = 0;

    // Geodesic initial value problem; exact on analytic manifolds, 4th-order
    // chart integration on surfaces of revolution. step <= 0 selects the
    // default (length/1024 capped at 1e-2).
    virtual GeodesicSegment geodesic(const Point& p, const TangentVector& dir, double length,
                                     double step = 0.0) const = 0;

    // Geodesic boundary value problem: connecting geodesics sorted by length,
    // at least the minimizing one(s), up to the length cap.
    virtual BvpResult connecting_geodesics(const Point& p, const Point& q,
                                           const SolveConfig& config = {}) const = 0;

    // Re-solve an edge p -> q staying on the geodesic branch nearest the warm
    // start (previous initial direction and length).
    virtual GeodesicSegment resolve_edge(const Point& p, const Point& q, const TangentVector& warm_dir,
                                         double warm_length, const SolveConfig& config = {}) const = 0;

    // Exponential map endpoint. Default integrates the IVP; analytic
    // manifolds override with the closed form.
    virtual Point exp(const Point& p, const TangentVector& dir, double length) const;

    virtual Point random_point(std::mt19937_64& rng) const = 0;
    TangentVector random_tangent(std::mt19937_64& rng, const Point& p) const;

    double default_length_cap() const { return 2.0 * diameter_estimate(); }
};

// --- factories --------------------------------------------------------------
ManifoldPtr make_sphere();
ManifoldPtr make_projective_plane();
ManifoldPtr make_plane();
ManifoldPtr make_paraboloid();
ManifoldPtr make_spheroid(double equator_radius, double polar_height);
ManifoldPtr make_revolution(RevolutionProfile profile);

// Resolve a manifold id: "s2", "rp2", "plane", "paraboloid",
// "revolution:<profile-file>" (JSON profile description).
ManifoldPtr make_manifold(const std::string& id);

// Load a revolution profile from a JSON file. Supported forms:
//   {"type": "spheroid", "a": <equator radius>, "c": <polar height>}
//   {"type": "poly_r_of_z", "coeffs": [c0, c1, ...], "z_min": .., "z_max": ..}
RevolutionProfile load_profile(const std::string& path);

// --- free-function surface, mirroring the manifold ops -----------------------
inline double distance(const ManifoldPtr& m, const Point& p, const Point& q) {
    return m->distance(p, q);
}
inline DirectionSet minimal_directions(const ManifoldPtr& m, const Point& q, const Point& p) {
    return m->minimal_directions(q, p);
}
inline double gaussian_curvature(const ManifoldPtr& m, const Point& p) {
    return m->gaussian_curvature(p);
}

// Metric inner product of two tangent vectors at a common base point.
inline double metric_dot(const TangentVector& a, const TangentVector& b) { return dot(a.dir, b.dir); }
inline double metric_norm(const TangentVector& a) { return norm(a.dir); }
inline double tangent_angle(const TangentVector& a, const TangentVector& b) {
    return angle_between(a.dir, b.dir);
}

}  // namespace geonets
