#pragma once

#include <array>
#include <cmath>
#include <ostream>

namespace geonets {

struct Vec2 {
    double u = 0.0;
    double v = 0.0;

    Vec2() = default;
    Vec2(double u_, double v_) : u(u_), v(v_) {}

    Vec2 operator+(const Vec2& o) const { return {u + o.u, v + o.v}; }
    Vec2 operator-(const Vec2& o) const { return {u - o.u, v - o.v}; }
    Vec2 operator*(double s) const { return {u * s, v * s}; }
    Vec2 operator/(double s) const { return {u / s, v / s}; }
    Vec2& operator+=(const Vec2& o) { u += o.u; v += o.v; return *this; }
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& a) { return a * s; }
inline Vec2 operator*(double s, const Vec2& a) { return a * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double dot(const Vec2& a, const Vec2& b) { return a.u * b.u + a.v * b.v; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double norm(const Vec2& a) { return std::sqrt(dot(a, a)); }

inline double squared_norm(const Vec3& a) { return dot(a, a); }

inline Vec3 normalized(const Vec3& a) {
    double n = norm(a);
    return n > 0.0 ? a / n : Vec3{};
}

inline Vec2 normalized(const Vec2& a) {
    double n = norm(a);
    return n > 0.0 ? a / n : Vec2{};
}

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

// Angle between two nonzero vectors, in [0, pi].
inline double angle_between(const Vec3& a, const Vec3& b) {
    double c = dot(a, b) / (norm(a) * norm(b));
    c = std::fmax(-1.0, std::fmin(1.0, c));
    return std::acos(c);
}

inline double clamp_unit(double c) { return std::fmax(-1.0, std::fmin(1.0, c)); }

inline std::ostream& operator<<(std::ostream& os, const Vec3& a) {
    return os << "(" << a.x << ", " << a.y << ", " << a.z << ")";
}

inline std::ostream& operator<<(std::ostream& os, const Vec2& a) {
    return os << "(" << a.u << ", " << a.v << ")";
}

}  // namespace geonets
