#pragma once

#include "quiverkit/rational.hpp"

#include <array>
#include <compare>
#include <string>

namespace quiverkit {

// Element of Q(sqrt(2)): a + b*sqrt(2) with exact rational a, b.
struct QuadRational {
    Rational a;
    Rational b;

    QuadRational() = default;
    QuadRational(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
    static QuadRational of(long long n) { return {Rational(n), Rational(0)}; }
    static QuadRational half(long long n) { return {Rational(n, 2), Rational(0)}; }
    // n / sqrt(2) == (n/2) * sqrt(2)
    static QuadRational over_sqrt2(long long n) { return {Rational(0), Rational(n, 2)}; }

    friend QuadRational operator+(const QuadRational& x, const QuadRational& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend QuadRational operator-(const QuadRational& x, const QuadRational& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend QuadRational operator-(const QuadRational& x) { return {-x.a, -x.b}; }
    friend QuadRational operator*(const QuadRational& x, const QuadRational& y) {
        // (a + b r)(c + d r) = ac + 2bd + (ad + bc) r,  r^2 = 2
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const QuadRational& x, const QuadRational& y) = default;
    friend bool operator<(const QuadRational& x, const QuadRational& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

// Quaternion over Q(sqrt(2)); enough to realize the binary octahedral group exactly.
struct Quaternion {
    QuadRational w, x, y, z;  // w + x i + y j + z k

    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {
            p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
        };
    }
    friend Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
    friend bool operator==(const Quaternion& p, const Quaternion& q) = default;
    friend bool operator<(const Quaternion& p, const Quaternion& q) {
        if (!(p.w == q.w)) return p.w < q.w;
        if (!(p.x == q.x)) return p.x < q.x;
        if (!(p.y == q.y)) return p.y < q.y;
        return p.z < q.z;
    }
};

// Display labels in the conventional forms "1", "-i", "(1+i-j+k)/2", "(i-k)/sqrt2".
std::string quaternion_label(const Quaternion& q);

}  // namespace quiverkit
