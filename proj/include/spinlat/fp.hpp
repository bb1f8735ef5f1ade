#pragma once

#include <cstdint>
#include <stdexcept>

namespace spinlat {

/// Prime-field element with runtime modulus. An element with p == 0 is a
/// plain integer constant (0, 1, small Gram entries) that adopts the modulus
/// of whatever it is combined with; this lets generic code write K(0), K(1).
struct Fp {
    int64_t v = 0;
    int64_t p = 0;

    Fp() = default;
    Fp(int64_t value) : v(value) {}
    Fp(int64_t value, int64_t modulus) : v(value), p(modulus) { normalize(); }

    void normalize() {
        if (p) {
            v %= p;
            if (v < 0) v += p;
        }
    }

    static int64_t common_mod(const Fp& a, const Fp& b) {
        if (a.p && b.p && a.p != b.p) throw std::invalid_argument("Fp modulus mismatch");
        return a.p ? a.p : b.p;
    }

    friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.v + b.v, common_mod(a, b)); }
    friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.v - b.v, common_mod(a, b)); }
    friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.v * b.v, common_mod(a, b)); }
    Fp operator-() const { return Fp(-v, p); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend Fp operator/(const Fp& a, const Fp& b) {
        int64_t m = common_mod(a, b);
        if (!m) {
            // both operands are modulus-free constants; only exact integer
            // quotients are meaningful (unit pivots in generic elimination)
            if (b.v != 0 && a.v % b.v == 0) return Fp(a.v / b.v);
            throw std::invalid_argument("Fp division requires a modulus");
        }
        Fp bb(b.v, m);
        if (bb.v == 0) throw std::domain_error("Fp division by zero");
        return Fp(a.v * mod_inverse(bb.v, m), m);
    }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        int64_t m = a.p && b.p ? (a.p == b.p ? a.p : -1) : (a.p ? a.p : b.p);
        if (m == -1) throw std::invalid_argument("Fp modulus mismatch");
        if (!m) return a.v == b.v;
        auto red = [m](int64_t x) { x %= m; return x < 0 ? x + m : x; };
        return red(a.v) == red(b.v);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    static int64_t mod_inverse(int64_t a, int64_t m) {
        int64_t t = 0, nt = 1, r = m, nr = a % m;
        if (nr < 0) nr += m;
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw std::domain_error("Fp element not invertible");
        return t < 0 ? t + m : t;
    }
};

}  // namespace spinlat
