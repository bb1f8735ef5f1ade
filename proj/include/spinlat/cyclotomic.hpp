#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "spinlat/rational.hpp"

namespace spinlat {

namespace detail {

inline uint64_t euler_phi(uint64_t n) {
    uint64_t result = n;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Per-conductor data: the cyclotomic polynomial and reduced powers of zeta.
struct CycContext {
    uint64_t n = 1;
    uint64_t phi = 1;
    std::vector<Int> poly;                  // monic, degree phi
    std::vector<std::vector<Int>> powtab;   // x^e mod poly, e in [0, n)
};

/// Exact division of integer polynomials (remainder must vanish).
inline std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    std::size_t deg_den = den.size() - 1;
    std::vector<Int> q(num.size() - deg_den, Int(0));
    // den is monic in all uses here (cyclotomic polynomials).
    for (std::size_t i = num.size() - 1; i + 1 > deg_den; --i) {
        Int c = num[i];
        if (c == 0) continue;
        std::size_t shift = i - deg_den;
        q[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    return q;
}

inline const std::vector<Int>& cyclotomic_poly(uint64_t n);

inline std::vector<Int> compute_cyclotomic_poly(uint64_t n) {
    if (n == 1) return {Int(-1), Int(1)};
    std::vector<Int> num(n + 1, Int(0));  // x^n - 1
    num[0] = -1;
    num[n] = 1;
    for (uint64_t d = 1; d < n; ++d)
        if (n % d == 0) num = poly_div_exact(std::move(num), cyclotomic_poly(d));
    return num;
}

inline const std::vector<Int>& cyclotomic_poly(uint64_t n) {
    static std::map<uint64_t, std::vector<Int>> cache;
    static std::recursive_mutex mtx;  // computation recurses into divisors
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic_poly(n)).first;
    return it->second;
}

inline std::shared_ptr<const CycContext> cyc_context(uint64_t n) {
    static std::map<uint64_t, std::shared_ptr<const CycContext>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto ctx = std::make_shared<CycContext>();
    ctx->n = n;
    ctx->phi = euler_phi(n);
    ctx->poly = cyclotomic_poly(n);
    uint64_t phi = ctx->phi;
    ctx->powtab.resize(n);
    for (uint64_t e = 0; e < n && e < phi; ++e) {
        ctx->powtab[e].assign(phi, Int(0));
        ctx->powtab[e][e] = 1;
    }
    for (uint64_t e = phi; e < n; ++e) {
        // x * powtab[e-1], reduced via x^phi = -(lower part of poly)
        std::vector<Int> next(phi, Int(0));
        const auto& prev = ctx->powtab[e - 1];
        Int top = prev[phi - 1];
        for (uint64_t i = 1; i < phi; ++i) next[i] = prev[i - 1];
        if (top != 0)
            for (uint64_t i = 0; i < phi; ++i) next[i] -= top * ctx->poly[i];
        ctx->powtab[e] = std::move(next);
    }
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::move(ctx)).first;
    return it->second;
}

}  // namespace detail

/// Element of Q(zeta_N), stored in the power basis reduced modulo the N-th
/// cyclotomic polynomial, so the representation is canonical for a fixed
/// conductor; mixed-conductor arithmetic promotes to the lcm.
class CycNum {
  public:
    CycNum() : n_(1), c_(1, Rat(0)) {}
    CycNum(const Rat& r) : n_(1), c_(1, r) {}
    CycNum(int v) : n_(1), c_(1, Rat(v)) {}
    CycNum(const Int& v) : n_(1), c_(1, Rat(v)) {}

    /// zeta_N^k. The conductor of the result is N (not reduced to minimal).
    static CycNum root_of_unity(uint64_t n, int64_t k) {
        if (n < 1) throw std::invalid_argument("conductor must be positive");
        auto ctx = detail::cyc_context(n);
        int64_t e = k % static_cast<int64_t>(n);
        if (e < 0) e += n;
        CycNum out;
        out.n_ = n;
        out.c_.assign(ctx->phi, Rat(0));
        const auto& row = ctx->powtab[static_cast<uint64_t>(e)];
        for (uint64_t i = 0; i < ctx->phi; ++i) out.c_[i] = Rat(row[i]);
        return out;
    }

    uint64_t conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_) if (x != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i) if (c_[i] != 0) return false;
        return true;
    }

    /// Rational value; throws if the element is not rational.
    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("CycNum is not rational");
        return c_[0];
    }

    CycNum promoted(uint64_t m) const {
        if (m == n_) return *this;
        if (m % n_ != 0) throw std::invalid_argument("conductor is not a multiple");
        auto ctx = detail::cyc_context(m);
        CycNum out;
        out.n_ = m;
        out.c_.assign(ctx->phi, Rat(0));
        uint64_t stride = m / n_;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& row = ctx->powtab[(i * stride) % m];
            for (uint64_t j = 0; j < ctx->phi; ++j) out.c_[j] += c_[i] * Rat(row[j]);
        }
        return out;
    }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        uint64_t m = std::lcm(a.n_, b.n_);
        CycNum x = a.promoted(m), y = b.promoted(m);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }
    CycNum operator-() const {
        CycNum out = *this;
        for (auto& x : out.c_) x = -x;
        return out;
    }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        uint64_t m = std::lcm(a.n_, b.n_);
        CycNum x = a.promoted(m), y = b.promoted(m);
        auto ctx = detail::cyc_context(m);
        uint64_t phi = ctx->phi;
        std::vector<Rat> conv(2 * phi - 1, Rat(0));
        for (std::size_t i = 0; i < phi; ++i) {
            if (x.c_[i] == 0) continue;
            for (std::size_t j = 0; j < phi; ++j) {
                if (y.c_[j] == 0) continue;
                conv[i + j] += x.c_[i] * y.c_[j];
            }
        }
        CycNum out;
        out.n_ = m;
        out.c_.assign(phi, Rat(0));
        for (std::size_t e = 0; e < conv.size(); ++e) {
            if (conv[e] == 0) continue;
            std::size_t er = e >= m ? e - m : e;  // zeta^m = 1
            if (er < phi && er == e) {
                out.c_[er] += conv[e];
            } else {
                const auto& row = ctx->powtab[er];
                for (uint64_t k = 0; k < phi; ++k) out.c_[k] += conv[e] * Rat(row[k]);
            }
        }
        return out;
    }

    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    friend CycNum operator*(const CycNum& a, const Rat& s) {
        CycNum out = a;
        for (auto& x : out.c_) x *= s;
        return out;
    }
    friend CycNum operator*(const Rat& s, const CycNum& a) { return a * s; }
    friend CycNum operator/(const CycNum& a, const Rat& s) {
        if (s == 0) throw std::domain_error("division by zero");
        CycNum out = a;
        for (auto& x : out.c_) x /= s;
        return out;
    }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        uint64_t m = std::lcm(a.n_, b.n_);
        return a.promoted(m).c_ == b.promoted(m).c_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Complex conjugation: zeta_N -> zeta_N^(N-1).
    CycNum conj() const {
        if (n_ <= 2) return *this;
        auto ctx = detail::cyc_context(n_);
        CycNum out;
        out.n_ = n_;
        out.c_.assign(ctx->phi, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& row = ctx->powtab[(i * (n_ - 1)) % n_];
            for (uint64_t j = 0; j < ctx->phi; ++j) out.c_[j] += c_[i] * Rat(row[j]);
        }
        return out;
    }

    /// Numerical embedding zeta_N -> exp(2*pi*i/N), evaluated in extended
    /// precision. Adequate for cross-checks at tolerances down to ~1e-15
    /// relative; exact questions are always answered by exact arithmetic.
    std::complex<long double> to_complex() const {
        const long double pi = 3.14159265358979323846264338327950288L;
        std::complex<long double> z = std::polar(1.0L, 2.0L * pi / static_cast<long double>(n_));
        std::complex<long double> acc(0.0L, 0.0L);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * z + std::complex<long double>(rat_to_ld(c_[i]), 0.0L);
        }
        return acc;
    }

  private:
    uint64_t n_;
    std::vector<Rat> c_;
};

/// Positive real square root of a positive integer, as an exact cyclotomic
/// number: square factors come out directly, sqrt(2) = zeta8 + zeta8^-1, and
/// odd primes use the quadratic Gauss sum G(p) = sum e(k^2/p), corrected by
/// G(p) = sqrt(p) for p = 1 mod 4 and G(p) = i*sqrt(p) for p = 3 mod 4.
inline CycNum sqrt_positive_integer(const Int& m, bool flip_sign = false) {
    if (m <= 0) throw std::invalid_argument("sqrt_positive_integer requires m >= 1");
    Int rest = m;
    Int square_part(1);
    CycNum out(Rat(1));
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        unsigned mult = 0;
        while (rest % p == 0) { rest /= p; ++mult; }
        square_part *= int_pow(p, mult / 2);
        if (mult % 2 == 0) continue;
        uint64_t pu = p.convert_to<uint64_t>();
        if (pu == 2) {
            out *= CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, -1);
        } else {
            CycNum gauss(Rat(0));
            for (uint64_t k = 0; k < pu; ++k)
                gauss += CycNum::root_of_unity(pu, static_cast<int64_t>((k * k) % pu));
            if (pu % 4 == 3) gauss *= CycNum::root_of_unity(4, -1);  // divide i*sqrt(p) by i
            out *= gauss;
        }
    }
    if (rest > 1) {  // leftover prime
        uint64_t pu = rest.convert_to<uint64_t>();
        if (pu == 2) {
            out *= CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, -1);
        } else {
            CycNum gauss(Rat(0));
            for (uint64_t k = 0; k < pu; ++k)
                gauss += CycNum::root_of_unity(pu, static_cast<int64_t>((k * k) % pu));
            if (pu % 4 == 3) gauss *= CycNum::root_of_unity(4, -1);
            out *= gauss;
        }
    }
    out = out * Rat(square_part);
    if (flip_sign) out = -out;
    return out;
}

}  // namespace spinlat
