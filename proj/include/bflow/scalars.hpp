#pragma once

// Scalar kinds shared by the whole library.
//
// Two arithmetic worlds coexist: exact complex-rational scalars for the
// certificate pipeline (where every cancellation must be literal), and
// std::complex<double> for time integration. Conversion between them is
// always explicit. A third scalar, Poly1, is a dense polynomial in one
// formal indeterminate; it lets the certificate code carry an unknown
// coefficient through a computation and read off exact linear relations.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bflow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p/q" or a plain integer literal.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    }
}

/// Canonical "p/q" form; integers are printed without the "/1".
inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// ---------------------------------------------------------------------------
// Complex rationals
// ---------------------------------------------------------------------------

/// Complex number with exact rational real and imaginary parts.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long r) : re(r) {}

    static GaussRational i_times(long n) { return GaussRational(Rational(0), Rational(n)); }

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rational n2 = b.re * b.re + b.im * b.im;
        if (n2 == 0) throw std::domain_error("division by zero GaussRational");
        return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
    }
    GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
    GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
    GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

inline GaussRational conj_of(const GaussRational& z) { return {z.re, -z.im}; }
inline bool is_zero(const GaussRational& z) { return z.is_zero(); }

inline std::complex<double> to_complex_double(const GaussRational& z) {
    return {to_double(z.re), to_double(z.im)};
}

// std::complex<double> counterparts so templates can use one vocabulary.
inline std::complex<double> conj_of(const std::complex<double>& z) { return std::conj(z); }
inline bool is_zero(const std::complex<double>& z) { return z.real() == 0.0 && z.imag() == 0.0; }
inline std::complex<double> to_complex_double(const std::complex<double>& z) { return z; }

// ---------------------------------------------------------------------------
// Polynomials in one indeterminate (exact coefficients)
// ---------------------------------------------------------------------------

/// Dense polynomial c0 + c1*X + c2*X^2 + ... over a complex scalar C.
/// Used with C = GaussRational to thread a symbolic unknown through the
/// spectral algebra; the library never divides by a non-constant Poly1.
template <class C>
struct Poly1 {
    std::vector<C> c;  // c[k] multiplies X^k; trailing zeros trimmed

    Poly1() = default;
    Poly1(C constant) {
        if (!bflow::is_zero(constant)) c.push_back(std::move(constant));
    }
    Poly1(long n) : Poly1(C(Rational(n))) {}

    static Poly1 indeterminate() {
        Poly1 p;
        p.c = {C(Rational(0)), C(Rational(1))};
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    C coeff(std::size_t k) const { return k < c.size() ? c[k] : C(Rational(0)); }

    void trim() {
        while (!c.empty() && bflow::is_zero(c.back())) c.pop_back();
    }

    friend Poly1 operator+(const Poly1& a, const Poly1& b) {
        Poly1 r;
        r.c.resize(std::max(a.c.size(), b.c.size()), C(Rational(0)));
        for (std::size_t k = 0; k < a.c.size(); ++k) r.c[k] += a.c[k];
        for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] += b.c[k];
        r.trim();
        return r;
    }
    friend Poly1 operator-(const Poly1& a) {
        Poly1 r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Poly1 operator-(const Poly1& a, const Poly1& b) { return a + (-b); }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        Poly1 r;
        if (a.c.empty() || b.c.empty()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, C(Rational(0)));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    Poly1& operator+=(const Poly1& o) { return *this = *this + o; }
    Poly1& operator-=(const Poly1& o) { return *this = *this - o; }
    Poly1& operator*=(const Poly1& o) { return *this = *this * o; }

    /// Division by a constant scalar only.
    friend Poly1 operator/(const Poly1& a, const C& d) {
        Poly1 r = a;
        for (auto& x : r.c) x = x / d;
        return r;
    }
};

template <class C>
inline bool is_zero(const Poly1<C>& p) {
    return p.is_zero();
}

using GammaPoly = Poly1<GaussRational>;

// ---------------------------------------------------------------------------
// Uniform scalar hooks used by the templated spectral code
// ---------------------------------------------------------------------------

template <class S>
struct ScalarKind;  // real_type + conversions per complex scalar kind

template <>
struct ScalarKind<std::complex<double>> {
    using real_type = double;
    static constexpr bool exact = false;
    static std::complex<double> from_real(double r) { return {r, 0.0}; }
    /// multiply by i*n
    static std::complex<double> rotate(int n, const std::complex<double>& z) {
        return std::complex<double>(0.0, static_cast<double>(n)) * z;
    }
    static std::complex<double> scale(const std::complex<double>& z, double r) { return z * r; }
};

template <>
struct ScalarKind<GaussRational> {
    using real_type = Rational;
    static constexpr bool exact = true;
    static GaussRational from_real(Rational r) { return GaussRational(std::move(r)); }
    static GaussRational rotate(int n, const GaussRational& z) {
        return GaussRational(Rational(-n) * z.im, Rational(n) * z.re);
    }
    static GaussRational scale(const GaussRational& z, const Rational& r) {
        return GaussRational(z.re * r, z.im * r);
    }
};

template <>
struct ScalarKind<GammaPoly> {
    using real_type = Rational;
    static constexpr bool exact = true;
    static GammaPoly from_real(Rational r) { return GammaPoly(GaussRational(std::move(r))); }
    static GammaPoly rotate(int n, const GammaPoly& p) {
        GammaPoly r = p;
        for (auto& x : r.c) x = ScalarKind<GaussRational>::rotate(n, x);
        return r;
    }
    static GammaPoly scale(const GammaPoly& p, const Rational& r) {
        GammaPoly q = p;
        for (auto& x : q.c) x = ScalarKind<GaussRational>::scale(x, r);
        q.trim();
        return q;
    }
};

}  // namespace bflow
