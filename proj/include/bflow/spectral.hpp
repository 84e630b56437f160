#pragma once

// Truncated Fourier series on the 2*pi-periodic circle.
//
// A Series<S> stores the coefficients c_n of sum_n c_n e^{inx} for
// |n| <= max_mode, sparsely, sorted by mode. The inner product is
// normalized so that (e^{inx} | e^{inx}) = 1, i.e. it is the integral
// pairing divided by 2*pi. Real-valued functions satisfy
// c_{-n} = conj(c_n); a marker tracks whether a series is known to be
// real-valued (the complex basis elements used by the certificate code
// deliberately are not).

#include "bflow/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bflow {

template <class S>
class Series {
public:
    using scalar_type = S;
    using real_type = typename ScalarKind<S>::real_type;
    using entry_type = std::pair<int, S>;

    Series() = default;

    /// Build from (mode, coefficient) pairs; zero entries are dropped and
    /// max_mode is raised to cover every retained mode.
    Series(int max_mode, std::vector<entry_type> entries, bool real_valued = true)
        : max_mode_(max_mode), real_valued_(real_valued) {
        std::sort(entries.begin(), entries.end(),
                  [](const entry_type& a, const entry_type& b) { return a.first < b.first; });
        for (auto& e : entries) {
            if (is_zero(e.second)) continue;
            if (!coeffs_.empty() && coeffs_.back().first == e.first)
                throw std::invalid_argument("duplicate mode in Series constructor");
            max_mode_ = std::max(max_mode_, std::abs(e.first));
            coeffs_.push_back(std::move(e));
        }
        if (max_mode_ < 0) throw std::invalid_argument("negative max_mode");
    }

    static Series zero(int max_mode = 0) { return Series(max_mode, {}); }

    static Series constant(real_type value) {
        return Series(0, {{0, ScalarKind<S>::from_real(std::move(value))}}, true);
    }

    /// The basis element e^{inx}; flagged non-real-valued unless n = 0.
    static Series basis(int n, S coefficient = S(1)) {
        return Series(std::abs(n), {{n, std::move(coefficient)}}, n == 0);
    }

    int max_mode() const { return max_mode_; }
    bool real_valued() const { return real_valued_; }
    bool empty() const { return coeffs_.empty(); }
    const std::vector<entry_type>& entries() const { return coeffs_; }

    S coeff(int n) const {
        auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), n,
                                   [](const entry_type& e, int m) { return e.first < m; });
        if (it != coeffs_.end() && it->first == n) return it->second;
        return S(0);
    }

    Series with_max_mode(int n) const {
        Series r = *this;
        if (n < r.max_mode_) throw std::invalid_argument("with_max_mode cannot shrink");
        r.max_mode_ = n;
        return r;
    }

    Series with_real_valued(bool flag) const {
        Series r = *this;
        r.real_valued_ = flag;
        return r;
    }

private:
    int max_mode_ = 0;
    bool real_valued_ = true;
    std::vector<entry_type> coeffs_;
};

// sin x and cos x as exact one-mode-pair series, valid for every scalar kind.
template <class S>
Series<S> sine_series() {
    using K = ScalarKind<S>;
    S up = K::scale(K::rotate(-1, S(1)), typename K::real_type(1) / 2);   // -i/2
    S dn = K::scale(K::rotate(1, S(1)), typename K::real_type(1) / 2);    // +i/2
    return Series<S>(1, {{1, up}, {-1, dn}}, true);
}

template <class S>
Series<S> cosine_series() {
    using K = ScalarKind<S>;
    S half = K::from_real(typename K::real_type(1) / 2);
    return Series<S>(1, {{1, half}, {-1, half}}, true);
}

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

template <class S>
Series<S> operator+(const Series<S>& f, const Series<S>& g) {
    std::vector<typename Series<S>::entry_type> out;
    auto fi = f.entries().begin(), fe = f.entries().end();
    auto gi = g.entries().begin(), ge = g.entries().end();
    while (fi != fe || gi != ge) {
        if (gi == ge || (fi != fe && fi->first < gi->first)) {
            out.push_back(*fi++);
        } else if (fi == fe || gi->first < fi->first) {
            out.push_back(*gi++);
        } else {
            S s = fi->second + gi->second;
            if (!is_zero(s)) out.emplace_back(fi->first, std::move(s));
            ++fi;
            ++gi;
        }
    }
    return Series<S>(std::max(f.max_mode(), g.max_mode()), std::move(out),
                     f.real_valued() && g.real_valued());
}

template <class S>
Series<S> operator-(const Series<S>& f) {
    std::vector<typename Series<S>::entry_type> out;
    out.reserve(f.entries().size());
    for (const auto& [n, c] : f.entries()) out.emplace_back(n, -c);
    return Series<S>(f.max_mode(), std::move(out), f.real_valued());
}

template <class S>
Series<S> operator-(const Series<S>& f, const Series<S>& g) {
    return f + (-g);
}

/// Scale by a real scalar of the matching kind; preserves real-valuedness.
template <class S>
Series<S> scale(const Series<S>& f, const typename ScalarKind<S>::real_type& r) {
    std::vector<typename Series<S>::entry_type> out;
    out.reserve(f.entries().size());
    for (const auto& [n, c] : f.entries()) {
        S s = ScalarKind<S>::scale(c, r);
        if (!is_zero(s)) out.emplace_back(n, std::move(s));
    }
    return Series<S>(f.max_mode(), std::move(out), f.real_valued());
}

/// Scale by an arbitrary complex scalar; real-valuedness is not claimed.
template <class S>
Series<S> scale_complex(const Series<S>& f, const S& z) {
    std::vector<typename Series<S>::entry_type> out;
    out.reserve(f.entries().size());
    for (const auto& [n, c] : f.entries()) {
        S s = c * z;
        if (!is_zero(s)) out.emplace_back(n, std::move(s));
    }
    return Series<S>(f.max_mode(), std::move(out), false);
}

/// d/dx: coefficient n picks up a factor i*n. Preserves real-valuedness.
template <class S>
Series<S> differentiate(const Series<S>& f) {
    std::vector<typename Series<S>::entry_type> out;
    out.reserve(f.entries().size());
    for (const auto& [n, c] : f.entries()) {
        if (n == 0) continue;
        out.emplace_back(n, ScalarKind<S>::rotate(n, c));
    }
    return Series<S>(f.max_mode(), std::move(out), f.real_valued());
}

/// Pointwise product as the full coefficient convolution. The result has
/// max_mode N_f + N_g; nothing is truncated here (see truncate()).
template <class S>
Series<S> product(const Series<S>& f, const Series<S>& g) {
    const int nmax = f.max_mode() + g.max_mode();
    if (f.empty() || g.empty()) return Series<S>::zero(nmax);
    std::vector<S> dense(static_cast<std::size_t>(2 * nmax + 1), S(0));
    for (const auto& [n1, c1] : f.entries())
        for (const auto& [n2, c2] : g.entries()) dense[static_cast<std::size_t>(n1 + n2 + nmax)] += c1 * c2;
    std::vector<typename Series<S>::entry_type> out;
    for (int n = -nmax; n <= nmax; ++n) {
        S& s = dense[static_cast<std::size_t>(n + nmax)];
        if (!is_zero(s)) out.emplace_back(n, std::move(s));
    }
    return Series<S>(nmax, std::move(out), f.real_valued() && g.real_valued());
}

/// Drop every coefficient with |n| > N. Real-valuedness is preserved.
template <class S>
Series<S> truncate(const Series<S>& f, int
                   max_mode) {
    if (max_mode < 0) throw std::invalid_argument("truncate: negative max_mode");
    std::vector<typename Series<S>::entry_type> out;
    for (const auto& [n, c] : f.entries())
        if (std::abs(n) <= max_mode) out.emplace_back(n, c);
    return Series<S>(max_mode, std::move(out), f.real_valued());
}

/// Hermitian pairing sum_n c_f(n) * conj(c_g(n)); equals the L2 inner
/// product divided by 2*pi, so (e^{inx}|e^{inx}) = 1.
template <class S>
S l2_inner(const Series<S>& f, const Series<S>& g) {
    S acc(0);
    auto fi = f.entries().begin(), fe = f.entries().end();
    auto gi = g.entries().begin(), ge = g.entries().end();
    while (fi != fe && gi != ge) {
        if (fi->first < gi->first) {
            ++fi;
        } else if (gi->first < fi->first) {
            ++gi;
        } else {
            acc += fi->second * conj_of(gi->second);
            ++fi;
            ++gi;
        }
    }
    return acc;
}

/// Project onto the real-valued subspace: c_n <- (c_n + conj(c_{-n}))/2.
/// Identity on real-valued input.
template <class S>
Series<S> symmetrize(const Series<S>& f) {
    using K = ScalarKind<S>;
    std::vector<typename Series<S>::entry_type> out;
    for (const auto& [n, c] : f.entries()) {
        S s = K::scale(c + conj_of(f.coeff(-n)), typename K::real_type(1) / 2);
        if (!is_zero(s)) out.emplace_back(n, std::move(s));
    }
    return Series<S>(f.max_mode(), std::move(out), true);
}

template <class S>
bool check_real_valued(const Series<S>& f) {
    for (const auto& [n, c] : f.entries())
        if (!is_zero(c - conj_of(f.coeff(-n)))) return false;
    return true;
}

inline Series<std::complex<double>> to_double_series(const Series<GaussRational>& f) {
    std::vector<Series<std::complex<double>>::entry_type> out;
    out.reserve(f.entries().size());
    for (const auto& [n, c] : f.entries()) out.emplace_back(n, to_complex_double(c));
    return Series<std::complex<double>>(f.max_mode(), std::move(out), f.real_valued());
}

// ---------------------------------------------------------------------------
// Collocation grid (double precision only)
// ---------------------------------------------------------------------------

/// Samples at the equispaced points x_j = 2*pi*j/M, j = 0..M-1.
struct GridFunction {
    std::vector<double> samples;
    int size() const { return static_cast<int>(samples.size()); }
};

inline GridFunction to_grid(const Series<std::complex<double>>& f, int points) {
    if (points < 1) throw std::invalid_argument("to_grid: need at least one point");
    constexpr double two_pi = 6.283185307179586476925286766559;
    GridFunction g;
    g.samples.resize(static_cast<std::size_t>(points));
    for (int j = 0; j < points; ++j) {
        const double x = two_pi * j / points;
        std::complex<double> acc = 0.0;
        for (const auto& [n, c] : f.entries()) acc += c * std::polar(1.0, n * x);
        g.samples[static_cast<std::size_t>(j)] = acc.real();
    }
    return g;
}

/// Recover modes |n| <= N from samples; requires M >= 2N+1 so the
/// transform is invertible on band-limited data. Output is exactly
/// conjugate-symmetric (real input).
inline Series<std::complex<double>> from_grid(const GridFunction& g, int max_mode) {
    const int m = g.size();
    if (max_mode < 0) throw std::invalid_argument("from_grid: negative max_mode");
    if (m < 2 * max_mode + 1)
        throw std::invalid_argument("from_grid: need at least 2N+1 samples to recover max_mode N");
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<Series<std::complex<double>>::entry_type> out;
    for (int n = 0; n <= max_mode; ++n) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < m; ++j)
            acc += g.samples[static_cast<std::size_t>(j)] * std::polar(1.0, -two_pi * n * j / m);
        acc /= static_cast<double>(m);
        if (n == 0) {
            out.emplace_back(0, std::complex<double>(acc.real(), 0.0));
        } else {
            out.emplace_back(n, acc);
            out.emplace_back(-n, std::conj(acc));
        }
    }
    return Series<std::complex<double>>(max_mode, std::move(out), true);
}

}  // namespace bflow
