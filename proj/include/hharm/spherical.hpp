#pragma once

#include <vector>

#include "hharm/hpoly.hpp"

namespace hharm {

// Index (k, l, m) of the Koranyi spherical harmonic
//   P^m_{k,l}(z, t) = r^m_{k,l}(t + i|z|^2, t - i|z|^2) z^k zbar^l,
// of homogeneous degree 2m + k + l; harmonic on H^1 exactly when k*l = 0.
struct HarmonicIndex {
    int k = 0, l = 0, m = 0;
    friend bool operator==(const HarmonicIndex&, const HarmonicIndex&) = default;
};

inline int degree_of(const HarmonicIndex& idx) { return 2 * idx.m + idx.k + idx.l; }

// C(l, 0) = 1; C(l, j) = (1/j!) prod_{i=0}^{j-1} (1/2 + l + i).
Rational coeff_C(int l, int j);

// r^m_{k,l}(w, wbar) = m! sum_j C(l,j) C(k,m-j) w^{m-j} wbar^j, returned with
// w = t + i z zbar and wbar = t - i z zbar substituted.
HPoly r_poly(int k, int l, int m);

// Requires k*l = 0 (z^k zbar^l is harmonic on H^1 only in that case).
HPoly spherical_harmonic(const HarmonicIndex& idx);

// All indices of homogeneous degree ell: pairs {(k,0,m), (0,k,m)} with
// k + 2m = ell, descending k, the self-conjugate (0,0,ell/2) last.
std::vector<HarmonicIndex> basis_of_degree(int ell);

}  // namespace hharm
