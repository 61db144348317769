#pragma once

#include <complex>
#include <map>
#include <optional>

#include "hharm/rational.hpp"

namespace hharm {

// Scalar ring for exact ball averages: finite Laurent combinations
// sum_k q_k * pi^k with Gaussian-rational q_k. pi is a formal
// transcendental; no floating-point value enters exact paths.
class PiScalar {
  public:
    PiScalar() = default;
    PiScalar(Rational q) { set(0, GaussianRational(std::move(q))); }
    PiScalar(long n) { set(0, GaussianRational(n)); }
    PiScalar(GaussianRational g) { set(0, std::move(g)); }

    static PiScalar pi_term(GaussianRational coeff, int pi_exponent) {
        PiScalar s;
        s.set(pi_exponent, std::move(coeff));
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_real() const {
        for (const auto& [k, g] : terms_)
            if (g.im != 0) return false;
        return true;
    }

    GaussianRational coeff(int pi_exponent) const {
        auto it = terms_.find(pi_exponent);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    const std::map<int, GaussianRational>& terms() const { return terms_; }

    PiScalar& operator+=(const PiScalar& o) {
        for (const auto& [k, g] : o.terms_) add(k, g);
        return *this;
    }
    PiScalar& operator-=(const PiScalar& o) {
        for (const auto& [k, g] : o.terms_) add(k, -g);
        return *this;
    }
    friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
    friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
    friend PiScalar operator-(const PiScalar& a) {
        PiScalar r;
        for (const auto& [k, g] : a.terms_) r.set(k, -g);
        return r;
    }
    friend PiScalar operator*(const PiScalar& a, const PiScalar& b) {
        PiScalar r;
        for (const auto& [ka, ga] : a.terms_)
            for (const auto& [kb, gb] : b.terms_) r.add(ka + kb, ga * gb);
        return r;
    }
    PiScalar& operator*=(const PiScalar& o) { return *this = *this * o; }

    // Multiply by pi^k (shift all Laurent exponents).
    PiScalar& shift_pi(int k) {
        if (k == 0 || terms_.empty()) return *this;
        std::map<int, GaussianRational> shifted;
        for (auto& [e, g] : terms_) shifted.emplace(e + k, std::move(g));
        terms_ = std::move(shifted);
        return *this;
    }

    PiScalar conjugated_scalar() const {
        PiScalar r;
        for (const auto& [k, g] : terms_) r.set(k, conjugated(g));
        return r;
    }

    // Multiplicative inverse; exists only for single-term scalars q*pi^k.
    std::optional<PiScalar> inverted_scalar() const {
        if (terms_.size() != 1) return std::nullopt;
        const auto& [k, g] = *terms_.begin();
        return pi_term(inverted(g), -k);
    }

    std::complex<double> to_complex() const;

    friend bool operator==(const PiScalar& a, const PiScalar& b) { return a.terms_ == b.terms_; }

  private:
    void set(int k, GaussianRational g) {
        if (!g.is_zero()) terms_[k] = std::move(g);
    }
    void add(int k, const GaussianRational& g) {
        auto [it, inserted] = terms_.try_emplace(k, g);
        if (!inserted) {
            it->second += g;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<int, GaussianRational> terms_;
};

}  // namespace hharm
