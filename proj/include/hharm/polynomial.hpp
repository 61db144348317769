#pragma once

#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hharm/pi_scalar.hpp"

namespace hharm {

// Sparse polynomial in N variables over PiScalar. Terms are kept in a map
// ordered graded-lexicographically (total degree first, then lexicographic
// on the exponent tuple) so iteration and printing are deterministic.
template <int N>
struct GradedLexLess {
    using Expo = std::array<int, N>;
    bool operator()(const Expo& a, const Expo& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a < b;
    }
};

template <int N>
class Poly {
  public:
    using Expo = std::array<int, N>;
    using TermMap = std::map<Expo, PiScalar, GradedLexLess<N>>;

    Poly() = default;

    static Poly constant(PiScalar c) {
        Poly p;
        p.add_term(Expo{}, std::move(c));
        return p;
    }

    static Poly variable(int index, int power = 1) {
        if (index < 0 || index >= N) throw std::domain_error("Poly::variable: index out of range");
        if (power < 0) throw std::domain_error("Poly::variable: negative power");
        Expo e{};
        e[index] = power;
        Poly p;
        p.add_term(e, PiScalar(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Expo& e, PiScalar c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo e;
                for (int i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& scale(const PiScalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        TermMap scaled;
        for (const auto& [e, c] : terms_) {
            PiScalar sc = c * s;
            if (!sc.is_zero()) scaled.emplace(e, std::move(sc));
        }
        terms_ = std::move(scaled);
        return *this;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  private:
    TermMap terms_;
};

template <int N>
Poly<N> pow(const Poly<N>& base, int exponent) {
    if (exponent < 0) throw std::domain_error("pow: negative exponent");
    Poly<N> acc = Poly<N>::constant(PiScalar(1));
    for (int i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

// Substitute each of the N variables of p by a polynomial in M variables.
// Powers of the images are cached up to the largest exponent used.
template <int N, int M>
Poly<M> substitute(const Poly<N>& p, const std::array<Poly<M>, N>& images) {
    std::array<int, N> max_expo{};
    for (const auto& [e, c] : p.terms())
        for (int i = 0; i < N; ++i) max_expo[i] = std::max(max_expo[i], e[i]);

    std::array<std::vector<Poly<M>>, N> powers;
    for (int i = 0; i < N; ++i) {
        powers[i].reserve(max_expo[i] + 1);
        powers[i].push_back(Poly<M>::constant(PiScalar(1)));
        for (int e = 1; e <= max_expo[i]; ++e) powers[i].push_back(powers[i].back() * images[i]);
    }

    Poly<M> out;
    for (const auto& [e, c] : p.terms()) {
        Poly<M> term = Poly<M>::constant(c);
        for (int i = 0; i < N; ++i)
            if (e[i] > 0) term *= powers[i][e[i]];
        out += term;
    }
    return out;
}

}  // namespace hharm
