#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "zrec/summation.hpp"

namespace zrec {

/// e(num/den) = exp(2*pi*i*num/den) with the numerator reduced mod the
/// denominator in integer arithmetic before any floating-point conversion.
inline std::complex<double> unit_root(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("unit_root: denominator must be positive");
    std::int64_t r = num % den;
    if (r < 0) r += den;
    const double frac = double(r) / double(den);
    const double angle = 2.0 * std::numbers::pi * frac;
    return {std::cos(angle), std::sin(angle)};
}

inline double cos_two_pi_rational(std::int64_t num, std::int64_t den) {
    return unit_root(num, den).real();
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline bool is_odd_prime(long n) { return n > 2 && is_prime(n); }

/// x in [1, m-1] with a*x == 1 (mod m), by the extended Euclid algorithm.
inline long modular_inverse(long a, long m) {
    if (m <= 0) throw std::domain_error("modular_inverse: modulus must be positive");
    long r0 = m, r1 = ((a % m) + m) % m;
    long t0 = 0, t1 = 1;
    while (r1 != 0) {
        const long quot = r0 / r1;
        const long r2 = r0 - quot * r1;
        const long t2 = t0 - quot * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("modular_inverse: arguments are not coprime");
    return ((t0 % m) + m) % m;
}

inline long mod_pow(long base, long exp, long mod) {
    long result = 1 % mod;
    long b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) result = (result * b) % mod;
        b = (b * b) % mod;
        exp >>= 1;
    }
    return result;
}

/// A Dirichlet character mod an odd prime p, held as a residue-indexed table
/// of unit complex values built from exact rational angles.  For the
/// canonical primitive root g, character j maps g^k to e(j*k/(p-1)).
class DirichletCharacter {
public:
    DirichletCharacter(long p, int index, std::vector<std::complex<double>> by_residue)
        : p_(p), index_(index), values_(std::move(by_residue)) {}

    long modulus() const { return p_; }
    int index() const { return index_; }
    bool is_principal() const { return index_ == 0; }
    /// chi(-1); +1 for even characters, -1 for odd ones.
    int parity() const { return index_ % 2 == 0 ? 1 : -1; }
    int conjugate_index() const { return index_ == 0 ? 0 : int(p_ - 1) - index_; }

    std::complex<double> operator()(long a) const {
        long r = a % p_;
        if (r < 0) r += p_;
        return values_[std::size_t(r)];
    }

    DirichletCharacter conjugate() const {
        std::vector<std::complex<double>> conj_values(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) conj_values[i] = std::conj(values_[i]);
        return DirichletCharacter(p_, conjugate_index(), std::move(conj_values));
    }

private:
    long p_;
    int index_;
    std::vector<std::complex<double>> values_; // indexed by residue, size p; values_[0] = 0
};

/// The full family of p-1 characters mod an odd prime, ordered by index j.
/// Conjugation maps j -> p-1-j, so chi-bar lookups are cheap.
class CharacterFamily {
public:
    explicit CharacterFamily(long p) : p_(p) {
        if (p % 2 == 0) throw std::domain_error("CharacterFamily: modulus must be odd");
        if (!is_prime(p)) throw std::domain_error("CharacterFamily: modulus must be prime");

        generator_ = smallest_primitive_root(p);

        // Discrete logs base g: dlog[g^k mod p] = k.
        std::vector<int> dlog(std::size_t(p), 0);
        long power = 1;
        for (int k = 0; k < int(p) - 1; ++k) {
            dlog[std::size_t(power)] = k;
            power = (power * generator_) % p;
        }

        const long order = p - 1;
        characters_.reserve(std::size_t(order));
        for (int j = 0; j < order; ++j) {
            std::vector<std::complex<double>> values(std::size_t(p), std::complex<double>(0.0, 0.0));
            for (long a = 1; a < p; ++a)
                values[std::size_t(a)] = unit_root(std::int64_t(j) * dlog[std::size_t(a)], order);
            characters_.emplace_back(p, j, std::move(values));
        }
    }

    long modulus() const { return p_; }
    long primitive_root() const { return generator_; }
    std::size_t size() const { return characters_.size(); }
    const DirichletCharacter& character(int j) const { return characters_.at(std::size_t(j)); }
    const std::vector<DirichletCharacter>& characters() const { return characters_; }
    const DirichletCharacter& conjugate(const DirichletCharacter& chi) const {
        return character(chi.conjugate_index());
    }

private:
    static long smallest_primitive_root(long p) {
        std::vector<long> prime_factors;
        long m = p - 1;
        for (long d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) m /= d;
            }
        }
        if (m > 1) prime_factors.push_back(m);
        for (long g = 2; g < p; ++g) {
            bool primitive = true;
            for (long f : prime_factors) {
                if (mod_pow(g, (p - 1) / f, p) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) return g;
        }
        throw std::logic_error("CharacterFamily: no primitive root found");
    }

    long p_;
    long generator_ = 0;
    std::vector<DirichletCharacter> characters_;
};

inline CharacterFamily enumerate_characters(long p) { return CharacterFamily(p); }

/// tau(chi) = sum over a mod p of e(a/p) chi(a), by direct summation.
inline std::complex<double> gauss_sum(const DirichletCharacter& chi) {
    const long p = chi.modulus();
    CompensatedComplexSum acc;
    for (long a = 1; a < p; ++a) acc.add(unit_root(a, p) * chi(a));
    return acc.value();
}

/// Sum over nonzero r mod p of cos(2 pi r / p) chi-bar(r).
/// Equals 0 for odd chi, -1 for the principal character, and tau(chi-bar)
/// for even non-principal chi.
inline std::complex<double> cosine_twisted_sum(const DirichletCharacter& chi) {
    const long p = chi.modulus();
    CompensatedComplexSum acc;
    for (long r = 1; r < p; ++r) acc.add(cos_two_pi_rational(r, p) * std::conj(chi(r)));
    return acc.value();
}

/// max over nonzero a, b of |sum_chi chi(a) chi-bar(b) - (p-1).[a == b mod p]|.
inline double orthogonality_residual(long p) {
    const CharacterFamily family(p);
    double worst = 0.0;
    for (long a = 1; a < p; ++a) {
        for (long b = 1; b < p; ++b) {
            CompensatedComplexSum acc;
            for (const DirichletCharacter& chi : family.characters())
                acc.add(chi(a) * std::conj(chi(b)));
            std::complex<double> expected(a == b ? double(p - 1) : 0.0, 0.0);
            worst = std::max(worst, std::abs(acc.value() - expected));
        }
    }
    return worst;
}

} // namespace zrec
