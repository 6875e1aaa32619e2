// Copyright 2026 the vsstk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VSS_FIELD_POLY_HPP
#define VSS_FIELD_POLY_HPP

#include <set>
#include <vector>

#include <gmpxx.h>

#include "vss/errors.hpp"
#include "vss/rng.hpp"

namespace vss {

// Prime field GF(P). Elements are mpz_class residues in [0, P).
struct FieldParams {
    mpz_class P;
};

// f(x) = coeffs[0] + coeffs[1]*x + ... over GF(P); coeffs[0] is the secret.
struct Polynomial {
    std::vector<mpz_class> coeffs;
    mpz_class P;

    unsigned threshold() const { return static_cast<unsigned>(coeffs.size()); }
};

// One dealt point (i, f(i) mod P), i in 1..n.
struct Share {
    unsigned index = 0;
    mpz_class value;

    friend bool operator==(const Share&, const Share&) = default;
};

// Reps chosen so the composite error probability is < 2^-80.
inline constexpr int kPrimalityReps = 40;

inline bool is_probable_prime(const mpz_class& v) {
    return mpz_probab_prime_p(v.get_mpz_t(), kPrimalityReps) != 0;
}

inline FieldParams field_new(const mpz_class& P) {
    if (P <= 2) throw TooSmall("field prime must be >= 3, got " + P.get_str());
    if (!is_probable_prime(P)) throw NotPrime(P.get_str() + " is not prime");
    return FieldParams{P};
}

inline mpz_class mod_pow(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
    mpz_class out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return out;
}

// Inverse via Fermat: a^(P-2) mod P.
inline mpz_class mod_inv(const mpz_class& a, const mpz_class& P) {
    return mod_pow(a, P - 2, P);
}

inline Polynomial poly_random(const mpz_class& secret, unsigned t, const FieldParams& field, Rng& rng) {
    if (t < 1) throw InvalidThreshold();
    Polynomial poly;
    poly.P = field.P;
    poly.coeffs.reserve(t);
    poly.coeffs.push_back(secret);
    for (unsigned j = 1; j < t; ++j)
        poly.coeffs.push_back(rng.below(field.P));
    return poly;
}

// Horner evaluation of f at x, mod P.
inline mpz_class poly_eval(const Polynomial& poly, const mpz_class& x) {
    mpz_class acc = 0;
    for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it)
        acc = (acc * x + *it) % poly.P;
    return acc;
}

inline std::vector<Share> shares_generate(const Polynomial& poly, unsigned n) {
    if (poly.threshold() > n) throw ThresholdExceedsN();
    if (mpz_class(n) >= poly.P) throw TooManyShareholders();
    std::vector<Share> shares;
    shares.reserve(n);
    for (unsigned i = 1; i <= n; ++i)
        shares.push_back(Share{i, poly_eval(poly, i)});
    return shares;
}

// f(0) of the unique interpolant through the given points, via Lagrange
// weights w_i = prod_{j != i} x_j (x_j - x_i)^-1 mod P.
inline mpz_class lagrange_reconstruct(const std::vector<Share>& shares, const mpz_class& P) {
    if (shares.empty()) throw EmptyInput();
    std::set<unsigned> seen;
    for (const Share& s : shares)
        if (!seen.insert(s.index).second)
            throw DuplicateIndex("duplicate share index " + std::to_string(s.index));

    mpz_class secret = 0;
    for (const Share& si : shares) {
        mpz_class num = 1, den = 1;
        for (const Share& sj : shares) {
            if (sj.index == si.index) continue;
            num = (num * sj.index) % P;
            mpz_class diff = (mpz_class(sj.index) - mpz_class(si.index)) % P;
            if (diff < 0) diff += P;
            den = (den * diff) % P;
        }
        mpz_class weight = (num * mod_inv(den, P)) % P;
        secret = (secret + si.value * weight) % P;
    }
    return secret;
}

} // namespace vss

#endif
