// Copyright 2026 the vsstk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VSS_BENALOH_HPP
#define VSS_BENALOH_HPP

#include <map>
#include <utility>

#include <gmpxx.h>

#include "vss/errors.hpp"
#include "vss/field_poly.hpp"
#include "vss/rng.hpp"

namespace vss {

// Probabilistic additively homomorphic encryption over a composite
// modulus N = p_e * q_e with prime plaintext-space order r.
// E(m; x) = x^r * y^m mod N; ciphertext product encrypts plaintext sum.

struct EncPublicKey {
    mpz_class N;
    mpz_class y;
    mpz_class r;
};

struct EncPrivateKey {
    mpz_class p_e;
    mpz_class q_e;

    mpz_class phi() const { return (p_e - 1) * (q_e - 1); }
};

struct Ciphertext {
    mpz_class c;

    friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

// The random group element x used during encryption. The dealer keeps
// these to assemble per-shareholder consistency hints.
struct EncryptionWitness {
    mpz_class x;
};

// Searches for p_e = r*m + 1 prime with r not dividing m, and q_e prime
// with q_e - 1 coprime to r. `bits` is the target size of each factor.
inline std::pair<EncPublicKey, EncPrivateKey> keygen(const mpz_class& r, unsigned long bits, Rng& rng) {
    if (!is_probable_prime(r)) throw ParameterSearchFailed("plaintext order r must be prime");
    unsigned long r_bits = mpz_sizeinbase(r.get_mpz_t(), 2);
    if (bits < r_bits + 2) bits = r_bits + 2;

    constexpr int kMaxAttempts = 100000;

    if (r == 2) {
        // Quadratic-residuosity special case: q_e - 1 can never be odd, so
        // the subgroup conditions below do not apply. Instead y must be a
        // quadratic non-residue mod both factors (Jacobi symbol +1 mod N).
        mpz_class p_e = 0, q_e = 0;
        for (int a = 0; a < kMaxAttempts && (p_e == 0 || q_e == 0); ++a) {
            mpz_class cand = rng.bits(bits);
            if (!is_probable_prime(cand) || cand % 4 != 3) continue;
            if (p_e == 0) p_e = cand;
            else if (cand != p_e) q_e = cand;
        }
        if (p_e == 0 || q_e == 0) throw ParameterSearchFailed("no primes = 3 mod 4 found");
        mpz_class N = p_e * q_e;
        mpz_class y = 0;
        for (int a = 0; a < kMaxAttempts && y == 0; ++a) {
            mpz_class cand = rng.below(N - 2) + 2;
            if (mpz_legendre(cand.get_mpz_t(), p_e.get_mpz_t()) == -1 &&
                mpz_legendre(cand.get_mpz_t(), q_e.get_mpz_t()) == -1)
                y = cand;
        }
        if (y == 0) throw ParameterSearchFailed("no quadratic non-residue found");
        return {EncPublicKey{N, y, r}, EncPrivateKey{p_e, q_e}};
    }

    mpz_class p_e = 0;
    for (int a = 0; a < kMaxAttempts && p_e == 0; ++a) {
        unsigned long m_bits = bits > r_bits + 8 ? bits - r_bits : 8;
        mpz_class m = rng.bits(m_bits);
        if (m % r == 0) continue;
        mpz_class cand = r * m + 1;
        if (is_probable_prime(cand)) p_e = cand;
    }
    if (p_e == 0) throw ParameterSearchFailed("no prime p_e = r*m + 1 found");

    mpz_class q_e = 0;
    for (int a = 0; a < kMaxAttempts && q_e == 0; ++a) {
        mpz_class cand = rng.bits(bits);
        if (!is_probable_prime(cand)) continue;
        if (cand == p_e) continue;
        if ((cand - 1) % r == 0) continue;
        q_e = cand;
    }
    if (q_e == 0) throw ParameterSearchFailed("no suitable prime q_e found");

    EncPrivateKey sk{p_e, q_e};
    mpz_class N = p_e * q_e;
    mpz_class exp = sk.phi() / r;

    mpz_class y = 0;
    for (int a = 0; a < kMaxAttempts && y == 0; ++a) {
        mpz_class cand = rng.below(N - 2) + 2;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), cand.get_mpz_t(), N.get_mpz_t());
        if (g != 1) continue;
        if (mod_pow(cand, exp, N) == 1) continue;
        y = cand;
    }
    if (y == 0) throw ParameterSearchFailed("no base y with y^(phi/r) != 1 found");

    return {EncPublicKey{N, y, r}, sk};
}

namespace detail {

// Uniform in the multiplicative group mod N; bounded rejection loop.
inline mpz_class random_unit(const mpz_class& N, Rng& rng) {
    for (int a = 0; a < 128; ++a) {
        mpz_class x = rng.below(N - 1) + 1;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), N.get_mpz_t());
        if (g == 1) return x;
    }
    throw ParameterSearchFailed("could not sample a unit mod N");
}

} // namespace detail

inline std::pair<Ciphertext, EncryptionWitness> encrypt(const EncPublicKey& pk, const mpz_class& m, Rng& rng) {
    if (m < 0 || m >= pk.r) throw MessageOutOfRange("plaintext " + m.get_str() + " not in [0, r)");
    mpz_class x = detail::random_unit(pk.N, rng);
    mpz_class c = (mod_pow(x, pk.r, pk.N) * mod_pow(pk.y, m, pk.N)) % pk.N;
    return {Ciphertext{c}, EncryptionWitness{x}};
}

// Deterministic variant used when replaying a witness.
inline Ciphertext encrypt_with_witness(const EncPublicKey& pk, const mpz_class& m, const mpz_class& x) {
    if (m < 0 || m >= pk.r) throw MessageOutOfRange();
    mpz_class c = (mod_pow(x, pk.r, pk.N) * mod_pow(pk.y, m, pk.N)) % pk.N;
    return Ciphertext{c};
}

// Recovers the unique m in [0, r) with c^(phi/r) = (y^(phi/r))^m mod N by
// baby-step/giant-step over the order-r subgroup. Test/oracle use only;
// protocol flows discard the private key after dealing.
inline mpz_class decrypt(const EncPrivateKey& sk, const EncPublicKey& pk, const Ciphertext& ct) {
    mpz_class N = sk.p_e * sk.q_e;
    if (pk.r == 2) {
        // Residuosity test mod p_e decides the bit.
        int sym = mpz_legendre(ct.c.get_mpz_t(), sk.p_e.get_mpz_t());
        if (sym == 0) throw NotAValidCiphertext();
        return sym == 1 ? 0 : 1;
    }
    mpz_class exp = sk.phi() / pk.r;
    mpz_class target = mod_pow(ct.c, exp, N);
    mpz_class g = mod_pow(pk.y, exp, N);

    mpz_class step;
    mpz_sqrt(step.get_mpz_t(), pk.r.get_mpz_t());
    step += 1;

    std::map<mpz_class, mpz_class> baby; // g^j -> j for j in [0, step)
    mpz_class cur = 1;
    for (mpz_class j = 0; j < step; ++j) {
        baby.emplace(cur, j);
        cur = (cur * g) % N;
    }

    mpz_class giant;
    mpz_class g_step = mod_pow(g, step, N);
    mpz_invert(giant.get_mpz_t(), g_step.get_mpz_t(), N.get_mpz_t());
    mpz_class probe = target;
    for (mpz_class i = 0; i * step < pk.r + step; ++i) {
        auto it = baby.find(probe);
        if (it != baby.end()) {
            mpz_class m = (i * step + it->second) % pk.r;
            if (mod_pow(g, m, N) == target) return m;
        }
        probe = (probe * giant) % N;
    }
    throw NotAValidCiphertext();
}

inline Ciphertext hom_add(const EncPublicKey& pk, const Ciphertext& a, const Ciphertext& b) {
    return Ciphertext{(a.c * b.c) % pk.N};
}

inline Ciphertext hom_scale(const EncPublicKey& pk, const Ciphertext& ct, const mpz_class& k) {
    return Ciphertext{mod_pow(ct.c, k, pk.N)};
}

} // namespace vss

#endif
