// Copyright 2026 the vsstk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VSS_RNG_HPP
#define VSS_RNG_HPP

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace vss {

// Deterministic random source over big integers. Seeded runs replay
// bit-identically; Rng::from_entropy() draws a fresh seed for real use.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(gmp_randinit_mt) {
        state_.seed(static_cast<unsigned long>(seed));
    }

    static Rng from_entropy() {
        std::random_device rd;
        std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        return Rng(s);
    }

    // Uniform in [0, bound).
    mpz_class below(const mpz_class& bound) {
        return state_.get_z_range(bound);
    }

    // Uniform with exactly `bits` bits (top bit set).
    mpz_class bits(unsigned long n) {
        mpz_class v = state_.get_z_bits(n);
        mpz_setbit(v.get_mpz_t(), n - 1);
        return v;
    }

private:
    gmp_randclass state_;
};

} // namespace vss

#endif
