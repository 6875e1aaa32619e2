// Copyright 2026 the vsstk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VSS_PROTOCOL_HPP
#define VSS_PROTOCOL_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "vss/benaloh.hpp"
#include "vss/errors.hpp"
#include "vss/field_poly.hpp"
#include "vss/registry.hpp"
#include "vss/rng.hpp"

namespace vss {

// Deal-wide public parameters. The plaintext order of the encryption key
// must equal the field prime so share arithmetic mod P coincides with
// plaintext arithmetic mod r.
struct DealParams {
    unsigned t = 0;
    unsigned n = 0;
    FieldParams field;
    EncPublicKey pk;

    void validate() const {
        if (t < 1) throw InvalidThreshold();
        if (t > n) throw ThresholdExceedsN();
        if (mpz_class(n) >= field.P) throw TooManyShareholders();
        if (pk.r != field.P)
            throw ParameterSearchFailed("encryption plaintext order must equal the field prime");
    }
};

// Broadcast encryptions C_j = E(a_j) of the polynomial coefficients.
struct CoefficientCommitments {
    std::vector<Ciphertext> C;
};

struct BroadcastMessage {
    CoefficientCommitments commitments;
    HashRegistry registry;
    DealParams params;
};

// Group element letting shareholder i check his share against the
// commitments without interaction: X_i^r * y^(S_i) == prod_j C_j^(i^j) mod N.
struct ConsistencyHint {
    mpz_class X;
};

struct PrivateMessage {
    Share share;
    ConsistencyHint hint;
};

enum class Failure { None, HashMismatch, ConsistencyMismatch };

struct VerificationVerdict {
    bool accepted = false;
    Failure failure = Failure::None;

    static VerificationVerdict accept() { return {true, Failure::None}; }
    static VerificationVerdict reject(Failure f) { return {false, f}; }

    friend bool operator==(const VerificationVerdict&, const VerificationVerdict&) = default;
};

struct ReconstructionResult {
    std::optional<mpz_class> secret;
    std::set<unsigned> accepted_shares;
    std::set<unsigned> rejected_shares;
    bool secret_verified = false;
};

// The dealer's private material pending step-10 disposal: the polynomial
// and the encryption witnesses. Single-owner; reads after discard throw.
class DealerSecretState {
public:
    DealerSecretState(Polynomial poly, std::vector<EncryptionWitness> witnesses)
        : poly_(std::move(poly)), witnesses_(std::move(witnesses)) {}

    const Polynomial& polynomial() const {
        ensure_live();
        return poly_;
    }

    const std::vector<EncryptionWitness>& witnesses() const {
        ensure_live();
        return witnesses_;
    }

    bool discarded() const { return discarded_; }

    // Step-10 disposal. Requires every shareholder verdict to accept;
    // idempotent on a state already discarded.
    void discard(const std::vector<VerificationVerdict>& verdicts) {
        if (discarded_) return;
        for (const auto& v : verdicts)
            if (!v.accepted) throw NotAllAccepted();
        wipe();
    }

private:
    void ensure_live() const {
        if (discarded_) throw DiscardedState();
    }

    void wipe() {
        for (auto& c : poly_.coeffs) c = 0;
        poly_.coeffs.clear();
        for (auto& w : witnesses_) w.x = 0;
        witnesses_.clear();
        discarded_ = true;
    }

    Polynomial poly_;
    std::vector<EncryptionWitness> witnesses_;
    bool discarded_ = false;
};

namespace detail {

// Hint for shareholder i: X_i = y^(k_i) * prod_j x_j^(i^j) mod N, where
// k_i = (sum_j a_j i^j - S_i) / P over the integers (exact division).
inline ConsistencyHint make_hint(const Polynomial& poly, const std::vector<EncryptionWitness>& witnesses,
                                 unsigned i, const mpz_class& share_value, const EncPublicKey& pk) {
    mpz_class int_eval = 0;
    mpz_class x_power = 1; // i^j
    mpz_class combined = 1;
    for (std::size_t j = 0; j < poly.coeffs.size(); ++j) {
        int_eval += poly.coeffs[j] * x_power;
        combined = (combined * mod_pow(witnesses[j].x, x_power, pk.N)) % pk.N;
        x_power *= i;
    }
    mpz_class k = (int_eval - share_value) / poly.P;
    mpz_class X = (mod_pow(pk.y, k, pk.N) * combined) % pk.N;
    return ConsistencyHint{X};
}

} // namespace detail

struct DealOutput {
    BroadcastMessage broadcast;
    std::vector<PrivateMessage> private_messages;
    DealerSecretState dealer_state;
};

inline DealOutput deal(const mpz_class& secret, const DealParams& params, Rng& rng) {
    params.validate();
    if (secret < 0 || secret >= params.field.P)
        throw MessageOutOfRange("secret must lie in [0, P)");

    Polynomial poly = poly_random(secret, params.t, params.field, rng);
    std::vector<Share> shares = shares_generate(poly, params.n);

    CoefficientCommitments commitments;
    std::vector<EncryptionWitness> witnesses;
    for (const mpz_class& a : poly.coeffs) {
        auto [ct, w] = encrypt(params.pk, a, rng);
        commitments.C.push_back(ct);
        witnesses.push_back(w);
    }

    HashRegistry registry =
        registry_build(shares, secret, RegistryParams{params.field.P, params.t, params.n, params.pk});

    std::vector<PrivateMessage> pms;
    pms.reserve(params.n);
    for (const Share& s : shares)
        pms.push_back(PrivateMessage{s, detail::make_hint(poly, witnesses, s.index, s.value, params.pk)});

    return DealOutput{BroadcastMessage{std::move(commitments), std::move(registry), params},
                      std::move(pms),
                      DealerSecretState(std::move(poly), std::move(witnesses))};
}

// Step-8 congruence: X_i^r * y^(S_i) == prod_j C_j^(i^j) mod N, with the
// exponents i^j computed as exact integers.
inline bool consistency_holds(const BroadcastMessage& bm, const PrivateMessage& pm) {
    const EncPublicKey& pk = bm.params.pk;
    mpz_class lhs = (mod_pow(pm.hint.X, pk.r, pk.N) * mod_pow(pk.y, pm.share.value, pk.N)) % pk.N;
    mpz_class rhs = 1;
    mpz_class x_power = 1;
    for (const Ciphertext& C : bm.commitments.C) {
        rhs = (rhs * mod_pow(C.c, x_power, pk.N)) % pk.N;
        x_power *= pm.share.index;
    }
    return lhs == rhs;
}

inline VerificationVerdict verify_share(const BroadcastMessage& bm, const PrivateMessage& pm) {
    if (!check_share(bm.registry, pm.share))
        return VerificationVerdict::reject(Failure::HashMismatch);
    if (!consistency_holds(bm, pm))
        return VerificationVerdict::reject(Failure::ConsistencyMismatch);
    return VerificationVerdict::accept();
}

inline void dealer_discard(DealerSecretState& state, const std::vector<VerificationVerdict>& verdicts) {
    state.discard(verdicts);
}

// Reconstruction from submitted shares: registry check per share, then
// interpolation through the t accepted shares with smallest indices.
inline ReconstructionResult reconstruct(const BroadcastMessage& bm, const std::vector<Share>& submitted) {
    ReconstructionResult result;
    std::vector<Share> accepted;
    for (const Share& s : submitted) {
        // first submission per index wins; later duplicates are ignored
        if (result.accepted_shares.count(s.index) || result.rejected_shares.count(s.index)) continue;
        bool ok = false;
        try {
            ok = check_share(bm.registry, s);
        } catch (const UnknownIndex&) {
            ok = false;
        }
        if (ok) {
            result.accepted_shares.insert(s.index);
            accepted.push_back(s);
        } else {
            result.rejected_shares.insert(s.index);
        }
    }

    if (accepted.size() < bm.params.t) return result;

    std::sort(accepted.begin(), accepted.end(),
              [](const Share& a, const Share& b) { return a.index < b.index; });
    accepted.resize(bm.params.t);

    mpz_class secret = lagrange_reconstruct(accepted, bm.params.field.P);
    result.secret = secret;
    result.secret_verified = check_secret(bm.registry, secret);
    return result;
}

} // namespace vss

#endif
