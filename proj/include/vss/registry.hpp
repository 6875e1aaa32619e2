// Copyright 2026 the vsstk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VSS_REGISTRY_HPP
#define VSS_REGISTRY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <openssl/sha.h>

#include "vss/benaloh.hpp"
#include "vss/errors.hpp"
#include "vss/field_poly.hpp"

namespace vss {

using Digest = std::array<std::uint8_t, 32>;

inline Digest sha256(const std::string& bytes) {
    Digest d;
    SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), d.data());
    return d;
}

inline std::string digest_hex(const Digest& d) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (std::uint8_t b : d) {
        out.push_back(hex[b >> 4]);
        out.push_back(hex[b & 0xf]);
    }
    return out;
}

// Preimages are ASCII decimal with versioned domain-separation tags, so
// digests are bit-exact across languages and platforms.
inline Digest digest_share(unsigned index, const mpz_class& value) {
    return sha256("vss1:share:" + std::to_string(index) + ":" + value.get_str());
}

inline Digest digest_secret(const mpz_class& secret) {
    return sha256("vss1:secret:" + secret.get_str());
}

inline Digest digest_params(const mpz_class& P, unsigned t, unsigned n, const EncPublicKey& pk) {
    return sha256("vss1:params:" + P.get_str() + ":" + std::to_string(t) + ":" +
                  std::to_string(n) + ":" + pk.N.get_str() + ":" + pk.y.get_str() + ":" +
                  pk.r.get_str());
}

// The dealer's public file: one digest per share, the secret digest, and
// a params digest binding the registry to a single deal.
struct HashRegistry {
    Digest params_digest{};
    std::map<unsigned, Digest> share_digests;
    Digest secret_digest{};

    friend bool operator==(const HashRegistry&, const HashRegistry&) = default;
};

struct RegistryParams {
    mpz_class P;
    unsigned t = 0;
    unsigned n = 0;
    EncPublicKey pk;
};

inline HashRegistry registry_build(const std::vector<Share>& shares, const mpz_class& secret,
                                   const RegistryParams& params) {
    HashRegistry reg;
    reg.params_digest = digest_params(params.P, params.t, params.n, params.pk);
    for (const Share& s : shares)
        reg.share_digests[s.index] = digest_share(s.index, s.value);
    reg.secret_digest = digest_secret(secret);
    return reg;
}

inline bool check_share(const HashRegistry& reg, const Share& share) {
    auto it = reg.share_digests.find(share.index);
    if (it == reg.share_digests.end())
        throw UnknownIndex("no registry entry for index " + std::to_string(share.index));
    return it->second == digest_share(share.index, share.value);
}

inline bool check_secret(const HashRegistry& reg, const mpz_class& secret) {
    return reg.secret_digest == digest_secret(secret);
}

} // namespace vss

#endif
