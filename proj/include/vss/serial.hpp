// Copyright 2026 the vsstk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VSS_SERIAL_HPP
#define VSS_SERIAL_HPP

#include <string>

#include <json.hpp>

#include "vss/harness.hpp"
#include "vss/protocol.hpp"
#include "vss/registry.hpp"

namespace vss {

// Canonical JSON file formats: sorted keys, decimal-string big integers,
// lowercase-hex digests. serialize(parse(bytes)) == bytes for files this
// toolkit wrote.

using json = nlohmann::json;

// Public file: broadcast content of one deal (params, commitments, registry).
struct PublicFile {
    DealParams params;
    CoefficientCommitments commitments;
    HashRegistry registry;
};

// Private per-shareholder file: the share plus its consistency hint.
struct ShareFile {
    Share share;
    ConsistencyHint hint;
};

namespace detail {

inline Digest parse_digest(const json& j) {
    if (!j.is_string()) throw ParseError("digest must be a hex string");
    std::string s = j.get<std::string>();
    if (s.size() != 64) throw ParseError("digest must be 64 hex chars");
    Digest d;
    for (std::size_t i = 0; i < 32; ++i) {
        auto nib = [&](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            throw ParseError("digest must be lowercase hex");
        };
        d[i] = static_cast<std::uint8_t>(nib(s[2 * i]) << 4 | nib(s[2 * i + 1]));
    }
    return d;
}

inline mpz_class parse_dec(const json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a decimal string");
    std::string s = j.get<std::string>();
    if (s.empty() || (s.size() > 1 && s[0] == '0'))
        throw ParseError(std::string(what) + " is not canonical decimal");
    for (char c : s)
        if (c < '0' || c > '9') throw ParseError(std::string(what) + " is not decimal");
    return mpz_class(s, 10);
}

inline unsigned parse_uint(const json& j, const char* what) {
    if (!j.is_number_unsigned()) throw ParseError(std::string(what) + " must be unsigned");
    return j.get<unsigned>();
}

} // namespace detail

inline json registry_to_json(const HashRegistry& reg) {
    json shares = json::object();
    for (const auto& [i, d] : reg.share_digests) shares[std::to_string(i)] = digest_hex(d);
    return json{{"params_digest", digest_hex(reg.params_digest)},
                {"share_digests", shares},
                {"secret_digest", digest_hex(reg.secret_digest)}};
}

inline HashRegistry registry_from_json(const json& j) {
    HashRegistry reg;
    reg.params_digest = detail::parse_digest(j.at("params_digest"));
    reg.secret_digest = detail::parse_digest(j.at("secret_digest"));
    for (const auto& [key, val] : j.at("share_digests").items()) {
        unsigned long i = std::stoul(key);
        if (i < 1) throw ParseError("share index must be >= 1");
        reg.share_digests[static_cast<unsigned>(i)] = detail::parse_digest(val);
    }
    return reg;
}

inline std::string serialize_public(const PublicFile& pf) {
    json commitments = json::array();
    for (const Ciphertext& c : pf.commitments.C) commitments.push_back(c.c.get_str());
    json j{{"version", "vss1"},
           {"params",
            {{"P", pf.params.field.P.get_str()},
             {"t", pf.params.t},
             {"n", pf.params.n},
             {"N", pf.params.pk.N.get_str()},
             {"y", pf.params.pk.y.get_str()},
             {"r", pf.params.pk.r.get_str()}}},
           {"commitments", commitments},
           {"registry", registry_to_json(pf.registry)}};
    return j.dump(2) + "\n";
}

inline PublicFile parse_public(const std::string& bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    try {
        if (j.at("version") != "vss1") throw ParseError("unsupported version tag");
        const json& p = j.at("params");
        PublicFile pf;
        pf.params.field.P = detail::parse_dec(p.at("P"), "P");
        pf.params.t = detail::parse_uint(p.at("t"), "t");
        pf.params.n = detail::parse_uint(p.at("n"), "n");
        pf.params.pk.N = detail::parse_dec(p.at("N"), "N");
        pf.params.pk.y = detail::parse_dec(p.at("y"), "y");
        pf.params.pk.r = detail::parse_dec(p.at("r"), "r");
        for (const json& c : j.at("commitments"))
            pf.commitments.C.push_back(Ciphertext{detail::parse_dec(c, "commitment")});
        pf.registry = registry_from_json(j.at("registry"));
        if (pf.registry.share_digests.size() != pf.params.n)
            throw ParseError("registry entry count does not match n");
        if (pf.commitments.C.size() != pf.params.t)
            throw ParseError("commitment count does not match t");
        return pf;
    } catch (const json::exception& e) {
        throw ParseError(std::string("missing or mistyped field: ") + e.what());
    }
}

inline std::string serialize_share(const ShareFile& sf) {
    json j{{"version", "vss1"},
           {"index", sf.share.index},
           {"value", sf.share.value.get_str()},
           {"hint", sf.hint.X.get_str()}};
    return j.dump(2) + "\n";
}

inline ShareFile parse_share(const std::string& bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    try {
        if (j.at("version") != "vss1") throw ParseError("unsupported version tag");
        ShareFile sf;
        sf.share.index = detail::parse_uint(j.at("index"), "index");
        if (sf.share.index < 1) throw ParseError("index must be >= 1");
        sf.share.value = detail::parse_dec(j.at("value"), "value");
        sf.hint.X = detail::parse_dec(j.at("hint"), "hint");
        return sf;
    } catch (const json::exception& e) {
        throw ParseError(std::string("missing or mistyped field: ") + e.what());
    }
}

inline BroadcastMessage to_broadcast(const PublicFile& pf) {
    return BroadcastMessage{pf.commitments, pf.registry, pf.params};
}

inline json transcript_to_json(const Transcript& tr) {
    json events = json::array();
    for (const TranscriptEvent& e : tr.events)
        events.push_back(json{{"kind", e.kind}, {"actor", e.actor}, {"detail", e.detail}});

    json verdicts = json::array();
    for (const VerificationVerdict& v : tr.verdicts) {
        const char* f = v.failure == Failure::None ? "none"
                        : v.failure == Failure::HashMismatch ? "hash_mismatch"
                                                             : "consistency_mismatch";
        verdicts.push_back(json{{"accepted", v.accepted}, {"failure", f}});
    }

    json j{{"scenario",
            {{"kind", scenario_name(tr.scenario.kind)},
             {"P", tr.scenario.P.get_str()},
             {"t", tr.scenario.t},
             {"n", tr.scenario.n},
             {"seed", tr.scenario.seed},
             {"targets", json::array()}}},
           {"events", events},
           {"verdicts", verdicts},
           {"complaints", json::array()},
           {"deal_completed", tr.deal_completed}};
    for (unsigned i : tr.scenario.adversary.targets) j["scenario"]["targets"].push_back(i);
    for (unsigned i : tr.complaints) j["complaints"].push_back(i);

    if (tr.reconstruction) {
        const ReconstructionResult& rec = *tr.reconstruction;
        json r{{"secret", rec.secret ? json(rec.secret->get_str()) : json(nullptr)},
               {"accepted", json::array()},
               {"rejected", json::array()},
               {"secret_verified", rec.secret_verified}};
        for (unsigned i : rec.accepted_shares) r["accepted"].push_back(i);
        for (unsigned i : rec.rejected_shares) r["rejected"].push_back(i);
        j["reconstruction"] = r;
    } else {
        j["reconstruction"] = nullptr;
    }
    return j;
}

inline std::string serialize_transcript(const Transcript& tr) {
    return transcript_to_json(tr).dump(2) + "\n";
}

} // namespace vss

#endif
