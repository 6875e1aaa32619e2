// Copyright 2026 the vsstk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VSS_HARNESS_HPP
#define VSS_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vss/benaloh.hpp"
#include "vss/errors.hpp"
#include "vss/field_poly.hpp"
#include "vss/protocol.hpp"
#include "vss/rng.hpp"

namespace vss {

// Deterministic multi-party simulation: private dealer->shareholder
// channels plus reliable broadcast, with injectable adversaries.

enum class ScenarioKind {
    Honest,
    DealerInconsistent, // dealer serves some shareholders from a second polynomial
    ShareholderFake,    // shareholders submit tampered shares at reconstruction
    IntruderTamper,     // shares modified in dealer->shareholder transit
    SecretMismatch,     // dealer publishes the digest of a wrong secret
};

inline const char* scenario_name(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::Honest: return "HONEST";
        case ScenarioKind::DealerInconsistent: return "DEALER_INCONSISTENT";
        case ScenarioKind::ShareholderFake: return "SHAREHOLDER_FAKE";
        case ScenarioKind::IntruderTamper: return "INTRUDER_TAMPER";
        case ScenarioKind::SecretMismatch: return "SECRET_MISMATCH";
    }
    return "?";
}

inline std::optional<ScenarioKind> scenario_from_name(const std::string& s) {
    if (s == "HONEST") return ScenarioKind::Honest;
    if (s == "DEALER_INCONSISTENT") return ScenarioKind::DealerInconsistent;
    if (s == "SHAREHOLDER_FAKE") return ScenarioKind::ShareholderFake;
    if (s == "INTRUDER_TAMPER") return ScenarioKind::IntruderTamper;
    if (s == "SECRET_MISMATCH") return ScenarioKind::SecretMismatch;
    return std::nullopt;
}

struct AdversaryConfig {
    std::set<unsigned> targets;
    mpz_class value_delta = 1; // added mod P by tampering rules
    bool second_poly_same_secret = true; // DealerInconsistent: keep a_0 or shift it
};

struct Scenario {
    ScenarioKind kind = ScenarioKind::Honest;
    mpz_class P;
    unsigned t = 0;
    unsigned n = 0;
    mpz_class secret;
    unsigned long enc_bits = 24;
    AdversaryConfig adversary;
    std::uint64_t seed = 0;

    void validate() const {
        if (t < 1 || t > n) throw InvalidScenario("need 1 <= t <= n");
        for (unsigned i : adversary.targets)
            if (i < 1 || i > n) throw InvalidScenario("target index outside [1, n]");
        if (kind != ScenarioKind::Honest && kind != ScenarioKind::SecretMismatch &&
            adversary.targets.empty())
            throw InvalidScenario("adversarial scenario needs at least one target");
        if (adversary.value_delta % P == 0 && kind != ScenarioKind::Honest)
            throw InvalidScenario("tamper delta must be nonzero mod P");
    }
};

struct TranscriptEvent {
    std::string kind;  // e.g. "broadcast", "private_send", "tamper", "verdict"
    std::string actor; // "dealer", "shareholder:3", "intruder", "reconstructor"
    std::string detail;

    friend bool operator==(const TranscriptEvent&, const TranscriptEvent&) = default;
};

// Full record of one simulated run. Structured fields carry the facts the
// expectation oracle checks; the event log carries the full ordering.
struct Transcript {
    Scenario scenario;
    std::vector<TranscriptEvent> events;
    std::vector<VerificationVerdict> verdicts; // index i-1 = shareholder i
    std::set<unsigned> complaints;             // shareholders that rejected
    bool deal_completed = false;               // all verdicts accepted, state discarded
    std::optional<ReconstructionResult> reconstruction;
};

// The verdict/rejection pattern a transcript must match.
struct ExpectedPattern {
    std::vector<Failure> verdicts; // per shareholder 1..n
    bool deal_completes = false;
    std::set<unsigned> rejected;   // at reconstruction (empty if no reconstruction)
    bool secret_present = false;
    bool secret_verified = false;
};

namespace detail {

struct ScenarioSetup {
    DealParams params;
    Polynomial poly;                  // the committed polynomial
    std::optional<Polynomial> poly2;  // DealerInconsistent only
    std::vector<EncryptionWitness> witnesses;
    CoefficientCommitments commitments;
};

// Deterministic derivation of everything the dealer samples. Both the
// simulator and the expectation oracle replay this from the seed.
inline ScenarioSetup scenario_setup(const Scenario& sc, Rng& rng) {
    FieldParams field = field_new(sc.P);
    auto [pk, sk] = keygen(sc.P, sc.enc_bits, rng);
    (void)sk; // discarded immediately; the protocol never decrypts
    DealParams params{sc.t, sc.n, field, pk};
    params.validate();
    if (sc.secret < 0 || sc.secret >= sc.P) throw InvalidScenario("secret outside [0, P)");

    ScenarioSetup setup{params, poly_random(sc.secret, sc.t, field, rng), std::nullopt, {}, {}};
    for (const mpz_class& a : setup.poly.coeffs) {
        auto [ct, w] = encrypt(pk, a, rng);
        setup.commitments.C.push_back(ct);
        setup.witnesses.push_back(w);
    }
    if (sc.kind == ScenarioKind::DealerInconsistent) {
        mpz_class s2 = sc.adversary.second_poly_same_secret
                           ? sc.secret
                           : (sc.secret + sc.adversary.value_delta) % sc.P;
        setup.poly2 = poly_random(s2, sc.t, field, rng);
    }
    return setup;
}

// The share value shareholder i actually receives from the dealer.
inline mpz_class dealt_value(const Scenario& sc, const ScenarioSetup& setup, unsigned i) {
    if (sc.kind == ScenarioKind::DealerInconsistent && sc.adversary.targets.count(i))
        return poly_eval(*setup.poly2, i);
    return poly_eval(setup.poly, i);
}

} // namespace detail

inline ExpectedPattern scenario_expectations(const Scenario& sc) {
    sc.validate();
    Rng rng(sc.seed);
    detail::ScenarioSetup setup = detail::scenario_setup(sc, rng);

    ExpectedPattern pat;
    pat.verdicts.assign(sc.n, Failure::None);

    switch (sc.kind) {
        case ScenarioKind::Honest:
        case ScenarioKind::ShareholderFake:
        case ScenarioKind::SecretMismatch:
            break;
        case ScenarioKind::IntruderTamper:
            for (unsigned i : sc.adversary.targets) pat.verdicts[i - 1] = Failure::HashMismatch;
            break;
        case ScenarioKind::DealerInconsistent:
            // Detected exactly where the second polynomial disagrees mod P.
            for (unsigned i : sc.adversary.targets)
                if (detail::dealt_value(sc, setup, i) != poly_eval(setup.poly, i))
                    pat.verdicts[i - 1] = Failure::ConsistencyMismatch;
            break;
    }

    pat.deal_completes = true;
    for (Failure f : pat.verdicts)
        if (f != Failure::None) pat.deal_completes = false;

    if (!pat.deal_completes) return pat; // dispute state, no reconstruction

    if (sc.kind == ScenarioKind::ShareholderFake) pat.rejected = sc.adversary.targets;
    unsigned honest = sc.n - static_cast<unsigned>(pat.rejected.size());
    pat.secret_present = honest >= sc.t;
    pat.secret_verified = pat.secret_present && sc.kind != ScenarioKind::SecretMismatch;
    return pat;
}

inline Transcript run_scenario(const Scenario& sc) {
    sc.validate();
    Rng rng(sc.seed);
    detail::ScenarioSetup setup = detail::scenario_setup(sc, rng);
    const DealParams& params = setup.params;

    Transcript tr;
    tr.scenario = sc;
    auto log = [&tr](std::string kind, std::string actor, std::string detail) {
        tr.events.push_back(TranscriptEvent{std::move(kind), std::move(actor), std::move(detail)});
    };

    // Dealing: registry is built over the values actually sent, so a
    // cheating dealer stays self-consistent with his own public file.
    std::vector<Share> sent;
    for (unsigned i = 1; i <= sc.n; ++i)
        sent.push_back(Share{i, detail::dealt_value(sc, setup, i)});

    mpz_class registered_secret = sc.secret;
    if (sc.kind == ScenarioKind::SecretMismatch)
        registered_secret = (sc.secret + sc.adversary.value_delta) % sc.P;

    HashRegistry registry = registry_build(
        sent, registered_secret, RegistryParams{sc.P, sc.t, sc.n, params.pk});
    BroadcastMessage bm{setup.commitments, registry, params};
    log("broadcast", "dealer",
        "commitments=" + std::to_string(setup.commitments.C.size()) +
            " registry_entries=" + std::to_string(registry.share_digests.size()));

    DealerSecretState dealer_state(setup.poly, setup.witnesses);

    // Private channel delivery, with optional in-transit tampering.
    std::vector<PrivateMessage> delivered;
    for (const Share& s : sent) {
        PrivateMessage pm{s, detail::make_hint(setup.poly, setup.witnesses, s.index,
                                               poly_eval(setup.poly, s.index), params.pk)};
        log("private_send", "dealer", "index=" + std::to_string(s.index));
        if (sc.kind == ScenarioKind::IntruderTamper && sc.adversary.targets.count(s.index)) {
            pm.share.value = (pm.share.value + sc.adversary.value_delta) % sc.P;
            log("tamper", "intruder", "index=" + std::to_string(s.index));
        }
        log("private_deliver", "shareholder:" + std::to_string(s.index), "");
        delivered.push_back(std::move(pm));
    }

    // Verification round, index order.
    for (const PrivateMessage& pm : delivered) {
        VerificationVerdict v = verify_share(bm, pm);
        tr.verdicts.push_back(v);
        std::string who = "shareholder:" + std::to_string(pm.share.index);
        if (v.accepted) {
            log("verdict", who, "accept");
        } else {
            tr.complaints.insert(pm.share.index);
            log("verdict", who,
                v.failure == Failure::HashMismatch ? "reject:hash" : "reject:consistency");
            log("complaint", who, "");
        }
    }

    if (!tr.complaints.empty()) {
        log("deal_halted", "dealer", "dispute");
        return tr; // step-11 dispute state; no discard, no reconstruction
    }

    dealer_discard(dealer_state, tr.verdicts);
    tr.deal_completed = true;
    log("discard", "dealer", "");

    // Submission round: shareholders hand in what they hold, except fakes.
    std::vector<Share> submitted;
    for (const PrivateMessage& pm : delivered) {
        Share s = pm.share;
        if (sc.kind == ScenarioKind::ShareholderFake && sc.adversary.targets.count(s.index)) {
            s.value = (s.value + sc.adversary.value_delta) % sc.P;
            log("submit_fake", "shareholder:" + std::to_string(s.index), "");
        } else {
            log("submit", "shareholder:" + std::to_string(s.index), "");
        }
        submitted.push_back(std::move(s));
    }

    ReconstructionResult rec = reconstruct(bm, submitted);
    std::string rejected;
    for (unsigned i : rec.rejected_shares) rejected += (rejected.empty() ? "" : ",") + std::to_string(i);
    log("reconstruction", "reconstructor",
        (rec.secret ? "secret=" + rec.secret->get_str() : "no_secret") +
            " verified=" + (rec.secret_verified ? "true" : "false") +
            (rejected.empty() ? "" : " rejected=" + rejected));
    tr.reconstruction = std::move(rec);
    return tr;
}

inline bool transcript_matches(const Transcript& tr, const ExpectedPattern& pat) {
    if (tr.verdicts.size() != pat.verdicts.size()) return false;
    for (std::size_t i = 0; i < pat.verdicts.size(); ++i) {
        if (tr.verdicts[i].failure != pat.verdicts[i]) return false;
        if (tr.verdicts[i].accepted != (pat.verdicts[i] == Failure::None)) return false;
    }
    if (tr.deal_completed != pat.deal_completes) return false;
    if (!pat.deal_completes) return !tr.reconstruction.has_value();
    if (!tr.reconstruction) return false;
    const ReconstructionResult& rec = *tr.reconstruction;
    if (rec.rejected_shares != pat.rejected) return false;
    if (rec.secret.has_value() != pat.secret_present) return false;
    if (rec.secret_verified != pat.secret_verified) return false;
    return true;
}

} // namespace vss

#endif
