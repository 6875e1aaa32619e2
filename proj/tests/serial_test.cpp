// Copyright 2026 the vsstk authors
// SPDX-License-Identifier: Apache-2.0

#include <functional>

#include <doctest.h>

#include "vss/harness.hpp"
#include "vss/protocol.hpp"
#include "vss/serial.hpp"

using namespace vss;

namespace {

DealOutput toy_deal(std::uint64_t seed) {
    Rng rng(seed);
    DealParams params{2, 4, field_new(17), EncPublicKey{515, 2, 17}};
    return deal(13, params, rng);
}

PublicFile to_public(const DealOutput& out) {
    return PublicFile{out.broadcast.params, out.broadcast.commitments, out.broadcast.registry};
}

} // namespace

TEST_CASE("public file round-trips byte-exactly") {
    PublicFile pf = to_public(toy_deal(5));
    std::string bytes = serialize_public(pf);
    PublicFile parsed = parse_public(bytes);
    CHECK(serialize_public(parsed) == bytes);
    CHECK(parsed.params.field.P == 17);
    CHECK(parsed.params.t == 2);
    CHECK(parsed.params.n == 4);
    CHECK(parsed.registry == pf.registry);
    CHECK(parsed.commitments.C.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) CHECK(parsed.commitments.C[i] == pf.commitments.C[i]);
}

TEST_CASE("share file round-trips byte-exactly") {
    DealOutput out = toy_deal(6);
    for (const PrivateMessage& pm : out.private_messages) {
        ShareFile sf{pm.share, pm.hint};
        std::string bytes = serialize_share(sf);
        ShareFile parsed = parse_share(bytes);
        CHECK(serialize_share(parsed) == bytes);
        CHECK(parsed.share == pm.share);
        CHECK(parsed.hint.X == pm.hint.X);
    }
}

TEST_CASE("randomized round-trip property over many deals") {
    mpz_class primes[] = {17, 251, 65537};
    for (int trial = 0; trial < 100; ++trial) {
        Rng rng(500 + trial);
        const mpz_class& P = primes[trial % 3];
        unsigned n = 1 + static_cast<unsigned>(rng.below(5).get_ui());
        unsigned t = 1 + static_cast<unsigned>(rng.below(n).get_ui());
        auto [pk, sk] = keygen(P, 20, rng);
        DealOutput out = deal(rng.below(P), DealParams{t, n, FieldParams{P}, pk}, rng);

        PublicFile pf{out.broadcast.params, out.broadcast.commitments, out.broadcast.registry};
        std::string pb = serialize_public(pf);
        CHECK(serialize_public(parse_public(pb)) == pb);

        ShareFile sf{out.private_messages[0].share, out.private_messages[0].hint};
        std::string sb = serialize_share(sf);
        CHECK(serialize_share(parse_share(sb)) == sb);
    }
}

TEST_CASE("parsing rejects malformed input") {
    PublicFile pf = to_public(toy_deal(7));
    std::string bytes = serialize_public(pf);

    CHECK_THROWS_AS(parse_public("not json"), ParseError);
    CHECK_THROWS_AS(parse_public("{}"), ParseError);

    json j = json::parse(bytes);
    j["version"] = "vss2";
    CHECK_THROWS_AS(parse_public(j.dump()), ParseError);

    j = json::parse(bytes);
    j["params"]["P"] = "017"; // leading zero is non-canonical
    CHECK_THROWS_AS(parse_public(j.dump()), ParseError);

    j = json::parse(bytes);
    j["commitments"].erase(1); // count no longer matches t
    CHECK_THROWS_AS(parse_public(j.dump()), ParseError);

    j = json::parse(bytes);
    j["registry"]["secret_digest"] = "zz";
    CHECK_THROWS_AS(parse_public(j.dump()), ParseError);

    CHECK_THROWS_AS(parse_share("[]"), ParseError);
    ShareFile sf{Share{1, 5}, ConsistencyHint{7}};
    json s = json::parse(serialize_share(sf));
    s["index"] = 0;
    CHECK_THROWS_AS(parse_share(s.dump()), ParseError);
}

TEST_CASE("public file carries no plaintext secret material") {
    Rng rng(9);
    mpz_class P = 65537;
    auto [pk, sk] = keygen(P, 24, rng);
    mpz_class secret = 54321;
    DealOutput out = deal(secret, DealParams{3, 5, FieldParams{P}, pk}, rng);
    const Polynomial& poly = out.dealer_state.polynomial();

    json j = json::parse(serialize_public(
        PublicFile{out.broadcast.params, out.broadcast.commitments, out.broadcast.registry}));

    // No string value anywhere in the file equals the secret or a coefficient.
    std::vector<std::string> forbidden;
    for (const mpz_class& a : poly.coeffs) forbidden.push_back(a.get_str());
    std::function<void(const json&)> walk = [&](const json& node) {
        if (node.is_string()) {
            for (const std::string& f : forbidden) CHECK(node.get<std::string>() != f);
        } else if (node.is_object() || node.is_array()) {
            for (const auto& child : node) walk(child);
        }
    };
    walk(j);

    // And the commitments stay sealed without the discarded private key.
    CHECK(decrypt(sk, pk, out.broadcast.commitments.C[0]) == secret);
}

TEST_CASE("transcript serialization is canonical") {
    Scenario sc;
    sc.kind = ScenarioKind::Honest;
    sc.P = 17;
    sc.t = 2;
    sc.n = 4;
    sc.secret = 13;
    sc.seed = 1;
    Transcript tr = run_scenario(sc);
    std::string bytes = serialize_transcript(tr);
    CHECK(bytes == serialize_transcript(run_scenario(sc)));
    json j = json::parse(bytes);
    CHECK(j["deal_completed"] == true);
    CHECK(j["reconstruction"]["secret"] == "13");
}
