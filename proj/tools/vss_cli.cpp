// Copyright 2026 the vsstk authors
// SPDX-License-Identifier: Apache-2.0
//
// vss-cli: deal, verify, reconstruct, and simulate for the verifiable
// secret sharing toolkit. Exit codes are a stable contract:
//   0 success / accept / verified secret
//   2 bad arguments or malformed input file
//   3 dealer self-check failure
//   4 share rejected by verify
//   5 not enough accepted shares to reconstruct
//   6 reconstructed secret fails the registered digest
//   7 simulation transcript does not match the scenario's expected pattern

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vss/harness.hpp"
#include "vss/protocol.hpp"
#include "vss/serial.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSelfCheck = 3;
constexpr int kExitReject = 4;
constexpr int kExitTooFew = 5;
constexpr int kExitSecretMismatch = 6;
constexpr int kExitPatternMismatch = 7;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw vss::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw vss::Error("cannot write " + path.string());
    out << bytes;
}

mpz_class parse_mpz_arg(const std::string& s, const char* what) {
    try {
        return vss::detail::parse_dec(vss::json(s), what);
    } catch (const vss::ParseError&) {
        throw CLI::ValidationError(std::string(what) + " must be a non-negative decimal integer");
    }
}

struct DealArgs {
    std::string secret;
    unsigned threshold = 0;
    unsigned shares = 0;
    std::string field_prime;
    unsigned field_bits = 0;
    unsigned enc_bits = 48;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
};

int cmd_deal(const DealArgs& a) {
    vss::Rng rng = a.seed ? vss::Rng(*a.seed) : vss::Rng::from_entropy();

    mpz_class P;
    if (a.field_prime.empty() && a.field_bits < 4)
        throw vss::Error("one of --field-prime or --field-bits (>= 4) is required");
    if (!a.field_prime.empty()) {
        P = parse_mpz_arg(a.field_prime, "--field-prime");
    } else {
        mpz_class start = rng.bits(a.field_bits);
        mpz_nextprime(P.get_mpz_t(), start.get_mpz_t());
        std::cout << "field prime: " << P.get_str() << "\n";
    }

    mpz_class secret = parse_mpz_arg(a.secret, "--secret");

    vss::DealParams params;
    params.t = a.threshold;
    params.n = a.shares;
    params.field = vss::field_new(P);
    auto [pk, sk] = vss::keygen(P, a.enc_bits, rng);
    params.pk = pk;
    params.validate();
    if (secret >= P) throw vss::MessageOutOfRange("--secret must be smaller than the field prime");

    vss::DealOutput out = vss::deal(secret, params, rng);

    // Self-check before anything touches disk.
    for (const vss::PrivateMessage& pm : out.private_messages) {
        vss::VerificationVerdict v = vss::verify_share(out.broadcast, pm);
        if (!v.accepted) {
            std::cerr << "self-check failed for share " << pm.share.index << "\n";
            return kExitSelfCheck;
        }
    }

    fs::create_directories(a.out_dir);
    vss::PublicFile pf{out.broadcast.params, out.broadcast.commitments, out.broadcast.registry};
    write_file(fs::path(a.out_dir) / "public.json", vss::serialize_public(pf));
    for (const vss::PrivateMessage& pm : out.private_messages) {
        vss::ShareFile sf{pm.share, pm.hint};
        write_file(fs::path(a.out_dir) / ("share_" + std::to_string(pm.share.index) + ".json"),
                   vss::serialize_share(sf));
    }
    std::cout << "wrote public.json and " << out.private_messages.size() << " share files to "
              << a.out_dir << "\n";
    return 0;
}

int cmd_verify(const std::string& public_path, const std::string& share_path) {
    vss::PublicFile pf = vss::parse_public(read_file(public_path));
    vss::ShareFile sf = vss::parse_share(read_file(share_path));
    vss::VerificationVerdict v =
        vss::verify_share(vss::to_broadcast(pf), vss::PrivateMessage{sf.share, sf.hint});
    if (v.accepted) {
        std::cout << "ACCEPT\n";
        return 0;
    }
    std::cout << "REJECT("
              << (v.failure == vss::Failure::HashMismatch ? "HashMismatch" : "ConsistencyMismatch")
              << ")\n";
    return kExitReject;
}

int cmd_reconstruct(const std::string& public_path, const std::vector<std::string>& share_paths) {
    vss::PublicFile pf = vss::parse_public(read_file(public_path));
    std::vector<vss::Share> submitted;
    for (const std::string& p : share_paths)
        submitted.push_back(vss::parse_share(read_file(p)).share);

    vss::ReconstructionResult rec = vss::reconstruct(vss::to_broadcast(pf), submitted);
    if (!rec.rejected_shares.empty()) {
        std::cerr << "rejected:";
        for (unsigned i : rec.rejected_shares) std::cerr << " " << i;
        std::cerr << "\n";
    }
    if (!rec.secret) {
        std::cerr << "only " << rec.accepted_shares.size() << " accepted share(s), need "
                  << pf.params.t << "\n";
        return kExitTooFew;
    }
    if (!rec.secret_verified) {
        std::cout << rec.secret->get_str() << " UNVERIFIED\n";
        return kExitSecretMismatch;
    }
    std::cout << rec.secret->get_str() << " VERIFIED\n";
    return 0;
}

struct SimArgs {
    std::string scenario;
    std::uint64_t seed = 0;
    std::string field_prime = "17";
    unsigned threshold = 2;
    unsigned shares = 4;
    std::string secret = "13";
    std::vector<unsigned> targets;
    std::string delta = "1";
    unsigned enc_bits = 24;
    bool different_secret = false;
};

int cmd_simulate(const SimArgs& a) {
    auto kind = vss::scenario_from_name(a.scenario);
    if (!kind) {
        std::cerr << "unknown scenario: " << a.scenario << "\n";
        return kExitUsage;
    }
    vss::Scenario sc;
    sc.kind = *kind;
    sc.P = parse_mpz_arg(a.field_prime, "--field-prime");
    sc.t = a.threshold;
    sc.n = a.shares;
    sc.secret = parse_mpz_arg(a.secret, "--secret");
    sc.seed = a.seed;
    sc.enc_bits = a.enc_bits;
    sc.adversary.targets = std::set<unsigned>(a.targets.begin(), a.targets.end());
    if (sc.adversary.targets.empty() && sc.kind != vss::ScenarioKind::Honest &&
        sc.kind != vss::ScenarioKind::SecretMismatch)
        sc.adversary.targets = {2};
    sc.adversary.value_delta = parse_mpz_arg(a.delta, "--delta");
    sc.adversary.second_poly_same_secret = !a.different_secret;

    (void)vss::field_new(sc.P);
    sc.validate();

    vss::Transcript tr = vss::run_scenario(sc);
    std::cout << vss::serialize_transcript(tr);
    return vss::transcript_matches(tr, vss::scenario_expectations(sc)) ? 0 : kExitPatternMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifiable threshold secret sharing toolkit"};
    app.require_subcommand(1);

    DealArgs da;
    CLI::App* deal = app.add_subcommand("deal", "split a secret and write the deal files");
    deal->add_option("--secret", da.secret, "secret to share (decimal)")->required();
    deal->add_option("--threshold", da.threshold, "shares needed to reconstruct")->required();
    deal->add_option("--shares", da.shares, "number of shareholders")->required();
    auto* fp = deal->add_option("--field-prime", da.field_prime, "field prime P (decimal)");
    auto* fb = deal->add_option("--field-bits", da.field_bits, "generate a field prime of this size");
    fp->excludes(fb);
    deal->add_option("--enc-bits", da.enc_bits, "bit size of each encryption modulus factor");
    deal->add_option("--seed", da.seed, "seed for reproducible output");
    deal->add_option("--out", da.out_dir, "output directory");

    std::string public_path, share_path;
    CLI::App* verify = app.add_subcommand("verify", "verify one share against the public file");
    verify->add_option("--public", public_path, "public.json path")->required();
    verify->add_option("--share", share_path, "share file path")->required();

    std::string rec_public;
    std::vector<std::string> rec_shares;
    CLI::App* rec = app.add_subcommand("reconstruct", "recover the secret from share files");
    rec->add_option("--public", rec_public, "public.json path")->required();
    rec->add_option("--share", rec_shares, "share file path (repeatable)")->required();

    SimArgs sa;
    CLI::App* sim = app.add_subcommand("simulate", "run a multi-party cheating scenario");
    sim->add_option("--scenario", sa.scenario,
                    "HONEST | DEALER_INCONSISTENT | SHAREHOLDER_FAKE | INTRUDER_TAMPER | SECRET_MISMATCH")
        ->required();
    sim->add_option("--seed", sa.seed, "scenario seed");
    sim->add_option("--field-prime", sa.field_prime, "field prime P");
    sim->add_option("--threshold", sa.threshold, "threshold t");
    sim->add_option("--shares", sa.shares, "shareholder count n");
    sim->add_option("--secret", sa.secret, "secret S");
    sim->add_option("--targets", sa.targets, "adversary target indices");
    sim->add_option("--delta", sa.delta, "tamper offset added mod P");
    sim->add_option("--enc-bits", sa.enc_bits, "encryption factor size");
    sim->add_flag("--different-secret", sa.different_secret,
                  "DEALER_INCONSISTENT: second polynomial has a different constant term");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : kExitUsage;
    }

    try {
        if (deal->parsed()) return cmd_deal(da);
        if (verify->parsed()) return cmd_verify(public_path, share_path);
        if (rec->parsed()) return cmd_reconstruct(rec_public, rec_shares);
        if (sim->parsed()) return cmd_simulate(sa);
    } catch (const vss::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const vss::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
