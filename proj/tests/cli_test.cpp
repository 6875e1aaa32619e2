// Copyright 2026 the vsstk authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the vss-cli exit-code and output contract.
// Usage: cli_test <path-to-vss-cli>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int status = pclose(pipe);
    r.code = WEXITSTATUS(status);
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << bytes;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_test <vss-cli>\n";
        return 2;
    }
    std::string cli = argv[1];
    fs::path work = fs::temp_directory_path() / "vss_cli_test";
    fs::remove_all(work);
    fs::create_directories(work);
    fs::path d1 = work / "d1", d2 = work / "d2";

    std::string deal_args =
        " deal --secret 13 --threshold 2 --shares 4 --field-prime 17 --seed 7 --out ";

    // deal: 5 files, exit 0, deterministic under a fixed seed
    check(run(cli + deal_args + d1.string()).code == 0, "deal exits 0");
    check(fs::exists(d1 / "public.json"), "public.json written");
    for (int i = 1; i <= 4; ++i)
        check(fs::exists(d1 / ("share_" + std::to_string(i) + ".json")),
              "share file " + std::to_string(i) + " written");
    check(run(cli + deal_args + d2.string()).code == 0, "second deal exits 0");
    check(slurp(d1 / "public.json") == slurp(d2 / "public.json"), "public.json reproducible");
    for (int i = 1; i <= 4; ++i) {
        std::string name = "share_" + std::to_string(i) + ".json";
        check(slurp(d1 / name) == slurp(d2 / name), name + " reproducible");
    }

    // deal: violated constraint -> exit 2
    check(run(cli + " deal --secret 1 --threshold 5 --shares 4 --field-prime 17 --out " +
              (work / "bad").string())
                  .code == 2,
          "t > n exits 2");
    check(run(cli + " deal --secret 99 --threshold 2 --shares 4 --field-prime 17 --out " +
              (work / "bad").string())
                  .code == 2,
          "secret >= P exits 2");

    std::string pub = (d1 / "public.json").string();
    std::string sh1 = (d1 / "share_1.json").string();

    // verify: honest accept
    RunResult v = run(cli + " verify --public " + pub + " --share " + sh1);
    check(v.code == 0 && v.out == "ACCEPT\n", "honest share accepted");

    // verify: tampered value -> HashMismatch, exit 4
    fs::path tampered = work / "tampered.json";
    {
        std::string bytes = slurp(d1 / "share_2.json");
        auto pos = bytes.find("\"value\": \"");
        std::string prefix = bytes.substr(0, pos + 10);
        std::string rest = bytes.substr(pos + 10);
        auto q = rest.find('"');
        long val = std::stol(rest.substr(0, q));
        spit(tampered, prefix + std::to_string((val + 1) % 17) + rest.substr(q));
    }
    v = run(cli + " verify --public " + pub + " --share " + tampered.string());
    check(v.code == 4 && v.out == "REJECT(HashMismatch)\n", "tampered value rejected");

    // verify: tampered hint -> ConsistencyMismatch, exit 4
    fs::path badhint = work / "badhint.json";
    {
        // hint values exceed long range; perturb the last digit textually
        std::string bytes = slurp(sh1);
        auto pos = bytes.find("\"hint\": \"");
        std::string rest = bytes.substr(pos + 9);
        auto q = rest.find('"');
        char& last = bytes[pos + 9 + q - 1];
        last = last == '1' ? '2' : '1';
        spit(badhint, bytes);
    }
    v = run(cli + " verify --public " + pub + " --share " + badhint.string());
    check(v.code == 4 && v.out == "REJECT(ConsistencyMismatch)\n", "tampered hint rejected");

    // verify: unparsable file -> exit 2
    spit(work / "garbage.json", "not json");
    check(run(cli + " verify --public " + pub + " --share " + (work / "garbage.json").string())
                  .code == 2,
          "garbage share exits 2");

    // reconstruct: two honest shares
    v = run(cli + " reconstruct --public " + pub + " --share " + sh1 + " --share " +
            (d1 / "share_3.json").string());
    check(v.code == 0 && v.out == "13 VERIFIED\n", "reconstruct two honest shares");

    // reconstruct: one share -> exit 5
    check(run(cli + " reconstruct --public " + pub + " --share " + sh1).code == 5,
          "single share exits 5");

    // reconstruct: three shares one faked -> still verified, exit 0
    v = run(cli + " reconstruct --public " + pub + " --share " + sh1 + " --share " +
            tampered.string() + " --share " + (d1 / "share_3.json").string());
    check(v.code == 0 && v.out == "13 VERIFIED\n", "fake among three is tolerated");

    // simulate
    check(run(cli + " simulate --scenario HONEST --seed 1").code == 0, "HONEST simulates clean");
    v = run(cli + " simulate --scenario SHAREHOLDER_FAKE --seed 1 --targets 2");
    check(v.code == 0, "SHAREHOLDER_FAKE matches expectations");
    check(v.out.find("\"rejected\": [\n      2\n    ]") != std::string::npos ||
              v.out.find("\"rejected\":[2]") != std::string::npos,
          "transcript shows the rejected index");
    check(run(cli + " simulate --scenario INTRUDER_TAMPER --seed 1 --targets 3").code == 0,
          "INTRUDER_TAMPER matches expectations");
    check(run(cli + " simulate --scenario SECRET_MISMATCH --seed 1").code == 0,
          "SECRET_MISMATCH matches expectations");
    check(run(cli + " simulate --scenario DEALER_INCONSISTENT --seed 1 --targets 4").code == 0,
          "DEALER_INCONSISTENT matches expectations");
    check(run(cli + " simulate --scenario NOPE --seed 1").code == 2, "unknown scenario exits 2");

    // simulate determinism
    std::string t1 = run(cli + " simulate --scenario HONEST --seed 9").out;
    std::string t2 = run(cli + " simulate --scenario HONEST --seed 9").out;
    check(!t1.empty() && t1 == t2, "simulate output reproducible");

    if (failures == 0) {
        std::cout << "cli_test: all checks passed\n";
        return 0;
    }
    std::cout << "cli_test: " << failures << " failure(s)\n";
    return 1;
}
