// Copyright 2026 The DSLRS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <fstream>

#include "fixtures.hpp"

using namespace dslrs;
using namespace dslrs::sim;
using test::bytes;

namespace {

// system whose network key comes from a DKG run instead of a dealer
struct DkgSystem {
    std::unique_ptr<Simulator> simulator;
    PublicParams pp;
    std::vector<KeyPair> users;
};

DkgSystem make_dkg_system(std::size_t n_nodes, std::size_t k,
                          std::uint64_t seed, SimOptions options = {}) {
    auto simulator = std::make_unique<Simulator>(n_nodes, k, seed, options);
    NetPublic net = simulator->run_dkg();
    DeterministicRng rng(seed ^ 0x5eed);
    ScopeCatalog catalog = ScopeCatalog::random(3, rng);
    Registry registry(2);
    std::vector<KeyPair> users;
    for (int i = 0; i < 8; ++i) {
        KeyPair kp = gen_keypair(rng);
        registry.register_key(catalog, kp.public_key,
                              pop_create(kp, catalog, rng));
        users.push_back(std::move(kp));
    }
    PublicParams pp{std::move(catalog), std::move(net), std::move(registry),
                    true};
    return DkgSystem{std::move(simulator), std::move(pp), std::move(users)};
}

DslrsSignature sign_in(DkgSystem& s, std::size_t signer, std::uint64_t seed) {
    DeterministicRng rng(seed);
    std::vector<Point> members;
    for (std::size_t i = 0; i < 4; ++i)
        members.push_back(s.users[(signer + i) % s.users.size()].public_key);
    auto m = bytes("sim consent");
    return sign(m, s.users[signer].secret, Ring(std::move(members)),
                s.pp.catalog.sids()[1], s.pp, rng);
}

}  // namespace

TEST_SUITE("network-sim") {

TEST_CASE("1-of-1 dkg degenerates to single-party keygen") {
    Simulator simulator(1, 1, 99);
    NetPublic net = simulator.run_dkg();
    auto share = simulator.node_share(1);
    REQUIRE(share.has_value());
    CHECK(Point::mul_gen(share->secret_share) == net.p_net);
}

TEST_CASE("all-honest dkg: every k-subset of node shares works end to end") {
    auto s = make_dkg_system(5, 3, 7001);
    auto sig = sign_in(s, 2, 1);
    REQUIRE(verify(bytes("sim consent"), sig, s.pp));

    for (std::size_t a = 1; a <= 5; ++a)
        for (std::size_t b = a + 1; b <= 5; ++b)
            for (std::size_t c = b + 1; c <= 5; ++c) {
                std::vector<DecryptionShare> shares;
                for (auto id : {a, b, c})
                    shares.push_back(decryption_share(
                        *s.simulator->node_share(static_cast<int>(id)), sig.c1));
                CHECK(deanonymize(sig, shares, s.pp.net) ==
                      s.users[2].public_key);
            }

    CHECK(s.simulator->request_deanonymization(sig, "auditor-1") ==
          s.users[2].public_key);
}

TEST_CASE("a silent node neither blocks the dkg nor the opening") {
    SimOptions opt;
    opt.behaviors[4] = Behavior::silent;
    auto s = make_dkg_system(5, 3, 7002, opt);
    auto sig = sign_in(s, 0, 2);
    CHECK(s.simulator->request_deanonymization(sig, "auditor-2") ==
          s.users[0].public_key);
}

TEST_CASE("fewer than k responders is a timeout") {
    SimOptions opt;
    opt.behaviors[2] = Behavior::silent;
    opt.behaviors[3] = Behavior::silent;
    opt.behaviors[5] = Behavior::silent;
    auto s = make_dkg_system(5, 3, 7003, opt);  // two responders, k = 3
    auto sig = sign_in(s, 1, 3);
    CHECK_THROWS_AS(s.simulator->request_deanonymization(sig, "auditor-3"),
                    TimeoutError);
}

TEST_CASE("corrupt dealer without a complaint round aborts the dkg") {
    SimOptions opt;
    opt.behaviors[2] = Behavior::corrupt_share;
    Simulator simulator(5, 3, 7004, opt);
    CHECK_THROWS_AS(simulator.run_dkg(), DkgError);
}

TEST_CASE("complaint round disqualifies the corrupt dealer") {
    SimOptions opt;
    opt.complaint_round = true;
    opt.behaviors[5] = Behavior::corrupt_share;
    auto s = make_dkg_system(5, 3, 7005, opt);

    bool complained = false;
    for (const auto& msg : s.simulator->transcript())
        if (msg.kind == MsgKind::dkg_complaint) complained = true;
    CHECK(complained);

    // nodes 1..3 answer first and are honest: opening works
    auto sig = sign_in(s, 3, 4);
    CHECK(s.simulator->request_deanonymization(sig, "auditor-4") ==
          s.users[3].public_key);
}

TEST_CASE("corrupt responder inside the first k poisons the opening") {
    SimOptions opt;
    opt.complaint_round = true;
    opt.behaviors[1] = Behavior::corrupt_share;
    auto s = make_dkg_system(5, 3, 7006, opt);
    auto sig = sign_in(s, 4, 5);
    Point opened = s.simulator->request_deanonymization(sig, "auditor-5");
    CHECK(opened != s.users[4].public_key);
    CHECK(!sig.ring.contains(opened));  // garbage, flagged by the caller
}

TEST_CASE("same seed, same transcript") {
    SimOptions opt;
    opt.behaviors[3] = Behavior::silent;
    Simulator a(4, 2, 1234, opt), b(4, 2, 1234, opt), c(4, 2, 1235, opt);
    a.run_dkg();
    b.run_dkg();
    c.run_dkg();
    CHECK(a.transcript_json() == b.transcript_json());
    CHECK(a.transcript_json() != c.transcript_json());
    CHECK(!a.transcript().empty());
}

TEST_CASE("dkg and dealer systems open the same corpus identically") {
    auto dkg_sys = make_dkg_system(5, 3, 7007);
    test::System dealer_sys = test::make_system(8, 2, 3, 5, 7008);
    for (int i = 0; i < 6; ++i) {
        std::size_t signer = static_cast<std::size_t>(i);
        auto sig_dkg = sign_in(dkg_sys, signer, 100 + static_cast<unsigned>(i));
        Point from_dkg =
            dkg_sys.simulator->request_deanonymization(sig_dkg, "parity");

        DeterministicRng rng(200 + static_cast<unsigned>(i));
        auto m = bytes("sim consent");
        auto sig_dealer = sign(m, dealer_sys.users[signer].secret,
                               dealer_sys.ring_around(signer, 4, signer % 4),
                               dealer_sys.scope(0), dealer_sys.pp, rng);
        Point from_dealer = deanonymize(
            sig_dealer, dealer_sys.first_k_shares(sig_dealer), dealer_sys.pp.net);

        CHECK(from_dkg == dkg_sys.users[signer].public_key);
        CHECK(from_dealer == dealer_sys.users[signer].public_key);
    }
}

TEST_CASE("transcript log is valid json-lines") {
    Simulator simulator(3, 2, 42);
    simulator.run_dkg();
    auto path = std::filesystem::temp_directory_path() / "dslrs_transcript.jsonl";
    simulator.write_transcript(path);
    std::ifstream in(path);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        CHECK(line.front() == '{');
        CHECK(line.find("\"kind\"") != std::string::npos);
        ++lines;
    }
    CHECK(lines == simulator.transcript().size());
    std::filesystem::remove(path);
}

}  // TEST_SUITE
