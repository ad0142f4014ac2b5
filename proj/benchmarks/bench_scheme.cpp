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

#include <benchmark/benchmark.h>

#include "dslrs/signature.hpp"
#include "dslrs/rng.hpp"

using namespace dslrs;

namespace {

struct Fixture {
    PublicParams pp;
    std::vector<KeyPair> users;
    std::vector<NetShare> shares;
};

Fixture& fixture() {
    static Fixture f = [] {
        DeterministicRng rng(0xBE7C);
        ScopeCatalog catalog = ScopeCatalog::random(3, rng);
        auto [net, shares] = dealer_keygen(4, 7, rng);
        Registry registry(2);
        std::vector<KeyPair> users;
        for (int i = 0; i < 40; ++i) {
            KeyPair kp = gen_keypair(rng);
            registry.register_key(catalog, kp.public_key,
                                  pop_create(kp, catalog, rng));
            users.push_back(std::move(kp));
        }
        return Fixture{PublicParams{std::move(catalog), std::move(net),
                                    std::move(registry), true},
                       std::move(users), std::move(shares)};
    }();
    return f;
}

Ring make_ring(std::size_t n) {
    auto& f = fixture();
    std::vector<Point> members;
    for (std::size_t i = 0; i < n; ++i)
        members.push_back(f.users[i].public_key);
    return Ring(std::move(members));
}

std::vector<std::uint8_t> message() { return {'b', 'e', 'n', 'c', 'h'}; }

DslrsSignature make_sig(std::size_t n) {
    auto& f = fixture();
    DeterministicRng rng(n);
    return sign(message(), f.users[0].secret, make_ring(n),
                f.pp.catalog.sids()[1], f.pp, rng);
}

}  // namespace

static void BM_KeyImage(benchmark::State& state) {
    auto& f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(key_image(f.users[0].secret,
                                           f.users[0].public_key,
                                           f.pp.catalog.sids()[1]));
}
BENCHMARK(BM_KeyImage);

static void BM_Sign(benchmark::State& state) {
    auto& f = fixture();
    Ring ring = make_ring(static_cast<std::size_t>(state.range(0)));
    DeterministicRng rng(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(sign(message(), f.users[0].secret, ring,
                                      f.pp.catalog.sids()[1], f.pp, rng));
}
BENCHMARK(BM_Sign)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_Verify(benchmark::State& state) {
    auto& f = fixture();
    auto sig = make_sig(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify(message(), sig, f.pp));
}
BENCHMARK(BM_Verify)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_Link(benchmark::State& state) {
    auto& f = fixture();
    auto sig1 = make_sig(4);
    DeterministicRng rng(2);
    auto sig2 = sign(message(), f.users[0].secret, make_ring(4),
                     f.pp.catalog.sids()[1], f.pp, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(link(sig1, message(), sig2, message(), f.pp));
}
BENCHMARK(BM_Link);

static void BM_Deanonymize(benchmark::State& state) {
    auto& f = fixture();
    auto sig = make_sig(8);
    std::vector<DecryptionShare> shares;
    for (std::size_t j = 0; j < f.pp.net.k; ++j)
        shares.push_back(decryption_share(f.shares[j], sig.c1));
    for (auto _ : state)
        benchmark::DoNotOptimize(deanonymize(sig, shares, f.pp.net));
}
BENCHMARK(BM_Deanonymize);

static void BM_Serialize(benchmark::State& state) {
    auto sig = make_sig(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serialize(sig));
}
BENCHMARK(BM_Serialize)->Arg(8)->Arg(32);

static void BM_Deserialize(benchmark::State& state) {
    auto& f = fixture();
    auto wire = serialize(make_sig(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(deserialize(wire, f.pp));
}
BENCHMARK(BM_Deserialize)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
