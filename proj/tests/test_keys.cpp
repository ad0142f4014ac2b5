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

#include <filesystem>

#include "fixtures.hpp"

using namespace dslrs;
using Code = RegistrationError::Code;

namespace {

Code reg_error(Registry& reg, const ScopeCatalog& cat, const Point& p,
               const PoP& pop) {
    try {
        reg.register_key(cat, p, pop);
    } catch (const RegistrationError& e) {
        return e.code();
    }
    throw std::logic_error("expected RegistrationError");
}

}  // namespace

TEST_SUITE("keys") {

TEST_CASE("gen_keypair: defining equation and distinct draws") {
    DeterministicRng rng(1);
    std::vector<Scalar> secrets;
    for (int i = 0; i < 100; ++i) {
        KeyPair kp = gen_keypair(rng);
        CHECK(kp.public_key == Point::mul_gen(kp.secret));
        CHECK(!kp.secret.is_zero());
        for (const auto& s : secrets) CHECK(s != kp.secret);
        secrets.push_back(std::move(kp.secret));
    }
}

TEST_CASE("scope catalog") {
    DeterministicRng rng(2);
    ScopeCatalog cat = ScopeCatalog::random(4, rng);
    CHECK(cat.size() == 4);
    CHECK(cat.contains(cat.registration_sid()));
    CHECK(!cat.is_signing_scope(cat.registration_sid()));
    CHECK(cat.is_signing_scope(cat.sids()[1]));
    CHECK(!cat.contains(Scalar::from_u64(987654321)));

    std::vector<Scalar> dup{Scalar::from_u64(1), Scalar::from_u64(1)};
    CHECK_THROWS_AS(ScopeCatalog(std::move(dup)), std::invalid_argument);
    CHECK_THROWS_AS(ScopeCatalog(std::vector<Scalar>{}), std::invalid_argument);
}

TEST_CASE("proof of possession: completeness and cross-key soundness") {
    DeterministicRng rng(3);
    ScopeCatalog cat = ScopeCatalog::random(2, rng);
    KeyPair a = gen_keypair(rng);
    KeyPair b = gen_keypair(rng);
    PoP pop = pop_create(a, cat, rng);
    CHECK(pop_verify(a.public_key, cat, pop));
    CHECK(!pop_verify(b.public_key, cat, pop));
}

TEST_CASE("proof of possession rejects perturbed transcripts") {
    DeterministicRng rng(4);
    ScopeCatalog cat = ScopeCatalog::random(2, rng);
    KeyPair kp = gen_keypair(rng);
    PoP pop = pop_create(kp, cat, rng);

    PoP bumped = pop;
    bumped.response = bumped.response + Scalar::from_u64(1);
    CHECK(!pop_verify(kp.public_key, cat, bumped));

    for (int i = 0; i < 100; ++i) {
        PoP mutated = pop;
        if (i % 2 == 0)
            mutated.response = Scalar::random(rng);
        else
            mutated.commitment = Point::mul_gen(Scalar::random_nonzero(rng));
        CHECK(!pop_verify(kp.public_key, cat, mutated));
    }
}

TEST_CASE("registry admission and its failure modes") {
    DeterministicRng rng(5);
    ScopeCatalog cat = ScopeCatalog::random(2, rng);
    Registry reg(2);

    KeyPair kp = gen_keypair(rng);
    PoP pop = pop_create(kp, cat, rng);
    reg.register_key(cat, kp.public_key, pop);
    CHECK(reg.size() == 1);
    CHECK(reg.contains(kp.public_key));

    CHECK(reg_error(reg, cat, kp.public_key, pop) == Code::duplicate_key);
    CHECK(reg_error(reg, cat, Point::identity(), pop) == Code::identity_point);

    KeyPair other = gen_keypair(rng);
    PoP wrong = pop_create(other, cat, rng);
    CHECK(reg_error(reg, cat, kp.public_key, wrong) == Code::duplicate_key);
    CHECK(reg_error(reg, cat, other.public_key, pop) == Code::invalid_pop);
}

TEST_CASE("rogue key P1 - P2 never enters the registry") {
    DeterministicRng rng(6);
    ScopeCatalog cat = ScopeCatalog::random(2, rng);
    Registry reg(2);
    KeyPair u1 = gen_keypair(rng);
    KeyPair u2 = gen_keypair(rng);
    reg.register_key(cat, u1.public_key, pop_create(u1, cat, rng));
    reg.register_key(cat, u2.public_key, pop_create(u2, cat, rng));

    Point rogue = u1.public_key - u2.public_key;
    for (int i = 0; i < 25; ++i) {
        // adversary without S1 - S2: random transcripts are all it has
        PoP forged{Point::mul_gen(Scalar::random_nonzero(rng)),
                   Scalar::random(rng)};
        CHECK(reg_error(reg, cat, rogue, forged) == Code::invalid_pop);
    }
    CHECK(reg.size() == 2);
}

TEST_CASE("registry invariants hold after an admission sequence") {
    DeterministicRng rng(7);
    ScopeCatalog cat = ScopeCatalog::random(2, rng);
    Registry reg(3);
    for (int i = 0; i < 12; ++i) {
        KeyPair kp = gen_keypair(rng);
        reg.register_key(cat, kp.public_key, pop_create(kp, cat, rng));
    }
    CHECK(reg.n_min() == 3);
    Scalar q_minus_1 = -Scalar::from_u64(1);
    for (std::size_t i = 0; i < reg.keys().size(); ++i) {
        const Point& p = reg.keys()[i];
        CHECK(!p.is_identity());
        CHECK((p.mul(q_minus_1) + p).is_identity());
        for (std::size_t j = i + 1; j < reg.keys().size(); ++j)
            CHECK(p != reg.keys()[j]);
    }
}

TEST_CASE("registry file round-trip") {
    DeterministicRng rng(8);
    ScopeCatalog cat = ScopeCatalog::random(2, rng);
    Registry reg(4);
    for (int i = 0; i < 5; ++i) {
        KeyPair kp = gen_keypair(rng);
        reg.register_key(cat, kp.public_key, pop_create(kp, cat, rng));
    }
    auto path = std::filesystem::temp_directory_path() / "dslrs_reg_test.txt";
    reg.save(path);
    Registry loaded = Registry::load(path);
    CHECK(loaded.n_min() == 4);
    CHECK(loaded.size() == reg.size());
    for (std::size_t i = 0; i < reg.size(); ++i)
        CHECK(loaded.keys()[i] == reg.keys()[i]);
    std::filesystem::remove(path);
}

}  // TEST_SUITE
