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

// Shared test fixtures: a fully provisioned system (registered users,
// scope catalog, dealer-mode network) plus small byte helpers.

#pragma once

#include <string_view>

#include "dslrs/ledger.hpp"
#include "dslrs/network_sim.hpp"
#include "dslrs/rng.hpp"

namespace dslrs::test {

inline std::vector<std::uint8_t> bytes(std::string_view s) {
    return {s.begin(), s.end()};
}

struct System {
    PublicParams pp;
    std::vector<KeyPair> users;
    std::vector<NetShare> shares;

    const Scalar& scope(std::size_t i) const {  // signing scopes, 0-based
        return pp.catalog.sids().at(i + 1);
    }

    // ring of the given registry indices; the signer must be among them
    Ring ring_of(std::initializer_list<std::size_t> idx) const {
        std::vector<Point> members;
        for (auto i : idx) members.push_back(users.at(i).public_key);
        return Ring(std::move(members));
    }

    // ring of `size` members with `signer` placed at `position`
    Ring ring_around(std::size_t signer, std::size_t size,
                     std::size_t position) const {
        std::vector<Point> members;
        for (std::size_t i = 0; members.size() < size - 1; ++i) {
            if (i == signer) continue;
            members.push_back(users.at(i).public_key);
        }
        members.insert(members.begin() + static_cast<long>(position),
                       users.at(signer).public_key);
        return Ring(std::move(members));
    }

    std::vector<DecryptionShare> shares_for(const DslrsSignature& sig,
                                            std::span<const std::size_t> ids)
        const {
        std::vector<DecryptionShare> out;
        for (auto j : ids) out.push_back(decryption_share(shares.at(j), sig.c1));
        return out;
    }

    std::vector<DecryptionShare> first_k_shares(const DslrsSignature& sig) const {
        std::vector<std::size_t> ids;
        for (std::size_t j = 0; j < pp.net.k; ++j) ids.push_back(j);
        return shares_for(sig, ids);
    }
};

// K registered users (PoP-gated admission), `scopes` signing scopes plus
// the reserved registration scope, dealer-mode k-of-N network.
inline System make_system(std::size_t n_users, std::size_t scopes,
                          std::size_t k, std::size_t n_nodes,
                          std::uint64_t seed, std::size_t n_min = 2) {
    DeterministicRng rng(seed);
    ScopeCatalog catalog = ScopeCatalog::random(scopes + 1, rng);
    auto [net, shares] = dealer_keygen(k, n_nodes, rng);
    Registry registry(n_min);
    std::vector<KeyPair> users;
    for (std::size_t i = 0; i < n_users; ++i) {
        KeyPair kp = gen_keypair(rng);
        registry.register_key(catalog, kp.public_key, pop_create(kp, catalog, rng));
        users.push_back(std::move(kp));
    }
    PublicParams pp{std::move(catalog), std::move(net), std::move(registry), true};
    return System{std::move(pp), std::move(users), std::move(shares)};
}

}  // namespace dslrs::test
