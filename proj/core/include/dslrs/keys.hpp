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

#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <vector>

#include "dslrs/group.hpp"

// User key material, the scope catalog, and the global registry with
// Schnorr proof-of-possession admission.

namespace dslrs {

struct KeyPair {
    Scalar secret;      // S in Z_q^*
    Point public_key;   // P = S*G
};

KeyPair gen_keypair(RandomSource& rng);

// Scope identifiers {SID_i}. The first entry is reserved for key
// registration (PoP messages) and is never a signing scope by policy.
class ScopeCatalog {
public:
    explicit ScopeCatalog(std::vector<Scalar> sids);
    static ScopeCatalog random(std::size_t count, RandomSource& rng);

    const std::vector<Scalar>& sids() const { return sids_; }
    const Scalar& registration_sid() const { return sids_.front(); }
    bool contains(const Scalar& sid) const;
    // catalog membership minus the reserved registration scope
    bool is_signing_scope(const Scalar& sid) const;
    std::size_t size() const { return sids_.size(); }

private:
    std::vector<Scalar> sids_;
};

// Schnorr signature proving knowledge of the secret key behind a public
// key, over the message H(P || SID_1).
struct PoP {
    Point commitment;
    Scalar response;
};

PoP pop_create(const KeyPair& kp, const ScopeCatalog& catalog,
               RandomSource& rng);
bool pop_verify(const Point& public_key, const ScopeCatalog& catalog,
                const PoP& pop);

class RegistrationError : public std::runtime_error {
public:
    enum class Code { identity_point, not_in_subgroup, duplicate_key, invalid_pop };
    RegistrationError(Code code, const char* msg)
        : std::runtime_error(msg), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

// Global public key registry (the list of admitted user keys). Keys enter
// only through register_key, which enforces: P != identity, P in the
// subgroup, P not already present, and a verifying PoP.
class Registry {
public:
    explicit Registry(std::size_t n_min = 2);

    std::size_t n_min() const { return n_min_; }
    std::size_t size() const { return keys_.size(); }
    const std::vector<Point>& keys() const { return keys_; }
    bool contains(const Point& p) const;

    void register_key(const ScopeCatalog& catalog, const Point& public_key,
                      const PoP& pop);

    // newline-delimited hex with a one-line header carrying curve id and n_min
    void save(const std::filesystem::path& path) const;
    static Registry load(const std::filesystem::path& path);

private:
    std::vector<Point> keys_;
    std::set<std::array<std::uint8_t, kPointLen>> index_;
    std::size_t n_min_;
};

}  // namespace dslrs
