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

#include "dslrs/keys.hpp"

#include <fstream>
#include <sstream>

#include "dslrs/rng.hpp"
#include "hex.hpp"

namespace dslrs {

namespace {

constexpr std::uint8_t kTagPop[] = {'D', 'S', 'L', 'R', 'S', '/', 'P', 'o', 'P'};

// m = H(P || SID_1), the registration message the PoP signs
Scalar pop_message(const Point& public_key, const ScopeCatalog& catalog) {
    std::vector<std::uint8_t> buf;
    auto p = public_key.encode();
    auto sid = catalog.registration_sid().encode();
    buf.insert(buf.end(), p.begin(), p.end());
    buf.insert(buf.end(), sid.begin(), sid.end());
    return hash_to_scalar(buf);
}

// challenge binds (G, P, R, m) under its own tag; all fields fixed width
Scalar pop_challenge(const Point& public_key, const Point& commitment,
                     const Scalar& msg) {
    std::vector<std::uint8_t> buf(std::begin(kTagPop), std::end(kTagPop));
    auto g = Point::generator().encode();
    auto p = public_key.encode();
    auto r = commitment.encode();
    auto m = msg.encode();
    buf.insert(buf.end(), g.begin(), g.end());
    buf.insert(buf.end(), p.begin(), p.end());
    buf.insert(buf.end(), r.begin(), r.end());
    buf.insert(buf.end(), m.begin(), m.end());
    return hash_to_scalar(buf);
}

}  // namespace

KeyPair gen_keypair(RandomSource& rng) {
    Scalar secret = Scalar::random_nonzero(rng);
    Point pub = Point::mul_gen(secret);
    return KeyPair{std::move(secret), std::move(pub)};
}

ScopeCatalog::ScopeCatalog(std::vector<Scalar> sids) : sids_(std::move(sids)) {
    if (sids_.empty())
        throw std::invalid_argument("scope catalog: needs at least SID_1");
    for (std::size_t i = 0; i < sids_.size(); ++i)
        for (std::size_t j = i + 1; j < sids_.size(); ++j)
            if (sids_[i] == sids_[j])
                throw std::invalid_argument("scope catalog: duplicate SID");
}

ScopeCatalog ScopeCatalog::random(std::size_t count, RandomSource& rng) {
    std::vector<Scalar> sids;
    sids.reserve(count);
    while (sids.size() < count) {
        Scalar s = Scalar::random_nonzero(rng);
        bool dup = false;
        for (const auto& other : sids)
            if (other == s) dup = true;
        if (!dup) sids.push_back(std::move(s));
    }
    return ScopeCatalog(std::move(sids));
}

bool ScopeCatalog::contains(const Scalar& sid) const {
    for (const auto& s : sids_)
        if (s == sid) return true;
    return false;
}

bool ScopeCatalog::is_signing_scope(const Scalar& sid) const {
    return contains(sid) && sid != registration_sid();
}

PoP pop_create(const KeyPair& kp, const ScopeCatalog& catalog,
               RandomSource& rng) {
    Scalar m = pop_message(kp.public_key, catalog);
    Scalar k = Scalar::random_nonzero(rng);
    Point commitment = Point::mul_gen(k);
    Scalar e = pop_challenge(kp.public_key, commitment, m);
    Scalar response = k + e * kp.secret;
    return PoP{std::move(commitment), std::move(response)};
}

bool pop_verify(const Point& public_key, const ScopeCatalog& catalog,
                const PoP& pop) {
    Scalar m = pop_message(public_key, catalog);
    Scalar e = pop_challenge(public_key, pop.commitment, m);
    // z*G == R + e*P  <=>  z*G - e*P == R
    return Point::dbl_mul_gen(pop.response, -e, public_key) == pop.commitment;
}

Registry::Registry(std::size_t n_min) : n_min_(n_min) {
    if (n_min_ < 1) throw std::invalid_argument("registry: n_min must be >= 1");
}

bool Registry::contains(const Point& p) const {
    return index_.count(p.encode()) != 0;
}

void Registry::register_key(const ScopeCatalog& catalog,
                            const Point& public_key, const PoP& pop) {
    using Code = RegistrationError::Code;
    if (public_key.is_identity())
        throw RegistrationError(Code::identity_point,
                                "registration: identity point");
    // cofactor 1 makes this unreachable for decoded points; kept to mirror
    // the admission rule on curves where it is not
    Scalar q_minus_1 = -Scalar::from_u64(1);
    if (!(public_key.mul(q_minus_1) + public_key).is_identity())
        throw RegistrationError(Code::not_in_subgroup,
                                "registration: not in prime-order subgroup");
    if (contains(public_key))
        throw RegistrationError(Code::duplicate_key,
                                "registration: key already registered");
    if (!pop_verify(public_key, catalog, pop))
        throw RegistrationError(Code::invalid_pop,
                                "registration: proof of possession failed");
    index_.insert(public_key.encode());
    keys_.push_back(public_key);
}

void Registry::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("registry: cannot write " + path.string());
    out << "dslrs-registry v1 curve=" << kCurveId << " n_min=" << n_min_ << "\n";
    for (const auto& key : keys_) out << detail::to_hex(key.encode()) << "\n";
    if (!out) throw std::runtime_error("registry: write failed");
}

Registry Registry::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("registry: cannot read " + path.string());
    std::string header;
    std::getline(in, header);
    std::istringstream hs(header);
    std::string magic, version, tok;
    hs >> magic >> version;
    if (magic != "dslrs-registry" || version != "v1")
        throw std::runtime_error("registry: bad header");
    std::string curve_id;
    std::size_t n_min = 0;
    while (hs >> tok) {
        if (tok.rfind("curve=", 0) == 0) curve_id = tok.substr(6);
        if (tok.rfind("n_min=", 0) == 0) n_min = std::stoul(tok.substr(6));
    }
    if (curve_id != kCurveId)
        throw std::runtime_error("registry: unsupported curve " + curve_id);
    if (n_min == 0) throw std::runtime_error("registry: missing n_min");
    Registry reg(n_min);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Point p = Point::decode(detail::from_hex(line));
        // admitted keys were PoP-checked before save; structural checks only
        if (p.is_identity() || reg.contains(p))
            throw std::runtime_error("registry: corrupt entry");
        reg.index_.insert(p.encode());
        reg.keys_.push_back(std::move(p));
    }
    return reg;
}

}  // namespace dslrs
