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

#include <optional>

#include "dslrs/params.hpp"

// The signature scheme: key images, sign, verify, link, the threshold
// opening of the embedded ElGamal tuple, and byte-exact serialization.

namespace dslrs {

// Ordered list of public keys the signer hides in. No duplicates, no
// identity. Hashed and serialized verbatim: callers who want the signer
// position hidden among append-style rings shuffle before signing (the
// CLI does so by default).
class Ring {
public:
    explicit Ring(std::vector<Point> members);

    const std::vector<Point>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    std::optional<std::size_t> index_of(const Point& p) const;
    bool contains(const Point& p) const { return index_of(p).has_value(); }

private:
    std::vector<Point> members_;
};

// I_scope = S_s * H_p(P_s || SID): one fixed tag per (signer, scope),
// independent of ring and message.
class KeyImage {
public:
    explicit KeyImage(Point p);
    const Point& point() const { return point_; }
    bool operator==(const KeyImage& rhs) const { return point_ == rhs.point_; }
    bool operator!=(const KeyImage& rhs) const { return !(*this == rhs); }

private:
    Point point_;
};

KeyImage key_image(const Scalar& secret, const Point& public_key,
                   const Scalar& sid);

// Transient commitment quad (L, R, A, B); never serialized.
struct CommitmentQuad {
    Point l, r, a, b;
};

struct DslrsSignature {
    KeyImage key_image;
    Ring ring;
    Scalar sid;
    Point p_net;
    Point c1, c2;   // ElGamal tuple: r_dean*G, P_s + r_dean*P_net
    Scalar ch1;     // challenge at ring index 1 (0 in code)
    std::vector<Scalar> xs;  // ring-order responses
    std::vector<Scalar> zs;
};

class SignError : public std::runtime_error {
public:
    enum class Code {
        signer_not_in_ring,
        ring_not_registered,
        unknown_scope,
        ring_too_small,
    };
    SignError(Code code, const char* msg)
        : std::runtime_error(msg), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

// Nonces drawn during sign, exposed for tests that check the
// accountability algebra (C2 - r_dean*P_net == P_s) or share sums.
struct SignTrace {
    Scalar r, r_dean, r_z;
    std::size_t signer_index = 0;
};

// ch = H(m, L, I_scope, SID, C1, C2, L_i, R_i, A_i, B_i), each field
// length-prefixed (u32 BE) in that order; the ring is one field, its
// members' encodings concatenated.
Scalar challenge(std::span<const std::uint8_t> m, const Ring& ring,
                 const KeyImage& ki, const Scalar& sid, const Point& c1,
                 const Point& c2, const CommitmentQuad& quad);

DslrsSignature sign(std::span<const std::uint8_t> m, const Scalar& secret,
                    const Ring& ring, const Scalar& sid,
                    const PublicParams& pp, RandomSource& rng,
                    SignTrace* trace = nullptr);

// Boolean contract: structural checks then the challenge loop; malformed
// byte input belongs to verify_bytes, which maps DecodeError to 0.
bool verify(std::span<const std::uint8_t> m, const DslrsSignature& sig,
            const PublicParams& pp);
bool verify_bytes(std::span<const std::uint8_t> m,
                  std::span<const std::uint8_t> sig_bytes,
                  const PublicParams& pp);

// 1 iff both signatures verify, share the scope, and share the key image.
bool link(const DslrsSignature& sig1, std::span<const std::uint8_t> m1,
          const DslrsSignature& sig2, std::span<const std::uint8_t> m2,
          const PublicParams& pp);

// Wire format:
//   key_image(33) || n(u16 BE) || ring(33n) || SID(32) || P_net(33) ||
//   C1(33) || C2(33) || ch1(32) || x_1..x_n(32n) || z_1..z_n(32n)
// Group/scalar payload is 97n + 196 bytes; the u16 framing adds 2.
std::vector<std::uint8_t> serialize(const DslrsSignature& sig);
DslrsSignature deserialize(std::span<const std::uint8_t> bytes,
                           const PublicParams& pp);

// C1 field of a serialized signature, without full validation; what a
// share-producing node needs from the request payload.
Point peek_c1(std::span<const std::uint8_t> sig_bytes);

// Algorithm: lambda-weighted share sum V, then C2 - V. For an honest
// signature with honest shares this is the signer's public key.
Point deanonymize(const DslrsSignature& sig,
                  std::span<const DecryptionShare> shares,
                  const NetPublic& net);

}  // namespace dslrs
