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

#include "dslrs/signature.hpp"

#include <cstring>

#include "dslrs/rng.hpp"

namespace dslrs {

namespace {

void append_u32_field(std::vector<std::uint8_t>& buf,
                      std::span<const std::uint8_t> field) {
    auto len = static_cast<std::uint32_t>(field.size());
    buf.push_back(static_cast<std::uint8_t>(len >> 24));
    buf.push_back(static_cast<std::uint8_t>(len >> 16));
    buf.push_back(static_cast<std::uint8_t>(len >> 8));
    buf.push_back(static_cast<std::uint8_t>(len));
    buf.insert(buf.end(), field.begin(), field.end());
}

// H_p(P || SID) preimage: both fields fixed width, no prefixes needed
Point ring_base_point(const Point& public_key, const Scalar& sid) {
    std::array<std::uint8_t, kPointLen + kScalarLen> buf{};
    auto p = public_key.encode();
    auto s = sid.encode();
    std::copy(p.begin(), p.end(), buf.begin());
    std::copy(s.begin(), s.end(), buf.begin() + kPointLen);
    return hash_to_point(buf);
}

}  // namespace

Ring::Ring(std::vector<Point> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("ring: empty");
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].is_identity())
            throw std::invalid_argument("ring: identity member");
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            if (members_[i] == members_[j])
                throw std::invalid_argument("ring: duplicate member");
    }
}

std::optional<std::size_t> Ring::index_of(const Point& p) const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i] == p) return i;
    return std::nullopt;
}

KeyImage::KeyImage(Point p) : point_(std::move(p)) {
    if (point_.is_identity())
        throw std::invalid_argument("key image: identity");
}

KeyImage key_image(const Scalar& secret, const Point& public_key,
                   const Scalar& sid) {
    return KeyImage(ring_base_point(public_key, sid).mul(secret));
}

Scalar challenge(std::span<const std::uint8_t> m, const Ring& ring,
                 const KeyImage& ki, const Scalar& sid, const Point& c1,
                 const Point& c2, const CommitmentQuad& quad) {
    std::vector<std::uint8_t> transcript;
    transcript.reserve(4 * 10 + m.size() + ring.size() * kPointLen + 6 * kPointLen +
                       2 * kScalarLen);
    append_u32_field(transcript, m);
    std::vector<std::uint8_t> ring_bytes;
    ring_bytes.reserve(ring.size() * kPointLen);
    for (const auto& p : ring.members()) {
        auto e = p.encode();
        ring_bytes.insert(ring_bytes.end(), e.begin(), e.end());
    }
    append_u32_field(transcript, ring_bytes);
    append_u32_field(transcript, ki.point().encode());
    append_u32_field(transcript, sid.encode());
    append_u32_field(transcript, c1.encode());
    append_u32_field(transcript, c2.encode());
    append_u32_field(transcript, quad.l.encode());
    append_u32_field(transcript, quad.r.encode());
    append_u32_field(transcript, quad.a.encode());
    append_u32_field(transcript, quad.b.encode());
    return hash_to_scalar(transcript);
}

// Non-signer commitment reconstruction; identical in sign and verify:
//   L_i = x_i*G + ch_i*P_i
//   R_i = x_i*H_p(P_i||SID) + ch_i*I
//   A_i = z_i*G - ch_i*C1
//   B_i = z_i*P_net - ch_i*(C2 - P_i)
static CommitmentQuad member_quad(const Scalar& x, const Scalar& z,
                                  const Scalar& ch, const Point& member,
                                  const Point& hp, const KeyImage& ki,
                                  const Point& p_net, const Point& c1,
                                  const Point& c2) {
    Scalar neg_ch = -ch;
    return CommitmentQuad{
        Point::dbl_mul_gen(x, ch, member),
        Point::dbl_mul(x, hp, ch, ki.point()),
        Point::dbl_mul_gen(z, neg_ch, c1),
        Point::dbl_mul(z, p_net, neg_ch, c2 - member),
    };
}

DslrsSignature sign(std::span<const std::uint8_t> m, const Scalar& secret,
                    const Ring& ring, const Scalar& sid,
                    const PublicParams& pp, RandomSource& rng,
                    SignTrace* trace) {
    using Code = SignError::Code;
    const std::size_t n = ring.size();
    const Point signer_pub = Point::mul_gen(secret);
    auto signer_at = ring.index_of(signer_pub);
    if (!signer_at)
        throw SignError(Code::signer_not_in_ring, "sign: P_s not in ring");
    if (pp.check_registry)
        for (const auto& p : ring.members())
            if (!pp.registry.contains(p))
                throw SignError(Code::ring_not_registered,
                                "sign: ring member not in registry");
    if (!pp.catalog.is_signing_scope(sid))
        throw SignError(Code::unknown_scope,
                        "sign: SID not a signing scope (unknown or reserved)");
    if (n < pp.registry.n_min())
        throw SignError(Code::ring_too_small, "sign: ring below n_min");

    const std::size_t s = *signer_at;
    const Point hp_s = ring_base_point(signer_pub, sid);
    KeyImage ki(hp_s.mul(secret));

    // nonzero nonces: r_dean = 0 would place P_s in the clear in C2
    const Scalar r = Scalar::random_nonzero(rng);
    const Scalar r_dean = Scalar::random_nonzero(rng);
    const Scalar r_z = Scalar::random_nonzero(rng);

    const Point c1 = Point::mul_gen(r_dean);
    const Point c2 = signer_pub + pp.net.p_net.mul(r_dean);

    CommitmentQuad signer_quad{
        Point::mul_gen(r),
        hp_s.mul(r),
        Point::mul_gen(r_z),
        pp.net.p_net.mul(r_z),
    };

    // Challenge loop, 0-based: the signer's quad seeds ch[s+1]; the walk
    // then covers the other n-1 indices in ring order, wrapping, and ends
    // by producing ch[s].
    std::vector<Scalar> ch(n);
    std::vector<Scalar> xs(n), zs(n);
    ch[(s + 1) % n] = challenge(m, ring, ki, sid, c1, c2, signer_quad);
    for (std::size_t j = 1; j < n; ++j) {
        const std::size_t i = (s + j) % n;
        xs[i] = Scalar::random(rng);
        zs[i] = Scalar::random(rng);
        const Point& member = ring.members()[i];
        CommitmentQuad quad =
            member_quad(xs[i], zs[i], ch[i], member,
                        ring_base_point(member, sid), ki, pp.net.p_net, c1, c2);
        ch[(i + 1) % n] = challenge(m, ring, ki, sid, c1, c2, quad);
    }
    // close the loop with the signer's responses
    xs[s] = r - ch[s] * secret;
    zs[s] = r_z + ch[s] * r_dean;

    if (trace) *trace = SignTrace{r, r_dean, r_z, s};
    return DslrsSignature{std::move(ki), ring,          sid,
                          pp.net.p_net,  std::move(c1), std::move(c2),
                          std::move(ch[0]), std::move(xs), std::move(zs)};
}

bool verify(std::span<const std::uint8_t> m, const DslrsSignature& sig,
            const PublicParams& pp) {
    const std::size_t n = sig.ring.size();
    if (sig.xs.size() != n || sig.zs.size() != n) return false;
    if (n < pp.registry.n_min()) return false;
    if (!pp.catalog.is_signing_scope(sig.sid)) return false;
    if (sig.p_net != pp.net.p_net) return false;
    if (pp.check_registry)
        for (const auto& p : sig.ring.members())
            if (!pp.registry.contains(p)) return false;

    // rebuild every challenge from ch1; the loop must close on ch1
    Scalar ch = sig.ch1;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& member = sig.ring.members()[i];
        CommitmentQuad quad =
            member_quad(sig.xs[i], sig.zs[i], ch, member,
                        ring_base_point(member, sig.sid), sig.key_image,
                        sig.p_net, sig.c1, sig.c2);
        ch = challenge(m, sig.ring, sig.key_image, sig.sid, sig.c1, sig.c2,
                       quad);
    }
    return ch == sig.ch1;
}

bool verify_bytes(std::span<const std::uint8_t> m,
                  std::span<const std::uint8_t> sig_bytes,
                  const PublicParams& pp) {
    try {
        return verify(m, deserialize(sig_bytes, pp), pp);
    } catch (const DecodeError&) {
        return false;
    }
}

bool link(const DslrsSignature& sig1, std::span<const std::uint8_t> m1,
          const DslrsSignature& sig2, std::span<const std::uint8_t> m2,
          const PublicParams& pp) {
    if (sig1.sid != sig2.sid) return false;
    if (!verify(m1, sig1, pp) || !verify(m2, sig2, pp)) return false;
    return sig1.key_image == sig2.key_image;
}

std::vector<std::uint8_t> serialize(const DslrsSignature& sig) {
    const std::size_t n = sig.ring.size();
    if (sig.xs.size() != n || sig.zs.size() != n)
        throw std::invalid_argument("serialize: response count mismatch");
    if (n > 0xffff) throw std::invalid_argument("serialize: ring too large");
    std::vector<std::uint8_t> out;
    out.reserve(97 * n + 198);
    auto put_point = [&out](const Point& p) {
        auto e = p.encode();
        out.insert(out.end(), e.begin(), e.end());
    };
    auto put_scalar = [&out](const Scalar& s) {
        auto e = s.encode();
        out.insert(out.end(), e.begin(), e.end());
    };
    put_point(sig.key_image.point());
    out.push_back(static_cast<std::uint8_t>(n >> 8));
    out.push_back(static_cast<std::uint8_t>(n));
    for (const auto& p : sig.ring.members()) put_point(p);
    put_scalar(sig.sid);
    put_point(sig.p_net);
    put_point(sig.c1);
    put_point(sig.c2);
    put_scalar(sig.ch1);
    for (const auto& x : sig.xs) put_scalar(x);
    for (const auto& z : sig.zs) put_scalar(z);
    return out;
}

DslrsSignature deserialize(std::span<const std::uint8_t> bytes,
                           const PublicParams& pp) {
    if (bytes.size() < kPointLen + 2) throw DecodeError("signature: truncated");
    std::size_t off = 0;
    auto take = [&](std::size_t len) {
        if (off + len > bytes.size()) throw DecodeError("signature: truncated");
        auto part = bytes.subspan(off, len);
        off += len;
        return part;
    };
    KeyImage ki(Point::decode(take(kPointLen)));
    auto n_bytes = take(2);
    const std::size_t n = (static_cast<std::size_t>(n_bytes[0]) << 8) | n_bytes[1];
    if (n < pp.registry.n_min()) throw DecodeError("signature: ring below n_min");
    if (bytes.size() != 97 * n + 198)
        throw DecodeError("signature: length inconsistent with ring size");
    std::vector<Point> members;
    members.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        members.push_back(Point::decode(take(kPointLen)));
    Ring ring = [&] {
        try {
            return Ring(std::move(members));
        } catch (const std::invalid_argument& e) {
            throw DecodeError(e.what());
        }
    }();
    Scalar sid = Scalar::decode(take(kScalarLen));
    Point p_net = Point::decode(take(kPointLen));
    Point c1 = Point::decode(take(kPointLen));
    Point c2 = Point::decode(take(kPointLen));
    Scalar ch1 = Scalar::decode(take(kScalarLen));
    std::vector<Scalar> xs, zs;
    xs.reserve(n);
    zs.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        xs.push_back(Scalar::decode(take(kScalarLen)));
    for (std::size_t i = 0; i < n; ++i)
        zs.push_back(Scalar::decode(take(kScalarLen)));
    return DslrsSignature{std::move(ki), std::move(ring), std::move(sid),
                          std::move(p_net), std::move(c1), std::move(c2),
                          std::move(ch1), std::move(xs), std::move(zs)};
}

Point peek_c1(std::span<const std::uint8_t> sig_bytes) {
    // key_image(33) || n(2) || ring(33n) || SID(32) || P_net(33) || C1(33)
    if (sig_bytes.size() < kPointLen + 2)
        throw DecodeError("signature: truncated");
    const std::size_t n = (static_cast<std::size_t>(sig_bytes[kPointLen]) << 8) |
                          sig_bytes[kPointLen + 1];
    const std::size_t off =
        kPointLen + 2 + n * kPointLen + kScalarLen + kPointLen;
    if (sig_bytes.size() < off + kPointLen)
        throw DecodeError("signature: truncated");
    return Point::decode(sig_bytes.subspan(off, kPointLen));
}

Point deanonymize(const DslrsSignature& sig,
                  std::span<const DecryptionShare> shares,
                  const NetPublic& net) {
    return sig.c2 - combine_shares(shares, net);
}

}  // namespace dslrs
