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

// EC_POINTs_mul is deprecated since OpenSSL 3.0 but has no replacement
// for multi-point sums; dbl_mul/msm rely on its shared-doubling pass.
#define OPENSSL_SUPPRESS_DEPRECATED

#include "dslrs/group.hpp"

#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/err.h>
#include <openssl/obj_mac.h>

#include <algorithm>

#include "digest.hpp"
#include "dslrs/rng.hpp"

namespace dslrs {

namespace {

[[noreturn]] void fail(const char* what) {
    ERR_clear_error();
    throw std::runtime_error(std::string("group: ") + what);
}

struct Ctx {
    const EC_GROUP* group;
    const BIGNUM* order;  // q
    const BIGNUM* field;  // p
    std::array<std::uint8_t, kScalarLen> order_be{};

    Ctx() {
        EC_GROUP* g = EC_GROUP_new_by_curve_name(NID_secp256k1);
        if (!g) fail("secp256k1 unavailable");
        BIGNUM* q = BN_new();
        BIGNUM* p = BN_new();
        BN_CTX* bc = BN_CTX_new();
        if (!q || !p || !bc || !EC_GROUP_get_order(g, q, bc) ||
            !EC_GROUP_get_curve(g, p, nullptr, nullptr, bc))
            fail("curve parameters");
        BN_CTX_free(bc);
        if (BN_bn2binpad(q, order_be.data(), order_be.size()) < 0)
            fail("curve order");
        group = g;
        order = q;
        field = p;
    }
};

const Ctx& ctx() {
    static const Ctx c;
    return c;
}

BN_CTX* bn_ctx() {
    struct Holder {
        BN_CTX* c = BN_CTX_new();
        ~Holder() { BN_CTX_free(c); }
    };
    thread_local Holder h;
    if (!h.c) fail("BN_CTX");
    return h.c;
}

BIGNUM* new_bn() {
    BIGNUM* b = BN_new();
    if (!b) fail("BN_new");
    return b;
}

EC_POINT* new_pt() {
    EC_POINT* p = EC_POINT_new(ctx().group);
    if (!p || !EC_POINT_set_to_infinity(ctx().group, p)) fail("EC_POINT_new");
    return p;
}

// valid ZZ_q^* representative: nonzero and numerically below q
bool scalar_bytes_ok(const std::array<std::uint8_t, 32>& h) {
    bool nonzero = std::any_of(h.begin(), h.end(), [](auto b) { return b != 0; });
    return nonzero && std::lexicographical_compare(h.begin(), h.end(),
                                                   ctx().order_be.begin(),
                                                   ctx().order_be.end());
}

constexpr std::uint8_t kTagH[] = {'D', 'S', 'L', 'R', 'S', '/', 'H'};
constexpr std::uint8_t kTagHp[] = {'D', 'S', 'L', 'R', 'S', '/', 'H', 'p'};

std::vector<std::uint8_t> tagged(std::span<const std::uint8_t> tag,
                                 std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> v;
    v.reserve(tag.size() + data.size() + 1);
    v.insert(v.end(), tag.begin(), tag.end());
    v.insert(v.end(), data.begin(), data.end());
    return v;
}

}  // namespace

// ---- Scalar ---------------------------------------------------------------

void Scalar::BnDel::operator()(bignum_st* p) const noexcept { BN_free(p); }

Scalar::Scalar() : n_(new_bn()) {}
Scalar::Scalar(bignum_st* owned) : n_(owned) {}
Scalar::Scalar(const Scalar& other) : n_(BN_dup(other.n_.get())) {
    if (!n_) fail("BN_dup");
}
Scalar::Scalar(Scalar&& other) noexcept = default;
Scalar& Scalar::operator=(const Scalar& other) {
    if (this != &other) {
        BIGNUM* d = BN_dup(other.n_.get());
        if (!d) fail("BN_dup");
        n_.reset(d);
    }
    return *this;
}
Scalar& Scalar::operator=(Scalar&& other) noexcept = default;
Scalar::~Scalar() = default;

Scalar Scalar::from_u64(std::uint64_t v) {
    BIGNUM* b = new_bn();
    if (!BN_set_word(b, v)) fail("BN_set_word");
    return Scalar(b);  // q > 2^64, already reduced
}

Scalar Scalar::random(RandomSource& rng) {
    std::array<std::uint8_t, kScalarLen> buf;
    for (;;) {
        rng.fill(buf);
        BIGNUM* b = new_bn();
        if (!BN_bin2bn(buf.data(), buf.size(), b)) fail("BN_bin2bn");
        if (BN_cmp(b, ctx().order) < 0) return Scalar(b);
        BN_free(b);  // >= q, rejected (odds ~2^-128)
    }
}

Scalar Scalar::random_nonzero(RandomSource& rng) {
    for (;;) {
        Scalar s = random(rng);
        if (!s.is_zero()) return s;
    }
}

Scalar Scalar::decode(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kScalarLen) throw DecodeError("scalar: wrong length");
    BIGNUM* b = new_bn();
    if (!BN_bin2bn(bytes.data(), bytes.size(), b)) {
        BN_free(b);
        fail("BN_bin2bn");
    }
    if (BN_cmp(b, ctx().order) >= 0) {
        BN_free(b);
        throw DecodeError("scalar: not canonical (>= q)");
    }
    return Scalar(b);
}

std::array<std::uint8_t, kScalarLen> Scalar::encode() const {
    std::array<std::uint8_t, kScalarLen> out{};
    if (BN_bn2binpad(n_.get(), out.data(), out.size()) < 0) fail("BN_bn2binpad");
    return out;
}

bool Scalar::is_zero() const { return BN_is_zero(n_.get()); }

Scalar Scalar::operator+(const Scalar& rhs) const {
    BIGNUM* r = new_bn();
    if (!BN_mod_add(r, n_.get(), rhs.n_.get(), ctx().order, bn_ctx()))
        fail("mod_add");
    return Scalar(r);
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    BIGNUM* r = new_bn();
    if (!BN_mod_sub(r, n_.get(), rhs.n_.get(), ctx().order, bn_ctx()))
        fail("mod_sub");
    return Scalar(r);
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    BIGNUM* r = new_bn();
    if (!BN_mod_mul(r, n_.get(), rhs.n_.get(), ctx().order, bn_ctx()))
        fail("mod_mul");
    return Scalar(r);
}

Scalar Scalar::operator-() const {
    BIGNUM* r = new_bn();
    if (BN_is_zero(n_.get())) return Scalar(r);
    if (!BN_sub(r, ctx().order, n_.get())) fail("sub");
    return Scalar(r);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("scalar: inverse of zero");
    BIGNUM* r = BN_mod_inverse(nullptr, n_.get(), ctx().order, bn_ctx());
    if (!r) fail("mod_inverse");
    return Scalar(r);
}

bool Scalar::operator==(const Scalar& rhs) const {
    return BN_cmp(n_.get(), rhs.n_.get()) == 0;
}

// ---- Point ----------------------------------------------------------------

void Point::PtDel::operator()(ec_point_st* p) const noexcept {
    EC_POINT_free(p);
}

Point::Point() : p_(new_pt()) {}
Point::Point(ec_point_st* owned) : p_(owned) {}
Point::Point(const Point& other)
    : p_(EC_POINT_dup(other.p_.get(), ctx().group)) {
    if (!p_) fail("EC_POINT_dup");
}
Point::Point(Point&& other) noexcept = default;
Point& Point::operator=(const Point& other) {
    if (this != &other) {
        EC_POINT* d = EC_POINT_dup(other.p_.get(), ctx().group);
        if (!d) fail("EC_POINT_dup");
        p_.reset(d);
    }
    return *this;
}
Point& Point::operator=(Point&& other) noexcept = default;
Point::~Point() = default;

const Point& Point::generator() {
    static const Point g = [] {
        EC_POINT* p = EC_POINT_dup(EC_GROUP_get0_generator(ctx().group),
                                   ctx().group);
        if (!p) fail("generator");
        return Point(p);
    }();
    return g;
}

Point Point::identity() { return Point(); }

Point Point::decode(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kPointLen) throw DecodeError("point: wrong length");
    if (std::all_of(bytes.begin(), bytes.end(), [](auto b) { return b == 0; }))
        return identity();
    if (bytes[0] != 0x02 && bytes[0] != 0x03)
        throw DecodeError("point: bad compression prefix");
    // reject x >= p so every point has exactly one accepted encoding
    BIGNUM* x = new_bn();
    if (!BN_bin2bn(bytes.data() + 1, kPointLen - 1, x)) {
        BN_free(x);
        fail("BN_bin2bn");
    }
    int cmp = BN_cmp(x, ctx().field);
    BN_free(x);
    if (cmp >= 0) throw DecodeError("point: x not canonical");
    EC_POINT* p = new_pt();
    if (!EC_POINT_oct2point(ctx().group, p, bytes.data(), bytes.size(),
                            bn_ctx())) {
        EC_POINT_free(p);
        ERR_clear_error();
        throw DecodeError("point: not on curve");
    }
    // cofactor 1: on the curve means in the prime-order subgroup
    return Point(p);
}

std::array<std::uint8_t, kPointLen> Point::encode() const {
    std::array<std::uint8_t, kPointLen> out{};
    if (is_identity()) return out;  // all zero
    if (EC_POINT_point2oct(ctx().group, p_.get(), POINT_CONVERSION_COMPRESSED,
                           out.data(), out.size(), bn_ctx()) != out.size())
        fail("point2oct");
    return out;
}

bool Point::is_identity() const {
    return EC_POINT_is_at_infinity(ctx().group, p_.get()) == 1;
}

Point Point::operator+(const Point& rhs) const {
    EC_POINT* r = new_pt();
    if (!EC_POINT_add(ctx().group, r, p_.get(), rhs.p_.get(), bn_ctx()))
        fail("point add");
    return Point(r);
}

Point Point::operator-() const {
    EC_POINT* r = EC_POINT_dup(p_.get(), ctx().group);
    if (!r || !EC_POINT_invert(ctx().group, r, bn_ctx())) fail("point invert");
    return Point(r);
}

Point Point::operator-(const Point& rhs) const { return *this + (-rhs); }

Point Point::mul(const Scalar& k) const {
    EC_POINT* r = new_pt();
    if (!EC_POINT_mul(ctx().group, r, nullptr, p_.get(), k.n_.get(), bn_ctx()))
        fail("point mul");
    return Point(r);
}

Point Point::mul_gen(const Scalar& k) {
    EC_POINT* r = new_pt();
    if (!EC_POINT_mul(ctx().group, r, k.n_.get(), nullptr, nullptr, bn_ctx()))
        fail("gen mul");
    return Point(r);
}

Point Point::dbl_mul_gen(const Scalar& a, const Scalar& b, const Point& p) {
    EC_POINT* r = new_pt();
    if (!EC_POINT_mul(ctx().group, r, a.n_.get(), p.p_.get(), b.n_.get(),
                      bn_ctx()))
        fail("dbl mul gen");
    return Point(r);
}

Point Point::dbl_mul(const Scalar& a, const Point& p, const Scalar& b,
                     const Point& q) {
    const EC_POINT* pts[2] = {p.p_.get(), q.p_.get()};
    const BIGNUM* ks[2] = {a.n_.get(), b.n_.get()};
    EC_POINT* r = new_pt();
    if (!EC_POINTs_mul(ctx().group, r, nullptr, 2, pts, ks, bn_ctx()))
        fail("dbl mul");
    return Point(r);
}

Point Point::msm(std::span<const Scalar> scalars,
                 std::span<const Point> points) {
    if (scalars.size() != points.size())
        throw std::invalid_argument("msm: size mismatch");
    if (scalars.empty()) return identity();
    std::vector<const EC_POINT*> pts(points.size());
    std::vector<const BIGNUM*> ks(scalars.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        pts[i] = points[i].p_.get();
        ks[i] = scalars[i].n_.get();
    }
    EC_POINT* r = new_pt();
    if (!EC_POINTs_mul(ctx().group, r, nullptr, pts.size(), pts.data(),
                       ks.data(), bn_ctx()))
        fail("msm");
    return Point(r);
}

bool Point::operator==(const Point& rhs) const {
    int c = EC_POINT_cmp(ctx().group, p_.get(), rhs.p_.get(), bn_ctx());
    if (c < 0) fail("point cmp");
    return c == 0;
}

// ---- hashes ---------------------------------------------------------------

Scalar hash_to_scalar(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> buf = tagged(kTagH, data);
    std::array<std::uint8_t, 32> h = detail::sha256(buf);
    if (scalar_bytes_ok(h)) return Scalar::decode(h);
    buf.push_back(0);
    for (unsigned ctr = 0; ctr < 256; ++ctr) {
        buf.back() = static_cast<std::uint8_t>(ctr);
        h = detail::sha256(buf);
        if (scalar_bytes_ok(h)) return Scalar::decode(h);
    }
    fail("hash_to_scalar: no candidate");
}

Point hash_to_point(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> buf = tagged(kTagHp, data);
    buf.push_back(0);
    for (unsigned ctr = 0; ctr < 256; ++ctr) {
        buf.back() = static_cast<std::uint8_t>(ctr);
        std::array<std::uint8_t, 32> h = detail::sha256(buf);
        BIGNUM* x = new_bn();
        if (!BN_bin2bn(h.data(), h.size(), x)) fail("BN_bin2bn");
        if (BN_cmp(x, ctx().field) >= 0) {
            BN_free(x);
            continue;
        }
        EC_POINT* p = new_pt();
        // even-y candidate; secp256k1 has cofactor 1, nothing to clear
        if (EC_POINT_set_compressed_coordinates(ctx().group, p, x, 0,
                                                bn_ctx()) == 1) {
            BN_free(x);
            return Point(p);
        }
        ERR_clear_error();
        EC_POINT_free(p);
        BN_free(x);
    }
    fail("hash_to_point: no curve point in 256 tries");
}

std::array<std::uint8_t, kScalarLen> group_order_bytes() {
    return ctx().order_be;
}

}  // namespace dslrs
