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

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

// Prime-order group layer: scalar field arithmetic mod q, points of the
// secp256k1 subgroup (cofactor 1, so the subgroup is the whole curve),
// the two domain-separated hashes H (to Z_q^*) and H_p (to the group),
// and canonical byte encodings (32-byte big-endian scalars, 33-byte
// SEC1-compressed points). Everything here is a pure value type; all
// libcrypto usage is confined to group.cpp.

struct bignum_st;
struct ec_point_st;

namespace dslrs {

inline constexpr std::size_t kScalarLen = 32;
inline constexpr std::size_t kPointLen = 33;
inline constexpr const char* kCurveId = "secp256k1";

// Rejected byte strings: wrong length, scalar >= q, off-curve or
// non-canonical point encodings.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RandomSource;

class Scalar {
public:
    Scalar();  // zero
    Scalar(const Scalar& other);
    Scalar(Scalar&& other) noexcept;
    Scalar& operator=(const Scalar& other);
    Scalar& operator=(Scalar&& other) noexcept;
    ~Scalar();

    static Scalar from_u64(std::uint64_t v);
    // Uniform draw from [0, q) resp. [1, q) by rejection sampling.
    static Scalar random(RandomSource& rng);
    static Scalar random_nonzero(RandomSource& rng);

    // Canonical big-endian encoding; decode rejects values >= q.
    static Scalar decode(std::span<const std::uint8_t> bytes);
    std::array<std::uint8_t, kScalarLen> encode() const;

    bool is_zero() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator-() const;
    // Multiplicative inverse mod q; throws std::domain_error for zero.
    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

private:
    friend class Point;
    struct BnDel {
        void operator()(bignum_st* p) const noexcept;
    };
    explicit Scalar(bignum_st* owned);
    std::unique_ptr<bignum_st, BnDel> n_;
};

class Point {
public:
    Point();  // identity
    Point(const Point& other);
    Point(Point&& other) noexcept;
    Point& operator=(const Point& other);
    Point& operator=(Point&& other) noexcept;
    ~Point();

    static const Point& generator();
    static Point identity();

    // 33-byte encoding: SEC1 compressed for proper points, all zero for
    // the identity. decode validates curve membership and canonicality.
    static Point decode(std::span<const std::uint8_t> bytes);
    std::array<std::uint8_t, kPointLen> encode() const;

    bool is_identity() const;

    Point operator+(const Point& rhs) const;
    Point operator-(const Point& rhs) const;
    Point operator-() const;

    Point mul(const Scalar& k) const;                 // k*this
    static Point mul_gen(const Scalar& k);            // k*G
    // a*G + b*P and a*P + b*Q; one shared-doubling pass each, these carry
    // the sign/verify hot loop.
    static Point dbl_mul_gen(const Scalar& a, const Scalar& b, const Point& p);
    static Point dbl_mul(const Scalar& a, const Point& p,
                         const Scalar& b, const Point& q);
    static Point msm(std::span<const Scalar> scalars,
                     std::span<const Point> points);  // sum a_i*P_i

    bool operator==(const Point& rhs) const;
    bool operator!=(const Point& rhs) const { return !(*this == rhs); }

private:
    friend Point hash_to_point(std::span<const std::uint8_t> data);
    struct PtDel {
        void operator()(ec_point_st* p) const noexcept;
    };
    explicit Point(ec_point_st* owned);
    std::unique_ptr<ec_point_st, PtDel> p_;
};

// H: arbitrary bytes -> Z_q^*. SHA-256 under the "DSLRS/H" tag; outputs
// of 0 or >= q are re-hashed with an appended counter byte (never in
// practice: the gap to 2^256 is ~2^-128).
Scalar hash_to_scalar(std::span<const std::uint8_t> data);

// H_p: arbitrary bytes -> group, never identity. Try-and-increment under
// the "DSLRS/Hp" tag: candidate x-coordinates from SHA-256(tag||data||ctr),
// first curve point with even y wins.
Point hash_to_point(std::span<const std::uint8_t> data);

// Group order q, big-endian (test and oracle use).
std::array<std::uint8_t, kScalarLen> group_order_bytes();

}  // namespace dslrs
