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
#include <utility>
#include <vector>

#include "dslrs/group.hpp"

// Deanonymization-network key material: Shamir k-of-N sharing of the
// network secret (dealer mode; the DKG variant lives in network_sim),
// Lagrange reconstruction, and transient decryption shares.

namespace dslrs {

class RandomSource;

// (omega_j, S_net-j): evaluation index and Shamir share of S_net
struct NetShare {
    Scalar index;
    Scalar secret_share;
};

struct NetPublic {
    Point p_net;                  // S_net * G
    std::vector<Scalar> indices;  // published {omega_j}, all nonzero, distinct
    std::size_t k = 0;
    std::size_t n_nodes = 0;
};

// D_j = S_net-j * C1, a node's transient contribution to decryption
struct DecryptionShare {
    Scalar index;
    Point share_point;

    // wire form: omega(32) || D(33)
    std::array<std::uint8_t, kScalarLen + kPointLen> encode() const;
    static DecryptionShare decode(std::span<const std::uint8_t> bytes);
};

class ThresholdError : public std::runtime_error {
public:
    enum class Code {
        invalid_threshold,
        duplicate_index,
        wrong_share_count,
        unknown_index,
    };
    ThresholdError(Code code, const char* msg)
        : std::runtime_error(msg), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

// Random degree-(k-1) polynomial f with f(0) = S_net; shares at
// omega_j = j for j = 1..n_nodes. Throws invalid_threshold unless
// 1 <= k <= n_nodes.
std::pair<NetPublic, std::vector<NetShare>> dealer_keygen(std::size_t k,
                                                          std::size_t n_nodes,
                                                          RandomSource& rng);

// lambda_j = prod_{i != j} omega_i / (omega_i - omega_j) mod q, so that
// sum lambda_j * f(omega_j) = f(0) for any polynomial of degree < k.
// Indices must be distinct and nonzero.
std::vector<Scalar> lagrange_coeffs(std::span<const Scalar> indices);

DecryptionShare decryption_share(const NetShare& share, const Point& c1);

// V = sum lambda_j * D_j over exactly net.k shares with distinct indices
// drawn from net.indices.
Point combine_shares(std::span<const DecryptionShare> shares,
                     const NetPublic& net);

// dealer-mode share file: one "omega_hex:share_hex" line per node
void save_shares(const std::filesystem::path& path,
                 std::span<const NetShare> shares);
std::vector<NetShare> load_shares(const std::filesystem::path& path);

}  // namespace dslrs
