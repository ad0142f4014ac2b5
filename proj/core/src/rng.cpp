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

#include "dslrs/rng.hpp"

#include <openssl/rand.h>

#include <stdexcept>

#include "digest.hpp"

namespace dslrs {

void SystemRng::fill(std::span<std::uint8_t> out) {
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1)
        throw std::runtime_error("RAND_bytes failed");
}

DeterministicRng::DeterministicRng(std::uint64_t seed) {
    seed_.resize(8);
    for (int i = 0; i < 8; ++i)
        seed_[i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
}

DeterministicRng::DeterministicRng(std::span<const std::uint8_t> seed)
    : seed_(seed.begin(), seed.end()) {}

// block_i = SHA-256(seed || counter_be64), consumed left to right
void DeterministicRng::fill(std::span<std::uint8_t> out) {
    for (auto& byte : out) {
        if (pos_ == block_.size()) {
            std::vector<std::uint8_t> input = seed_;
            for (int i = 0; i < 8; ++i)
                input.push_back(
                    static_cast<std::uint8_t>(counter_ >> (56 - 8 * i)));
            block_ = detail::sha256(input);
            ++counter_;
            pos_ = 0;
        }
        byte = block_[pos_++];
    }
}

}  // namespace dslrs
