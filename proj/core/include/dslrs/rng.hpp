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
#include <span>
#include <vector>

namespace dslrs {

class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual void fill(std::span<std::uint8_t> out) = 0;
};

// OS-backed CSPRNG (libcrypto RAND_bytes).
class SystemRng final : public RandomSource {
public:
    void fill(std::span<std::uint8_t> out) override;
};

// SHA-256 counter stream keyed by the seed. Reproducible across runs and
// platforms; for tests, golden vectors and --seed CLI runs only.
class DeterministicRng final : public RandomSource {
public:
    explicit DeterministicRng(std::uint64_t seed);
    explicit DeterministicRng(std::span<const std::uint8_t> seed);
    void fill(std::span<std::uint8_t> out) override;

private:
    std::vector<std::uint8_t> seed_;
    std::uint64_t counter_ = 0;
    std::array<std::uint8_t, 32> block_{};
    std::size_t pos_ = 32;  // exhausted
};

}  // namespace dslrs
