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

#include <map>
#include <optional>
#include <string>

#include "dslrs/signature.hpp"

// Simulated N-node deanonymization network: joint-Feldman distributed key
// generation and threshold decryption requests over in-process queues with
// a deterministic, seeded scheduler. Messages are the only inter-node
// channel; the transcript records every one of them.

namespace dslrs::sim {

enum class Behavior {
    honest,
    silent,         // receives everything, never sends anything
    corrupt_share,  // deals corrupted DKG shares, returns corrupted
                    // decryption shares
};

enum class MsgKind {
    dkg_commit,
    dkg_share,
    dkg_complaint,
    deanon_request,
    deanon_share,
};

struct SimMessage {
    int from = 0;  // node id, 0 = external party
    int to = -1;   // node id, 0 = external party, -1 = broadcast
    MsgKind kind{};
    std::vector<std::uint8_t> payload;
};

class DkgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TimeoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SimOptions {
    bool complaint_round = false;
    std::map<int, Behavior> behaviors;  // node id -> behavior, default honest
};

class Simulator {
public:
    Simulator(std::size_t n_nodes, std::size_t k, std::uint64_t seed,
              SimOptions options = {});
    ~Simulator();
    Simulator(const Simulator&) = delete;
    Simulator& operator=(const Simulator&) = delete;

    // Joint-Feldman: every non-silent node deals a sharing of a random
    // secret; the network key is the sum over qualified dealers. Every
    // node ends up holding a share. Throws DkgError when a bad share
    // surfaces without a complaint round, or no dealer survives.
    NetPublic run_dkg();

    // Broadcasts the signature, collects the first k decryption shares in
    // scheduler order and opens the tuple. Fewer than k responders is a
    // TimeoutError. The caller is responsible for verifying the signature
    // first; any requester is accepted and recorded in the transcript.
    Point request_deanonymization(const DslrsSignature& sig,
                                  std::string_view requester);

    std::size_t n_nodes() const;
    const NetPublic& net_public() const;  // valid after run_dkg
    std::optional<NetShare> node_share(int id) const;

    const std::vector<SimMessage>& transcript() const;
    std::string transcript_json() const;  // one JSON object per line
    void write_transcript(const std::filesystem::path& path) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace dslrs::sim
