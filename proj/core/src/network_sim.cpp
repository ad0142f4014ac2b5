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

#include "dslrs/network_sim.hpp"

#include <deque>
#include <fstream>
#include <set>

#include <json.hpp>

#include "dslrs/rng.hpp"
#include "hex.hpp"

namespace dslrs::sim {

namespace {

const char* kind_name(MsgKind k) {
    switch (k) {
        case MsgKind::dkg_commit: return "dkg_commit";
        case MsgKind::dkg_share: return "dkg_share";
        case MsgKind::dkg_complaint: return "dkg_complaint";
        case MsgKind::deanon_request: return "deanon_request";
        case MsgKind::deanon_share: return "deanon_share";
    }
    return "?";
}

Scalar poly_eval(std::span<const Scalar> coeffs, const Scalar& x) {
    Scalar acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

}  // namespace

struct Node {
    int id = 0;
    Scalar omega;
    Behavior behavior = Behavior::honest;

    // DKG state
    std::vector<Scalar> poly;                  // own dealt polynomial
    std::map<int, std::vector<Point>> commits; // dealer -> Feldman commitments
    std::map<int, Scalar> received;            // dealer -> share at omega
    std::set<int> bad_dealers;                 // local Feldman failures
    std::optional<NetShare> share;

    bool sends() const { return behavior != Behavior::silent; }
    bool deals() const { return behavior != Behavior::silent; }
};

struct Simulator::Impl {
    std::size_t k = 0;
    SimOptions options;
    DeterministicRng rng;
    std::vector<Node> nodes;
    std::deque<SimMessage> queue;
    std::vector<SimMessage> transcript;
    std::optional<NetPublic> net;

    // deanon collection state (external party is id 0)
    std::vector<DecryptionShare> collected;

    explicit Impl(std::uint64_t seed) : rng(seed) {}

    Node& node(int id) { return nodes.at(static_cast<std::size_t>(id) - 1); }

    void send(SimMessage msg) {
        transcript.push_back(msg);
        queue.push_back(std::move(msg));
    }

    // drain the queue; broadcasts fan out in node-id order
    void deliver_all() {
        while (!queue.empty()) {
            SimMessage msg = std::move(queue.front());
            queue.pop_front();
            if (msg.to == -1) {
                for (auto& n : nodes) handle(n, msg);
            } else if (msg.to == 0) {
                handle_external(msg);
            } else {
                handle(node(msg.to), msg);
            }
        }
    }

    void handle(Node& n, const SimMessage& msg) {
        switch (msg.kind) {
            case MsgKind::dkg_commit: {
                if (msg.payload.empty() || msg.payload.size() % kPointLen != 0)
                    throw DkgError("dkg: malformed commitment payload");
                std::vector<Point> cs;
                for (std::size_t off = 0; off < msg.payload.size();
                     off += kPointLen)
                    cs.push_back(Point::decode(
                        std::span(msg.payload).subspan(off, kPointLen)));
                n.commits[msg.from] = std::move(cs);
                break;
            }
            case MsgKind::dkg_share: {
                Scalar s = Scalar::decode(msg.payload);
                // Feldman check: s*G == sum omega^m * C_m
                auto it = n.commits.find(msg.from);
                if (it == n.commits.end())
                    throw DkgError("dkg: share before commitment");
                std::vector<Scalar> powers;
                Scalar w = Scalar::from_u64(1);
                for (std::size_t m = 0; m < it->second.size(); ++m) {
                    powers.push_back(w);
                    w = w * n.omega;
                }
                if (Point::mul_gen(s) != Point::msm(powers, it->second))
                    n.bad_dealers.insert(msg.from);
                else
                    n.received[msg.from] = std::move(s);
                break;
            }
            case MsgKind::dkg_complaint: {
                // recorded globally in finalize; nothing per-node
                break;
            }
            case MsgKind::deanon_request: {
                if (!n.sends() || !n.share) break;
                if (msg.payload.size() < 2)
                    throw std::runtime_error("sim: malformed request");
                std::size_t rlen = (static_cast<std::size_t>(msg.payload[0]) << 8) |
                                   msg.payload[1];
                if (msg.payload.size() < 2 + rlen)
                    throw std::runtime_error("sim: malformed request");
                Point c1 = peek_c1(std::span(msg.payload).subspan(2 + rlen));
                DecryptionShare d = decryption_share(*n.share, c1);
                if (n.behavior == Behavior::corrupt_share)
                    d.share_point = d.share_point + Point::generator();
                auto wire = d.encode();
                send(SimMessage{n.id, 0, MsgKind::deanon_share,
                                {wire.begin(), wire.end()}});
                break;
            }
            case MsgKind::deanon_share:
                break;  // external-party kind
        }
    }

    void handle_external(const SimMessage& msg) {
        if (msg.kind == MsgKind::deanon_share)
            collected.push_back(DecryptionShare::decode(msg.payload));
    }
};

Simulator::Simulator(std::size_t n_nodes, std::size_t k, std::uint64_t seed,
                     SimOptions options)
    : impl_(std::make_unique<Impl>(seed)) {
    if (n_nodes < 1 || k < 1 || k > n_nodes)
        throw std::invalid_argument("simulator: need 1 <= k <= N");
    impl_->k = k;
    impl_->options = std::move(options);
    for (std::size_t j = 1; j <= n_nodes; ++j) {
        Node n;
        n.id = static_cast<int>(j);
        n.omega = Scalar::from_u64(j);
        auto it = impl_->options.behaviors.find(n.id);
        if (it != impl_->options.behaviors.end()) n.behavior = it->second;
        impl_->nodes.push_back(std::move(n));
    }
}

Simulator::~Simulator() = default;

NetPublic Simulator::run_dkg() {
    auto& im = *impl_;

    // round 1: every dealer broadcasts Feldman commitments to its polynomial
    for (auto& n : im.nodes) {
        if (!n.deals()) continue;
        n.poly.clear();
        n.poly.push_back(Scalar::random_nonzero(im.rng));
        for (std::size_t m = 1; m < im.k; ++m)
            n.poly.push_back(Scalar::random(im.rng));
        std::vector<std::uint8_t> payload;
        payload.reserve(im.k * kPointLen);
        for (const auto& c : n.poly) {
            auto e = Point::mul_gen(c).encode();
            payload.insert(payload.end(), e.begin(), e.end());
        }
        im.send(SimMessage{n.id, -1, MsgKind::dkg_commit, std::move(payload)});
    }
    im.deliver_all();

    // round 2: dealers send evaluations; corrupt dealers skew what they
    // send to everyone else
    for (auto& dealer : im.nodes) {
        if (!dealer.deals()) continue;
        for (auto& rcpt : im.nodes) {
            Scalar s = poly_eval(dealer.poly, rcpt.omega);
            if (dealer.behavior == Behavior::corrupt_share &&
                rcpt.id != dealer.id)
                s = s + Scalar::from_u64(1);
            auto e = s.encode();
            im.send(SimMessage{dealer.id, rcpt.id, MsgKind::dkg_share,
                               {e.begin(), e.end()}});
        }
    }
    im.deliver_all();

    // round 3: complaints, or abort on the first bad share without them
    std::set<int> disqualified;
    if (im.options.complaint_round) {
        for (auto& n : im.nodes) {
            if (!n.sends() || n.bad_dealers.empty()) continue;
            std::vector<std::uint8_t> payload;
            payload.push_back(static_cast<std::uint8_t>(n.bad_dealers.size()));
            for (int d : n.bad_dealers)
                payload.push_back(static_cast<std::uint8_t>(d));
            im.send(SimMessage{n.id, -1, MsgKind::dkg_complaint,
                               std::move(payload)});
            for (int d : n.bad_dealers) disqualified.insert(d);
        }
        im.deliver_all();
    } else {
        for (auto& n : im.nodes)
            if (!n.bad_dealers.empty())
                throw DkgError(
                    "dkg failed: invalid share and no complaint round");
    }

    std::vector<int> qualified;
    for (auto& n : im.nodes)
        if (n.deals() && !disqualified.count(n.id)) qualified.push_back(n.id);
    if (qualified.empty()) throw DkgError("dkg failed: no qualified dealer");

    // every node's share is the sum over qualified dealers; the network
    // key is the sum of their constant-term commitments
    NetPublic net;
    net.k = im.k;
    net.n_nodes = im.nodes.size();
    Point p_net;
    for (int d : qualified) {
        p_net = p_net + im.node(d).commits.at(d)[0];
    }
    net.p_net = p_net;
    for (auto& n : im.nodes) {
        Scalar sum;
        for (int d : qualified) {
            auto it = n.received.find(d);
            if (it == n.received.end())
                throw DkgError("dkg failed: qualified share missing");
            sum = sum + it->second;
        }
        n.share = NetShare{n.omega, std::move(sum)};
        net.indices.push_back(n.omega);
    }
    im.net = net;
    return net;
}

Point Simulator::request_deanonymization(const DslrsSignature& sig,
                                         std::string_view requester) {
    auto& im = *impl_;
    if (!im.net) throw std::logic_error("simulator: run_dkg first");
    im.collected.clear();
    std::vector<std::uint8_t> payload;
    payload.push_back(static_cast<std::uint8_t>(requester.size() >> 8));
    payload.push_back(static_cast<std::uint8_t>(requester.size()));
    payload.insert(payload.end(), requester.begin(), requester.end());
    auto sig_bytes = serialize(sig);
    payload.insert(payload.end(), sig_bytes.begin(), sig_bytes.end());
    im.send(SimMessage{0, -1, MsgKind::deanon_request, std::move(payload)});
    im.deliver_all();
    if (im.collected.size() < im.k)
        throw TimeoutError("deanonymization: fewer than k responders");
    std::vector<DecryptionShare> first_k(im.collected.begin(),
                                         im.collected.begin() +
                                             static_cast<long>(im.k));
    return deanonymize(sig, first_k, *im.net);
}

std::size_t Simulator::n_nodes() const { return impl_->nodes.size(); }

const NetPublic& Simulator::net_public() const {
    if (!impl_->net) throw std::logic_error("simulator: run_dkg first");
    return *impl_->net;
}

std::optional<NetShare> Simulator::node_share(int id) const {
    return impl_->node(id).share;
}

const std::vector<SimMessage>& Simulator::transcript() const {
    return impl_->transcript;
}

std::string Simulator::transcript_json() const {
    std::string out;
    for (const auto& msg : impl_->transcript) {
        nlohmann::json j;
        j["from"] = msg.from;
        j["to"] = msg.to;
        j["kind"] = kind_name(msg.kind);
        j["payload"] = detail::to_hex(msg.payload);
        out += j.dump();
        out += "\n";
    }
    return out;
}

void Simulator::write_transcript(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw std::runtime_error("transcript: cannot write " + path.string());
    out << transcript_json();
    if (!out) throw std::runtime_error("transcript: write failed");
}

}  // namespace dslrs::sim
