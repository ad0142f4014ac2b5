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

#include "dslrs/threshold.hpp"

#include <fstream>

#include "dslrs/rng.hpp"
#include "hex.hpp"

namespace dslrs {

using Code = ThresholdError::Code;

// Horner evaluation of sum coeffs[i] * x^i
static Scalar poly_eval(std::span<const Scalar> coeffs, const Scalar& x) {
    Scalar acc;  // zero
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::pair<NetPublic, std::vector<NetShare>> dealer_keygen(std::size_t k,
                                                          std::size_t n_nodes,
                                                          RandomSource& rng) {
    if (k < 1 || k > n_nodes)
        throw ThresholdError(Code::invalid_threshold,
                             "dealer_keygen: need 1 <= k <= N");
    std::vector<Scalar> coeffs;
    coeffs.reserve(k);
    coeffs.push_back(Scalar::random_nonzero(rng));  // f(0) = S_net
    for (std::size_t i = 1; i < k; ++i) coeffs.push_back(Scalar::random(rng));

    NetPublic net;
    net.p_net = Point::mul_gen(coeffs[0]);
    net.k = k;
    net.n_nodes = n_nodes;
    std::vector<NetShare> shares;
    shares.reserve(n_nodes);
    for (std::size_t j = 1; j <= n_nodes; ++j) {
        Scalar omega = Scalar::from_u64(j);
        shares.push_back(NetShare{omega, poly_eval(coeffs, omega)});
        net.indices.push_back(std::move(omega));
    }
    return {std::move(net), std::move(shares)};
}

std::vector<Scalar> lagrange_coeffs(std::span<const Scalar> indices) {
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i].is_zero())
            throw std::invalid_argument("lagrange: zero index");
        for (std::size_t j = i + 1; j < indices.size(); ++j)
            if (indices[i] == indices[j])
                throw ThresholdError(Code::duplicate_index,
                                     "lagrange: duplicate index");
    }
    std::vector<Scalar> out;
    out.reserve(indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        Scalar num = Scalar::from_u64(1);
        Scalar den = Scalar::from_u64(1);
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i == j) continue;
            num = num * indices[i];
            den = den * (indices[i] - indices[j]);
        }
        out.push_back(num * den.inverse());
    }
    return out;
}

DecryptionShare decryption_share(const NetShare& share, const Point& c1) {
    return DecryptionShare{share.index, c1.mul(share.secret_share)};
}

Point combine_shares(std::span<const DecryptionShare> shares,
                     const NetPublic& net) {
    if (shares.size() != net.k)
        throw ThresholdError(Code::wrong_share_count,
                             "combine: need exactly k shares");
    std::vector<Scalar> indices;
    std::vector<Point> points;
    indices.reserve(shares.size());
    points.reserve(shares.size());
    for (const auto& s : shares) {
        bool known = false;
        for (const auto& omega : net.indices)
            if (omega == s.index) known = true;
        if (!known)
            throw ThresholdError(Code::unknown_index,
                                 "combine: index not published");
        indices.push_back(s.index);
        points.push_back(s.share_point);
    }
    std::vector<Scalar> lambda = lagrange_coeffs(indices);  // checks duplicates
    return Point::msm(lambda, points);
}

std::array<std::uint8_t, kScalarLen + kPointLen> DecryptionShare::encode()
    const {
    std::array<std::uint8_t, kScalarLen + kPointLen> out{};
    auto omega = index.encode();
    auto d = share_point.encode();
    std::copy(omega.begin(), omega.end(), out.begin());
    std::copy(d.begin(), d.end(), out.begin() + kScalarLen);
    return out;
}

DecryptionShare DecryptionShare::decode(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kScalarLen + kPointLen)
        throw DecodeError("decryption share: wrong length");
    return DecryptionShare{Scalar::decode(bytes.subspan(0, kScalarLen)),
                           Point::decode(bytes.subspan(kScalarLen))};
}

void save_shares(const std::filesystem::path& path,
                 std::span<const NetShare> shares) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("shares: cannot write " + path.string());
    for (const auto& s : shares)
        out << detail::to_hex(s.index.encode()) << ":"
            << detail::to_hex(s.secret_share.encode()) << "\n";
    if (!out) throw std::runtime_error("shares: write failed");
}

std::vector<NetShare> load_shares(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("shares: cannot read " + path.string());
    std::vector<NetShare> shares;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("shares: malformed line");
        shares.push_back(NetShare{
            Scalar::decode(detail::from_hex(line.substr(0, colon))),
            Scalar::decode(detail::from_hex(line.substr(colon + 1)))});
    }
    return shares;
}

}  // namespace dslrs
