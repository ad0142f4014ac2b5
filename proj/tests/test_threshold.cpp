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

#include <doctest.h>

#include <filesystem>

#include "fixtures.hpp"

using namespace dslrs;
using Code = ThresholdError::Code;

namespace {

// all k-subsets of {0..n-1}
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Code combine_error(std::span<const DecryptionShare> shares,
                   const NetPublic& net) {
    try {
        (void)combine_shares(shares, net);
    } catch (const ThresholdError& e) {
        return e.code();
    }
    throw std::logic_error("expected ThresholdError");
}

}  // namespace

TEST_SUITE("threshold") {

TEST_CASE("1-of-1: the single share is the whole secret") {
    DeterministicRng rng(21);
    auto [net, shares] = dealer_keygen(1, 1, rng);
    CHECK(shares.size() == 1);
    CHECK(Point::mul_gen(shares[0].secret_share) == net.p_net);
    auto lambda = lagrange_coeffs(std::vector<Scalar>{Scalar::from_u64(1)});
    CHECK(lambda.size() == 1);
    CHECK(lambda[0] == Scalar::from_u64(1));
}

TEST_CASE("2-of-2 coefficients at {1,2} are [2, q-1]") {
    auto lambda = lagrange_coeffs(
        std::vector<Scalar>{Scalar::from_u64(1), Scalar::from_u64(2)});
    CHECK(lambda[0] == Scalar::from_u64(2));
    CHECK(lambda[1] == -Scalar::from_u64(1));

    DeterministicRng rng(22);
    auto [net, shares] = dealer_keygen(2, 2, rng);
    Scalar reconstructed = lambda[0] * shares[0].secret_share +
                           lambda[1] * shares[1].secret_share;
    CHECK(Point::mul_gen(reconstructed) == net.p_net);
}

TEST_CASE("lagrange coefficients kill every positive power") {
    // sum lambda_j * omega_j^d == [d == 0] for d < k, the polynomial
    // identity that makes interpolation at zero work
    std::vector<Scalar> omegas{Scalar::from_u64(1), Scalar::from_u64(2),
                               Scalar::from_u64(3)};
    auto lambda = lagrange_coeffs(omegas);
    for (std::size_t d = 0; d < 3; ++d) {
        Scalar sum;
        for (std::size_t j = 0; j < 3; ++j) {
            Scalar pow = Scalar::from_u64(1);
            for (std::size_t e = 0; e < d; ++e) pow = pow * omegas[j];
            sum = sum + lambda[j] * pow;
        }
        CHECK(sum == (d == 0 ? Scalar::from_u64(1) : Scalar()));
    }
}

TEST_CASE("lagrange recovers f(0) for random polynomials") {
    DeterministicRng rng(23);
    for (std::size_t k = 1; k <= 5; ++k) {
        std::vector<Scalar> coeffs;
        for (std::size_t i = 0; i < k; ++i) coeffs.push_back(Scalar::random(rng));
        std::vector<Scalar> omegas;
        std::vector<Scalar> evals;
        for (std::size_t j = 1; j <= k; ++j) {
            Scalar w = Scalar::from_u64(j * 3 + 1);  // arbitrary distinct points
            Scalar acc;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
                acc = acc * w + *it;
            omegas.push_back(w);
            evals.push_back(acc);
        }
        auto lambda = lagrange_coeffs(omegas);
        Scalar sum;
        for (std::size_t j = 0; j < k; ++j) sum = sum + lambda[j] * evals[j];
        CHECK(sum == coeffs[0]);
    }
}

TEST_CASE("lagrange rejects duplicates and zero") {
    std::vector<Scalar> dup{Scalar::from_u64(3), Scalar::from_u64(3)};
    CHECK_THROWS_AS(lagrange_coeffs(dup), ThresholdError);
    std::vector<Scalar> zero{Scalar::from_u64(1), Scalar()};
    CHECK_THROWS_AS(lagrange_coeffs(zero), std::invalid_argument);
}

TEST_CASE("dealer keygen validates the threshold") {
    DeterministicRng rng(24);
    CHECK_THROWS_AS(dealer_keygen(0, 3, rng), ThresholdError);
    CHECK_THROWS_AS(dealer_keygen(4, 3, rng), ThresholdError);
}

TEST_CASE("decryption shares follow the defining equation") {
    DeterministicRng rng(25);
    auto [net, shares] = dealer_keygen(2, 3, rng);
    CHECK(decryption_share(shares[0], Point::identity())
              .share_point.is_identity());
    CHECK(decryption_share(shares[1], Point::generator()).share_point ==
          Point::mul_gen(shares[1].secret_share));
}

TEST_CASE("every 4-subset of 7 shares opens to the same point") {
    DeterministicRng rng(26);
    auto [net, shares] = dealer_keygen(4, 7, rng);
    // open over C1 = G: V must equal P_net for every subset
    std::vector<DecryptionShare> all;
    for (const auto& s : shares)
        all.push_back(decryption_share(s, Point::generator()));
    auto subs = subsets(7, 4);
    CHECK(subs.size() == 35);
    for (const auto& sub : subs) {
        std::vector<DecryptionShare> pick;
        for (auto j : sub) pick.push_back(all[j]);
        CHECK(combine_shares(pick, net) == net.p_net);
    }
}

TEST_CASE("combine rejects bad share sets") {
    DeterministicRng rng(27);
    auto [net, shares] = dealer_keygen(3, 5, rng);
    std::vector<DecryptionShare> all;
    for (const auto& s : shares)
        all.push_back(decryption_share(s, Point::generator()));

    std::vector<DecryptionShare> two(all.begin(), all.begin() + 2);
    CHECK(combine_error(two, net) == Code::wrong_share_count);

    std::vector<DecryptionShare> dup{all[0], all[0], all[1]};
    CHECK(combine_error(dup, net) == Code::duplicate_index);

    std::vector<DecryptionShare> unknown{all[0], all[1],
                                         DecryptionShare{Scalar::from_u64(99),
                                                         all[2].share_point}};
    CHECK(combine_error(unknown, net) == Code::unknown_index);
}

TEST_CASE("k-1 shares do not reconstruct") {
    DeterministicRng rng(28);
    for (int trial = 0; trial < 10; ++trial) {
        auto [net, shares] = dealer_keygen(3, 5, rng);
        Scalar r = Scalar::random_nonzero(rng);
        Point c1 = Point::mul_gen(r);
        Point target = net.p_net.mul(r);  // what k honest shares would give
        // best effort with k-1 shares: interpolate over the smaller set
        std::vector<Scalar> omegas{shares[0].index, shares[1].index};
        auto lambda = lagrange_coeffs(omegas);
        Point v = c1.mul(lambda[0] * shares[0].secret_share +
                         lambda[1] * shares[1].secret_share);
        CHECK(v != target);
    }
}

TEST_CASE("share file round-trip") {
    DeterministicRng rng(29);
    auto [net, shares] = dealer_keygen(2, 4, rng);
    auto path = std::filesystem::temp_directory_path() / "dslrs_shares_test.txt";
    save_shares(path, shares);
    auto loaded = load_shares(path);
    REQUIRE(loaded.size() == shares.size());
    for (std::size_t i = 0; i < shares.size(); ++i) {
        CHECK(loaded[i].index == shares[i].index);
        CHECK(loaded[i].secret_share == shares[i].secret_share);
    }
    std::filesystem::remove(path);
}

TEST_CASE("decryption share wire form round-trips and rejects junk") {
    DeterministicRng rng(30);
    auto [net, shares] = dealer_keygen(1, 2, rng);
    DecryptionShare d = decryption_share(shares[1], Point::generator());
    auto wire = d.encode();
    DecryptionShare back = DecryptionShare::decode(wire);
    CHECK(back.index == d.index);
    CHECK(back.share_point == d.share_point);
    std::vector<std::uint8_t> trunc(wire.begin(), wire.end() - 1);
    CHECK_THROWS_AS(DecryptionShare::decode(trunc), DecodeError);
}

}  // TEST_SUITE
