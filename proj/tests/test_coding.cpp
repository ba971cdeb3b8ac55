#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pacsc/bounds.hpp"
#include "pacsc/coding.hpp"
#include "pacsc/info.hpp"

using namespace pacsc;
using namespace pacsc::coding;
using info::DiscreteDistribution;

namespace {

// deterministic joint of the truncation scheme: z = first m bits + zero pad
JointDistribution truncation_joint(int n, int m) {
    const std::size_t s = std::size_t{1} << n;
    std::vector<double> table(s * s, 0.0);
    for (std::uint32_t x = 0; x < s; ++x) {
        const std::uint32_t y = m == 0 ? 0u : (x >> (n - m));
        table[(std::size_t{x} << n) | truncation_decode(n, m, y)] = 1.0 / s;
    }
    return JointDistribution(n, std::move(table));
}

} // namespace

TEST_CASE("hamming distance") {
    CHECK(hamming_distance(0b1010, 0b1010) == 0);
    CHECK(hamming_distance(0b1010, 0b0101) == 4);
    CHECK(hamming_distance(0, 0b111) == 3);
}

TEST_CASE("truncation scheme") {
    SUBCASE("m = n is lossless") {
        auto j = truncation_joint(6, 6);
        CHECK(hamming_success(j, 0) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("n=8 m=4 saturates the nayak bound") {
        auto j = truncation_joint(8, 4);
        CHECK(hamming_success(j, 0) ==
              doctest::Approx(bounds::nayak_bound(8, 4).raw).epsilon(1e-12));
    }
    SUBCASE("n=8 m=4 t=2: binomial tail of the guessed suffix = 11/16") {
        auto j = truncation_joint(8, 4);
        CHECK(hamming_success(j, 2) == doctest::Approx(11.0 / 16.0).epsilon(1e-12));
    }
    SUBCASE("encoder states are basis projectors of the prefix") {
        auto enc = truncation_encoder(4, 2);
        auto rho = enc.encode(0b1101);
        CHECK(rho.matrix()(0b11, 0b11).real() == doctest::Approx(1.0));
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(truncation_encoder(4, 5), DomainError);
        CHECK_THROWS_AS(truncation_encoder(0, 0), DomainError);
    }
}

TEST_CASE("hamming_success is nondecreasing in t and 1 at t=n") {
    auto j = truncation_joint(6, 3);
    double prev = -1.0;
    for (int t = 0; t <= 6; ++t) {
        const double cur = hamming_success(j, t);
        CHECK(cur >= prev);
        prev = cur;
    }
    CHECK(hamming_success(j, 6) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(hamming_success(j, 7), DomainError);
}

TEST_CASE("qrac 2->1 block") {
    auto enc = qrac_2to1_encoder();
    auto e = ensemble_from(enc, DiscreteDistribution::uniform(4));

    SUBCASE("per-bit basis measurements succeed with (1+1/sqrt2)/2") {
        const double target = 0.5 * (1.0 + 1.0 / std::sqrt(2.0));
        for (std::uint32_t x = 0; x < 4; ++x) {
            const auto& rho = e.states[x].matrix();
            // bit 1 via Z basis: outcome |b1><b1|
            const std::uint32_t b1 = (x >> 1) & 1u;
            CHECK(rho(b1, b1).real() == doctest::Approx(target).epsilon(1e-12));
            // bit 2 via X basis: tr(|+-><+-| rho) = (1 +- 2 Re rho01) / 2
            const double px_plus = 0.5 + rho(0, 1).real();
            const double success2 = (x & 1u) ? 1.0 - px_plus : px_plus;
            CHECK(success2 == doctest::Approx(target).epsilon(1e-12));
        }
    }
    SUBCASE("pgm success probabilities are symmetric and sum to nayak(2,1)") {
        auto pgm = pretty_good_measurement(e);
        auto j = joint_distribution(e, pgm);
        for (std::uint32_t x = 0; x < 4; ++x)
            CHECK(j(x, x) == doctest::Approx(0.125).epsilon(1e-9)); // p(x) tr(E_x s_x)
        CHECK(hamming_success(j, 0) ==
              doctest::Approx(bounds::nayak_bound(2, 1).raw).epsilon(1e-9));
    }
}

TEST_CASE("pretty good measurement") {
    SUBCASE("orthogonal pure states are decoded perfectly") {
        auto e = ensemble_from(truncation_encoder(3, 3), DiscreteDistribution::uniform(8));
        auto pgm = pretty_good_measurement(e);
        auto j = joint_distribution(e, pgm);
        CHECK(hamming_success(j, 0) == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("identical states give 1/K") {
        std::vector<info::DensityMatrix> states(4, info::DensityMatrix::maximally_mixed(2));
        info::Ensemble e(std::move(states), DiscreteDistribution::uniform(4), {0, 1, 2, 3},
                         2);
        auto pgm = pretty_good_measurement(e);
        auto j = joint_distribution(e, pgm);
        for (std::uint32_t x = 0; x < 4; ++x)
            for (std::uint32_t z = 0; z < 4; ++z)
                CHECK(j(x, z) == doctest::Approx(1.0 / 16.0).epsilon(1e-9));
    }
    SUBCASE("rank-deficient average still completes to identity") {
        // two identical pure states: support is 1-dimensional in a qubit
        std::vector<info::DensityMatrix> states(2, info::DensityMatrix::pure({1.0, 0.0}));
        info::Ensemble e(std::move(states), DiscreteDistribution::uniform(2), {0, 1}, 1);
        auto pgm = pretty_good_measurement(e); // Povm ctor checks completeness
        CHECK(pgm.elements.size() == 2);
    }
}

TEST_CASE("povm validation") {
    // not summing to identity
    linalg::ComplexMatrix half = linalg::ComplexMatrix::identity(2);
    half *= 0.5;
    CHECK_THROWS_AS(Povm(2, 1, {half}, {0}), DomainError);
}

TEST_CASE("joint distribution of ensemble and povm") {
    SUBCASE("perfect code gives a diagonal table") {
        auto e = ensemble_from(truncation_encoder(2, 2), DiscreteDistribution::uniform(4));
        auto pgm = pretty_good_measurement(e);
        auto j = joint_distribution(e, pgm);
        for (std::uint32_t x = 0; x < 4; ++x)
            for (std::uint32_t z = 0; z < 4; ++z)
                CHECK(j(x, z) == doctest::Approx(x == z ? 0.25 : 0.0).epsilon(1e-9));
    }
    SUBCASE("truncation(8,4) with basis decode matches the analytic table") {
        auto j = truncation_joint(8, 4);
        for (int t = 0; t <= 4; ++t) {
            double expect = 0.0;
            for (int i = 0; i <= t; ++i)
                expect += static_cast<double>(bounds::binomial_exact(4, i));
            expect /= 16.0;
            CHECK(hamming_success(j, t) == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("product encoder") {
    SUBCASE("one copy is the block itself") {
        auto block = qrac_2to1_encoder();
        auto prod = product_encoder(block, 1);
        CHECK(prod.n == 2);
        CHECK(prod.m == 1);
        for (std::uint32_t x = 0; x < 4; ++x) {
            auto diff = prod.encode(x).matrix();
            diff -= block.encode(x).matrix();
            CHECK(diff.max_abs() < 1e-14);
        }
    }
    SUBCASE("truncation(1,1) to the 8th power is a perfect 8-bit code") {
        auto prod = product_encoder(truncation_encoder(1, 1), 8);
        auto e = ensemble_from(prod, DiscreteDistribution::uniform(256));
        auto pgm = pretty_good_measurement(e);
        auto j = joint_distribution(e, pgm);
        CHECK(hamming_success(j, 0) == doctest::Approx(1.0).epsilon(1e-8));
    }
    SUBCASE("size guard") {
        CHECK_THROWS_AS(product_encoder(truncation_encoder(4, 4), 4), TooLarge);
    }
}

TEST_CASE("factored evaluation matches dense evaluation for qrac x4") {
    auto block = qrac_2to1_encoder();
    auto be = ensemble_from(block, DiscreteDistribution::uniform(4));
    auto bpgm = pretty_good_measurement(be);
    auto bj = joint_distribution(be, bpgm);
    auto pmf = block_distance_pmf(bj);

    auto prod = product_encoder(block, 4); // n = 8, m = 4
    auto pe = ensemble_from(prod, DiscreteDistribution::uniform(256));
    auto ppgm = pretty_good_measurement(pe);
    auto pj = joint_distribution(pe, ppgm);

    for (int t = 0; t <= 8; ++t)
        CHECK(hamming_success_factored(pmf, 4, t) ==
              doctest::Approx(hamming_success(pj, t)).epsilon(1e-7));
}

TEST_CASE("optimal hamming decoder oracle") {
    SUBCASE("truncation(8,4) at t=0: any fixed pad is optimal") {
        auto code = std::vector<std::uint32_t>(256);
        for (std::uint32_t x = 0; x < 256; ++x) code[x] = x >> 4;
        auto ch = classical_observation(8, 4, code, DiscreteDistribution::uniform(256));
        auto opt = optimal_hamming_decoder(ch, 0);
        CHECK(opt.success == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
        // the scheme's own decoder achieves the optimum
        CHECK(hamming_success(truncation_joint(8, 4), 0) ==
              doctest::Approx(opt.success).epsilon(1e-12));
    }
    SUBCASE("t=0 is the MAP decoder") {
        auto code = random_codewords(4, 2, 99);
        auto ch = classical_observation(4, 2, code, DiscreteDistribution::uniform(16));
        auto opt = optimal_hamming_decoder(ch, 0);
        // MAP by hand: for each y pick the most likely x (smallest on ties)
        double map_success = 0.0;
        for (std::size_t y = 0; y < 4; ++y) {
            double best = 0.0;
            for (std::uint32_t x = 0; x < 16; ++x) best = std::max(best, ch(x, y));
            map_success += best;
        }
        CHECK(opt.success == doctest::Approx(map_success).epsilon(1e-12));
    }
    SUBCASE("oracle dominates the scheme decoder on random codes") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto code = random_codewords(4, 2, seed);
            auto ch = classical_observation(4, 2, code, DiscreteDistribution::uniform(16));
            auto curve = optimal_hamming_decoder_curve(ch, 2);
            auto map = apply_decoder(ch, curve[0].decode);
            for (int t = 0; t <= 2; ++t)
                CHECK(hamming_success(map, t) <= curve[t].success + 1e-9);
        }
    }
    SUBCASE("size guard") {
        ObservationChannel ch{13, 1, {}};
        CHECK_THROWS_AS(optimal_hamming_decoder(ch, 0), TooLarge);
    }
}

TEST_CASE("nayak and pac-nayak dominance for small schemes") {
    // truncation codes
    for (int n = 2; n <= 8; n += 2) {
        for (int m = 0; m < n; ++m) {
            auto j = truncation_joint(n, m);
            CHECK(hamming_success(j, 0) <=
                  bounds::nayak_bound(n, m).clamped + 1e-9);
            for (int t = 0; 2 * t <= n; ++t)
                CHECK(hamming_success(j, t) <=
                      bounds::pac_nayak_bound(n, m, static_cast<double>(t) / n).clamped +
                          1e-9);
        }
    }
}

TEST_CASE("mutual information of an m-qubit scheme joint stays below m") {
    auto prod = product_encoder(qrac_2to1_encoder(), 3); // n=6, m=3
    auto e = ensemble_from(prod, DiscreteDistribution::uniform(64));
    auto pgm = pretty_good_measurement(e);
    auto j = joint_distribution(e, pgm);
    CHECK(info::mutual_information(j.to_table()) <= 3.0 + 1e-9);
}

TEST_CASE("qpsc consistency on scheme outputs") {
    // if success at radius floor(eps n) is 1 - delta, the joint must carry at
    // least qpsc_lhs(n, eps, delta) bits (uniform prior)
    auto schemes = std::vector<JointDistribution>{truncation_joint(8, 4),
                                                  truncation_joint(6, 2)};
    {
        auto prod = product_encoder(qrac_2to1_encoder(), 3);
        auto e = ensemble_from(prod, DiscreteDistribution::uniform(64));
        schemes.push_back(joint_distribution(e, pretty_good_measurement(e)));
    }
    for (const auto& j : schemes) {
        const double mi = info::mutual_information(j.to_table());
        const int n = j.n();
        for (double eps : {0.0, 0.1, 0.2, 0.3, 0.4}) {
            const int t = static_cast<int>(std::floor(eps * n));
            const double delta = 1.0 - hamming_success(j, t);
            CHECK(mi >= bounds::qpsc_lhs(n, eps, std::clamp(delta, 0.0, 1.0)) - 1e-6);
        }
    }
}
