#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "uqd/distribution.hpp"
#include "uqd/error.hpp"

using namespace uqd;
using Q = SecondOrderDistribution;

namespace {

ValidationKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const ValidationError& e) {
        return e.kind();
    }
    FAIL("expected ValidationError");
    return ValidationKind::InvalidParameter;
}

void check_on_simplex(const Categorical& c) {
    double sum = 0.0;
    for (const double p : c.probs()) {
        CHECK(p >= 0.0);
        sum += p;
    }
    CHECK(std::abs(sum - 1.0) <= kSimplexTolerance);
}

}  // namespace

TEST_CASE("categorical construction") {
    CHECK(Categorical({0.5, 0.5}).size() == 2);
    CHECK(kind_of([] { Categorical({0.5}); }) == ValidationKind::InvalidParameter);
    CHECK(kind_of([] { Categorical({1.2, -0.2}); }) == ValidationKind::NegativeProbability);
    CHECK(kind_of([] { Categorical({0.5, 0.4}); }) == ValidationKind::SumNotOne);
    CHECK(kind_of([] { Categorical({NAN, 1.0}); }) == ValidationKind::InvalidParameter);

    SUBCASE("renormalizes within 1e-9") {
        const Categorical c({0.5 + 4e-10, 0.5});
        CHECK(std::abs(c[0] + c[1] - 1.0) <= kSimplexTolerance);
        CHECK(c[0] > c[1]);
    }
    SUBCASE("rejects beyond 1e-9") {
        CHECK(kind_of([] { Categorical({0.5 + 2e-9, 0.5}); }) == ValidationKind::SumNotOne);
    }
}

TEST_CASE("validate examples") {
    const auto flat = Q::dirichlet({1, 1});
    CHECK(flat.dimension() == 2);

    CHECK(kind_of([] { Q::interval_uniform(0.7, 0.3); }) == ValidationKind::InvalidParameter);
    CHECK(kind_of([] { Q::interval_uniform(-0.1, 0.3); }) == ValidationKind::InvalidParameter);

    const auto diracs = Q::mixture({0.5, 0.5}, {Q::point(Categorical({1, 0})), Q::point(Categorical({0, 1}))});
    CHECK(diracs.dimension() == 2);
    CHECK(diracs.is_discrete());
    CHECK(std::get<Mixture>(diracs.variant()).components.size() == 2);
}

TEST_CASE("validation errors name the violated invariant") {
    CHECK(kind_of([] { Q::dirichlet({1.0, 0.0}); }) == ValidationKind::InvalidParameter);
    CHECK(kind_of([] { Q::dirichlet({1.0}); }) == ValidationKind::InvalidParameter);
    CHECK(kind_of([] { Q::ensemble({}); }) == ValidationKind::EmptyEnsemble);
    CHECK(kind_of([] { Q::ensemble({Categorical({0.5, 0.5}), Categorical({0.2, 0.3, 0.5})}); }) ==
          ValidationKind::DimensionMismatch);
    CHECK(kind_of([] { Q::mixture({0.5, 0.5}, {Q::dirichlet({1, 1}), Q::dirichlet({1, 1, 1})}); }) ==
          ValidationKind::DimensionMismatch);
    CHECK(kind_of([] { Q::mixture({0.5}, {Q::dirichlet({1, 1}), Q::dirichlet({1, 1})}); }) ==
          ValidationKind::DimensionMismatch);
    CHECK(kind_of([] { Q::mixture({0.6, 0.6}, {Q::dirichlet({1, 1}), Q::dirichlet({1, 1})}); }) ==
          ValidationKind::SumNotOne);
    CHECK(kind_of([] { Q::mixture({1.5, -0.5}, {Q::dirichlet({1, 1}), Q::dirichlet({1, 1})}); }) ==
          ValidationKind::NegativeProbability);
    CHECK(kind_of([] { Q::mixture({}, {}); }) == ValidationKind::InvalidParameter);

    try {
        Q::interval_uniform(0.7, 0.3);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("lo <= hi") != std::string::npos);
    }
}

TEST_CASE("mixture nesting is flattened and bounded") {
    auto q = Q::point(Categorical({0.3, 0.7}));
    for (int depth = 1; depth <= kMaxMixtureDepth; ++depth) {
        q = Q::mixture({0.5, 0.5}, {q, Q::point(Categorical({0.9, 0.1}))});
        CHECK(q.nesting_depth() == depth);
    }
    const auto& flat = std::get<Mixture>(q.variant());
    CHECK(flat.components.size() == static_cast<std::size_t>(kMaxMixtureDepth) + 1);
    for (const auto& c : flat.components) CHECK(std::holds_alternative<PointMass>(c));
    CHECK(kind_of([&] { Q::mixture({1.0}, {q}); }) == ValidationKind::InvalidParameter);
}

TEST_CASE("predictive mean examples") {
    const auto m1 = predictive_mean(Q::dirichlet({2, 2}));
    CHECK(m1[0] == doctest::Approx(0.5).epsilon(1e-15));

    const auto diracs = Q::mixture({0.5, 0.5}, {Q::point(Categorical({1, 0})), Q::point(Categorical({0, 1}))});
    const auto m2 = predictive_mean(diracs);
    CHECK(m2[0] == 0.5);
    CHECK(m2[1] == 0.5);

    const auto m3 = predictive_mean(Q::interval_uniform(0.6, 1.0));
    CHECK(m3[0] == doctest::Approx(0.8).epsilon(1e-15));

    // Dirichlet(1, 3): exact 1/4 agrees with an independent Monte Carlo oracle.
    const auto m4 = predictive_mean(Q::dirichlet({1, 3}));
    CHECK(m4[0] == doctest::Approx(0.25).epsilon(1e-15));
    const auto mc = oracle::dirichlet_mc({1, 3}, [](const std::vector<double>& t) { return t[0]; }, 1'000'000, 11);
    CHECK(std::abs(mc.mean - m4[0]) <= 3.0 * mc.stderr_);

    const auto m5 = predictive_mean(Q::ensemble({Categorical({0.2, 0.8}), Categorical({0.6, 0.4})}));
    CHECK(m5[0] == doctest::Approx(0.4));
}

TEST_CASE("predictive mean properties on random distributions") {
    gen::Engine rng(2024);
    for (int i = 0; i < 300; ++i) {
        const auto q = gen::distribution(rng);
        const auto mean = predictive_mean(q);
        CHECK(mean.size() == q.dimension());
        check_on_simplex(mean);

        if (const auto* m = std::get_if<Mixture>(&q.variant())) {
            std::vector<double> expected(q.dimension(), 0.0);
            for (std::size_t c = 0; c < m->components.size(); ++c) {
                const auto part = predictive_mean(m->components[c]);
                for (std::size_t k = 0; k < expected.size(); ++k) expected[k] += m->weights[c] * part[k];
            }
            for (std::size_t k = 0; k < expected.size(); ++k) CHECK(mean[k] == expected[k]);
        }
    }
}

TEST_CASE("flattening preserves the predictive mean") {
    gen::Engine rng(7);
    for (int i = 0; i < 100; ++i) {
        const std::size_t k = gen::index(rng, 2, 6);
        const auto a = gen::distribution(rng, k, 2);
        const auto b = gen::distribution(rng, k, 2);
        const auto c = gen::distribution(rng, k, 0);
        const double w = gen::uniform(rng, 0.1, 0.9);
        const auto inner = Q::mixture({w, 1.0 - w}, {a, b});
        const auto nested = Q::mixture({0.3, 0.7}, {inner, c});

        const auto ma = predictive_mean(a);
        const auto mb = predictive_mean(b);
        const auto mc = predictive_mean(c);
        const auto mn = predictive_mean(nested);
        for (std::size_t j = 0; j < k; ++j) {
            const double expected = 0.3 * (w * ma[j] + (1.0 - w) * mb[j]) + 0.7 * mc[j];
            CHECK(std::abs(mn[j] - expected) <= 1e-12);
        }
    }
}

TEST_CASE("sampling") {
    SUBCASE("point mass returns copies") {
        const Categorical theta({0.1, 0.2, 0.7});
        Rng rng(1);
        const auto draws = sample(Q::point(theta), 5, rng);
        CHECK(draws.size() == 5);
        for (const auto& d : draws) CHECK(d == theta);
    }
    SUBCASE("deterministic for a fixed seed") {
        const auto q = Q::mixture({0.4, 0.6}, {Q::dirichlet({0.3, 2.0, 5.0}), Q::point(Categorical::uniform(3))});
        Rng a(99);
        Rng b(99);
        CHECK(sample(q, 200, a) == sample(q, 200, b));
    }
    SUBCASE("interval uniform mean within 3 standard errors") {
        Rng rng(5);
        const std::size_t n = 1'000'000;
        double sum = 0.0;
        for (const auto& d : sample(Q::interval_uniform(0.0, 1.0), n, rng)) sum += d[0];
        const double stderr_ = std::sqrt(1.0 / 12.0 / static_cast<double>(n));
        CHECK(std::abs(sum / static_cast<double>(n) - 0.5) <= 3.0 * stderr_);
    }
    SUBCASE("draws stay on the simplex and inside the support") {
        Rng rng(3);
        for (const auto& d : sample(Q::interval_uniform(0.3, 0.4), 1000, rng)) {
            CHECK(d[0] >= 0.3);
            CHECK(d[0] <= 0.4);
        }
        for (const auto& d : sample(Q::dirichlet({0.01, 0.01, 0.01}), 1000, rng)) check_on_simplex(d);
    }
}

TEST_CASE("empirical mean of samples converges to the predictive mean") {
    gen::Engine corpus(31);
    for (int i = 0; i < 20; ++i) {
        const auto q = gen::distribution(corpus);
        const auto mean = predictive_mean(q);
        Rng rng(static_cast<std::uint64_t>(i));
        const std::size_t n = 100'000;
        std::vector<double> sum(q.dimension(), 0.0);
        std::vector<double> sum_sq(q.dimension(), 0.0);
        for (std::size_t s = 0; s < n; ++s) {
            const auto d = draw(q, rng);
            for (std::size_t k = 0; k < sum.size(); ++k) {
                sum[k] += d[k];
                sum_sq[k] += d[k] * d[k];
            }
        }
        for (std::size_t k = 0; k < sum.size(); ++k) {
            const double m = sum[k] / n;
            const double var = std::max(0.0, sum_sq[k] / n - m * m);
            const double stderr_ = std::sqrt(var / n);
            CHECK(std::abs(m - mean[k]) <= 3.0 * stderr_ + 1e-12);
        }
    }
}
