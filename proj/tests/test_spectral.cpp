#include <doctest.h>

#include <cmath>

#include "ngspread/rng.hpp"
#include "ngspread/spectral.hpp"

using namespace ngspread;

TEST_CASE("ng_sum on closed-form graphs") {
    // star K_{1,3}: lambda1 = sqrt(3); complement K3 u K1: lambda1 = 2
    NGReport star = ng_sum(complete_split(4, 1));
    CHECK(star.lambda1 == doctest::Approx(std::sqrt(3.0)).epsilon(1e-11));
    CHECK(star.lambda1_bar == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(star.p == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-11));

    // P4 is self-complementary with lambda1 the golden ratio
    NGReport p4 = ng_sum(named_graph(GraphKind::path, 4));
    CHECK(p4.p == doctest::Approx(1.0 + std::sqrt(5.0)).epsilon(1e-11));
    CHECK(p4.lambda1 == doctest::Approx(p4.lambda1_bar).epsilon(1e-11));

    Rng rng(101);
    for (int it = 0; it < 25; ++it) {
        Graph g = random_graph(2 + static_cast<int>(rng.uniform_int(0, 13)), rng);
        NGReport a = ng_sum(g);
        NGReport b = ng_sum(complement(g));
        CHECK(a.p == doctest::Approx(b.p).epsilon(1e-10));
        CHECK(a.p >= g.n() - 1.0 - 1e-9);
        CHECK(a.p <= terpai_bound(g.n()) + 1e-9);
    }
}

TEST_CASE("ng_bound closed form") {
    CHECK(ng_bound(5) == doctest::Approx(5.0).epsilon(1e-13));
    CHECK(ng_bound(3) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-13));

    double b6 = 8.0 - 5.0 / 3.0 - (17.0 - std::sqrt(297.0)) / 6.0;
    CHECK(ng_bound(6) == doctest::Approx(b6).epsilon(1e-13));
    CHECK(ng_bound(6) == doctest::Approx(6.3722813).epsilon(1e-7));

    // bound is attained by the extremal complete split graph, eigensolver route
    CHECK(ng_sum(complete_split(6, 2)).p == doctest::Approx(ng_bound(6)).epsilon(1e-10));
    CHECK_THROWS_AS(ng_bound(0), invalid_parameter);
}

TEST_CASE("cs_lambda1 closed form matches the eigensolver") {
    CHECK(cs_lambda1(5, 1) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(cs_lambda1(5, 2) == doctest::Approx(3.0).epsilon(1e-13));
    for (int n : {2, 5, 17, 40})
        CHECK(cs_lambda1(n, n) == doctest::Approx(n - 1.0).epsilon(1e-13));

    for (int n = 2; n <= 40; ++n)
        for (int omega = 1; omega <= n; ++omega) {
            double solver = principal_pair(adjacency_matrix(complete_split(n, omega)), true).value;
            CHECK(std::abs(cs_lambda1(n, omega) - solver) <= 1e-9);
        }

    CHECK_THROWS_AS(cs_lambda1(5, 0), invalid_parameter);
    CHECK_THROWS_AS(cs_lambda1(5, 6), invalid_parameter);
}

TEST_CASE("optimal_clique argmax and tie structure") {
    CHECK(optimal_clique(6) == std::vector<int>{2});
    CHECK(optimal_clique(5) == std::vector<int>{1, 2});
    CHECK(optimal_clique(7) == std::vector<int>{2});

    for (int n = 3; n <= 40; ++n) {
        auto arg = optimal_clique(n);
        // the winner is floor(n/3), joined by ceil(n/3) exactly when n = 2 mod 3
        if (n % 3 == 2) {
            REQUIRE(arg.size() == 2);
            CHECK(arg[0] == (n - 2) / 3);
            CHECK(arg[1] == (n + 1) / 3);
        } else {
            REQUIRE(arg.size() == 1);
            CHECK(arg[0] == n / 3);
        }
    }
}

TEST_CASE("bound equality and complement formula across orders") {
    for (int n = 3; n <= 40; ++n) {
        for (int omega : optimal_clique(n)) {
            double p_closed = cs_lambda1(n, omega) + (n - omega - 1);
            CHECK(std::abs(ng_bound(n) - p_closed) <= 1e-9);
            // same equality through the eigensolver
            CHECK(std::abs(ng_bound(n) - ng_sum(complete_split(n, omega)).p) <= 1e-9);
        }
    }
    // complement of CS_{n,w} is K_{n-w} plus isolated vertices (w < n so the
    // complement clique is nonempty), eigensolver route
    Rng rng(103);
    for (int it = 0; it < 15; ++it) {
        int n = 3 + static_cast<int>(rng.uniform_int(0, 17));
        int omega = 1 + static_cast<int>(rng.uniform_int(0, n - 2));
        double p = ng_sum(complete_split(n, omega)).p;
        CHECK(std::abs(p - (cs_lambda1(n, omega) + (n - omega - 1))) <= 1e-9);
    }
}

TEST_CASE("q_spread on closed-form graphs") {
    QSpreadReport star = q_spread(complete_split(4, 1));
    CHECK(star.q1 == doctest::Approx(4.0).epsilon(1e-11));
    CHECK(star.qn == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
    CHECK(star.s == doctest::Approx(4.0).epsilon(1e-10));

    QSpreadReport plus = q_spread(pendant_clique(6));
    CHECK(plus.q1 == doctest::Approx((9.0 + std::sqrt(57.0)) / 2.0).epsilon(1e-11));
    CHECK(plus.qn == doctest::Approx((9.0 - std::sqrt(57.0)) / 2.0).epsilon(1e-11));
    CHECK(plus.s == doctest::Approx(std::sqrt(57.0)).epsilon(1e-11));

    for (int n : {3, 4, 9, 25})
        CHECK(q_spread(named_graph(GraphKind::complete, n)).s ==
              doctest::Approx(static_cast<double>(n)).epsilon(1e-10));

    Rng rng(107);
    for (int it = 0; it < 25; ++it) {
        Graph g = random_graph(1 + static_cast<int>(rng.uniform_int(0, 15)), rng);
        QSpreadReport r = q_spread(g);
        CHECK(r.s >= -1e-12);
        CHECK(r.s <= r.q1 + 1e-12); // qn >= 0
    }
}

TEST_CASE("pendant clique keeps qn at most 1") {
    for (int n = 3; n <= 64; ++n)
        CHECK(q_spread(pendant_clique(n)).qn <= 1.0 + 1e-9);
}

TEST_CASE("rayleigh_spread") {
    Graph k2 = toggle_edge(Graph(2), 0, 1);
    double r = 1.0 / std::sqrt(2.0);
    std::vector<double> x{r, r}, z{r, -r};
    CHECK(rayleigh_spread(k2, x, z) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rayleigh_spread(k2, x, x) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    Rng rng(109);
    for (int it = 0; it < 100; ++it) {
        int n = 2 + static_cast<int>(rng.uniform_int(0, 10));
        Graph g = random_graph(n, rng);
        auto xv = random_unit_vector(n, rng);
        auto zv = random_unit_vector(n, rng);
        QSpreadReport ref = q_spread(g);
        CHECK(rayleigh_spread(g, xv, zv) <= ref.s + 1e-9);
        // the extreme eigenvectors attain the spread
        CHECK(rayleigh_spread(g, ref.x, ref.z) == doctest::Approx(ref.s).epsilon(1e-9));
    }

    std::vector<double> bad{1.0, 1.0};
    CHECK_THROWS_AS(rayleigh_spread(k2, bad, z), invalid_parameter);
    std::vector<double> short_vec{1.0};
    CHECK_THROWS_AS(rayleigh_spread(k2, short_vec, z), invalid_parameter);
}

TEST_CASE("ng_deviation") {
    CHECK(ng_deviation(named_graph(GraphKind::cycle, 5)) <= 1e-9); // vertex-transitive
    CHECK(ng_deviation(complete_split(6, 1)) > 1e-3);              // star: center vs leaf

    // flatness improves along the extremal family
    double d6 = ng_deviation(complete_split(6, 2));
    double d12 = ng_deviation(complete_split(12, 4));
    double d24 = ng_deviation(complete_split(24, 8));
    CHECK(d6 > d12);
    CHECK(d12 > d24);
    CHECK(d24 > 0.0);
}

TEST_CASE("asymptotic_diagnostics flags") {
    DiagnosticsReport plus = asymptotic_diagnostics(pendant_clique(6), 0.1);
    CHECK(plus.flags.q1_above_2n_minus_5);
    CHECK(plus.flags.qn_below_3);
    CHECK(plus.flags.size_above_threshold); // 11 > 7.5
    CHECK(plus.flags.x_max_below_threshold);
    CHECK(plus.flags.x_small_below_8);
    // only the pendant vertex has a small Perron entry
    CHECK(plus.partition.x_small == std::vector<int>{5});

    DiagnosticsReport path = asymptotic_diagnostics(named_graph(GraphKind::path, 6), 0.1);
    CHECK_FALSE(path.flags.q1_above_2n_minus_5); // q1(P6) < 4 < 7

    CHECK_THROWS_AS(asymptotic_diagnostics(Graph(4), 0.0), invalid_parameter);
}

TEST_CASE("terpai_bound") {
    CHECK(terpai_bound(6) == doctest::Approx(7.0).epsilon(1e-13));
    CHECK(ng_bound(6) < terpai_bound(6));
}
