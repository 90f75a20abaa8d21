#include <doctest.h>

#include <cmath>

#include "ngspread/graphon.hpp"
#include "ngspread/rng.hpp"
#include "ngspread/spectral.hpp"
#include "test_helpers.hpp"

using namespace ngspread;

namespace {

StepGraphon constant_graphon(double value) { return StepGraphon({1.0}, {{value}}); }

StepKernel random_kernel(int k, Rng& rng) {
    std::vector<double> m(k);
    double sum = 0.0;
    for (double& mi : m) {
        mi = 0.05 + rng.uniform();
        sum += mi;
    }
    for (double& mi : m) mi /= sum;
    std::vector<std::vector<double>> values(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) values[i][j] = values[j][i] = 2.0 * rng.uniform() - 1.0;
    StepKernel kernel;
    kernel.m = std::move(m);
    kernel.values = std::move(values);
    return kernel;
}

StepGraphon random_graphon(int k, Rng& rng) {
    std::vector<double> m(k);
    double sum = 0.0;
    for (double& mi : m) {
        mi = 0.05 + rng.uniform();
        sum += mi;
    }
    for (double& mi : m) mi /= sum;
    double acc = 0.0;
    for (double mi : m) acc += mi;
    m.back() += 1.0 - acc;
    std::vector<std::vector<double>> values(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) values[i][j] = values[j][i] = rng.uniform();
    return StepGraphon(std::move(m), std::move(values));
}

// brute force over all subset pairs; independent of the library's gray-walk
double cut_norm_bruteforce(const StepKernel& kernel) {
    const int k = kernel.blocks();
    double best = 0.0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s)
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << k); ++t) {
            double acc = 0.0;
            for (int i = 0; i < k; ++i)
                if ((s >> i) & 1u)
                    for (int j = 0; j < k; ++j)
                        if ((t >> j) & 1u)
                            acc += kernel.values[i][j] * kernel.m[i] * kernel.m[j];
            best = std::max(best, std::abs(acc));
        }
    return best;
}

} // namespace

TEST_CASE("StepGraphon validation") {
    CHECK_THROWS_AS(StepGraphon({0.5, 0.4}, {{0, 0}, {0, 0}}), invalid_parameter); // sum != 1
    CHECK_THROWS_AS(StepGraphon({1.0, 0.0}, {{0, 0}, {0, 0}}), invalid_parameter); // zero block
    CHECK_THROWS_AS(StepGraphon({0.5, 0.5}, {{0.0, 1.5}, {1.5, 0.0}}), invalid_parameter);
    CHECK_THROWS_AS(StepGraphon({0.5, 0.5}, {{0.0, 0.2}, {0.3, 0.0}}), invalid_parameter);
    CHECK_THROWS_AS(StepGraphon({1.0}, {{0.0, 0.0}}), invalid_parameter); // shape
    CHECK_NOTHROW(StepGraphon({0.25, 0.75}, {{1.0, 0.5}, {0.5, 0.0}}));
}

TEST_CASE("from_graph") {
    StepGraphon w = from_graph(toggle_edge(Graph(2), 0, 1));
    CHECK(w.blocks() == 2);
    CHECK(w.measures()[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(w.value(0, 1) == 1.0);
    CHECK(w.value(0, 0) == 0.0);

    StepGraphon e = from_graph(Graph(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(e.value(i, j) == 0.0);

    // edge density = 2|E|/n^2
    Rng rng(301);
    for (int it = 0; it < 20; ++it) {
        int n = 2 + static_cast<int>(rng.uniform_int(0, 10));
        Graph g = random_graph(n, rng);
        StepGraphon wg = from_graph(g);
        double density = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                density += wg.value(i, j) * wg.measures()[i] * wg.measures()[j];
        CHECK(density == doctest::Approx(2.0 * g.edge_count() / (double(n) * n)).epsilon(1e-9));
    }
}

TEST_CASE("max_eigen reproduces the limit graphon spectrum") {
    GraphonEigen e = max_eigen(limit_split_graphon());
    CHECK(std::abs(e.mu - 2.0 / 3.0) <= 1e-12);
    CHECK(std::abs(e.f[0] - std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(e.f[1] - std::sqrt(2.0) / 2.0) <= 1e-12);
    CHECK(e.residual <= 1e-10);

    GraphonEigen ebar = max_eigen(complement(limit_split_graphon()));
    CHECK(std::abs(ebar.mu - 2.0 / 3.0) <= 1e-12);
    CHECK(std::abs(ebar.f[0]) <= 1e-12);
    CHECK(std::abs(ebar.f[1] - std::sqrt(6.0) / 2.0) <= 1e-12);

    CHECK(max_eigen(from_graph(named_graph(GraphKind::complete, 3))).mu ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    // unit L2 norm of the step eigenfunction
    Rng rng(303);
    for (int it = 0; it < 20; ++it) {
        StepGraphon w = random_graphon(2 + static_cast<int>(rng.uniform_int(0, 5)), rng);
        GraphonEigen g = max_eigen(w);
        double norm = 0.0;
        for (int i = 0; i < w.blocks(); ++i) norm += g.f[i] * g.f[i] * w.measures()[i];
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(g.residual <= 1e-10);
    }
}

TEST_CASE("symmetric conjugation preserves the operator spectrum") {
    // characteristic polynomial of M_ij = values(i,j) m_j equals that of the
    // symmetric conjugate used internally
    Rng rng(305);
    for (int it = 0; it < 20; ++it) {
        int k = 2 + static_cast<int>(rng.uniform_int(0, 4));
        StepGraphon w = random_graphon(k, rng);
        SymMatrix sym(k);
        std::vector<std::vector<double>> m_op(k, std::vector<double>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                m_op[i][j] = w.value(i, j) * w.measures()[j];
                if (j >= i)
                    sym.set(i, j, std::sqrt(w.measures()[i] * w.measures()[j]) * w.value(i, j));
            }
        // LeVerrier on the nonsymmetric operator matrix (test-local)
        std::vector<double> coeff{1.0};
        std::vector<std::vector<double>> mk = m_op;
        double ck = 0.0;
        for (int step = 1; step <= k; ++step) {
            if (step > 1) {
                auto prev = mk;
                for (int i = 0; i < k; ++i) prev[i][i] += ck;
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) {
                        double acc = 0.0;
                        for (int t = 0; t < k; ++t) acc += m_op[i][t] * prev[t][j];
                        mk[i][j] = acc;
                    }
            }
            double tr = 0.0;
            for (int i = 0; i < k; ++i) tr += mk[i][i];
            ck = -tr / step;
            coeff.push_back(ck);
        }
        auto sym_coeff = test_oracle::char_poly(sym);
        for (std::size_t i = 0; i < coeff.size(); ++i)
            CHECK(coeff[i] == doctest::Approx(sym_coeff[i]).scale(1.0).epsilon(1e-10));
    }
}

TEST_CASE("relation between graph and graphon spectra") {
    CHECK(relation_check(named_graph(GraphKind::complete, 3)) <= 1e-12);
    CHECK(relation_check(complete_split(4, 1)) <= 1e-9);

    Rng rng(307);
    for (int it = 0; it < 30; ++it) {
        Graph g = random_graph(1 + static_cast<int>(rng.uniform_int(0, 11)), rng);
        CHECK(relation_check(g) <= 1e-9);
    }
}

TEST_CASE("common_refinement_diff") {
    StepGraphon w = limit_split_graphon();
    StepKernel zero = common_refinement_diff(w, w);
    for (const auto& row : zero.values)
        for (double v : row) CHECK(v == 0.0);

    StepKernel ones = common_refinement_diff(constant_graphon(1.0), constant_graphon(0.0));
    CHECK(ones.blocks() == 1);
    CHECK(ones.values[0][0] == 1.0);

    StepKernel half = common_refinement_diff(from_graph(toggle_edge(Graph(2), 0, 1)),
                                             constant_graphon(0.5));
    REQUIRE(half.blocks() == 2);
    CHECK(half.m[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(half.values[0][0] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(half.values[0][1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(half.values[1][1] == doctest::Approx(-0.5).epsilon(1e-15));

    // refinement of a 2-block against a 3-block partition
    StepGraphon a({0.5, 0.5}, {{1.0, 0.0}, {0.0, 1.0}});
    StepGraphon b({0.25, 0.25, 0.5}, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    StepKernel d = common_refinement_diff(a, b);
    CHECK(d.blocks() == 3);
    double total = 0.0;
    for (double mi : d.m) total += mi;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cut_norm exact values") {
    StepKernel half_const;
    half_const.m = {1.0};
    half_const.values = {{0.5}};
    CHECK(cut_norm(half_const).value == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cut_norm(half_const).exact);

    StepKernel k2_diff = common_refinement_diff(from_graph(toggle_edge(Graph(2), 0, 1)),
                                                constant_graphon(0.5));
    CHECK(std::abs(cut_norm(k2_diff).value - 0.125) <= 1e-12);
    CHECK(std::abs(cut_norm_bruteforce(k2_diff) - 0.125) <= 1e-15);

    Rng rng(311);
    for (int it = 0; it < 25; ++it) {
        StepKernel k = random_kernel(2 + static_cast<int>(rng.uniform_int(0, 6)), rng);
        double lib = cut_norm(k).value;
        CHECK(lib == doctest::Approx(cut_norm_bruteforce(k)).scale(1.0).epsilon(1e-12));
        double peak = 0.0;
        for (const auto& row : k.values)
            for (double v : row) peak = std::max(peak, std::abs(v));
        CHECK(lib <= peak + 1e-12);
        // worker partitioning is value-stable
        CHECK(cut_norm(k, 3).value == lib);
    }
}

TEST_CASE("cut_norm is a norm on difference kernels") {
    Rng rng(313);
    for (int it = 0; it < 50; ++it) {
        int k = 2 + static_cast<int>(rng.uniform_int(0, 6));
        StepKernel u = random_kernel(k, rng);
        StepKernel v = random_kernel(k, rng);
        v.m = u.m; // same partition
        double c = 4.0 * rng.uniform() - 2.0;
        CHECK(cut_norm(scale_kernel(u, c)).value ==
              doctest::Approx(std::abs(c) * cut_norm(u).value).scale(1.0).epsilon(1e-12));
        CHECK(cut_norm(add_kernels(u, v)).value <=
              cut_norm(u).value + cut_norm(v).value + 1e-12);
        CHECK(cut_norm(add_kernels(u, scale_kernel(u, -1.0))).value ==
              doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    }
}

TEST_CASE("cut_norm walk restarts keep worker counts equivalent") {
    // 2^13 subsets span several restart blocks; every worker split must give
    // bit-identical values
    Rng rng(331);
    StepKernel k = random_kernel(13, rng);
    double base = cut_norm(k, 1).value;
    for (int jobs : {2, 3, 4, 7}) CHECK(cut_norm(k, jobs).value == base);
    CHECK(std::abs(cut_norm(scale_kernel(k, -2.0), 3).value - 2.0 * base) <= 1e-12);
}

TEST_CASE("cut_norm heuristic mode is a flagged lower bound") {
    Rng rng(317);
    // heuristic path activates above 24 blocks
    StepKernel big = random_kernel(25, rng);
    CutNormResult r = cut_norm(big);
    CHECK_FALSE(r.exact);
    CHECK(r.value >= 0.0);
    double peak = 0.0;
    for (const auto& row : big.values)
        for (double v : row) peak = std::max(peak, std::abs(v));
    CHECK(r.value <= peak + 1e-12);
}

TEST_CASE("delta_cut_upper") {
    StepGraphon w = limit_split_graphon();
    DeltaUpperResult self = delta_cut_upper(w, w);
    CHECK(self.value == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(self.alignment == Alignment::permutation);

    // permuting equal-measure blocks is undone by the alignment search
    StepGraphon a({0.25, 0.25, 0.5}, {{0.1, 0.9, 0.3}, {0.9, 0.7, 0.2}, {0.3, 0.2, 0.5}});
    StepGraphon b({0.25, 0.25, 0.5}, {{0.7, 0.9, 0.2}, {0.9, 0.1, 0.3}, {0.2, 0.3, 0.5}});
    DeltaUpperResult perm = delta_cut_upper(a, b);
    CHECK(perm.value == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));

    // mismatched measure multisets fall back to identity alignment
    DeltaUpperResult fb = delta_cut_upper(from_graph(named_graph(GraphKind::complete, 3)),
                                          constant_graphon(0.5));
    CHECK(fb.alignment == Alignment::identity_fallback);
    CHECK(fb.value ==
          doctest::Approx(cut_norm(common_refinement_diff(
                              from_graph(named_graph(GraphKind::complete, 3)),
                              constant_graphon(0.5)))
                              .value)
              .epsilon(1e-15));
}

TEST_CASE("split graphons approach the limit graphon in cut distance") {
    // identity alignment leaves only the zero diagonal blocks of the clique
    // part: distance exactly 1/(3n), strictly decreasing in n
    double prev = 1.0;
    for (int n : {6, 12, 24}) {
        StepGraphon wn = from_graph(complete_split(n, n / 3));
        DeltaUpperResult d = delta_cut_upper(wn, limit_split_graphon());
        CHECK(d.alignment == Alignment::identity_fallback);
        CHECK(d.value == doctest::Approx(1.0 / (3.0 * n)).epsilon(1e-12));
        CHECK(d.value < prev);
        prev = d.value;
    }
}

TEST_CASE("graphon json round trip") {
    StepGraphon w = limit_split_graphon();
    StepGraphon back = graphon_from_json(graphon_to_json(w));
    CHECK(back.blocks() == 2);
    CHECK(back.value(0, 1) == 1.0);
    CHECK(back.measures()[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    CHECK_THROWS_AS(graphon_from_json("{}"), invalid_parameter);
    CHECK_THROWS_AS(graphon_from_json("{\"m\":[1.0],\"values\":[[2.0]]}"), invalid_parameter);
    CHECK_THROWS_AS(graphon_from_json("not json"), invalid_parameter);
}
