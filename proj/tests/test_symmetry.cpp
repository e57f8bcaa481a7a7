#include "test_helpers.hpp"

#include <cmath>
#include <functional>

using namespace qpv;
using namespace qpv::test;

TEST_CASE("haar sampling is seed-deterministic and unitary") {
    for (ModelKind kind : {ModelKind::quantum_real, ModelKind::quantum_complex}) {
        const Model m(kind, 4);
        const GroupElement g1 = random_group_element(m, 21);
        const GroupElement g2 = random_group_element(m, 21);
        CHECK(linalg::max_abs(linalg::Matrix(g1.unitary() - g2.unitary())) == 0.0);
        const auto residual =
            linalg::Matrix(g1.unitary().adjoint() * g1.unitary() -
                           linalg::Matrix::Identity(4, 4));
        CHECK(linalg::max_abs(residual) < 1e-9);
    }
    const Model c(ModelKind::classical, 5);
    const GroupElement p1 = random_group_element(c, 3);
    const GroupElement p2 = random_group_element(c, 3);
    CHECK(p1.perm() == p2.perm());
}

TEST_CASE("haar first moment: mean overlap is 1/d") {
    const Model m = qubit();
    const auto e0 = zero_ray(m);
    double mean = 0.0;
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) {
        const GroupElement g = random_group_element(m, static_cast<std::uint64_t>(i));
        mean += probability(State::pure(apply(g, e0)), e0);
    }
    mean /= samples;
    // variance of the overlap is 1/12, so three sigma of the mean is 0.0087
    CHECK(std::abs(mean - 0.5) < 0.0087);
}

TEST_CASE("near-identity elements shrink with the radius") {
    const Model m = qutrit();
    CHECK(linalg::max_abs(linalg::Matrix(element_near_identity(m, 0.0, 5).unitary() -
                                         linalg::Matrix::Identity(3, 3))) == 0.0);
    double previous = 1e9;
    for (double radius : {0.5, 0.05, 0.005}) {
        double worst = 0.0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const GroupElement g = element_near_identity(m, radius, seed);
            worst = std::max(worst, linalg::max_abs(linalg::Matrix(
                                        g.unitary() - linalg::Matrix::Identity(3, 3))));
        }
        CHECK(worst <= 2.0 * radius);
        CHECK(worst < previous);
        previous = worst;
    }
    CHECK_THROWS_AS(element_near_identity(Model(ModelKind::classical, 3), 0.1, 1), Error);
}

TEST_CASE("transporters carry decompositions onto each other") {
    // classical: explicit permutation example
    const Model c = classical3();
    const auto top_c = Proposition::top(c);
    const Decomposition m1(top_c, {Proposition::classical(c, {0}),
                                   Proposition::classical(c, {1, 2})});
    const Decomposition m2(top_c, {Proposition::classical(c, {2}),
                                   Proposition::classical(c, {0, 1})});
    const GroupElement g = find_transporter(m1, m2);
    for (std::size_t i = 0; i < m1.parts.size(); ++i)
        CHECK(same_proposition(apply(g, m1.parts[i]), m2.parts[i]));

    // identity transport works trivially
    const GroupElement id_like = find_transporter(m1, m1);
    for (const auto& part : m1.parts)
        CHECK(same_proposition(apply(id_like, part), part));

    // qubit: basis to the balanced pair
    const Model q = qubit();
    const Decomposition b1(Proposition::top(q), {zero_ray(q), one_ray(q)});
    const Decomposition b2(Proposition::top(q), {plus_ray(q), minus_ray(q)});
    const GroupElement u = find_transporter(b1, b2);
    CHECK(same_proposition(apply(u, zero_ray(q)), plus_ray(q)));
    CHECK(same_proposition(apply(u, one_ray(q)), minus_ray(q)));

    // decompositions of proper subspaces transport too
    const Model big(ModelKind::quantum_complex, 4);
    const auto a1 = sample_refinement(Proposition::top(big), 3, 7);
    const auto a2 = sample_refinement(Proposition::top(big), 3, 8);
    const auto d1 = sample_decomposition(a1, {1, 2}, 9);
    const auto d2 = sample_decomposition(a2, {1, 2}, 10);
    const GroupElement w = find_transporter(d1, d2);
    for (std::size_t i = 0; i < d1.parts.size(); ++i)
        CHECK(same_proposition(apply(w, d1.parts[i]), d2.parts[i]));

    const auto bad = sample_decomposition(a2, {2, 1}, 11);
    CHECK_THROWS_AS(find_transporter(d1, bad), Error);
}

TEST_CASE("stabilizers fix a hypothesis and its partial sums") {
    const Model m(ModelKind::quantum_complex, 4);
    const auto a = Proposition::basis(m, {0, 1});
    std::vector<Proposition> probes;
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        probes.push_back(
            sample_refinement(Proposition::basis(m, {2, 3}), 1, seed));

    CHECK(stabilizer_check(GroupElement::identity(m), a, probes));

    // rotating inside a (identity on the rest) fixes a and all its supersets
    Rng rng(4);
    linalg::Matrix block = linalg::Matrix::Zero(4, 4);
    block.topLeftCorner(2, 2) = linalg::haar_unitary(m.kind, 2, rng);
    block.bottomRightCorner(2, 2) = linalg::Matrix::Identity(2, 2);
    CHECK(stabilizer_check(GroupElement::matrix(m, block), a, probes));

    // a nontrivial rotation of the complement moves the probe supersets
    block.bottomRightCorner(2, 2) = linalg::haar_unitary(m.kind, 2, rng);
    CHECK_FALSE(stabilizer_check(GroupElement::matrix(m, block), a, probes));

    // a generic unitary moves a itself
    const GroupElement generic = random_group_element(m, 77);
    CHECK_FALSE(stabilizer_check(generic, a, probes));
}

TEST_CASE("group dimension closed forms") {
    CHECK(dim_group(ModelKind::quantum_complex, 4) == 16);
    CHECK(dim_group(ModelKind::quaternionic, 2) == 10);
    CHECK(dim_group(ModelKind::quaternionic, 4) == 36);
    CHECK(dim_group(ModelKind::classical, 9) == 0);
    CHECK(dim_group(ModelKind::quantum_real, 4) == 6);
    for (ModelKind kind : {ModelKind::classical, ModelKind::quantum_real,
                           ModelKind::quantum_complex, ModelKind::quaternionic})
        CHECK(dim_group(kind, 0) == 0);
    CHECK(dim_group(GroupFamily::unitary, 5) == 25);
    CHECK(dim_group(GroupFamily::orthogonal_pair, 5) == 20);
    CHECK(dim_group(GroupFamily::phase_torus, 5) == 5);
}

TEST_CASE("largest independent subsets of the symmetric group") {
    CHECK(mu_prime_symmetric(2) == 1);
    CHECK(mu_prime_symmetric(6) == 5);
    CHECK(mu_prime_symmetric(1) == 0);
    CHECK_THROWS_AS(mu_prime_symmetric(0), Error);
}

TEST_CASE("most-accurate-set dimensions") {
    CHECK(dim_most_accurate(ModelKind::quantum_complex, 2) == 2); // Bloch sphere surface
    CHECK(dim_most_accurate(ModelKind::quantum_complex, 1) == 0);
    CHECK(dim_most_accurate(ModelKind::quantum_complex, 0) == 0);
    CHECK(dim_most_accurate(ModelKind::classical, 10) == 0);
    CHECK(dim_most_accurate(ModelKind::quantum_real, 3) == 2);
}

TEST_CASE("decomposition manifold dimensions") {
    CHECK(dim_decomposition_manifold(ModelKind::quantum_complex, {1, 1}) == 2);
    CHECK(dim_decomposition_manifold(ModelKind::quantum_complex, {1, 1, 2}) == 10);
    CHECK(dim_decomposition_manifold(ModelKind::classical, {3, 4, 1}) == 0);
    CHECK(dim_decomposition_manifold(ModelKind::quantum_real, {1, 2}) == 2);
    CHECK_THROWS_AS(dim_decomposition_manifold(ModelKind::quantum_complex, {0, 2}), Error);
}

TEST_CASE("state parameter counts") {
    CHECK(state_parameter_count(ModelKind::quantum_complex, 4) == 16);
    CHECK(state_parameter_count(ModelKind::quantum_real, 4) == 10);
    CHECK(state_parameter_count(ModelKind::quaternionic, 2) == 6);
    for (ModelKind kind : {ModelKind::classical, ModelKind::quantum_real,
                           ModelKind::quantum_complex, ModelKind::quaternionic}) {
        CHECK(state_parameter_count(kind, 0) == 0);
        CHECK(state_parameter_count(kind, 1) == 1);
    }
}

namespace {

void for_each_composition(int d, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> acc;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            fn(acc);
            return;
        }
        for (int k = 1; k <= rest; ++k) {
            acc.push_back(k);
            self(self, rest - k);
            acc.pop_back();
        }
    };
    rec(rec, d);
}

} // namespace

TEST_CASE("homogeneous-space consistency for the unitary family") {
    for (int d = 1; d <= 8; ++d)
        for_each_composition(d, [&](const std::vector<int>& k) {
            long long factors = 0;
            for (int ki : k)
                factors += dim_group(ModelKind::quantum_complex, ki);
            CHECK(dim_group(ModelKind::quantum_complex, d) - factors ==
                  dim_decomposition_manifold(ModelKind::quantum_complex, k));
        });
}

TEST_CASE("parameter rule holds for every kind with closed forms") {
    for (ModelKind kind : {ModelKind::classical, ModelKind::quantum_real,
                           ModelKind::quantum_complex, ModelKind::quaternionic})
        for (int d = 1; d <= 8; ++d)
            for_each_composition(d, [&](const std::vector<int>& k) {
                long long sum = 0;
                for (int ki : k)
                    sum += state_parameter_count(kind, ki);
                CHECK(state_parameter_count(kind, d) ==
                      dim_decomposition_manifold(kind, k) + sum);
            });
}

TEST_CASE("most-accurate-set dimension recursion") {
    for (ModelKind kind : {ModelKind::quantum_real, ModelKind::quantum_complex})
        for (int d = 1; d <= 12; ++d)
            for (int l = 1; l <= d; ++l)
                CHECK(dim_most_accurate(kind, d) ==
                      dim_most_accurate(kind, d - l + 1) + dim_most_accurate(kind, l));
}

TEST_CASE("group actions preserve structure") {
    for (ModelKind kind :
         {ModelKind::classical, ModelKind::quantum_real, ModelKind::quantum_complex}) {
        const Model m(kind, 4);
        const auto top = Proposition::top(m);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto decomp = sample_decomposition(top, {1, 3}, seed);
            const GroupElement g = random_group_element(m, seed + 40);
            const auto gx = apply(g, decomp.parts[0]);
            const auto gy = apply(g, decomp.parts[1]);
            CHECK(are_orthogonal(gx, gy));
            CHECK(gx.granularity() == 1);
            CHECK(gy.granularity() == 3);
            CHECK(same_proposition(apply(g, partial_sum(decomp.parts[0], decomp.parts[1])),
                                   partial_sum(gx, gy)));
        }
    }
}

TEST_CASE("group element validation") {
    const Model m = qubit();
    linalg::Matrix not_unitary(2, 2);
    not_unitary << 1.0, 0.0, 0.0, 2.0;
    CHECK_THROWS_AS(GroupElement::matrix(m, not_unitary), Error);
    CHECK_THROWS_AS(GroupElement::permutation(classical3(), {0, 0, 1}), Error);
    CHECK_THROWS_AS(random_group_element(Model(ModelKind::classical, 2), 1).unitary(), Error);

    const GroupElement g = random_group_element(m, 5);
    const GroupElement gi = g.inverse();
    CHECK(linalg::max_abs(linalg::Matrix(g.unitary() * gi.unitary() -
                                         linalg::Matrix::Identity(2, 2))) < 1e-12);
}
