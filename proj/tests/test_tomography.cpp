#include "test_helpers.hpp"

#include "qpv/tomography.hpp"

#include <cmath>

using namespace qpv;
using namespace qpv::test;

TEST_CASE("informationally complete family sizes and conditioning") {
    const ICSet classical = informationally_complete_set(classical3());
    CHECK(classical.props.size() == 3);
    CHECK(classical.mece_indices.size() == 3);

    const ICSet complex2 = informationally_complete_set(qubit());
    CHECK(complex2.props.size() == 4);
    CHECK(complex2.smallest_singular_value > 1e-8);

    const ICSet real2 = informationally_complete_set(rebit());
    CHECK(real2.props.size() == 3);
    CHECK(real2.smallest_singular_value > 1e-8);

    const ICSet complex3 = informationally_complete_set(qutrit());
    CHECK(complex3.props.size() == 9);

    // the MECE subset really decomposes the top proposition
    Proposition sum = Proposition::absurd(qubit());
    for (int i : complex2.mece_indices)
        sum = partial_sum(sum, complex2.props[static_cast<std::size_t>(i)]);
    CHECK(same_proposition(sum, Proposition::top(qubit())));
}

TEST_CASE("hermitian coordinates are isometric") {
    const Model m = qutrit();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const State a = random_state(m, false, seed);
        const State b = random_state(m, false, seed + 100);
        const auto ca = hermitian_coords(m.kind, a.rho());
        const auto cb = hermitian_coords(m.kind, b.rho());
        const double trace_product = (a.rho() * b.rho()).trace().real();
        CHECK(std::abs(ca.dot(cb) - trace_product) <= 1e-12);
        const auto back = hermitian_from_coords(m.kind, m.dim, ca);
        CHECK(linalg::max_abs(linalg::Matrix(back - a.rho())) <= 1e-12);
    }
}

TEST_CASE("joint tables of product states are outer products") {
    const Model q = qubit();
    const CompositeModel ab(q, q);
    const ICSet ic = informationally_complete_set(q);
    const State ra = random_state(q, false, 6);
    const State rb = random_state(q, false, 7);
    const auto table = joint_probability_table(ab, tensor_state(ra, rb), ic, ic);
    for (std::size_t i = 0; i < ic.props.size(); ++i)
        for (std::size_t j = 0; j < ic.props.size(); ++j)
            CHECK(table.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) ==
                  doctest::Approx(probability(ra, ic.props[i]) * probability(rb, ic.props[j]))
                      .epsilon(1e-10));
}

TEST_CASE("the ideally correlated pair reconstructs exactly") {
    const Model q = qubit();
    const CompositeModel ab(q, q);
    const ICSet ic = informationally_complete_set(q);
    const State bell = entangled_witness_state(ab);
    const auto table = joint_probability_table(ab, bell, ic, ic);
    CHECK(table.values(0, 0) == doctest::Approx(0.5).epsilon(1e-12));

    const auto q_fn = reconstruct_joint(ab, table, ic, ic);
    CHECK(q_fn.chain(plus_ray(q), plus_ray(q)) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(q_fn.chain(zero_ray(q), one_ray(q)) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(q_fn.linear(plus_ray(q), plus_ray(q)) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("two-qubit round trip stays below 1e-8") {
    const Model q = qubit();
    const CompositeModel ab(q, q);
    const ICSet ic = informationally_complete_set(q);
    Rng rng(123);
    double worst = 0.0;
    double worst_gap = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const State rho = random_state(ab.total(), false, rng.next_u64());
        const auto q_fn =
            reconstruct_joint(ab, joint_probability_table(ab, rho, ic, ic), ic, ic);
        for (int pair = 0; pair < 100; ++pair) {
            const auto x =
                sample_refinement(Proposition::top(q), rng.uniform_int(1, 2), rng.next_u64());
            const auto y =
                sample_refinement(Proposition::top(q), rng.uniform_int(1, 2), rng.next_u64());
            const double direct = probability(rho, tensor_proposition(x, y));
            worst = std::max(worst, std::abs(q_fn.chain(x, y) - direct));
            worst_gap = std::max(worst_gap, std::abs(q_fn.chain(x, y) - q_fn.linear(x, y)));
        }
    }
    CHECK(worst < 1e-8);
    CHECK(worst_gap < 1e-8);
}

TEST_CASE("qubit-qutrit round trip stays below 1e-8") {
    const Model a = qubit();
    const Model b = qutrit();
    const CompositeModel ab(a, b);
    const ICSet ic_a = informationally_complete_set(a);
    const ICSet ic_b = informationally_complete_set(b);
    Rng rng(321);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const State rho = random_state(ab.total(), false, rng.next_u64());
        const auto q_fn =
            reconstruct_joint(ab, joint_probability_table(ab, rho, ic_a, ic_b), ic_a, ic_b);
        for (int pair = 0; pair < 50; ++pair) {
            const auto x =
                sample_refinement(Proposition::top(a), rng.uniform_int(1, 2), rng.next_u64());
            const auto y =
                sample_refinement(Proposition::top(b), rng.uniform_int(1, 3), rng.next_u64());
            const double direct = probability(rho, tensor_proposition(x, y));
            worst = std::max(worst, std::abs(q_fn.chain(x, y) - direct));
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("classical reconstruction is exact on all pair events") {
    const Model c(ModelKind::classical, 3);
    const CompositeModel ab(c, c);
    const ICSet ic = informationally_complete_set(c);
    Rng rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        const State rho = random_state(ab.total(), false, rng.next_u64());
        const auto q_fn =
            reconstruct_joint(ab, joint_probability_table(ab, rho, ic, ic), ic, ic);
        for (int sa = 0; sa < 8; ++sa)
            for (int sb = 0; sb < 8; ++sb) {
                std::vector<int> ia, ib;
                for (int bit = 0; bit < 3; ++bit) {
                    if (sa & (1 << bit))
                        ia.push_back(bit);
                    if (sb & (1 << bit))
                        ib.push_back(bit);
                }
                const auto x = Proposition::classical(c, ia);
                const auto y = Proposition::classical(c, ib);
                const double direct = probability(rho, tensor_proposition(x, y));
                CHECK(std::abs(q_fn.chain(x, y) - direct) <= 1e-12);
                CHECK(std::abs(q_fn.linear(x, y) - direct) <= 1e-12);
            }
    }
}

TEST_CASE("classical four-level factors reconstruct exactly too") {
    const Model c(ModelKind::classical, 4);
    const CompositeModel ab(c, c);
    const ICSet ic = informationally_complete_set(c);
    Rng rng(88);
    for (int trial = 0; trial < 5; ++trial) {
        const State rho = random_state(ab.total(), false, rng.next_u64());
        const auto q_fn =
            reconstruct_joint(ab, joint_probability_table(ab, rho, ic, ic), ic, ic);
        for (int pair = 0; pair < 60; ++pair) {
            const auto x =
                sample_refinement(Proposition::top(c), rng.uniform_int(1, 4), rng.next_u64());
            const auto y =
                sample_refinement(Proposition::top(c), rng.uniform_int(1, 4), rng.next_u64());
            const double direct = probability(rho, tensor_proposition(x, y));
            CHECK(std::abs(q_fn.chain(x, y) - direct) <= 1e-12);
        }
    }
}

TEST_CASE("the chain falls back gracefully on degenerate conditionals") {
    const Model q = qubit();
    const CompositeModel ab(q, q);
    const ICSet ic = informationally_complete_set(q);
    // a pure product state with zero-probability table cells
    const State rho = tensor_state(State::pure(zero_ray(q)), State::pure(zero_ray(q)));
    const auto q_fn = reconstruct_joint(ab, joint_probability_table(ab, rho, ic, ic), ic, ic);
    const double direct = probability(rho, tensor_proposition(one_ray(q), zero_ray(q)));
    CHECK(std::abs(q_fn.chain(one_ray(q), zero_ray(q)) - direct) <= 1e-9);
    CHECK(std::abs(q_fn.chain(zero_ray(q), zero_ray(q)) - 1.0) <= 1e-9);
}

TEST_CASE("reconstruction is linear in the state") {
    const Model q = qubit();
    const CompositeModel ab(q, q);
    const ICSet ic = informationally_complete_set(q);
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const State r1 = random_state(ab.total(), false, rng.next_u64());
        const State r2 = random_state(ab.total(), false, rng.next_u64());
        const State blend = mix({r1, r2}, {0.3, 0.7});
        const auto f1 = reconstruct_joint(ab, joint_probability_table(ab, r1, ic, ic), ic, ic);
        const auto f2 = reconstruct_joint(ab, joint_probability_table(ab, r2, ic, ic), ic, ic);
        const auto fb =
            reconstruct_joint(ab, joint_probability_table(ab, blend, ic, ic), ic, ic);
        const auto x = sample_refinement(Proposition::top(q), 1, rng.next_u64());
        const auto y = sample_refinement(Proposition::top(q), 1, rng.next_u64());
        CHECK(std::abs(fb.chain(x, y) - 0.3 * f1.chain(x, y) - 0.7 * f2.chain(x, y)) <= 1e-9);
    }
}

TEST_CASE("dropping one effect breaks informational completeness") {
    const ICSet ic = informationally_complete_set(qubit());
    Eigen::MatrixXd reduced = ic.effect_matrix.topRows(ic.effect_matrix.rows() - 1);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(reduced, Eigen::ComputeFullV);
    const Eigen::VectorXd kernel = svd.matrixV().col(ic.effect_matrix.cols() - 1);
    const auto direction = hermitian_from_coords(ModelKind::quantum_complex, 2, kernel);

    const State base = State::maximally_mixed(qubit());
    const double scale = 0.2 / linalg::max_abs(direction);
    const State shifted =
        State::density(qubit(), linalg::Matrix(base.rho() + scale * direction));
    for (std::size_t i = 0; i + 1 < ic.props.size(); ++i)
        CHECK(std::abs(probability(base, ic.props[i]) - probability(shifted, ic.props[i])) <=
              1e-9);
    CHECK(std::abs(probability(base, ic.props.back()) -
                   probability(shifted, ic.props.back())) > 1e-6);
}

TEST_CASE("reductionism verdicts across the kinds") {
    const auto classical = reductionism_check(ModelKind::classical, 2, 3);
    CHECK(classical.composite_parameters == 6);
    CHECK(classical.status == ReductionismStatus::saturated);

    const auto complex = reductionism_check(ModelKind::quantum_complex, 2, 2);
    CHECK(complex.composite_parameters == 16);
    CHECK(complex.status == ReductionismStatus::saturated);

    const auto real = reductionism_check(ModelKind::quantum_real, 2, 2);
    CHECK(real.composite_parameters == 10);
    CHECK(real.product_parameters == 9);
    CHECK(real.status == ReductionismStatus::violated);

    const auto quaternionic = reductionism_check(ModelKind::quaternionic, 2, 2);
    CHECK(quaternionic.composite_parameters == 28);
    CHECK(quaternionic.product_parameters == 36);
    CHECK(quaternionic.status == ReductionismStatus::strict);
}
