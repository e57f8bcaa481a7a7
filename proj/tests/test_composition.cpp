#include "test_helpers.hpp"

#include <cmath>

using namespace qpv;
using namespace qpv::test;

TEST_CASE("classical conjunction uses row-major index pairing") {
    const Model a(ModelKind::classical, 2);
    const Model b(ModelKind::classical, 3);
    const auto x = Proposition::classical(a, {0});
    const auto y = Proposition::classical(b, {1});
    const auto xy = tensor_proposition(x, y);
    CHECK(xy.model().dim == 6);
    CHECK(xy.subset() == std::vector<int>{1}); // 0 * 3 + 1
}

TEST_CASE("quantum conjunction is the Kronecker frame") {
    const Model q = qubit();
    const auto xy = tensor_proposition(zero_ray(q), one_ray(q));
    CHECK(xy.granularity() == 1);
    CHECK(same_proposition(xy, Proposition::basis(Model(ModelKind::quantum_complex, 4), {1})));
}

TEST_CASE("granularity is multiplicative under conjunction") {
    const Model a(ModelKind::quantum_complex, 2);
    const Model b(ModelKind::quantum_complex, 3);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto x = sample_refinement(Proposition::top(a), 2, seed);
        const auto y = sample_refinement(Proposition::top(b), 3, seed + 100);
        CHECK(tensor_proposition(x, y).granularity() == 6);
    }
    CHECK_THROWS_AS(
        tensor_proposition(Proposition::top(a),
                           Proposition::classical(Model(ModelKind::classical, 2), {0})),
        Error);
}

TEST_CASE("product states factorize probabilities") {
    for (ModelKind kind :
         {ModelKind::classical, ModelKind::quantum_real, ModelKind::quantum_complex}) {
        const Model a(kind, 2);
        const Model b(kind, 3);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const State ra = random_state(a, seed % 2 == 0, seed);
            const State rb = random_state(b, false, seed + 50);
            const State joint = tensor_state(ra, rb);
            const auto x = sample_refinement(Proposition::top(a), 1, seed + 10);
            const auto y = sample_refinement(Proposition::top(b), 2, seed + 20);
            CHECK(std::abs(probability(joint, tensor_proposition(x, y)) -
                           probability(ra, x) * probability(rb, y)) <= 1e-9);
        }
    }
}

TEST_CASE("products of pure states are pure; uniform times uniform is uniform") {
    const Model q = qubit();
    const State pure_pair = tensor_state(State::pure(zero_ray(q)), State::pure(plus_ray(q)));
    CHECK(is_pure(pure_pair));
    const State uniform_pair =
        tensor_state(State::maximally_mixed(q), State::maximally_mixed(q));
    CHECK(same_state(uniform_pair,
                     State::maximally_mixed(Model(ModelKind::quantum_complex, 4))));
}

TEST_CASE("distributivity over partial sums of both factors") {
    const Model a = qubit();
    const Model b = qutrit();
    const CompositeModel ab(a, b);
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto da = sample_decomposition(Proposition::top(a), {1, 1}, seed);
        const auto db = sample_decomposition(Proposition::top(b), {1, 2}, seed + 7);
        const State rho = random_state(ab.total(), false, seed + 99);
        const auto verdict = check_distributivity(da, db, rho);
        CHECK(verdict.passed);
        CHECK(verdict.proposition_deviation <= 1e-9);
        CHECK(verdict.probability_deviation <= 1e-9);
    }
    // classical case is exact set arithmetic
    const Model ca(ModelKind::classical, 3);
    const CompositeModel cab(ca, ca);
    const auto d1 = sample_decomposition(Proposition::top(ca), {1, 2}, 1);
    const auto d2 = sample_decomposition(Proposition::top(ca), {2, 1}, 2);
    const auto verdict = check_distributivity(d1, d2, random_state(cab.total(), false, 3));
    CHECK(verdict.passed);
    CHECK(verdict.proposition_deviation == 0.0);
}

TEST_CASE("joint product rule through composite conditioning") {
    const Model a = qubit();
    const Model b = qutrit();
    const CompositeModel ab(a, b);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const State rho = random_state(ab.total(), false, seed);
        const auto x = sample_refinement(Proposition::top(a), 1, seed + 1);
        const auto y = sample_refinement(Proposition::top(b), 2, seed + 2);
        const double py = probability(rho, embed_right(ab, y));
        if (py < 1e-4)
            continue;
        const double joint = probability(rho, tensor_proposition(x, y));
        CHECK(std::abs(joint - conditional_given_right(ab, rho, x, y) * py) <= 1e-9);
    }
}

TEST_CASE("group composition constraint across the kinds") {
    const auto classical = composition_constraint(ModelKind::classical, 2, 3);
    CHECK(classical.finite_branch);
    CHECK(classical.lhs == 5); // mu'(S_6)
    CHECK(classical.rhs == 2); // mu'(S_2) mu'(S_3)
    CHECK(classical.status == ConstraintStatus::satisfied);

    const auto quantum = composition_constraint(ModelKind::quantum_complex, 2, 2);
    CHECK(quantum.lhs == 16);
    CHECK(quantum.rhs == 16);
    CHECK(quantum.status == ConstraintStatus::saturated);

    const auto quaternionic = composition_constraint(ModelKind::quaternionic, 2, 2);
    CHECK(quaternionic.lhs == 36);
    CHECK(quaternionic.rhs == 100);
    CHECK(quaternionic.status == ConstraintStatus::violated);
}

TEST_CASE("entanglement dimension gap") {
    CHECK(entanglement_dim_gap(ModelKind::quantum_complex, 2, 2) == 2); // 6 - 4
    CHECK(entanglement_dim_gap(ModelKind::classical, 5, 7) == 0);
    CHECK(entanglement_dim_gap(ModelKind::quantum_complex, 1, 6) == 0);
}

TEST_CASE("the maximally correlated state is pure but has mixed marginals") {
    const Model q = qubit();
    const CompositeModel ab(q, q);
    const State witness = entangled_witness_state(ab);
    CHECK(is_pure(witness));
    CHECK(probability(witness,
                      tensor_proposition(zero_ray(q), zero_ray(q))) ==
          doctest::Approx(0.5).epsilon(1e-12));
    const State reduced = marginal(ab, witness, 0);
    CHECK(same_state(reduced, State::maximally_mixed(q)));
    CHECK_FALSE(is_pure(reduced));

    // contrast: product states keep pure marginals
    const State product = tensor_state(State::pure(plus_ray(q)), State::pure(zero_ray(q)));
    CHECK(is_pure(marginal(ab, product, 0)));
    CHECK(is_pure(marginal(ab, product, 1)));
}

TEST_CASE("tensor products of rays land inside the composite ray manifold") {
    const Model a = qubit();
    const Model b = qutrit();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto ea = sample_refinement(Proposition::top(a), 1, seed);
        const auto eb = sample_refinement(Proposition::top(b), 1, seed + 5);
        const auto joint = tensor_proposition(ea, eb);
        CHECK(joint.is_most_accurate());
        CHECK(implies(joint, Proposition::top(joint.model())));
    }
}

TEST_CASE("tensor conjunction distributes over partial sums exactly") {
    const Model a = qubit();
    const Model b = qubit();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto decomp = sample_decomposition(Proposition::top(a), {1, 1}, seed);
        const auto y = sample_refinement(Proposition::top(b), 1, seed + 3);
        const auto lhs = tensor_proposition(Proposition::top(a), y);
        const auto rhs = partial_sum(tensor_proposition(decomp.parts[0], y),
                                     tensor_proposition(decomp.parts[1], y));
        CHECK(same_proposition(lhs, rhs));
        CHECK(are_orthogonal(tensor_proposition(decomp.parts[0], y),
                             tensor_proposition(decomp.parts[1], y)));
    }
}

TEST_CASE("marginals of classical joints") {
    const Model a(ModelKind::classical, 2);
    const Model b(ModelKind::classical, 3);
    const CompositeModel ab(a, b);
    const State ra = random_state(a, false, 4);
    const State rb = random_state(b, false, 5);
    const State joint = tensor_state(ra, rb);
    CHECK(same_state(marginal(ab, joint, 0), ra));
    CHECK(same_state(marginal(ab, joint, 1), rb));
}
