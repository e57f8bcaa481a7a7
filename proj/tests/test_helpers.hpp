// Shared constructions for the unit suites.

#pragma once

#include <doctest.h>

#include "qpv/composition.hpp"
#include "qpv/state.hpp"

namespace qpv::test {

inline Model classical3() { return Model(ModelKind::classical, 3); }
inline Model qubit() { return Model(ModelKind::quantum_complex, 2); }
inline Model qutrit() { return Model(ModelKind::quantum_complex, 3); }
inline Model rebit() { return Model(ModelKind::quantum_real, 2); }

inline linalg::Vector ket(std::initializer_list<linalg::Complex> amplitudes) {
    linalg::Vector v(static_cast<Eigen::Index>(amplitudes.size()));
    Eigen::Index i = 0;
    for (const auto& a : amplitudes)
        v(i++) = a;
    return v;
}

inline Proposition plus_ray(const Model& m = qubit()) {
    return Proposition::ray(m, ket({1.0, 1.0}));
}

inline Proposition minus_ray(const Model& m = qubit()) {
    return Proposition::ray(m, ket({1.0, -1.0}));
}

inline Proposition zero_ray(const Model& m = qubit()) {
    return Proposition::basis(m, {0});
}

inline Proposition one_ray(const Model& m = qubit()) {
    return Proposition::basis(m, {1});
}

} // namespace qpv::test
