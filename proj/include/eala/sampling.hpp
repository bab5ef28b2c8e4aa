#pragma once

#include "eala/eala_core.hpp"

#include <random>

namespace eala {

/// Seeded deterministic element generator for the property checks: degrees
/// uniform over the box, coefficients from a small fixed palette. mt19937_64
/// and modulo draws keep the stream identical across platforms.
class SampleGen {
public:
    explicit SampleGen(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next(std::uint64_t bound) { return eng_() % bound; }

    const Scalar& coeff();
    Degree degree(int box);
    Rational rational();

    TorusElement torus_element(int box, int max_terms = 3);
    TorusElement torus_monomial(int box);
    Matrix2 matrix(int box, int max_terms = 2);
    LieTorusElement lie_element(int box, int max_terms = 3);
    EalaElement eala_element(int box);

private:
    std::mt19937_64 eng_;
};

}  // namespace eala
