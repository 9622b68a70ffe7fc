#pragma once

#include "polyprime/systems.hpp"

namespace polyprime {

/// Rate-k/n convolutional code given by an n×k full-column-rank generator.
struct ConvCode {
    PolyMat generator;
    int n() const { return generator.rows(); }
    int k() const { return generator.cols(); }
};

/// Sum of the column degrees of G.
int code_order(const PolyMat& g);
/// Maximal degree over the k×k minors of G.
int code_degree(const PolyMat& g);
/// Column properness, equivalent to order == degree.
bool is_minimal_basis(const PolyMat& g);
/// Right primeness of the generator.
bool is_noncatastrophic(const PolyMat& g);

/// G = [Y; U] from the right coprime fraction C(zI-A)^{-1}B + D = Y·U^{-1}.
ConvCode code_from_system(const StateSpace& sys);

/// Conjugating a reachable system by invertible T must reproduce the same
/// canonical generator; returns the comparison result.
bool minimal_representation_orbit_check(const StateSpace& sys, const Mat& t);

}  // namespace polyprime
