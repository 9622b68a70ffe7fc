#pragma once

#include "polyprime/polymat.hpp"

namespace polyprime {

/// Discrete-time state-space system x(t+1) = Ax + Bu, y = Cx + Du over a
/// finite field.  n = 0 (empty state) is legal.
struct StateSpace {
    Mat a, b, c, d;

    StateSpace() = default;
    StateSpace(Mat a_, Mat b_, Mat c_, Mat d_);

    const FieldPtr& field() const { return b.field(); }
    int n() const { return a.rows(); }
    int m() const { return b.cols(); }
    int p() const { return c.rows(); }
};

/// Kalman test: rank [B, AB, ..., A^{n-1}B] = n.
bool is_reachable(const Mat& a, const Mat& b);
bool is_observable(const Mat& a, const Mat& c);
bool is_minimal(const StateSpace& sys);

struct MatrixFraction {
    PolyMat p;                  // p×m numerator
    KroneckerHermiteForm q;     // m×m denominator, canonical
};

/// T(z) = C(zI-A)^{-1}B + D = P(z)·Q(z)^{-1} with P, Q right coprime and Q in
/// Kronecker-Hermite form; deg det Q is the McMillan degree.  Goes through
/// the scalar denominator det(zI-A) and peels the gcrd; the result is checked
/// by cross-multiplication.
MatrixFraction right_coprime_factorization(const StateSpace& sys);

/// zI - A as a polynomial matrix.
PolyMat char_matrix(const Mat& a);
/// adj(M) with adj(M)·M = det(M)·I; cofactor determinants are fraction-free.
PolyMat adjugate(const PolyMat& m);

/// Unique Hermite-form denominator of (zI-A)^{-1}B.
HermiteForm denominator_in_hermite_form(const Mat& a, const Mat& b);

/// Block-diagonal A, stacked B, C = I, D = 0.
StateSpace parallel_connect(const std::vector<std::pair<Mat, Mat>>& nodes);

/// All nodes reachable and their Hermite denominators mutually left coprime;
/// equivalent to is_reachable of the parallel connection.
bool parallel_reachable_via_criterion(const std::vector<std::pair<Mat, Mat>>& nodes);

}  // namespace polyprime
