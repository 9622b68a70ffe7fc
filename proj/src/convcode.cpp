#include "polyprime/convcode.hpp"

#include <algorithm>

namespace polyprime {

namespace {

void require_full_column_rank(const PolyMat& g) {
    if (g.cols() > g.rows()) throw std::invalid_argument("generator needs rows >= cols");
    for (const auto& d : minors(g, g.cols()))
        if (!d.is_zero()) return;
    throw std::invalid_argument("rank-deficient generator");
}

}  // namespace

int code_order(const PolyMat& g) {
    require_full_column_rank(g);
    int order = 0;
    for (int nu : column_degrees(g)) order += std::max(nu, 0);
    return order;
}

int code_degree(const PolyMat& g) {
    require_full_column_rank(g);
    int deg = 0;
    for (const auto& d : minors(g, g.cols())) deg = std::max(deg, d.degree());
    return deg;
}

bool is_minimal_basis(const PolyMat& g) {
    require_full_column_rank(g);
    return is_column_proper(g);
}

bool is_noncatastrophic(const PolyMat& g) {
    require_full_column_rank(g);
    return is_right_prime(g);
}

ConvCode code_from_system(const StateSpace& sys) {
    // Coprimely factor (zI-A)^{-1}B = P·Q^{-1} and set Y = C·P + D·Q,
    // U = Q.  Y and U are deliberately not re-coprimed: an unobservable
    // cancellation stays inside the generator and shows up as catastrophic.
    const FieldPtr& f = sys.field();
    int s = sys.n(), k = sys.m(), p = sys.p();
    StateSpace state_part(sys.a, sys.b, Mat::identity(f, s), Mat(f, s, k));
    MatrixFraction frac = right_coprime_factorization(state_part);
    PolyMat y = PolyMat::from_scalar(sys.c) * frac.p +
                PolyMat::from_scalar(sys.d) * frac.q.matrix;
    ConvCode code;
    code.generator = PolyMat(f, p + k, k);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < k; ++j) code.generator.at(i, j) = y.at(i, j);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) code.generator.at(p + i, j) = frac.q.matrix.at(i, j);
    return code;
}

bool minimal_representation_orbit_check(const StateSpace& sys, const Mat& t) {
    Mat tinv = t.inverse();  // throws on singular
    StateSpace conj(t * sys.a * tinv, t * sys.b, sys.c * tinv, sys.d);
    return code_from_system(sys).generator == code_from_system(conj).generator;
}

}  // namespace polyprime
