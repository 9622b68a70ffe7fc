#include "polyprime/systems.hpp"

namespace polyprime {

StateSpace::StateSpace(Mat a_, Mat b_, Mat c_, Mat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    int nn = a.rows();
    if (a.cols() != nn) throw std::invalid_argument("A must be square");
    if (b.rows() != nn) throw std::invalid_argument("B row count must match A");
    if (c.cols() != nn) throw std::invalid_argument("C column count must match A");
    if (d.rows() != c.rows() || d.cols() != b.cols())
        throw std::invalid_argument("D shape must be p×m");
    if (b.cols() < 1) throw std::invalid_argument("need at least one input");
}

bool is_reachable(const Mat& a, const Mat& b) {
    int n = a.rows();
    if (n == 0) return true;
    Mat reach(b.field(), n, n * b.cols());
    Mat power = b;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < b.cols(); ++j) reach.at(i, k * b.cols() + j) = power.at(i, j);
        if (k + 1 < n) power = a * power;
    }
    return reach.rank() == n;
}

bool is_observable(const Mat& a, const Mat& c) {
    return is_reachable(a.transpose(), c.transpose());
}

bool is_minimal(const StateSpace& sys) {
    return is_reachable(sys.a, sys.b) && is_observable(sys.a, sys.c);
}

PolyMat char_matrix(const Mat& a) {
    int n = a.rows();
    const FieldPtr& f = a.field();
    PolyMat m(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<uint32_t> c = {f->neg(a.at(i, j))};
            if (i == j) c.push_back(1);
            m.at(i, j) = Poly(f, std::move(c));
        }
    return m;
}

PolyMat adjugate(const PolyMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of non-square matrix");
    int n = m.rows();
    PolyMat adj(m.field(), n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = Poly::one(m.field());
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PolyMat sub(m.field(), n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    sub.at(rr, cc) = m.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Poly cof = sub.det();
            adj.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

MatrixFraction right_coprime_factorization(const StateSpace& sys) {
    const FieldPtr& f = sys.field();
    int m = sys.m();
    MatrixFraction out;
    if (sys.n() == 0) {
        out.p = PolyMat::from_scalar(sys.d);
        out.q.matrix = PolyMat::identity(f, m);
        out.q.column_degrees.assign(static_cast<size_t>(m), 0);
        return out;
    }
    PolyMat zia = char_matrix(sys.a);
    Poly d = zia.det();
    PolyMat num = PolyMat::from_scalar(sys.c) * adjugate(zia) * PolyMat::from_scalar(sys.b);
    PolyMat dd = PolyMat::from_scalar(sys.d);
    for (int i = 0; i < dd.rows(); ++i)
        for (int j = 0; j < dd.cols(); ++j) num.at(i, j) = num.at(i, j) + d * dd.at(i, j);
    PolyMat di = PolyMat::scalar_diag(d, m);
    GcrdResult g = gcrd(di, num);
    PolyMat p0 = exact_right_divide(num, g.r);
    PolyMat q0 = exact_right_divide(di, g.r);
    auto [kh, u] = kronecker_hermite_form(q0);
    out.p = p0 * u;
    out.q = std::move(kh);
    // Cross-multiplication check: N·Q = d·P.
    PolyMat lhs = num * out.q.matrix;
    PolyMat rhs = out.p;
    for (int i = 0; i < rhs.rows(); ++i)
        for (int j = 0; j < rhs.cols(); ++j) rhs.at(i, j) = d * rhs.at(i, j);
    if (!(lhs == rhs)) throw std::logic_error("matrix fraction failed cross-multiplication");
    return out;
}

HermiteForm denominator_in_hermite_form(const Mat& a, const Mat& b) {
    StateSpace sys(a, b, Mat::identity(a.field(), a.rows()), Mat(a.field(), a.rows(), b.cols()));
    MatrixFraction frac = right_coprime_factorization(sys);
    return hermite_form(frac.q.matrix).first;
}

StateSpace parallel_connect(const std::vector<std::pair<Mat, Mat>>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("empty node list");
    const FieldPtr& f = nodes[0].second.field();
    int m = nodes[0].second.cols(), n = 0;
    for (const auto& [a, b] : nodes) {
        if (b.cols() != m) throw std::invalid_argument("input-dimension mismatch");
        n += a.rows();
    }
    Mat big_a(f, n, n), big_b(f, n, m);
    int off = 0;
    for (const auto& [a, b] : nodes) {
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) big_a.at(off + i, off + j) = a.at(i, j);
            for (int j = 0; j < m; ++j) big_b.at(off + i, j) = b.at(i, j);
        }
        off += a.rows();
    }
    return StateSpace(big_a, big_b, Mat::identity(f, n), Mat(f, n, m));
}

bool parallel_reachable_via_criterion(const std::vector<std::pair<Mat, Mat>>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("empty node list");
    std::vector<PolyMat> denoms;
    denoms.reserve(nodes.size());
    for (const auto& [a, b] : nodes) {
        if (!is_reachable(a, b)) return false;
        denoms.push_back(denominator_in_hermite_form(a, b).matrix);
    }
    if (denoms.size() == 1) return true;
    return mutually_left_coprime(denoms);
}

}  // namespace polyprime
