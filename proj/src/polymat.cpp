#include "polyprime/polymat.hpp"

#include <algorithm>

namespace polyprime {

PolyMat PolyMat::identity(FieldPtr f, int n) {
    PolyMat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::one(f);
    return m;
}

PolyMat PolyMat::from_scalar(const Mat& s) {
    PolyMat m(s.field(), s.rows(), s.cols());
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j)
            if (s.at(i, j) != 0) m.at(i, j) = Poly::constant(s.field(), s.at(i, j));
    return m;
}

PolyMat PolyMat::scalar_diag(const Poly& d, int n) {
    PolyMat m(d.field(), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = d;
    return m;
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    PolyMat m(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Poly& v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                m.at(i, j) = m.at(i, j) + v * o.at(k, j);
            }
        }
    return m;
}

PolyMat PolyMat::operator+(const PolyMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
    PolyMat m(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

PolyMat PolyMat::operator-(const PolyMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
    PolyMat m(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

bool PolyMat::operator==(const PolyMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat PolyMat::eval(uint32_t point) const {
    Mat m(f_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).eval(point);
    return m;
}

namespace {

Poly det_cofactor(const PolyMat& m, std::vector<int>& rows, int col) {
    const FieldPtr& f = m.field();
    if (rows.size() == 1) return m.at(rows[0], col);
    Poly out(f);
    for (size_t k = 0; k < rows.size(); ++k) {
        const Poly& e = m.at(rows[k], col);
        if (e.is_zero()) continue;
        int r = rows[k];
        rows.erase(rows.begin() + static_cast<long>(k));
        Poly sub = det_cofactor(m, rows, col + 1);
        rows.insert(rows.begin() + static_cast<long>(k), r);
        Poly term = e * sub;
        out = (k % 2 == 0) ? out + term : out - term;
    }
    return out;
}

Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

}  // namespace

Poly PolyMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ == 0) return Poly::one(f_);
    if (rows_ <= 4) {
        std::vector<int> rows(rows_);
        for (int i = 0; i < rows_; ++i) rows[i] = i;
        return det_cofactor(*this, rows, 0);
    }
    // Bareiss fraction-free elimination; divisions are exact in F[z].
    PolyMat w = *this;
    Poly prev = Poly::one(f_);
    bool negate = false;
    for (int c = 0; c < cols_ - 1; ++c) {
        int piv = -1;
        for (int i = c; i < rows_; ++i)
            if (!w.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) return Poly(f_);
        if (piv != c) {
            for (int j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(c, j));
            negate = !negate;
        }
        for (int i = c + 1; i < rows_; ++i)
            for (int j = c + 1; j < cols_; ++j)
                w.at(i, j) = exact_quotient(w.at(c, c) * w.at(i, j) - w.at(i, c) * w.at(c, j), prev);
        for (int i = c + 1; i < rows_; ++i) w.at(i, c) = Poly(f_);
        prev = w.at(c, c);
    }
    Poly d = w.at(rows_ - 1, cols_ - 1);
    return negate ? -d : d;
}

bool PolyMat::is_unimodular() const {
    Poly d = det();
    return d.degree() == 0;
}

bool PolyMat::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

int PolyMat::max_degree() const {
    int d = -1;
    for (const auto& e : a_) d = std::max(d, e.degree());
    return d;
}

std::string PolyMat::str() const {
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
        out += i ? "; " : "";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
    }
    return out + "]";
}

std::vector<int> column_degrees(const PolyMat& h) {
    std::vector<int> nu(static_cast<size_t>(h.cols()), -1);
    for (int j = 0; j < h.cols(); ++j)
        for (int i = 0; i < h.rows(); ++i)
            nu[j] = std::max(nu[j], h.at(i, j).degree());
    return nu;
}

Mat hc_matrix(const PolyMat& h) {
    auto nu = column_degrees(h);
    Mat m(h.field(), h.rows(), h.cols());
    for (int j = 0; j < h.cols(); ++j) {
        if (nu[j] < 0) continue;
        for (int i = 0; i < h.rows(); ++i) m.at(i, j) = h.at(i, j).coeff(nu[j]);
    }
    return m;
}

bool is_column_proper(const PolyMat& h) {
    return hc_matrix(h).rank() == h.cols();
}

namespace {

// Elementary column operations applied to the working matrix and the tracked
// unimodular transform in lockstep.

void col_sub(PolyMat& m, PolyMat& u, int target, int source, const Poly& c) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, target) = m.at(i, target) - c * m.at(i, source);
    for (int i = 0; i < u.rows(); ++i) u.at(i, target) = u.at(i, target) - c * u.at(i, source);
}

void col_swap(PolyMat& m, PolyMat& u, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
    for (int i = 0; i < u.rows(); ++i) std::swap(u.at(i, a), u.at(i, b));
}

void col_scale(PolyMat& m, PolyMat& u, int j, uint32_t s) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) = m.at(i, j) * s;
    for (int i = 0; i < u.rows(); ++i) u.at(i, j) = u.at(i, j) * s;
}

}  // namespace

std::pair<HermiteForm, PolyMat> hermite_form(const PolyMat& q) {
    if (q.rows() != q.cols()) throw std::invalid_argument("hermite form needs a square matrix");
    int m = q.rows();
    PolyMat h = q;
    PolyMat u = PolyMat::identity(q.field(), m);
    for (int i = 0; i < m; ++i) {
        // Euclid across columns >= i on row i until a single nonzero survives.
        for (;;) {
            int piv = -1;
            for (int j = i; j < m; ++j) {
                if (h.at(i, j).is_zero()) continue;
                if (piv < 0 || h.at(i, j).degree() < h.at(i, piv).degree()) piv = j;
            }
            if (piv < 0) throw std::domain_error("singular matrix in hermite reduction");
            col_swap(h, u, i, piv);
            bool done = true;
            for (int j = i + 1; j < m; ++j) {
                if (h.at(i, j).is_zero()) continue;
                col_sub(h, u, j, i, h.at(i, j).divmod(h.at(i, i)).first);
                if (!h.at(i, j).is_zero()) done = false;
            }
            if (done) break;
        }
        col_scale(h, u, i, q.field()->inv(h.at(i, i).leading()));
        for (int j = 0; j < i; ++j)
            if (h.at(i, j).degree() >= h.at(i, i).degree())
                col_sub(h, u, j, i, h.at(i, j).divmod(h.at(i, i)).first);
    }
    HermiteForm out;
    out.matrix = h;
    out.row_degrees.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) out.row_degrees[static_cast<size_t>(i)] = h.at(i, i).degree();
    return {std::move(out), std::move(u)};
}

namespace {

// Topmost row attaining the maximal degree of column j; degree via out-param.
int column_pivot(const PolyMat& m, int j, int& deg) {
    deg = -1;
    int row = -1;
    for (int i = 0; i < m.rows(); ++i)
        if (m.at(i, j).degree() > deg) { deg = m.at(i, j).degree(); row = i; }
    return row;
}

}  // namespace

std::pair<KroneckerHermiteForm, PolyMat> kronecker_hermite_form(const PolyMat& q) {
    if (q.rows() != q.cols()) throw std::invalid_argument("kronecker-hermite form needs a square matrix");
    int m = q.rows();
    const FieldPtr& f = q.field();
    PolyMat k = q;
    PolyMat u = PolyMat::identity(f, m);

    // Phase 1: make the topmost-maximal-degree rows of the columns pairwise
    // distinct.  On a collision, cancel the leading column coefficient of the
    // higher-degree column (larger index on ties); the pair (degree, pivot
    // row) of the reduced column strictly decreases lexicographically with
    // descending rows, so this terminates.
    for (;;) {
        std::vector<int> deg(static_cast<size_t>(m)), row(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) {
            row[static_cast<size_t>(j)] = column_pivot(k, j, deg[static_cast<size_t>(j)]);
            if (row[static_cast<size_t>(j)] < 0)
                throw std::domain_error("singular matrix in kronecker-hermite reduction");
        }
        int a = -1, b = -1;
        for (int j = 0; j < m && a < 0; ++j)
            for (int l = j + 1; l < m; ++l)
                if (row[static_cast<size_t>(j)] == row[static_cast<size_t>(l)]) { a = j; b = l; break; }
        if (a < 0) break;
        if (deg[static_cast<size_t>(a)] > deg[static_cast<size_t>(b)]) std::swap(a, b);
        int r = row[static_cast<size_t>(a)];
        uint32_t c = f->div(k.at(r, b).leading(), k.at(r, a).leading());
        int shift = deg[static_cast<size_t>(b)] - deg[static_cast<size_t>(a)];
        col_sub(k, u, b, a, Poly::monomial(f, shift, c));
    }

    // Phase 2: permute each column to its pivot row and make diagonals monic.
    for (int j = 0; j < m; ++j) {
        for (int l = j; l < m; ++l) {
            int d;
            if (column_pivot(k, l, d) == j) { col_swap(k, u, j, l); break; }
        }
        col_scale(k, u, j, f->inv(k.at(j, j).leading()));
    }

    // Phase 3: per column, clear entries whose degree reaches the degree of
    // their own row's diagonal.  Each step only touches the target column;
    // the maximal violating degree never grows and same-degree violations
    // move strictly downward, so each column settles independently.
    for (int j = 0; j < m; ++j) {
        for (;;) {
            int best = -1, best_deg = -1;
            for (int i = 0; i < m; ++i) {
                if (i == j) continue;
                int d = k.at(i, j).degree();
                if (d >= k.at(i, i).degree() && d > best_deg) { best_deg = d; best = i; }
            }
            if (best < 0) break;
            col_sub(k, u, j, best, k.at(best, j).divmod(k.at(best, best)).first);
        }
    }

    KroneckerHermiteForm out;
    out.matrix = k;
    out.column_degrees = column_degrees(k);
    return {std::move(out), std::move(u)};
}

namespace {

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - k + i) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<Poly> minors(const PolyMat& m, int k) {
    if (k < 0 || k > std::min(m.rows(), m.cols())) throw std::invalid_argument("minor size out of range");
    std::vector<Poly> out;
    std::vector<int> ri(static_cast<size_t>(k)), ci(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) ri[static_cast<size_t>(i)] = i;
    do {
        for (int i = 0; i < k; ++i) ci[static_cast<size_t>(i)] = i;
        do {
            PolyMat sub(m.field(), k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub.at(i, j) = m.at(ri[static_cast<size_t>(i)], ci[static_cast<size_t>(j)]);
            out.push_back(sub.det());
        } while (next_combination(ci, m.cols()));
    } while (next_combination(ri, m.rows()));
    return out;
}

namespace {

// Monic gcd of the maximal minors; zero polynomial when all minors vanish.
Poly maximal_minor_gcd(const PolyMat& m, int k) {
    Poly g(m.field());
    for (const auto& d : minors(m, k)) {
        if (d.is_zero()) continue;
        g = g.is_zero() ? d.monic() : poly_gcd(g, d);
        if (g.is_one()) break;
    }
    return g;
}

}  // namespace

bool is_left_prime(const PolyMat& m) {
    if (m.rows() > m.cols()) throw std::invalid_argument("left primeness needs rows <= cols");
    return maximal_minor_gcd(m, m.rows()).is_one();
}

bool is_right_prime(const PolyMat& m) {
    if (m.cols() > m.rows()) throw std::invalid_argument("right primeness needs cols <= rows");
    return maximal_minor_gcd(m, m.cols()).is_one();
}

bool are_left_coprime(const std::vector<PolyMat>& hs) {
    if (hs.empty()) throw std::invalid_argument("empty matrix list");
    int p = hs[0].rows(), total = 0;
    for (const auto& h : hs) {
        if (h.rows() != p) throw std::invalid_argument("row-count mismatch");
        total += h.cols();
    }
    PolyMat cat(hs[0].field(), p, total);
    int off = 0;
    for (const auto& h : hs) {
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < h.cols(); ++j) cat.at(i, off + j) = h.at(i, j);
        off += h.cols();
    }
    return is_left_prime(cat);
}

bool are_right_coprime(const std::vector<PolyMat>& hs) {
    if (hs.empty()) throw std::invalid_argument("empty matrix list");
    std::vector<PolyMat> t;
    t.reserve(hs.size());
    for (const auto& h : hs) {
        PolyMat ht(h.field(), h.cols(), h.rows());
        for (int i = 0; i < h.rows(); ++i)
            for (int j = 0; j < h.cols(); ++j) ht.at(j, i) = h.at(i, j);
        t.push_back(std::move(ht));
    }
    return are_left_coprime(t);
}

PolyMat mutual_coprimeness_matrix(const std::vector<PolyMat>& ds) {
    int n = static_cast<int>(ds.size());
    if (n < 2) throw std::invalid_argument("need at least two matrices");
    int m = ds[0].rows();
    for (const auto& d : ds) {
        if (d.rows() != m || d.cols() != m) throw std::invalid_argument("mismatched blocks");
        if (!d.is_nonsingular()) throw std::invalid_argument("singular block");
    }
    PolyMat big(ds[0].field(), (n - 1) * m, n * m);
    for (int b = 0; b < n - 1; ++b)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                big.at(b * m + i, b * m + j) = ds[static_cast<size_t>(b)].at(i, j);
                big.at(b * m + i, (b + 1) * m + j) = ds[static_cast<size_t>(b + 1)].at(i, j);
            }
    return big;
}

bool mutually_left_coprime(const std::vector<PolyMat>& ds) {
    return is_left_prime(mutual_coprimeness_matrix(ds));
}

namespace {

void row_sub(PolyMat& m, PolyMat& l, int target, int source, const Poly& c) {
    for (int j = 0; j < m.cols(); ++j) m.at(target, j) = m.at(target, j) - c * m.at(source, j);
    for (int j = 0; j < l.cols(); ++j) l.at(target, j) = l.at(target, j) - c * l.at(source, j);
}

void row_swap(PolyMat& m, PolyMat& l, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
    for (int j = 0; j < l.cols(); ++j) std::swap(l.at(a, j), l.at(b, j));
}

void row_scale(PolyMat& m, PolyMat& l, int i, uint32_t s) {
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) * s;
    for (int j = 0; j < l.cols(); ++j) l.at(i, j) = l.at(i, j) * s;
}

}  // namespace

std::pair<PolyMat, PolyMat> row_triangularize(const PolyMat& m) {
    PolyMat t = m;
    PolyMat l = PolyMat::identity(m.field(), m.rows());
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        for (;;) {
            int piv = -1;
            for (int i = r; i < m.rows(); ++i) {
                if (t.at(i, c).is_zero()) continue;
                if (piv < 0 || t.at(i, c).degree() < t.at(piv, c).degree()) piv = i;
            }
            if (piv < 0) break;
            row_swap(t, l, r, piv);
            bool done = true;
            for (int i = r + 1; i < m.rows(); ++i) {
                if (t.at(i, c).is_zero()) continue;
                row_sub(t, l, i, r, t.at(i, c).divmod(t.at(r, c)).first);
                if (!t.at(i, c).is_zero()) done = false;
            }
            if (done) break;
        }
        if (t.at(r, c).is_zero()) continue;
        row_scale(t, l, r, m.field()->inv(t.at(r, c).leading()));
        for (int i = 0; i < r; ++i)
            if (t.at(i, c).degree() >= t.at(r, c).degree())
                row_sub(t, l, i, r, t.at(i, c).divmod(t.at(r, c)).first);
        ++r;
    }
    return {std::move(t), std::move(l)};
}

PolyMat exact_right_divide(const PolyMat& m, const PolyMat& r) {
    if (r.rows() != r.cols() || r.rows() != m.cols())
        throw std::invalid_argument("divisor shape mismatch");
    auto [t, l] = row_triangularize(r);
    int n = r.rows();
    for (int i = 0; i < n; ++i)
        if (t.at(i, i).is_zero()) throw std::domain_error("singular divisor");
    // Solve Y·T = M for upper-triangular T, then undo the row transform.
    PolyMat y(m.field(), m.rows(), n);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < n; ++j) {
            Poly rhs = m.at(i, j);
            for (int k = 0; k < j; ++k) rhs = rhs - y.at(i, k) * t.at(k, j);
            auto [quot, rem] = rhs.divmod(t.at(j, j));
            if (!rem.is_zero()) throw std::domain_error("division is not exact");
            y.at(i, j) = quot;
        }
    PolyMat x = y * l;
    if (!(x * r == m)) throw std::domain_error("division is not exact");
    return x;
}

GcrdResult gcrd(const PolyMat& a, const PolyMat& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("first gcrd argument must be square");
    if (b.cols() != a.cols()) throw std::invalid_argument("column-count mismatch");
    int m = a.cols(), p = b.rows();
    PolyMat stack(a.field(), m + p, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) stack.at(i, j) = a.at(i, j);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < m; ++j) stack.at(m + i, j) = b.at(i, j);
    auto [t, l] = row_triangularize(stack);
    GcrdResult out;
    out.r = PolyMat(a.field(), m, m);
    for (int i = 0; i < m; ++i) {
        if (t.at(i, i).is_zero()) throw std::domain_error("rank-deficient stack in gcrd");
        for (int j = 0; j < m; ++j) out.r.at(i, j) = t.at(i, j);
    }
    for (int i = m; i < m + p; ++i)
        for (int j = 0; j < m; ++j)
            if (!t.at(i, j).is_zero()) throw std::logic_error("row reduction left a nonzero tail");
    out.la = PolyMat(a.field(), m, m);
    out.lb = PolyMat(a.field(), m, p);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) out.la.at(i, j) = l.at(i, j);
        for (int j = 0; j < p; ++j) out.lb.at(i, j) = l.at(i, m + j);
    }
    exact_right_divide(a, out.r);
    exact_right_divide(b, out.r);
    return out;
}

bool left_prime_oracle(const PolyMat& m) {
    if (m.rows() > m.cols()) throw std::invalid_argument("left primeness needs rows <= cols");
    const FieldPtr& f = m.field();
    if (f->degree() != 1) throw std::invalid_argument("oracle needs a prime base field");
    Poly g = maximal_minor_gcd(m, m.rows());
    if (g.is_zero()) return false;
    for (int k = 1; k <= g.degree(); ++k) {
        FieldPtr ext = k == 1 ? f : Field::make(f->characteristic(), static_cast<unsigned>(k));
        for (uint32_t x : ext->elements())
            if (extension_eval(*f, g.coeffs(), *ext, x) == 0) return false;
    }
    return true;
}

}  // namespace polyprime
