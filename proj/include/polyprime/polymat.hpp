#pragma once

#include "polyprime/poly.hpp"

namespace polyprime {

/// Dense matrix of polynomials over a shared Field, row-major.
class PolyMat {
public:
    PolyMat() : rows_(0), cols_(0) {}
    PolyMat(FieldPtr f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * cols, Poly(f_)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
    }

    static PolyMat identity(FieldPtr f, int n);
    /// Embeds a scalar matrix as constant polynomials.
    static PolyMat from_scalar(const Mat& m);
    /// d * I_n for a scalar polynomial d.
    static PolyMat scalar_diag(const Poly& d, int n);

    const FieldPtr& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Poly& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Poly& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    PolyMat operator*(const PolyMat& o) const;
    PolyMat operator+(const PolyMat& o) const;
    PolyMat operator-(const PolyMat& o) const;
    bool operator==(const PolyMat& o) const;

    /// Entrywise evaluation at a field element.
    Mat eval(uint32_t point) const;

    /// Cofactor expansion for size <= 4, fraction-free elimination above.
    Poly det() const;
    bool is_nonsingular() const { return !det().is_zero(); }
    bool is_unimodular() const;
    bool is_zero() const;
    int max_degree() const;

    std::string str() const;

private:
    FieldPtr f_;
    int rows_, cols_;
    std::vector<Poly> a_;
};

/// Column degrees: nu_j = max entry degree in column j (-1 for a zero column).
std::vector<int> column_degrees(const PolyMat& h);
/// Highest-column-degree coefficient matrix [H]_hc; zero column -> zero column.
Mat hc_matrix(const PolyMat& h);
bool is_column_proper(const PolyMat& h);

struct HermiteForm {
    PolyMat matrix;              // lower triangular, monic diagonal
    std::vector<int> row_degrees;  // diagonal degree per row
    bool is_simple() const {
        for (size_t i = 1; i < row_degrees.size(); ++i)
            if (row_degrees[i] != 0) return false;
        return true;
    }
};

struct KroneckerHermiteForm {
    PolyMat matrix;
    std::vector<int> column_degrees;
};

/// Column-operation Hermite reduction: Q·U = H with H lower triangular,
/// monic diagonal, and deg h_ij < deg h_ii for j < i.  U is unimodular.
std::pair<HermiteForm, PolyMat> hermite_form(const PolyMat& q);

/// Q·U = K with monic diagonal dominating its row (strictly) and its column
/// (strictly above the diagonal, weakly below); always column proper.
std::pair<KroneckerHermiteForm, PolyMat> kronecker_hermite_form(const PolyMat& q);

/// All k×k minors, lexicographic in (row subset, column subset).
std::vector<Poly> minors(const PolyMat& m, int k);

/// Full row rank at every point of the algebraic closure: the monic gcd of
/// the maximal minors is the constant 1.
bool is_left_prime(const PolyMat& m);
bool is_right_prime(const PolyMat& m);

bool are_left_coprime(const std::vector<PolyMat>& hs);
bool are_right_coprime(const std::vector<PolyMat>& hs);

/// Left primeness of the (N-1)m × Nm block matrix with D_i, D_{i+1} in block
/// row i.  For N = 2 this is are_left_coprime(D_1, D_2).
bool mutually_left_coprime(const std::vector<PolyMat>& ds);
/// The block matrix itself, for callers that inspect it.
PolyMat mutual_coprimeness_matrix(const std::vector<PolyMat>& ds);

struct GcrdResult {
    PolyMat r;   // m×m, upper triangular with monic diagonal
    PolyMat la;  // r = la·a + lb·b
    PolyMat lb;
};

/// Unimodular row reduction of [A; B] to [R; 0]; both inputs are exactly
/// right-divisible by R (verified).
GcrdResult gcrd(const PolyMat& a, const PolyMat& b);

/// X with X·R = M exactly; throws when the division is not exact.
PolyMat exact_right_divide(const PolyMat& m, const PolyMat& r);

/// Independent primeness check over a prime base field: searches for roots of
/// the maximal-minor gcd in GF(p^k) for k = 1..deg by exhaustive evaluation.
bool left_prime_oracle(const PolyMat& m);

/// Row reduction engine shared by gcrd and exact division: L·M = T with T in
/// upper-echelon shape (monic pivots, entries above a pivot reduced) and L
/// unimodular.  Returns (T, L).
std::pair<PolyMat, PolyMat> row_triangularize(const PolyMat& m);

}  // namespace polyprime
