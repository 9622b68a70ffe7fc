#pragma once

#include <random>
#include <utility>

#include "polyprime/mat.hpp"

namespace polyprime {

/// Univariate polynomial over a Field.  Coefficients low-to-high, the leading
/// coefficient is nonzero; the zero polynomial has an empty coefficient
/// vector and degree() == -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<uint32_t> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
    static Poly constant(FieldPtr f, uint32_t v) { return Poly(std::move(f), {v}); }
    static Poly one(FieldPtr f) { return constant(std::move(f), 1); }
    /// z^k
    static Poly monomial(FieldPtr f, int k, uint32_t coeff = 1);

    const FieldPtr& field() const { return f_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    uint32_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }
    uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return leading() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(uint32_t scalar) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// Quotient and remainder; deg(remainder) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly monic() const;
    uint32_t eval(uint32_t point) const;
    /// Shift by z^k (multiply by the monomial).
    Poly shifted(int k) const;

    std::string str() const;  // human-readable, e.g. "z^2+z+1"

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldPtr f_;
    std::vector<uint32_t> c_;
};

/// Monic gcd via Euclid; gcd(a, 0) = monic(a).  Throws when both are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Sylvester resultant matrix of size deg p + deg q, with the p-coefficient
/// block (deg q columns) first and the q-coefficient block (deg p columns)
/// after it, each column carrying the coefficients low-to-high shifted down
/// by the column position.
Mat sylvester_matrix(const Poly& p, const Poly& q);

/// Trial division against every monic polynomial of degree <= deg/2.
bool is_irreducible(const Poly& f);

/// Number of monic irreducibles of degree j: (1/j) sum_{d|j} mu(d) q^{j/d}.
uint64_t count_monic_irreducibles(const Field& f, unsigned j);
std::vector<Poly> enumerate_monic_irreducibles(const FieldPtr& f, unsigned j);

/// Uniform over the q^degree monic polynomials of the given degree.
Poly random_monic(const FieldPtr& f, int degree, std::mt19937_64& rng);

/// idx in [0, q^degree) -> the idx-th monic polynomial of that degree
/// (coefficients are the base-q digits of idx).
Poly monic_from_index(const FieldPtr& f, int degree, uint64_t idx);
/// idx in [0, q^len) -> polynomial of degree < len.
Poly poly_from_index(const FieldPtr& f, int len, uint64_t idx);

int moebius(unsigned n);

}  // namespace polyprime
