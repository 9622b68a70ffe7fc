#include "polyprime/poly.hpp"

#include <numeric>

namespace polyprime {

Poly Poly::monomial(FieldPtr f, int k, uint32_t coeff) {
    std::vector<uint32_t> c(static_cast<size_t>(k) + 1, 0);
    c.back() = coeff;
    return Poly(std::move(f), std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = f_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(f_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<uint32_t> c(c_);
    for (auto& v : c) v = f_->neg(v);
    return Poly(f_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(f_);
    std::vector<uint32_t> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = f_->add(c[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Poly(f_, std::move(c));
}

Poly Poly::operator*(uint32_t scalar) const {
    std::vector<uint32_t> c(c_);
    for (auto& v : c) v = f_->mul(v, scalar);
    return Poly(f_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < divisor.degree()) return {Poly(f_), *this};
    std::vector<uint32_t> rem(c_);
    std::vector<uint32_t> quot(c_.size() - divisor.c_.size() + 1, 0);
    uint32_t lead_inv = f_->inv(divisor.leading());
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        uint32_t c = f_->mul(rem[k + divisor.degree()], lead_inv);
        if (c == 0) continue;
        quot[k] = c;
        for (size_t i = 0; i < divisor.c_.size(); ++i)
            rem[k + i] = f_->sub(rem[k + i], f_->mul(c, divisor.c_[i]));
    }
    return {Poly(f_, std::move(quot)), Poly(f_, std::move(rem))};
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    return *this * f_->inv(leading());
}

uint32_t Poly::eval(uint32_t point) const {
    uint32_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = f_->add(f_->mul(acc, point), *it);
    return acc;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw std::invalid_argument("negative shift");
    std::vector<uint32_t> c(static_cast<size_t>(k), 0);
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(f_, std::move(c));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        uint32_t c = c_[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || c != 1) out += std::to_string(c);
        if (i >= 1) {
            if (c != 1) out += "*";
            out += "z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Mat sylvester_matrix(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("sylvester matrix of zero polynomial");
    int m = p.degree(), n = q.degree();
    Mat s(p.field(), m + n, m + n);
    for (int col = 0; col < n; ++col)
        for (int i = 0; i <= m; ++i) s.at(col + i, col) = p.coeff(i);
    for (int col = 0; col < m; ++col)
        for (int i = 0; i <= n; ++i) s.at(col + i, n + col) = q.coeff(i);
    return s;
}

bool is_irreducible(const Poly& f) {
    int deg = f.degree();
    if (deg <= 0) return false;
    if (deg == 1) return true;
    const FieldPtr& fld = f.field();
    for (int d = 1; d <= deg / 2; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= fld->size();
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly g = monic_from_index(fld, d, idx);
            if (f.divmod(g).second.is_zero()) return false;
        }
    }
    return true;
}

int moebius(unsigned n) {
    int mu = 1;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        n /= d;
        if (n % d == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

uint64_t count_monic_irreducibles(const Field& f, unsigned j) {
    if (j == 0) return 0;
    int64_t total = 0;
    for (unsigned d = 1; d <= j; ++d) {
        if (j % d) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        uint64_t power = 1;
        for (unsigned i = 0; i < j / d; ++i) power *= f.size();
        total += mu * static_cast<int64_t>(power);
    }
    return static_cast<uint64_t>(total / static_cast<int64_t>(j));
}

std::vector<Poly> enumerate_monic_irreducibles(const FieldPtr& f, unsigned j) {
    std::vector<Poly> out;
    if (j == 0) return out;
    uint64_t count = 1;
    for (unsigned i = 0; i < j; ++i) count *= f->size();
    for (uint64_t idx = 0; idx < count; ++idx) {
        Poly g = monic_from_index(f, static_cast<int>(j), idx);
        if (is_irreducible(g)) out.push_back(std::move(g));
    }
    return out;
}

Poly random_monic(const FieldPtr& f, int degree, std::mt19937_64& rng) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::uniform_int_distribution<uint64_t> dist(0, f->size() - 1);
    std::vector<uint32_t> c(static_cast<size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) c[i] = static_cast<uint32_t>(dist(rng));
    c[degree] = 1;
    return Poly(f, std::move(c));
}

Poly monic_from_index(const FieldPtr& f, int degree, uint64_t idx) {
    std::vector<uint32_t> c(static_cast<size_t>(degree) + 1, 0);
    for (int i = 0; i < degree; ++i) {
        c[i] = static_cast<uint32_t>(idx % f->size());
        idx /= f->size();
    }
    c[degree] = 1;
    return Poly(f, std::move(c));
}

Poly poly_from_index(const FieldPtr& f, int len, uint64_t idx) {
    std::vector<uint32_t> c(static_cast<size_t>(len), 0);
    for (int i = 0; i < len; ++i) {
        c[i] = static_cast<uint32_t>(idx % f->size());
        idx /= f->size();
    }
    return Poly(f, std::move(c));
}

}  // namespace polyprime
