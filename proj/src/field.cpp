#include "polyprime/field.hpp"

#include <algorithm>

namespace polyprime {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Polynomial helpers over GF(p) working on raw digit vectors, used only for
// modulus selection/validation before a Field exists.

void trim(std::vector<uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<uint32_t> mod_reduce(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint64_t p) {
    // a mod b, b monic-ish (leading coefficient invertible mod p)
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        uint64_t lead_b = b.back();
        // inverse of lead_b mod p by Fermat / scan (p small)
        uint64_t inv = 0;
        for (uint64_t x = 1; x < p; ++x)
            if (x * lead_b % p == 1) { inv = x; break; }
        uint64_t c = a.back() * inv % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = c * b[i] % p;
            a[i + shift] = static_cast<uint32_t>((a[i + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

bool irreducible_over_prime(const std::vector<uint32_t>& f, uint64_t p) {
    size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // trial division by all monic polynomials of degree 1..deg/2
    for (size_t d = 1; d <= deg / 2; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<uint32_t> g(d + 1, 0);
            uint64_t v = idx;
            for (size_t i = 0; i < d; ++i) { g[i] = static_cast<uint32_t>(v % p); v /= p; }
            g[d] = 1;
            if (mod_reduce(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<uint32_t> canonical_modulus(uint64_t p, unsigned e) {
    uint64_t count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
        std::vector<uint32_t> f(e + 1, 0);
        uint64_t v = idx;
        for (unsigned i = 0; i < e; ++i) { f[i] = static_cast<uint32_t>(v % p); v /= p; }
        f[e] = 1;
        if (irreducible_over_prime(f, p)) return f;
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

}  // namespace

Field::Field(uint64_t p, unsigned e, std::vector<uint32_t> mod)
    : p_(p), e_(e), mod_(std::move(mod)) {
    q_ = 1;
    for (unsigned i = 0; i < e_; ++i) {
        q_ *= p_;
        if (q_ > kMaxSize) throw std::invalid_argument("field size exceeds limit");
    }
    if (q_ <= 256) {
        tabulated_ = true;
        add_tab_.resize(q_ * q_);
        mul_tab_.resize(q_ * q_);
        inv_tab_.assign(q_, 0);
        for (uint64_t a = 0; a < q_; ++a)
            for (uint64_t b = 0; b < q_; ++b) {
                add_tab_[a * q_ + b] = add_slow(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
                mul_tab_[a * q_ + b] = mul_slow(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
            }
        for (uint64_t a = 1; a < q_; ++a)
            for (uint64_t b = 1; b < q_; ++b)
                if (mul_tab_[a * q_ + b] == 1) { inv_tab_[a] = static_cast<uint32_t>(b); break; }
    }
}

FieldPtr Field::make(uint64_t p, unsigned e, std::optional<std::vector<uint32_t>> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::vector<uint32_t> mod;
    if (e > 1) {
        if (modulus) {
            mod = *modulus;
            trim(mod);
            if (mod.size() != e + 1) throw std::invalid_argument("modulus degree mismatch");
            for (auto& c : mod) c = static_cast<uint32_t>(c % p);
            if (mod.back() != 1) throw std::invalid_argument("modulus must be monic");
            if (!irreducible_over_prime(mod, p)) throw std::invalid_argument("modulus is reducible");
        } else {
            mod = canonical_modulus(p, e);
        }
    } else if (modulus) {
        throw std::invalid_argument("modulus given for prime field");
    }
    return std::shared_ptr<const Field>(new Field(p, e, std::move(mod)));
}

FieldPtr Field::parse(const std::string& spec) {
    auto caret = spec.find('^');
    uint64_t p;
    unsigned e = 1;
    try {
        if (caret == std::string::npos) {
            p = std::stoull(spec);
        } else {
            p = std::stoull(spec.substr(0, caret));
            e = static_cast<unsigned>(std::stoul(spec.substr(caret + 1)));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad field spec: " + spec);
    }
    return make(p, e);
}

std::string Field::name() const {
    if (e_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(e_);
}

uint32_t Field::add_slow(uint32_t a, uint32_t b) const {
    if (e_ == 1) return static_cast<uint32_t>((static_cast<uint64_t>(a) + b) % p_);
    uint32_t out = 0, mult = 1;
    uint64_t x = a, y = b;
    for (unsigned i = 0; i < e_; ++i) {
        out += static_cast<uint32_t>((x % p_ + y % p_) % p_) * mult;
        mult *= static_cast<uint32_t>(p_);
        x /= p_;
        y /= p_;
    }
    return out;
}

uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
    if (e_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    std::vector<uint32_t> da(e_), db(e_);
    uint64_t x = a, y = b;
    for (unsigned i = 0; i < e_; ++i) { da[i] = static_cast<uint32_t>(x % p_); x /= p_; }
    for (unsigned i = 0; i < e_; ++i) { db[i] = static_cast<uint32_t>(y % p_); y /= p_; }
    std::vector<uint64_t> prod(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j)
            prod[i + j] += static_cast<uint64_t>(da[i]) * db[j];
    // reduce modulo the monic modulus
    for (int k = static_cast<int>(prod.size()) - 1; k >= static_cast<int>(e_); --k) {
        uint64_t c = prod[k] % p_;
        if (c == 0) continue;
        for (unsigned i = 0; i < e_; ++i) {
            uint64_t sub = c * mod_[i] % p_;
            prod[k - e_ + i] = (prod[k - e_ + i] % p_ + p_ - sub) % p_;
        }
        prod[k] = 0;
    }
    uint32_t out = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        out += static_cast<uint32_t>(prod[i] % p_) * mult;
        mult *= static_cast<uint32_t>(p_);
    }
    return out;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (tabulated_) return add_tab_[static_cast<uint64_t>(a) * q_ + b];
    return add_slow(a, b);
}

uint32_t Field::neg(uint32_t a) const {
    if (e_ == 1) return a == 0 ? 0 : static_cast<uint32_t>(p_ - a);
    uint32_t out = 0, mult = 1;
    uint64_t x = a;
    for (unsigned i = 0; i < e_; ++i) {
        uint64_t d = x % p_;
        out += static_cast<uint32_t>(d == 0 ? 0 : p_ - d) * mult;
        mult *= static_cast<uint32_t>(p_);
        x /= p_;
    }
    return out;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (tabulated_) return mul_tab_[static_cast<uint64_t>(a) * q_ + b];
    return mul_slow(a, b);
}

uint32_t Field::pow(uint32_t a, uint64_t k) const {
    uint32_t out = 1, base = a;
    while (k) {
        if (k & 1) out = mul(out, base);
        base = mul(base, base);
        k >>= 1;
    }
    return out;
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    if (tabulated_) return inv_tab_[a];
    return pow(a, q_ - 2);
}

std::vector<uint32_t> Field::elements() const {
    std::vector<uint32_t> out(q_);
    for (uint64_t i = 0; i < q_; ++i) out[i] = static_cast<uint32_t>(i);
    return out;
}

uint32_t extension_eval(const Field& base, const std::vector<uint32_t>& coeffs,
                        const Field& ext, uint32_t point) {
    if (base.degree() != 1) throw std::invalid_argument("coefficients must lie in a prime field");
    if (base.characteristic() != ext.characteristic())
        throw std::invalid_argument("characteristic mismatch");
    uint32_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = ext.add(ext.mul(acc, point), ext.from_prime(*it));
    return acc;
}

}  // namespace polyprime
