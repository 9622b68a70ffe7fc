#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyprime {

/// Exact arithmetic in a finite field GF(p^e).
///
/// Elements are identified by an index in [0, q) whose base-p digits are the
/// coefficients of the canonical residue (digit i = coefficient of z^i for
/// e > 1).  All arithmetic goes through the owning Field, which keeps
/// add/mul/inv tables for small q.
class Field {
public:
    // Enumeration-based censuses become useless far before this anyway.
    static constexpr uint64_t kMaxSize = 1u << 20;

    /// GF(p) for prime p, or GF(p^e) with the given monic irreducible
    /// modulus (coefficients low-to-high, length e+1).  When e > 1 and no
    /// modulus is given, the lexicographically least monic irreducible of
    /// degree e is selected, so the field is reproducible across runs.
    static std::shared_ptr<const Field> make(uint64_t p, unsigned e = 1,
                                             std::optional<std::vector<uint32_t>> modulus = std::nullopt);

    /// Parses "p" or "p^e", e.g. "2", "3", "2^2".
    static std::shared_ptr<const Field> parse(const std::string& spec);

    uint64_t characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    uint64_t size() const { return q_; }
    double t() const { return 1.0 / static_cast<double>(q_); }
    const std::vector<uint32_t>& modulus() const { return mod_; }
    std::string name() const;

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, uint64_t k) const;

    /// Embeds an element of the prime field GF(p) as a constant.
    uint32_t from_prime(uint64_t c) const { return static_cast<uint32_t>(c % p_); }

    /// All q elements in index order; zero comes first.
    std::vector<uint32_t> elements() const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && mod_ == o.mod_;
    }

private:
    Field(uint64_t p, unsigned e, std::vector<uint32_t> mod);

    uint32_t add_slow(uint32_t a, uint32_t b) const;
    uint32_t mul_slow(uint32_t a, uint32_t b) const;

    uint64_t p_;
    unsigned e_;
    uint64_t q_;
    std::vector<uint32_t> mod_;  // monic, length e+1; empty for e == 1

    // dense tables for small fields
    std::vector<uint32_t> add_tab_, mul_tab_, inv_tab_;
    bool tabulated_ = false;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(uint64_t n);

/// Value of a dense polynomial over GF(p) (coefficients low-to-high, indices
/// into GF(p)) at a point of an extension GF(p^k) over the same p.
uint32_t extension_eval(const Field& base, const std::vector<uint32_t>& coeffs,
                        const Field& ext, uint32_t point);

}  // namespace polyprime
