#pragma once

#include <cmath>
#include <functional>

#include "polyprime/convcode.hpp"
#include "polyprime/rational.hpp"

namespace polyprime {

/// Raised when an exhaustive run would exceed the configured budget; the
/// caller should fall back to Monte Carlo.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr uint64_t kDefaultBudget = 1'000'000'000;

/// The enumerable/sampleable events.  Each property fixes its own sample
/// space; dimensions come from CensusParams.
enum class Property {
    kScalarCoprime,     // N monic polynomials of degrees deg share no factor
    kLeftCoprime,       // N Hermite forms, deg det = deg_i, concatenation left prime
    kPairwiseCoprime,   // every pair of the N Hermite forms left coprime
    kMutualCoprime,     // block-bidiagonal criterion over the N Hermite forms
    kReachable,         // (A,B) pairs, n states, m inputs
    kObservable,        // (A,C) pairs, n states, p outputs
    kMinimal,           // (A,B,C,D), reachable and observable
    kParallelReachable, // N nodes (A_i,B_i) of state dims deg, shared m inputs
    kNoncatastrophic,   // (A,B,C,D), s states, k inputs, n-k outputs, given (A,B) reachable
};

Property property_from_name(const std::string& name);
std::string property_name(Property p);
std::vector<std::string> property_names();

struct CensusParams {
    FieldPtr field;
    int m = 1;             // matrix size / shared input count
    int n = 1;             // state dim, det degree, or code length by property
    int p = 1;             // output count
    int N = 2;             // tuple length
    int k = 1;             // code dimension (input count) for noncatastrophic
    int s = 2;             // state dim for noncatastrophic
    std::vector<int> deg;  // per-matrix degrees / per-node state dims; empty = n repeated N times

    std::vector<int> degrees() const {
        if (!deg.empty()) return deg;
        return std::vector<int>(static_cast<size_t>(N), n);
    }
};

struct CensusResult {
    Property property;
    CensusParams params;
    uint64_t total = 0;
    uint64_t hits = 0;
    Rat probability;  // exactly hits/total
};

struct McEstimate {
    Property property;
    CensusParams params;
    uint64_t trials = 0;
    uint64_t hits = 0;
    uint64_t seed = 0;
    double point = 0, ci_low = 0, ci_high = 0;  // 95% Wilson interval
    double stderr_est = 0;
};

/// Exhaustive census over the property's full sample space; deterministic
/// and worker-count independent.  Throws BudgetExceeded when the space (or,
/// for conditional properties, its superset) is larger than the budget.
CensusResult exact_probability(Property prop, const CensusParams& par,
                               uint64_t budget = kDefaultBudget, int workers = 1);

/// Uniform iid sampling; reproducible from (seed, params) alone — trials are
/// processed in fixed-size blocks whose RNG streams derive from (seed,
/// block), so the result does not depend on the worker count.
McEstimate mc_estimate(Property prop, const CensusParams& par, uint64_t trials,
                       uint64_t seed, int workers = 1);

/// Uniform-over-X(n) Hermite-form sample space: every m×m Hermite form with
/// deg det = n, indexed by composition blocks.
struct HermiteSpace {
    HermiteSpace(FieldPtr f, int m, int n);

    uint64_t total() const { return total_; }
    /// idx in [0, total): the idx-th form; each form appears exactly once.
    PolyMat decode(uint64_t idx) const;
    std::vector<int> kappa_of(uint64_t idx) const;

private:
    struct Block {
        std::vector<int> row_deg;  // diagonal degree per row, top to bottom
        uint64_t size = 1;
        uint64_t offset = 0;
    };
    FieldPtr f_;
    int m_;
    std::vector<Block> blocks_;
    uint64_t total_ = 0;
};

void enumerate_hermite_forms(const FieldPtr& f, int m, int n,
                             const std::function<void(const PolyMat&)>& emit,
                             uint64_t budget = kDefaultBudget);
uint64_t count_hermite_forms(const FieldPtr& f, int m, int n, uint64_t budget = kDefaultBudget);

/// Direct enumeration count of Hermite-form tuples with the given row-degree
/// vectors (one vector of m entries per matrix, kappa_1..kappa_m bottom-up).
uint64_t enumerate_X_kappa_count(const FieldPtr& f, int m,
                                 const std::vector<std::vector<int>>& kappas);

// --- formula catalog ---------------------------------------------------

/// P_{n,m}(t) = prod_{j=m}^{n+m-1} (1 - t^j): reachability probability.
Rat formula_reachable(const Field& f, int n, int m);
/// Number of m×m Hermite forms with det degree n.
Rat formula_hermite_count(const Field& f, int m, int n);
/// |GL_n| over the field.
Rat formula_gl_order(const Field& f, int n);
/// Number of monic irreducibles of degree j.
Rat formula_irreducible_count(const Field& f, unsigned j);
/// |X_kappa| for one degree tuple per matrix.
Rat formula_x_kappa(const Field& f, int m, const std::vector<std::vector<int>>& kappas);
/// 1 - t^{N-1}: N scalar monic polynomials coprime (exact).
Rat formula_scalar_coprime(const Field& f, int N);
/// Closed-form leading coefficient C(N) = -sum_{y=2}^{m+1} binom(N,y).
long long coefficient_C(int m, int N);
/// C(N) computed through the recursion instead of the closed form.
long long coefficient_C_recursive(int m, int N);
/// Closed form satisfies the recursion (single point / full grid).
bool recursion_check(int m, int N);
bool recursion_check_grid(int max_m = 8, int max_n = 12);

/// Leading-order descriptor 1 - coeff·t^order + O(t^{order+1}).
struct AsymptoticFormula {
    long long coeff = 0;
    int order = 0;
    double eval(double t) const { return 1.0 - static_cast<double>(coeff) * std::pow(t, order); }
};
AsymptoticFormula asymptotic_formula(Property prop, const CensusParams& par);

/// Named dispatch for the CLI: exact formulas return a rational, asymptotic
/// ones a descriptor.
struct FormulaValue {
    bool exact = false;
    Rat value;
    AsymptoticFormula asym;
};
FormulaValue eval_formula(const std::string& name, const CensusParams& par);
std::vector<std::string> formula_names();

// --- asymptotic fit ----------------------------------------------------

struct AsymptoticFit {
    std::vector<uint64_t> qs;
    std::vector<double> coeffs;       // c(q) = (1 - P(q))·q^order
    std::vector<double> tolerances;   // CI-derived slack per point (0 for exact)
    double predicted = 0;
    int order = 0;
    double final_deviation = 0;       // |c(q_max) - predicted|
    bool improved = false;            // deviation shrank from first to last q
    bool converged = false;
};

/// Trend test of the scaled defect c(q) = (1-P)·q^order against the
/// predicted constant: require |c(q_max) - pred| <= max(tol_abs,
/// 5·pred/q_max) + 3·stderr·q^order and improvement across the q range.
AsymptoticFit asymptotic_fit(const std::vector<uint64_t>& qs,
                             const std::vector<double>& probs,
                             const std::vector<double>& stderrs,
                             double predicted, int order, double tol_abs = 0.5);

// --- misc helpers -------------------------------------------------------

/// Brute-force |GL_n| by rank test over all q^{n^2} matrices.
uint64_t count_invertible(const FieldPtr& f, int n, uint64_t budget = kDefaultBudget);

/// 95% Wilson score interval.
void wilson_interval(uint64_t hits, uint64_t trials, double& low, double& high);

/// Counter-mode stream splitting: independent 64-bit seed per shard.
uint64_t split_seed(uint64_t seed, uint64_t shard);

}  // namespace polyprime
