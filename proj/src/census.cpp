#include "polyprime/census.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <random>
#include <thread>

namespace polyprime {

namespace {

uint64_t pow_checked(uint64_t base, uint64_t exp) {
    __int128 out = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        out *= base;
        if (out > static_cast<__int128>(UINT64_MAX))
            throw BudgetExceeded("sample space does not fit in 64 bits");
    }
    return static_cast<uint64_t>(out);
}

uint64_t mul_checked(uint64_t a, uint64_t b) {
    __int128 out = static_cast<__int128>(a) * b;
    if (out > static_cast<__int128>(UINT64_MAX))
        throw BudgetExceeded("sample space does not fit in 64 bits");
    return static_cast<uint64_t>(out);
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform draw in [0, n) by masked rejection; deterministic across
/// platforms for a given mt19937_64 state.
uint64_t bounded(std::mt19937_64& g, uint64_t n) {
    if (n <= 1) return 0;
    uint64_t mask = UINT64_MAX >> std::countl_zero(n - 1);
    for (;;) {
        uint64_t v = g() & mask;
        if (v < n) return v;
    }
}

}  // namespace

uint64_t split_seed(uint64_t seed, uint64_t shard) {
    return splitmix64(seed ^ splitmix64(shard));
}

void wilson_interval(uint64_t hits, uint64_t trials, double& low, double& high) {
    const double z = 1.959963984540054;
    double n = static_cast<double>(trials);
    double p = static_cast<double>(hits) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = p + z2 / (2 * n);
    double spread = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
    low = (center - spread) / denom;
    high = (center + spread) / denom;
    low = std::max(0.0, low);
    high = std::min(1.0, high);
}

// --- Hermite-form sample space ------------------------------------------

HermiteSpace::HermiteSpace(FieldPtr f, int m, int n) : f_(std::move(f)), m_(m) {
    if (m < 1 || n < 0) throw std::invalid_argument("bad hermite space dimensions");
    // All compositions of n into m nonnegative parts (diagonal degree per row).
    std::vector<int> row_deg(static_cast<size_t>(m), 0);
    uint64_t q = f_->size();
    std::function<void(int, int)> rec = [&](int row, int left) {
        if (row == m - 1) {
            row_deg[static_cast<size_t>(row)] = left;
            Block b;
            b.row_deg = row_deg;
            for (int i = 0; i < m; ++i)
                b.size = mul_checked(b.size, pow_checked(q, static_cast<uint64_t>(row_deg[static_cast<size_t>(i)]) * (static_cast<uint64_t>(i) + 1)));
            b.offset = total_;
            total_ += b.size;
            blocks_.push_back(std::move(b));
            return;
        }
        for (int d = 0; d <= left; ++d) {
            row_deg[static_cast<size_t>(row)] = d;
            rec(row + 1, left - d);
        }
    };
    rec(0, n);
}

PolyMat HermiteSpace::decode(uint64_t idx) const {
    if (idx >= total_) throw std::out_of_range("hermite index out of range");
    size_t b = 0;
    while (b + 1 < blocks_.size() && blocks_[b + 1].offset <= idx) ++b;
    uint64_t local = idx - blocks_[b].offset;
    const auto& rd = blocks_[b].row_deg;
    uint64_t q = f_->size();
    PolyMat h(f_, m_, m_);
    for (int i = 0; i < m_; ++i) {
        int d = rd[static_cast<size_t>(i)];
        uint64_t span = pow_checked(q, static_cast<uint64_t>(d));
        h.at(i, i) = monic_from_index(f_, d, local % span);
        local /= span;
        for (int j = 0; j < i; ++j) {
            h.at(i, j) = poly_from_index(f_, d, local % span);
            local /= span;
        }
    }
    return h;
}

std::vector<int> HermiteSpace::kappa_of(uint64_t idx) const {
    if (idx >= total_) throw std::out_of_range("hermite index out of range");
    size_t b = 0;
    while (b + 1 < blocks_.size() && blocks_[b + 1].offset <= idx) ++b;
    // Row i (top) carries kappa_{m-i}: kappa indexes degrees bottom-up.
    std::vector<int> kappa(static_cast<size_t>(m_));
    for (int i = 0; i < m_; ++i)
        kappa[static_cast<size_t>(m_ - 1 - i)] = blocks_[b].row_deg[static_cast<size_t>(i)];
    return kappa;
}

void enumerate_hermite_forms(const FieldPtr& f, int m, int n,
                             const std::function<void(const PolyMat&)>& emit, uint64_t budget) {
    HermiteSpace space(f, m, n);
    if (space.total() > budget) throw BudgetExceeded("hermite enumeration over budget");
    for (uint64_t i = 0; i < space.total(); ++i) emit(space.decode(i));
}

uint64_t count_hermite_forms(const FieldPtr& f, int m, int n, uint64_t budget) {
    uint64_t count = 0;
    enumerate_hermite_forms(f, m, n, [&](const PolyMat&) { ++count; }, budget);
    return count;
}

namespace {

// Hermite-form invariants, used to validate decoded matrices during the
// X_kappa cross-check.
bool hermite_invariants_hold(const PolyMat& h, const std::vector<int>& row_deg) {
    for (int i = 0; i < h.rows(); ++i) {
        if (!h.at(i, i).is_monic()) return false;
        if (h.at(i, i).degree() != row_deg[static_cast<size_t>(i)]) return false;
        for (int j = 0; j < h.cols(); ++j) {
            if (j > i && !h.at(i, j).is_zero()) return false;
            if (j < i && h.at(i, j).degree() >= h.at(i, i).degree()) return false;
        }
    }
    return true;
}

}  // namespace

uint64_t enumerate_X_kappa_count(const FieldPtr& f, int m,
                                 const std::vector<std::vector<int>>& kappas) {
    uint64_t product = 1;
    for (const auto& kappa : kappas) {
        if (static_cast<int>(kappa.size()) != m) throw std::invalid_argument("kappa length mismatch");
        int n = 0;
        for (int d : kappa) {
            if (d < 0) throw std::invalid_argument("negative kappa entry");
            n += d;
        }
        // Walk the full det-degree-n space and count the matching block.
        HermiteSpace space(f, m, n);
        std::vector<int> row_deg(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) row_deg[static_cast<size_t>(j)] = kappa[static_cast<size_t>(m - 1 - j)];
        uint64_t count = 0;
        for (uint64_t i = 0; i < space.total(); ++i) {
            if (space.kappa_of(i) != kappa) continue;
            if (!hermite_invariants_hold(space.decode(i), row_deg))
                throw std::logic_error("hermite space produced an invalid form");
            ++count;
        }
        product = mul_checked(product, count);
    }
    return product;
}

// --- sample spaces per property -----------------------------------------

namespace {

// eval(idx): 1 = hit, 0 = miss, -1 = excluded from the conditional space.
struct SampleSpace {
    uint64_t size = 0;
    std::function<int(uint64_t)> eval;
};

SampleSpace scalar_coprime_space(const CensusParams& par) {
    const FieldPtr f = par.field;
    auto degs = par.degrees();
    if (degs.size() < 2) throw std::invalid_argument("need at least two polynomials");
    SampleSpace s;
    s.size = 1;
    for (int d : degs) s.size = mul_checked(s.size, pow_checked(f->size(), static_cast<uint64_t>(d)));
    s.eval = [f, degs](uint64_t idx) {
        Poly g(f);
        for (int d : degs) {
            uint64_t span = pow_checked(f->size(), static_cast<uint64_t>(d));
            Poly p = monic_from_index(f, d, idx % span);
            idx /= span;
            g = g.is_zero() ? p : poly_gcd(g, p);
        }
        return g.is_one() ? 1 : 0;
    };
    return s;
}

SampleSpace hermite_tuple_space(const CensusParams& par,
                                std::function<bool(const std::vector<PolyMat>&)> pred) {
    const FieldPtr f = par.field;
    auto degs = par.degrees();
    if (degs.size() < 2) throw std::invalid_argument("need at least two matrices");
    auto spaces = std::make_shared<std::vector<HermiteSpace>>();
    SampleSpace s;
    s.size = 1;
    for (int d : degs) {
        spaces->emplace_back(f, par.m, d);
        s.size = mul_checked(s.size, spaces->back().total());
    }
    s.eval = [spaces, pred = std::move(pred)](uint64_t idx) {
        std::vector<PolyMat> tuple;
        tuple.reserve(spaces->size());
        for (const auto& sp : *spaces) {
            tuple.push_back(sp.decode(idx % sp.total()));
            idx /= sp.total();
        }
        return pred(tuple) ? 1 : 0;
    };
    return s;
}

bool pairwise_left_coprime(const std::vector<PolyMat>& ds) {
    for (size_t i = 0; i < ds.size(); ++i)
        for (size_t j = i + 1; j < ds.size(); ++j)
            if (!are_left_coprime({ds[i], ds[j]})) return false;
    return true;
}

SampleSpace pair_space(const CensusParams& par, int rows_a, int cols_a, int rows_b, int cols_b,
                       std::function<bool(const Mat&, const Mat&)> pred) {
    const FieldPtr f = par.field;
    uint64_t sa = pow_checked(f->size(), static_cast<uint64_t>(rows_a) * cols_a);
    uint64_t sb = pow_checked(f->size(), static_cast<uint64_t>(rows_b) * cols_b);
    SampleSpace s;
    s.size = mul_checked(sa, sb);
    s.eval = [f, rows_a, cols_a, rows_b, cols_b, sa, pred = std::move(pred)](uint64_t idx) {
        Mat a(f, rows_a, cols_a), b(f, rows_b, cols_b);
        a.assign_from_index(idx % sa);
        b.assign_from_index(idx / sa);
        return pred(a, b) ? 1 : 0;
    };
    return s;
}

SampleSpace minimal_space(const CensusParams& par) {
    const FieldPtr f = par.field;
    int n = par.n, m = par.m, p = par.p;
    uint64_t sa = pow_checked(f->size(), static_cast<uint64_t>(n) * n);
    uint64_t sb = pow_checked(f->size(), static_cast<uint64_t>(n) * m);
    uint64_t sc = pow_checked(f->size(), static_cast<uint64_t>(p) * n);
    uint64_t sd = pow_checked(f->size(), static_cast<uint64_t>(p) * m);
    SampleSpace s;
    s.size = mul_checked(mul_checked(sa, sb), mul_checked(sc, sd));
    s.eval = [f, n, m, p, sa, sb, sc](uint64_t idx) {
        Mat a(f, n, n), b(f, n, m), c(f, p, n);
        a.assign_from_index(idx % sa);
        idx /= sa;
        b.assign_from_index(idx % sb);
        idx /= sb;
        c.assign_from_index(idx % sc);
        return (is_reachable(a, b) && is_observable(a, c)) ? 1 : 0;
    };
    return s;
}

SampleSpace parallel_space(const CensusParams& par) {
    const FieldPtr f = par.field;
    auto dims = par.degrees();
    int m = par.m;
    auto sizes = std::make_shared<std::vector<uint64_t>>();
    SampleSpace s;
    s.size = 1;
    for (int ni : dims) {
        sizes->push_back(pow_checked(f->size(), static_cast<uint64_t>(ni) * ni + static_cast<uint64_t>(ni) * m));
        s.size = mul_checked(s.size, sizes->back());
    }
    s.eval = [f, dims, m, sizes](uint64_t idx) {
        std::vector<std::pair<Mat, Mat>> nodes;
        for (size_t i = 0; i < dims.size(); ++i) {
            int ni = dims[i];
            uint64_t sa = pow_checked(f->size(), static_cast<uint64_t>(ni) * ni);
            uint64_t local = idx % (*sizes)[i];
            idx /= (*sizes)[i];
            Mat a(f, ni, ni), b(f, ni, m);
            a.assign_from_index(local % sa);
            b.assign_from_index(local / sa);
            nodes.emplace_back(std::move(a), std::move(b));
        }
        StateSpace sys = parallel_connect(nodes);
        return is_reachable(sys.a, sys.b) ? 1 : 0;
    };
    return s;
}

SampleSpace noncatastrophic_space(const CensusParams& par) {
    const FieldPtr f = par.field;
    int s_dim = par.s, k = par.k, p = par.n - par.k;
    if (p < 1) throw std::invalid_argument("code length must exceed code dimension");
    uint64_t sa = pow_checked(f->size(), static_cast<uint64_t>(s_dim) * s_dim);
    uint64_t sb = pow_checked(f->size(), static_cast<uint64_t>(s_dim) * k);
    uint64_t sc = pow_checked(f->size(), static_cast<uint64_t>(p) * s_dim);
    uint64_t sd = pow_checked(f->size(), static_cast<uint64_t>(p) * k);
    SampleSpace sp;
    sp.size = mul_checked(mul_checked(sa, sb), mul_checked(sc, sd));
    sp.eval = [f, s_dim, k, p, sa, sb, sc](uint64_t idx) {
        Mat a(f, s_dim, s_dim), b(f, s_dim, k), c(f, p, s_dim), d(f, p, k);
        a.assign_from_index(idx % sa);
        idx /= sa;
        b.assign_from_index(idx % sb);
        idx /= sb;
        if (!is_reachable(a, b)) return -1;
        c.assign_from_index(idx % sc);
        idx /= sc;
        d.assign_from_index(idx);
        StateSpace sys(a, b, c, d);
        return is_noncatastrophic(code_from_system(sys).generator) ? 1 : 0;
    };
    return sp;
}

SampleSpace build_space(Property prop, const CensusParams& par) {
    if (!par.field) throw std::invalid_argument("missing field");
    switch (prop) {
        case Property::kScalarCoprime:
            return scalar_coprime_space(par);
        case Property::kLeftCoprime:
            return hermite_tuple_space(par, [](const std::vector<PolyMat>& t) { return are_left_coprime(t); });
        case Property::kPairwiseCoprime:
            return hermite_tuple_space(par, pairwise_left_coprime);
        case Property::kMutualCoprime:
            return hermite_tuple_space(par, [](const std::vector<PolyMat>& t) { return mutually_left_coprime(t); });
        case Property::kReachable:
            return pair_space(par, par.n, par.n, par.n, par.m,
                              [](const Mat& a, const Mat& b) { return is_reachable(a, b); });
        case Property::kObservable:
            return pair_space(par, par.n, par.n, par.p, par.n,
                              [](const Mat& a, const Mat& c) { return is_observable(a, c); });
        case Property::kMinimal:
            return minimal_space(par);
        case Property::kParallelReachable:
            return parallel_space(par);
        case Property::kNoncatastrophic:
            return noncatastrophic_space(par);
    }
    throw std::invalid_argument("unknown property");
}

}  // namespace

Property property_from_name(const std::string& name) {
    if (name == "scalar-coprime") return Property::kScalarCoprime;
    if (name == "left-coprime") return Property::kLeftCoprime;
    if (name == "pairwise-coprime") return Property::kPairwiseCoprime;
    if (name == "mutual-coprime") return Property::kMutualCoprime;
    if (name == "reachable") return Property::kReachable;
    if (name == "observable") return Property::kObservable;
    if (name == "minimal") return Property::kMinimal;
    if (name == "parallel-reachable") return Property::kParallelReachable;
    if (name == "noncatastrophic") return Property::kNoncatastrophic;
    throw std::invalid_argument("unknown property: " + name);
}

std::string property_name(Property p) {
    switch (p) {
        case Property::kScalarCoprime: return "scalar-coprime";
        case Property::kLeftCoprime: return "left-coprime";
        case Property::kPairwiseCoprime: return "pairwise-coprime";
        case Property::kMutualCoprime: return "mutual-coprime";
        case Property::kReachable: return "reachable";
        case Property::kObservable: return "observable";
        case Property::kMinimal: return "minimal";
        case Property::kParallelReachable: return "parallel-reachable";
        case Property::kNoncatastrophic: return "noncatastrophic";
    }
    return "?";
}

std::vector<std::string> property_names() {
    return {"scalar-coprime", "left-coprime",  "pairwise-coprime",   "mutual-coprime",  "reachable",
            "observable",     "minimal",       "parallel-reachable", "noncatastrophic"};
}

CensusResult exact_probability(Property prop, const CensusParams& par, uint64_t budget, int workers) {
    SampleSpace space = build_space(prop, par);
    if (space.size > budget)
        throw BudgetExceeded("census needs " + std::to_string(space.size) +
                             " checks, budget is " + std::to_string(budget) +
                             "; use the Monte Carlo estimator");
    if (workers < 1) workers = 1;
    workers = static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(workers), std::max<uint64_t>(space.size, 1)));
    std::vector<uint64_t> hits(static_cast<size_t>(workers), 0), excluded(static_cast<size_t>(workers), 0);
    auto run = [&](int w) {
        uint64_t lo = space.size * static_cast<uint64_t>(w) / static_cast<uint64_t>(workers);
        uint64_t hi = space.size * (static_cast<uint64_t>(w) + 1) / static_cast<uint64_t>(workers);
        for (uint64_t i = lo; i < hi; ++i) {
            int r = space.eval(i);
            if (r < 0)
                ++excluded[static_cast<size_t>(w)];
            else
                hits[static_cast<size_t>(w)] += static_cast<uint64_t>(r);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    CensusResult out;
    out.property = prop;
    out.params = par;
    uint64_t excl = 0;
    for (int w = 0; w < workers; ++w) {
        out.hits += hits[static_cast<size_t>(w)];
        excl += excluded[static_cast<size_t>(w)];
    }
    out.total = space.size - excl;
    if (out.total == 0) throw std::domain_error("empty conditional sample space");
    out.probability = Rat(static_cast<long long>(out.hits), static_cast<long long>(out.total));
    return out;
}

McEstimate mc_estimate(Property prop, const CensusParams& par, uint64_t trials, uint64_t seed,
                       int workers) {
    if (trials < 100) throw std::invalid_argument("need at least 100 trials");
    SampleSpace space = build_space(prop, par);
    constexpr uint64_t kBlock = 4096;
    uint64_t nblocks = (trials + kBlock - 1) / kBlock;
    if (workers < 1) workers = 1;
    std::vector<uint64_t> hits(static_cast<size_t>(workers), 0);
    auto run = [&](int w) {
        for (uint64_t b = static_cast<uint64_t>(w); b < nblocks; b += static_cast<uint64_t>(workers)) {
            std::mt19937_64 rng(split_seed(seed, b));
            uint64_t count = std::min(kBlock, trials - b * kBlock);
            for (uint64_t i = 0; i < count; ++i) {
                int r;
                do {
                    r = space.eval(bounded(rng, space.size));
                } while (r < 0);
                hits[static_cast<size_t>(w)] += static_cast<uint64_t>(r);
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    McEstimate out;
    out.property = prop;
    out.params = par;
    out.trials = trials;
    out.seed = seed;
    for (uint64_t h : hits) out.hits += h;
    out.point = static_cast<double>(out.hits) / static_cast<double>(trials);
    wilson_interval(out.hits, out.trials, out.ci_low, out.ci_high);
    out.stderr_est = std::sqrt(out.point * (1 - out.point) / static_cast<double>(trials));
    return out;
}

// --- formula catalog -----------------------------------------------------

Rat formula_reachable(const Field& f, int n, int m) {
    Rat t(1, static_cast<long long>(f.size()));
    Rat out(1);
    for (int j = m; j <= n + m - 1; ++j) out = out * (Rat(1) - Rat::pow(t, j));
    return out;
}

Rat formula_hermite_count(const Field& f, int m, int n) {
    Rat t(1, static_cast<long long>(f.size()));
    Rat out = Rat::pow(Rat(static_cast<long long>(f.size())), m * n);
    for (int j = 1; j <= n; ++j)
        out = out * (Rat(1) - Rat::pow(t, m + j - 1)) / (Rat(1) - Rat::pow(t, j));
    return out;
}

Rat formula_gl_order(const Field& f, int n) {
    Rat out(1);
    Rat qn = Rat::pow(Rat(static_cast<long long>(f.size())), n);
    for (int i = 0; i < n; ++i)
        out = out * (qn - Rat::pow(Rat(static_cast<long long>(f.size())), i));
    return out;
}

Rat formula_irreducible_count(const Field& f, unsigned j) {
    return Rat(static_cast<long long>(count_monic_irreducibles(f, j)));
}

Rat formula_x_kappa(const Field& f, int m, const std::vector<std::vector<int>>& kappas) {
    Rat out(1);
    for (const auto& kappa : kappas) {
        if (static_cast<int>(kappa.size()) != m) throw std::invalid_argument("kappa length mismatch");
        for (int j = 1; j <= m; ++j)
            out = out * Rat::pow(Rat(static_cast<long long>(f.size())), (m - j + 1) * kappa[static_cast<size_t>(j - 1)]);
    }
    return out;
}

Rat formula_scalar_coprime(const Field& f, int N) {
    Rat t(1, static_cast<long long>(f.size()));
    return Rat(1) - Rat::pow(t, N - 1);
}

long long coefficient_C(int m, int N) {
    long long out = 0;
    for (int y = 2; y <= m + 1; ++y) out += binomial(N, y);
    return -out;
}

long long coefficient_C_recursive(int m, int N) {
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    std::vector<long long> c(static_cast<size_t>(N) + 1, 0);
    for (int nn = 2; nn <= N; ++nn) {
        long long acc = 0;
        for (int k = 1; k <= nn - 2; ++k) {
            long long term = binomial(nn, k) * c[static_cast<size_t>(nn - k)];
            acc += (k % 2 == 1) ? term : -term;
        }
        if (m >= nn - 1) acc -= 1;
        c[static_cast<size_t>(nn)] = acc;
    }
    return c[static_cast<size_t>(N)];
}

bool recursion_check(int m, int N) {
    return coefficient_C(m, N) == coefficient_C_recursive(m, N);
}

bool recursion_check_grid(int max_m, int max_n) {
    for (int m = 1; m <= max_m; ++m)
        for (int N = 2; N <= max_n; ++N)
            if (!recursion_check(m, N)) return false;
    return true;
}

AsymptoticFormula asymptotic_formula(Property prop, const CensusParams& par) {
    AsymptoticFormula out;
    switch (prop) {
        case Property::kScalarCoprime:
            out = {1, par.N - 1};
            break;
        case Property::kLeftCoprime:
            out = {1, par.m};
            break;
        case Property::kPairwiseCoprime:
            out = {static_cast<long long>(par.N) * (par.N - 1) / 2, par.m};
            break;
        case Property::kMutualCoprime:
            out = {-coefficient_C(par.m, par.N), par.m};
            break;
        case Property::kReachable:
            out = {1, par.m};
            break;
        case Property::kObservable:
            out = {1, par.p};
            break;
        case Property::kMinimal:
            out = par.m == par.p ? AsymptoticFormula{2, par.m}
                                 : AsymptoticFormula{1, std::min(par.m, par.p)};
            break;
        case Property::kParallelReachable: {
            long long c = 0;
            for (int y = 1; y <= par.m + 1; ++y) c += binomial(par.N, y);
            out = {c, par.m};
            break;
        }
        case Property::kNoncatastrophic:
            out = {1, par.n - par.k};
            break;
    }
    return out;
}

FormulaValue eval_formula(const std::string& name, const CensusParams& par) {
    FormulaValue out;
    auto need_field = [&]() -> const Field& {
        if (!par.field) throw std::invalid_argument("formula needs a field");
        return *par.field;
    };
    if (name == "P_nm") {
        out.exact = true;
        out.value = formula_reachable(need_field(), par.n, par.m);
    } else if (name == "H_nm") {
        out.exact = true;
        out.value = formula_hermite_count(need_field(), par.m, par.n);
    } else if (name == "GL_n") {
        out.exact = true;
        out.value = formula_gl_order(need_field(), par.n);
    } else if (name == "phi_j") {
        out.exact = true;
        out.value = formula_irreducible_count(need_field(), static_cast<unsigned>(par.n));
    } else if (name == "X_kappa") {
        out.exact = true;
        std::vector<int> kappa = par.deg;
        if (static_cast<int>(kappa.size()) != par.m) throw std::invalid_argument("--deg must list m kappa entries");
        out.value = formula_x_kappa(need_field(), par.m, {kappa});
    } else if (name == "scalar-coprime") {
        out.exact = true;
        out.value = formula_scalar_coprime(need_field(), par.N);
    } else if (name == "C_N") {
        out.exact = true;
        out.value = Rat(coefficient_C(par.m, par.N));
    } else if (name == "thm1") {
        out.asym = {1, par.p};
    } else if (name == "thm2") {
        out.asym = {1, par.m};
    } else if (name == "min") {
        out.asym = asymptotic_formula(Property::kMinimal, par);
    } else if (name == "pairwise") {
        out.asym = asymptotic_formula(Property::kPairwiseCoprime, par);
    } else if (name == "mut") {
        out.asym = asymptotic_formula(Property::kMutualCoprime, par);
    } else if (name == "parallel") {
        out.asym = asymptotic_formula(Property::kParallelReachable, par);
    } else if (name == "ak2") {
        out.asym = asymptotic_formula(Property::kNoncatastrophic, par);
    } else {
        throw std::invalid_argument("unknown formula: " + name);
    }
    return out;
}

std::vector<std::string> formula_names() {
    return {"P_nm", "H_nm", "GL_n", "phi_j",    "X_kappa", "scalar-coprime", "C_N",
            "thm1", "thm2", "min",  "pairwise", "mut",     "parallel",       "ak2"};
}

AsymptoticFit asymptotic_fit(const std::vector<uint64_t>& qs, const std::vector<double>& probs,
                             const std::vector<double>& stderrs, double predicted, int order,
                             double tol_abs) {
    if (qs.size() < 2 || qs.size() != probs.size() || qs.size() != stderrs.size())
        throw std::invalid_argument("need matching q/probability lists with at least two entries");
    AsymptoticFit out;
    out.qs = qs;
    out.predicted = predicted;
    out.order = order;
    for (size_t i = 0; i < qs.size(); ++i) {
        double scale = std::pow(static_cast<double>(qs[i]), order);
        out.coeffs.push_back((1.0 - probs[i]) * scale);
        out.tolerances.push_back(3.0 * stderrs[i] * scale);
    }
    out.final_deviation = std::abs(out.coeffs.back() - predicted);
    double first_deviation = std::abs(out.coeffs.front() - predicted);
    out.improved = out.final_deviation <=
                   first_deviation + out.tolerances.front() + out.tolerances.back() + 1e-12;
    double slack = std::max(tol_abs, 5.0 * std::abs(predicted) / static_cast<double>(qs.back()));
    out.converged = out.final_deviation <= slack + out.tolerances.back() && out.improved;
    return out;
}

uint64_t count_invertible(const FieldPtr& f, int n, uint64_t budget) {
    uint64_t size = pow_checked(f->size(), static_cast<uint64_t>(n) * n);
    if (size > budget) throw BudgetExceeded("GL enumeration over budget");
    uint64_t count = 0;
    Mat m(f, n, n);
    for (uint64_t i = 0; i < size; ++i) {
        m.assign_from_index(i);
        if (m.rank() == n) ++count;
    }
    return count;
}

}  // namespace polyprime
