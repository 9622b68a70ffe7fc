#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "polyprime/census.hpp"
#include "polyprime/io.hpp"

using namespace polyprime;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

int default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n ? static_cast<int>(n) : 1;
}

std::string join_deg(const std::vector<int>& deg) {
    std::string out;
    for (size_t i = 0; i < deg.size(); ++i) out += (i ? ";" : "") + std::to_string(deg[i]);
    return out;
}

// --- verify ---------------------------------------------------------------

struct VerifySuite {
    int checks = 0, failures = 0;

    void row(const std::string& formula, const std::string& params, const std::string& expected,
             const std::string& actual, bool ok) {
        ++checks;
        if (!ok) ++failures;
        std::printf("%-16s %-28s expected=%-14s actual=%-14s %s\n", formula.c_str(),
                    params.c_str(), expected.c_str(), actual.c_str(), ok ? "ok" : "MISMATCH");
    }
    void count_row(const std::string& formula, const std::string& params, uint64_t expected,
                   uint64_t actual) {
        row(formula, params, std::to_string(expected), std::to_string(actual), expected == actual);
    }
};

int cmd_verify(const std::vector<FieldPtr>& fields, int workers) {
    VerifySuite s;
    for (const auto& f : fields) {
        std::string q = "q=" + f->name();
        for (int n = 1; n <= 2; ++n)
            for (int m = 1; m <= 2; ++m) {
                CensusParams par;
                par.field = f;
                par.n = n;
                par.m = m;
                CensusResult r = exact_probability(Property::kReachable, par, kDefaultBudget, workers);
                Rat predicted = formula_reachable(*f, n, m);
                s.row("P_{n,m}", q + " n=" + std::to_string(n) + " m=" + std::to_string(m),
                      predicted.str(), r.probability.str(), r.probability == predicted);
            }
        for (int m = 1; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n) {
                Rat predicted = formula_hermite_count(*f, m, n);
                uint64_t counted = count_hermite_forms(f, m, n);
                s.count_row("H_{n,m}", q + " m=" + std::to_string(m) + " n=" + std::to_string(n),
                            static_cast<uint64_t>(predicted.num), counted);
            }
        for (int n = 1; n <= 3; ++n)
            s.count_row("GL_n", q + " n=" + std::to_string(n),
                        static_cast<uint64_t>(formula_gl_order(*f, n).num), count_invertible(f, n));
        for (unsigned j = 1; j <= 6; ++j)
            s.count_row("phi_j", q + " j=" + std::to_string(j),
                        static_cast<uint64_t>(formula_irreducible_count(*f, j).num),
                        enumerate_monic_irreducibles(f, j).size());
        for (int k1 = 0; k1 <= 2; ++k1)
            for (int k2 = 0; k2 <= 2; ++k2) {
                std::vector<std::vector<int>> kappas = {{k1, k2}};
                s.count_row("X_kappa",
                            q + " kappa=(" + std::to_string(k1) + "," + std::to_string(k2) + ")",
                            static_cast<uint64_t>(formula_x_kappa(*f, 2, kappas).num),
                            enumerate_X_kappa_count(f, 2, kappas));
            }
        for (int N = 2; N <= 3; ++N)
            for (int d = 1; d <= 2; ++d) {
                CensusParams par;
                par.field = f;
                par.N = N;
                par.n = d;
                CensusResult r = exact_probability(Property::kScalarCoprime, par, kDefaultBudget, workers);
                Rat predicted = formula_scalar_coprime(*f, N);
                s.row("2coprime", q + " N=" + std::to_string(N) + " deg=" + std::to_string(d),
                      predicted.str(), r.probability.str(), r.probability == predicted);
            }
    }
    for (int m = 1; m <= 8; ++m) {
        bool ok = true;
        for (int N = 2; N <= 12; ++N) ok = ok && recursion_check(m, N);
        s.row("C_N recursion", "m=" + std::to_string(m) + " N=2..12", "holds", ok ? "holds" : "broken", ok);
    }
    std::printf("%d checks, %d failed\n", s.checks, s.failures);
    return s.failures ? 1 : 0;
}

// --- census / mc ----------------------------------------------------------

struct Prediction {
    bool exact = false;
    Rat value;              // when exact
    AsymptoticFormula asym; // otherwise
    double eval = 0;

    std::string str() const {
        if (exact) return value.str();
        std::ostringstream os;
        os << "1 - " << asym.coeff << "t^" << asym.order << " + O(t^" << asym.order + 1 << ")";
        return os.str();
    }
};

Prediction predict(Property prop, const CensusParams& par) {
    Prediction out;
    const Field& f = *par.field;
    switch (prop) {
        case Property::kScalarCoprime:
            out.exact = true;
            out.value = formula_scalar_coprime(f, par.N);
            break;
        case Property::kReachable:
            out.exact = true;
            out.value = formula_reachable(f, par.n, par.m);
            break;
        case Property::kObservable:
            out.exact = true;
            out.value = formula_reachable(f, par.n, par.p);
            break;
        default:
            out.asym = asymptotic_formula(prop, par);
            break;
    }
    out.eval = out.exact ? out.value.to_double() : out.asym.eval(f.t());
    return out;
}

json params_json(const CensusParams& par) {
    return {{"field", par.field->name()}, {"m", par.m}, {"n", par.n},    {"p", par.p},
            {"N", par.N},                 {"k", par.k}, {"s", par.s},    {"deg", par.degrees()}};
}

std::string csv_report(const std::string& prop, const CensusParams& par, uint64_t total,
                       uint64_t hits, double probability, double formula_value) {
    std::ostringstream os;
    os << "property,q,m,n,p,N,k,s,deg,total,hits,probability,formula_value,abs_error\n";
    os << prop << ',' << par.field->size() << ',' << par.m << ',' << par.n << ',' << par.p << ','
       << par.N << ',' << par.k << ',' << par.s << ',' << join_deg(par.degrees()) << ',' << total
       << ',' << hits << ',' << probability << ',' << formula_value << ','
       << std::abs(probability - formula_value) << '\n';
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot write " + out_path);
    os << text;
}

int finish_report(const std::string& mode, Property prop, const CensusParams& par, uint64_t total,
                  uint64_t hits, double probability, const std::string& prob_str, json extra,
                  const std::string& out_path, const std::string& format, double tolerance) {
    Prediction pred = predict(prop, par);
    double abs_error = std::abs(probability - pred.eval);
    std::fprintf(stderr, "%s %s q=%s total=%llu hits=%llu probability=%s prediction=%s abs_error=%g\n",
                 mode.c_str(), property_name(prop).c_str(), par.field->name().c_str(),
                 static_cast<unsigned long long>(total), static_cast<unsigned long long>(hits),
                 prob_str.c_str(), pred.str().c_str(), abs_error);
    std::string text;
    if (format == "csv") {
        text = csv_report(property_name(prop), par, total, hits, probability, pred.eval);
    } else {
        json j = {{"version", kVersion},
                  {"mode", mode},
                  {"property", property_name(prop)},
                  {"params", params_json(par)},
                  {"total", total},
                  {"hits", hits},
                  {"probability", probability},
                  {"formula", {{"exact", pred.exact}, {"text", pred.str()}, {"value", pred.eval}}},
                  {"abs_error", abs_error}};
        j.update(extra);
        text = j.dump(2) + "\n";
    }
    emit(text, out_path);
    if (tolerance >= 0 && abs_error > tolerance) {
        std::fprintf(stderr, "abs_error %g exceeds tolerance %g\n", abs_error, tolerance);
        return 1;
    }
    return 0;
}

// --- analyze --------------------------------------------------------------

void analyze_poly_matrix(const PolyMat& m) {
    std::cout << "polynomial matrix " << m.rows() << "x" << m.cols() << " over GF("
              << m.field()->name() << ")\n";
    std::cout << "matrix: " << m.str() << "\n";
    if (m.rows() == m.cols()) {
        Poly d = m.det();
        std::cout << "det: " << d.str() << "\n";
        if (m.is_unimodular()) std::cout << "unimodular; Hermite form = I\n";
        auto kh = kronecker_hermite_form(m);
        std::cout << "kronecker-hermite form: " << kh.first.matrix.str() << "\n";
    }
    if (m.rows() <= m.cols()) {
        std::cout << "left prime: " << (is_left_prime(m) ? "yes" : "no") << "\n";
    }
    if (m.rows() >= m.cols()) {
        if (m.rows() == m.cols()) {
            auto h = hermite_form(m);
            std::cout << "hermite form: " << h.first.matrix.str() << "\n";
        }
        bool prime = is_right_prime(m);
        std::cout << "right prime: " << (prime ? "yes" : "no") << "\n";
        if (m.rows() > m.cols()) {
            std::cout << "as generator: order nu=" << code_order(m) << " degree delta="
                      << code_degree(m) << (is_minimal_basis(m) ? ", minimal basis" : "")
                      << (prime ? ", noncatastrophic" : ", catastrophic (right-prime: no)") << "\n";
        }
    }
}

void analyze_tuple(const std::vector<PolyMat>& ds) {
    std::cout << ds.size() << " square matrices over GF(" << ds[0].field()->name() << ")\n";
    bool pairwise = true;
    for (size_t i = 0; i < ds.size() && pairwise; ++i)
        for (size_t j = i + 1; j < ds.size() && pairwise; ++j)
            pairwise = are_left_coprime({ds[i], ds[j]});
    std::cout << "pairwise left coprime: " << (pairwise ? "yes" : "NO") << "\n";
    if (mutually_left_coprime(ds)) {
        std::cout << "mutually left coprime: yes\n";
        return;
    }
    PolyMat block = mutual_coprimeness_matrix(ds);
    std::string witness = "no witness in the base field";
    for (uint64_t x = 0; x < ds[0].field()->size(); ++x)
        if (block.eval(static_cast<uint32_t>(x)).rank() < block.rows()) {
            witness = "block matrix singular at z = element #" + std::to_string(x);
            break;
        }
    std::cout << "mutually left coprime: NO (" << witness << ")\n";
}

void analyze_system(const StateSpace& sys) {
    std::cout << "state space over GF(" << sys.field()->name() << "): n=" << sys.n()
              << " m=" << sys.m() << " p=" << sys.p() << "\n";
    bool reach = is_reachable(sys.a, sys.b), obs = is_observable(sys.a, sys.c);
    std::cout << "reachable: " << (reach ? "yes" : "no") << "\n";
    std::cout << "observable: " << (obs ? "yes" : "no") << "\n";
    std::cout << "minimal: " << (reach && obs ? "yes" : "no") << "\n";
    MatrixFraction fr = right_coprime_factorization(sys);
    std::cout << "coprime fraction P Q^{-1}, Q in kronecker-hermite form\n";
    std::cout << "P: " << fr.p.str() << "\nQ: " << fr.q.matrix.str() << "\n";
    ConvCode code = code_from_system(sys);
    std::cout << "induced code generator (" << code.n() << "," << code.k()
              << "): " << code.generator.str() << "\n";
    std::cout << "order nu=" << code_order(code.generator)
              << " degree delta=" << code_degree(code.generator) << "\n";
    std::cout << "noncatastrophic: " << (is_noncatastrophic(code.generator) ? "yes" : "no") << "\n";
}

int cmd_analyze(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::fprintf(stderr, "cannot read %s\n", path.c_str());
        return 2;
    }
    json j = json::parse(in);  // throws parse_error with byte position
    if (!j.is_object() || !j.contains("field")) {
        std::fprintf(stderr, "expected an object with a \"field\" entry\n");
        return 2;
    }
    FieldPtr f = Field::parse(j.at("field").get<std::string>());
    if (j.contains("A")) {
        analyze_system(parse_state_space(j));
    } else if (j.contains("matrices")) {
        std::vector<PolyMat> ds;
        for (const auto& entry : j.at("matrices")) ds.push_back(parse_poly_matrix(entry, f));
        if (ds.empty()) {
            std::fprintf(stderr, "empty matrix tuple\n");
            return 2;
        }
        analyze_tuple(ds);
    } else if (j.contains("matrix")) {
        analyze_poly_matrix(parse_poly_matrix(j.at("matrix"), f));
    } else {
        std::fprintf(stderr, "expected \"matrix\", \"matrices\", or a system with \"A\"\n");
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact censuses and Monte Carlo experiments for polynomial matrices over finite fields"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string field_spec = "2", deg_spec, out_path, format = "json", property_name_arg, input_path;
    int m = 1, n = 1, p = 1, N = 2, k = 1, s = 2;
    int workers = default_workers();
    uint64_t trials = 100000, seed = 0;
    double tolerance = -1;

    std::string prop_help = "property: one of";
    for (const auto& name : property_names()) prop_help += " " + name;

    auto add_dims = [&](CLI::App* cmd) {
        cmd->add_option("--field", field_spec, "field spec \"p^e\", e.g. 2, 3, 2^2");
        cmd->add_option("--m", m, "matrix size / shared input count");
        cmd->add_option("--n", n, "state dim / det degree / code length");
        cmd->add_option("--p", p, "output count");
        cmd->add_option("--N", N, "tuple length");
        cmd->add_option("--k", k, "code dimension");
        cmd->add_option("--s", s, "state dim for noncatastrophic");
        cmd->add_option("--deg", deg_spec, "comma list of per-matrix degrees / node state dims");
        cmd->add_option("--workers", workers, "worker threads");
        cmd->add_option("--out", out_path, "report file (default stdout)");
        cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--tolerance", tolerance,
                        "fail (exit 1) when |probability - formula| exceeds this");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the exact-formula verification suite");
    std::string verify_field;
    verify->add_option("--field", verify_field, "restrict the grid to one field");
    verify->add_option("--workers", workers, "worker threads");

    CLI::App* census = app.add_subcommand("census", "exhaustive probability census");
    census->add_option("property", property_name_arg, prop_help)->required();
    add_dims(census);

    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo probability estimate");
    mc->add_option("property", property_name_arg, prop_help)->required();
    add_dims(mc);
    mc->add_option("--trials", trials, "sample count (>= 100)");
    mc->add_option("--seed", seed, "64-bit master seed");

    CLI::App* analyze = app.add_subcommand("analyze", "report on a matrix, matrix tuple, or system file");
    analyze->add_option("file", input_path, "JSON input file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (verify->parsed()) {
            std::vector<FieldPtr> fields;
            if (verify_field.empty()) {
                fields = {Field::parse("2"), Field::parse("3")};
            } else {
                fields = {Field::parse(verify_field)};
            }
            return cmd_verify(fields, workers);
        }
        if (analyze->parsed()) return cmd_analyze(input_path);

        Property prop = property_from_name(property_name_arg);
        CensusParams par;
        par.field = Field::parse(field_spec);
        par.m = m;
        par.n = n;
        par.p = p;
        par.N = N;
        par.k = k;
        par.s = s;
        if (!deg_spec.empty()) {
            std::istringstream is(deg_spec);
            std::string item;
            while (std::getline(is, item, ',')) par.deg.push_back(std::stoi(item));
        }

        if (census->parsed()) {
            CensusResult r = exact_probability(prop, par, kDefaultBudget, workers);
            return finish_report("census", prop, par, r.total, r.hits, r.probability.to_double(),
                                 r.probability.str(), json::object(), out_path, format, tolerance);
        }
        McEstimate e = mc_estimate(prop, par, trials, seed, workers);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", e.point);
        json extra = {{"trials", e.trials}, {"seed", e.seed},       {"ci_low", e.ci_low},
                      {"ci_high", e.ci_high}, {"stderr", e.stderr_est}};
        return finish_report("mc", prop, par, e.trials, e.hits, e.point, buf, extra, out_path,
                             format, tolerance);
    } catch (const BudgetExceeded& e) {
        std::fprintf(stderr, "%s; the space is too large to enumerate — use `polyprime mc`\n", e.what());
        return 3;
    } catch (const json::parse_error& e) {
        std::fprintf(stderr, "parse failure: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
