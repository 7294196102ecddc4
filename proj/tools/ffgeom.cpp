#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ffgeom/dirichlet.hpp"
#include "ffgeom/latfile.hpp"
#include "ffgeom/minkmu.hpp"
#include "ffgeom/mordell.hpp"
#include "ffgeom/parse.hpp"
#include "ffgeom/record.hpp"
#include "ffgeom/selftest.hpp"

namespace {

using namespace ffgeom;

struct Options {
    std::string file;
    std::string body_file;
    unsigned q = 0;
    int d = 0;
    std::string theta;
    std::string phi;
    std::vector<std::string> thetas;
    std::vector<int> ts;
    int T = 0;
    bool has_T = false;
    int cap = 10;
    int window = 6;
    int precision = 0;
    bool has_precision = false;
    int workers = 0;
    std::string output = "record";
};

int resolve_workers(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("FFGEOM_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void print_matrix_rows(std::ostream& out, const std::string& key, const KMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << key;
        for (std::size_t j = 0; j < m.cols(); ++j) out << ' ' << format_ratfunc(m.at(i, j));
        out << '\n';
    }
}

void print_polymat_rows(std::ostream& out, const std::string& key, const PolyMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << key;
        for (std::size_t j = 0; j < m.cols(); ++j) out << ' ' << format_poly(m.at(i, j));
        out << '\n';
    }
}

void print_witness(std::ostream& out, const MuWitness& w, int dim) {
    out << "uncovered alpha=" << format_tail(w.alpha);
    if (dim == 3) out << " beta=" << format_tail(w.beta);
    out << '\n';
}

MuInstance instance_from(const Options& opt) {
    if (opt.q == 0) throw Error("--q is required");
    if (opt.d != 2 && opt.d != 3) throw Error("--d must be 2 or 3");
    FieldSpec field(opt.q);
    const LaurentTail theta = tail_of(parse_ratfunc(field, opt.theta));
    LaurentTail phi(field.p());
    if (opt.d == 3 && !opt.phi.empty()) phi = tail_of(parse_ratfunc(field, opt.phi));
    return MuInstance::make(field, opt.d, theta, phi);
}

int run_minima(const Options& opt, std::ostream& out) {
    const LatticeBasis L = read_lattice_file(opt.file);
    const MinimaProfile mp = minima(L);
    if (opt.output == "table") out << "# successive minima exponents and a reduced basis\n";
    emit_record(out, "lambda", mp.exponents);
    emit_record(out, "det", AbsValue::power(L.det_exponent()));
    print_matrix_rows(out, "reduced", mp.reduced_basis);
    return 0;
}

int run_decompose(const Options& opt, std::ostream& out) {
    const LatticeBasis L = read_lattice_file(opt.file);
    const MinimaProfile mp = minima(L);
    if (opt.output == "table") out << "# u g h = diag(x^lambda)\n";
    emit_record(out, "lambda", mp.exponents);
    print_matrix_rows(out, "u_row", mp.transform_u);
    print_polymat_rows(out, "h_row", mp.transform_h);
    return 0;
}

int run_covrad(const Options& opt, std::ostream& out) {
    const LatticeBasis L = read_lattice_file(opt.file);
    AbsValue r = AbsValue::zero();
    if (opt.body_file.empty()) {
        r = covrad_cube(L);
        emit_record(out, "covrad", r);
        if (opt.has_precision)
            emit_record(out, "oracle_agrees",
                        covering_oracle(L, r.exponent(), opt.precision) &&
                            !covering_oracle(L, r.exponent() - 1, opt.precision + 1));
    } else {
        const LatticeBasis shape = read_lattice_file(opt.body_file);
        if (shape.field() != L.field()) throw Error("body file uses a different q");
        const ConvexBody C(shape.field(), shape.basis());
        r = covrad_body(L, C);
        emit_record(out, "covrad", r);
    }
    return 0;
}

int run_wellround(const Options& opt, std::ostream& out) {
    const LatticeBasis L = read_lattice_file(opt.file);
    emit_record(out, "well_rounded", is_well_rounded(L));
    const ShiftSearchResult res = find_wellrounded_shift(L, opt.cap);
    if (res.found) {
        emit_record(out, "wr_shift", res.found->a);
        emit_record(out, "wr_verified", is_well_rounded(apply_weight(L, *res.found)));
        return 0;
    }
    out << "wr_shift not_found cap " << opt.cap << '\n';
    emit_record(out, "best_attempt", res.best_attempt.a);
    return 1;
}

int run_mu(const Options& opt, std::ostream& out) {
    const MuInstance inst = instance_from(opt);
    const int workers = resolve_workers(opt.workers);
    if (opt.output == "table")
        out << "# q=" << inst.field.p() << " d=" << inst.dim << " h=" << inst.h << '\n';
    if (opt.has_T) {
        const MuDecision dec = mu_decision(inst, opt.T, workers);
        emit_record(out, "mu_decision", dec.holds);
        if (dec.witness) print_witness(out, *dec.witness, inst.dim);
        return 0;
    }
    const MuResult res = mu_exact(inst, workers);
    emit_record(out, "mu", res.value);
    if (res.witness) print_witness(out, *res.witness, inst.dim);
    return 0;
}

int run_mordell(const Options& opt, std::ostream& out) {
    const LatticeBasis L = read_lattice_file(opt.file);
    const KappaResult k = kappa_search(L, opt.window);
    if (k.best) {
        emit_record(out, "kappa", AbsValue::power(k.best->volume_exponent()));
        emit_record(out, "kappa_box", k.best->exponents);
    } else {
        emit_record(out, "kappa", std::string("none"));
    }
    emit_record(out, "kappa_exhausted", k.exhausted);
    auto [a, box] = wr_box_certificate(L, opt.cap);
    emit_record(out, "wr_shift", a.a);
    emit_record(out, "cert_box", box.exponents);
    emit_record(out, "cert_admissible", is_admissible(L, box));
    return 0;
}

int run_dirichlet(const Options& opt, std::ostream& out) {
    if (opt.q == 0) throw Error("--q is required");
    FieldSpec field(opt.q);
    if (opt.thetas.empty()) throw Error("at least one --theta is required");
    if (opt.ts.size() != opt.thetas.size())
        throw Error("--t must be given once per --theta");
    std::vector<LaurentTail> tails;
    for (const auto& s : opt.thetas) tails.push_back(tail_of(parse_ratfunc(field, s)));
    const DirichletInstance inst = DirichletInstance::make(field, tails, opt.ts);
    const DirichletSolution sol = dirichlet_solve(inst);
    for (std::size_t i = 0; i < sol.bs.size(); ++i)
        emit_record(out, "b" + std::to_string(i + 1), format_poly(sol.bs[i]));
    emit_record(out, "a", format_poly(sol.a));
    emit_record(out, "bound", AbsValue::power(-(inst.budget_sum() + inst.n())));
    emit_record(out, "achieved", sol.achieved);
    emit_record(out, "verified", dirichlet_verify(inst, sol));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geometry of numbers over F_q((1/x))"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_file) {
        if (with_file) cmd->add_option("--file", opt.file, "lattice file")->required();
        cmd->add_option("--output", opt.output, "table|record")
            ->check(CLI::IsMember({"table", "record"}));
        return cmd;
    };

    auto* c_minima = add_common(app.add_subcommand("minima", "successive minima"), true);
    auto* c_dec = add_common(app.add_subcommand("decompose", "u g h decomposition"), true);
    auto* c_cov = add_common(app.add_subcommand("covrad", "covering radius"), true);
    c_cov->add_option("--body", opt.body_file, "convex body shape file");
    c_cov->add_option("--precision", opt.precision, "covering oracle precision")
        ->each([&](const std::string&) { opt.has_precision = true; });
    auto* c_wr = add_common(app.add_subcommand("wellround", "well-roundedness and shift"), true);
    c_wr->add_option("--cap", opt.cap, "sup-norm cap for the shift search");

    auto* c_mu = add_common(app.add_subcommand("mu", "Minkowski function"), false);
    c_mu->add_option("--q", opt.q, "prime field size")->required();
    c_mu->add_option("--d", opt.d, "dimension (2 or 3)")->required();
    c_mu->add_option("--theta", opt.theta, "theta tail")->required();
    c_mu->add_option("--phi", opt.phi, "phi tail (d = 3)");
    c_mu->add_option("--T", opt.T, "decide mu <= q^-T instead of the exact value")
        ->each([&](const std::string&) { opt.has_T = true; });
    c_mu->add_option("--workers", opt.workers, "worker threads (default: cores)");

    auto* c_mor = add_common(app.add_subcommand("mordell", "box admissibility and kappa"), true);
    c_mor->add_option("--window", opt.window, "exponent window for the kappa search");
    c_mor->add_option("--cap", opt.cap, "sup-norm cap for the certificate shift");

    auto* c_dir = add_common(app.add_subcommand("dirichlet", "improved Dirichlet solver"), false);
    c_dir->add_option("--q", opt.q, "prime field size")->required();
    c_dir->add_option("--theta", opt.thetas, "target tail (repeatable)")->required();
    c_dir->add_option("--t", opt.ts, "degree budget (repeatable, one per theta)")->required();

    auto* c_self = add_common(app.add_subcommand("selftest", "run the invariant suites"), false);
    c_self->add_option("--workers", opt.workers, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ostream& out = std::cout;
        if (c_minima->parsed()) return run_minima(opt, out);
        if (c_dec->parsed()) return run_decompose(opt, out);
        if (c_cov->parsed()) return run_covrad(opt, out);
        if (c_wr->parsed()) return run_wellround(opt, out);
        if (c_mu->parsed()) return run_mu(opt, out);
        if (c_mor->parsed()) return run_mordell(opt, out);
        if (c_dir->parsed()) return run_dirichlet(opt, out);
        if (c_self->parsed()) return selftest_run(out, 20240512) == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
