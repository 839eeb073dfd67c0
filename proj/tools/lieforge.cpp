// lieforge — exact verification CLI for Iu_n and gl_{n+}^eps.
//
// Subcommands: verify, emit, table, enumerate, diamond. Output is plain
// deterministic text suitable for golden-file testing. Exit status: 0 all
// checks pass, 1 a mathematical check failed, 2 configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lieforge/analysis.hpp"
#include "lieforge/emit.hpp"
#include "lieforge/linalg.hpp"

using namespace lieforge;

namespace {

enum class AlgebraKind { Iu, GlPlus, Un, Gln, SlIu, SlGlPlus };

struct RunConfig {
    AlgebraKind kind = AlgebraKind::Iu;
    std::string algebra = "Iu";
    int n = 3;
    std::optional<std::string> eps;
    std::optional<int> truncate;
    std::string format = "sc-v1";
    std::string out_path;  // empty: stdout
    int max_enum = 8;
};

AlgebraKind parse_kind(const std::string& s) {
    if (s == "Iu") return AlgebraKind::Iu;
    if (s == "glplus") return AlgebraKind::GlPlus;
    if (s == "un") return AlgebraKind::Un;
    if (s == "gln") return AlgebraKind::Gln;
    if (s == "sl-Iu") return AlgebraKind::SlIu;
    if (s == "sl-glplus") return AlgebraKind::SlGlPlus;
    throw Error("unknown algebra '" + s + "' (expected Iu|glplus|un|gln|sl-Iu|sl-glplus)");
}

bool eps_family(AlgebraKind k) { return k == AlgebraKind::GlPlus || k == AlgebraKind::SlGlPlus; }

void validate(const RunConfig& cfg, const std::string& command) {
    if (cfg.n < 1) throw Error("--n must be at least 1");
    if (cfg.format != "sc-v1") throw Error("unknown format '" + cfg.format + "'");
    if (!eps_family(cfg.kind)) {
        if (cfg.eps) throw Error("--eps applies only to the glplus family ('" + cfg.algebra +
                                 "' has no eps)");
        if (cfg.truncate)
            throw Error("--truncate applies only to the glplus family ('" + cfg.algebra +
                        "' has no eps)");
    }
    if (cfg.eps && cfg.truncate)
        throw Error("--eps and --truncate are mutually exclusive (a truncated algebra cannot "
                    "be specialized)");
    if (cfg.truncate && *cfg.truncate < 0) throw Error("--truncate must be >= 0");
    if (command == "table" && cfg.kind != AlgebraKind::Iu)
        throw Error("table is defined for --algebra Iu");
    if (command == "enumerate" && cfg.kind != AlgebraKind::Iu && cfg.kind != AlgebraKind::GlPlus)
        throw Error("enumerate is defined for --algebra Iu or glplus");
    if (command == "enumerate" && cfg.n > cfg.max_enum)
        throw Error("enumeration guard exceeded: n = " + std::to_string(cfg.n) +
                    " needs --max-enum " + std::to_string(cfg.n) + " or higher");
}

// The glplus-family algebra after the configured specialization/truncation.
LieAlgebra configured_glplus(const RunConfig& cfg) {
    LieAlgebra g = build_glpluseps_direct(cfg.n);
    if (cfg.eps) return g.specialize(rational_from_string(*cfg.eps));
    if (cfg.truncate) return g.truncated(*cfg.truncate);
    return g;
}

LieAlgebra configured_algebra(const RunConfig& cfg) {
    switch (cfg.kind) {
        case AlgebraKind::Iu: return build_Iu_direct(cfg.n);
        case AlgebraKind::GlPlus: return configured_glplus(cfg);
        case AlgebraKind::Un: return build_un(cfg.n);
        case AlgebraKind::Gln: return build_gln(cfg.n);
        case AlgebraKind::SlIu: return sl_restrict(build_Iu_direct(cfg.n)).algebra;
        case AlgebraKind::SlGlPlus: return sl_restrict(configured_glplus(cfg)).algebra;
    }
    throw Error("unreachable");
}

class CheckPrinter {
public:
    explicit CheckPrinter(std::ostream& os) : os_(os) {}
    void line(const std::string& name, bool ok, const std::string& witness = "") {
        os_ << name << ": " << (ok ? "PASS" : "FAIL") << (ok || witness.empty() ? "" : " " + witness)
            << "\n";
        all_ok_ = all_ok_ && ok;
    }
    bool all_ok() const { return all_ok_; }

private:
    std::ostream& os_;
    bool all_ok_ = true;
};

void layer_table_lines(CheckPrinter& p, int n) {
    LayerTableReport r = verify_layer_table(n);
    p.line("layer-filtration", r.filtration.ok(), r.filtration.summary());
    p.line("layer-grading", r.grading.ok(), r.grading.summary());
    p.line("layer-vanishing", r.vanishing.ok(), r.vanishing.summary());
    p.line("layer-generation", r.generation.ok(), r.generation.summary());
    p.line("layer-membership", r.membership.ok(), r.membership.summary());
    p.line("layer-psi-shift", r.psi_shift.ok(), r.psi_shift.summary());
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
    CheckPrinter p(os);
    int n = cfg.n;
    LieAlgebra L = configured_algebra(cfg);
    {
        JacobiReport jac = L.verify_jacobi();
        p.line("jacobi", jac.ok(), jac.witness());
    }
    switch (cfg.kind) {
        case AlgebraKind::Iu: {
            LieAlgebra oracle = coadjoint_semidirect(build_un(n), standard_duality(n));
            p.line("oracle-coadjoint", oracle.same_structure(L));
            MorphismReport psi = is_automorphism(L, psi_map(n));
            p.line("psi-automorphism", psi.ok(), psi.witness(L));
            p.line("psi-order", map_power(psi_map(n), n) == identity_map(L));
            MorphismReport phi = is_antiautomorphism(L, phi_map(n));
            p.line("phi-antiautomorphism", phi.ok(), phi.witness(L));
            p.line("dihedral-relation",
                   compose(phi_map(n), compose(psi_map(n), phi_map(n))) ==
                       map_power(psi_map(n), n - 1));
            if (n >= 2) {
                CheckReport len = psi_preserves_length(n);
                p.line("psi-preserves-length", len.ok(), len.summary());
            }
            layer_table_lines(p, n);
            MetricReport metric = verify_metric_layers(n);
            p.line("metric-pairing", metric.layer_pairing.ok(), metric.layer_pairing.summary());
            p.line("metric-invariance", metric.invariance.ok(), metric.invariance.summary());
            p.line("solvable", is_solvable(L));
            break;
        }
        case AlgebraKind::GlPlus: {
            LieAlgebra sym = build_glpluseps_direct(n);
            LieAlgebra oracle = manin_double(build_un(n), build_ln_eps(n), standard_pairing(n));
            p.line("oracle-manin", oracle.same_structure(sym));
            MorphismReport psi = is_automorphism(L, psi_map(n));
            p.line("psi-automorphism", psi.ok(), psi.witness(L));
            MorphismReport phi = is_antiautomorphism(L, phi_map(n));
            p.line("phi-antiautomorphism", phi.ok(), phi.witness(L));
            if (!cfg.eps && !cfg.truncate)
                p.line("specialize-zero", sym.specialize(0).same_structure(build_Iu_direct(n)));
            if (cfg.eps) {
                Rational v = rational_from_string(*cfg.eps);
                p.line("solvable", is_solvable(L) == (v.is_zero() || n == 1));
                if (v.is_one()) {
                    Subspace c = center(L);
                    bool central = true;
                    for (int i = 1; i <= n; ++i) {
                        Element bma = Element::unit(GeneratorLabel::b(i));
                        bma.add_term(GeneratorLabel::a(i), EpsPoly(-1));
                        central = central && c.contains(to_dense(L, bma));
                    }
                    p.line("splitting-center", central);
                    LinearMap onto;
                    auto gl_unit = [](int i, int j) {
                        return GeneratorLabel::named("e[" + std::to_string(i) + "," +
                                                     std::to_string(j) + "]");
                    };
                    for (int i = 1; i <= n; ++i) {
                        onto.images.emplace(GeneratorLabel::a(i), Element::unit(gl_unit(i, i)));
                        onto.images.emplace(GeneratorLabel::b(i), Element::unit(gl_unit(i, i)));
                        for (int j = 1; j <= n; ++j)
                            if (i != j)
                                onto.images.emplace(GeneratorLabel::x(i, j),
                                                    Element::unit(gl_unit(i, j)));
                    }
                    p.line("splitting-onto-gln",
                           is_homomorphism(L, build_gln(n), onto).failures.empty());
                }
            }
            if (cfg.truncate) p.line("solvable", is_solvable(L));
            break;
        }
        case AlgebraKind::Un:
            p.line("solvable", is_solvable(L));
            break;
        case AlgebraKind::Gln:
            break;
        case AlgebraKind::SlIu:
        case AlgebraKind::SlGlPlus: {
            LieAlgebra parent = cfg.kind == AlgebraKind::SlIu ? build_Iu_direct(n)
                                                              : configured_glplus(cfg);
            Subalgebra sub = sl_restrict(parent);
            LinearMap psi = transport_map(parent, psi_map(n), sub);
            MorphismReport rep = is_automorphism(sub.algebra, psi);
            p.line("psi-restricts", rep.ok(), rep.witness(sub.algebra));
            break;
        }
    }
    return p.all_ok() ? 0 : 1;
}

int cmd_emit(const RunConfig& cfg, std::ostream& os) {
    LieAlgebra L = configured_algebra(cfg);
    std::string name = cfg.algebra;
    if (cfg.eps) name += "(eps=" + rational_from_string(*cfg.eps).str() + ")";
    os << emit_sc(L, name);
    return 0;
}

int cmd_table(const RunConfig& cfg, std::ostream& os) {
    for (int p = 0; p <= cfg.n; ++p) {
        os << "layer " << p << ":";
        for (const auto& l : listed_generators(cfg.n, p)) {
            bool dual = l.kind == GeneratorLabel::Kind::B || l.is_lower_x();
            os << " " << l.str() << (dual ? "*" : "");
        }
        os << "\n";
    }
    return 0;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& os) {
    LieAlgebra L = configured_algebra(cfg);
    SymmetrySearch s = enumerate_symmetries(L, cfg.n, cfg.max_enum);
    auto list = [&os](const char* tag, const std::vector<Permutation>& perms) {
        os << tag << ":";
        for (size_t i = 0; i < perms.size(); ++i) os << (i ? ", " : " ") << perm_str(perms[i]);
        os << "\n";
    };
    list("autos", s.autos);
    list("antis", s.antis);
    os << "group order: " << s.autos.size() + s.antis.size()
       << ", closed: " << (s.closed ? "yes" : "no") << "\n";
    return 0;
}

int cmd_diamond(std::ostream& os) {
    DiamondResult d = diamond();
    os << "basis:";
    for (const auto& l : d.algebra.basis()) os << " " << l.str();
    os << "\n";
    for (const auto& [pq, e] : d.algebra.table())
        os << "[" << d.algebra.label_at(pq.first).str() << ","
           << d.algebra.label_at(pq.second).str() << "] = " << render_element(d.algebra, e)
           << "\n";
    Subalgebra sub{d.algebra, d.embedding};
    for (const auto& [name, m] : {std::pair<const char*, LinearMap>{"Phi", phi_map(2)},
                                  {"Psi", psi_map(2)}}) {
        LinearMap t = transport_map(d.parent, m, sub);
        os << name << ":";
        bool first = true;
        for (const auto& l : d.algebra.basis()) {
            os << (first ? " " : ", ") << l.str() << " -> "
               << render_element(d.algebra, t.apply(l));
            first = false;
        }
        os << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic engine and verification CLI for Iu_n and gl_{n+}^eps"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string command;
    for (const char* name : {"verify", "emit", "table", "enumerate", "diamond"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->callback([&command, name] { command = name; });
        if (std::string(name) != "diamond") {
            sub->add_option("--algebra", cfg.algebra, "Iu|glplus|un|gln|sl-Iu|sl-glplus");
            sub->add_option("--n", cfg.n, "size parameter (>= 1)");
        }
        if (std::string(name) == "verify" || std::string(name) == "emit" ||
            std::string(name) == "enumerate") {
            sub->add_option("--eps", cfg.eps, "specialize eps to a rational p/q");
            sub->add_option("--truncate", cfg.truncate, "reduce scalars mod eps^(k+1)");
        }
        if (std::string(name) == "emit") sub->add_option("--format", cfg.format, "sc-v1");
        sub->add_option("--out", cfg.out_path, "output file (default: stdout)");
        if (std::string(name) == "enumerate")
            sub->add_option("--max-enum", cfg.max_enum, "n! guard override (default 8)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::ofstream file;
    std::ostream* os = &std::cout;
    try {
        cfg.kind = parse_kind(cfg.algebra);
        if (command != "diamond") validate(cfg, command);
        if (!cfg.out_path.empty()) {
            file.open(cfg.out_path, std::ios::binary);
            if (!file) throw Error("cannot open output file " + cfg.out_path);
            os = &file;
        }
    } catch (const Error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (command == "verify") return cmd_verify(cfg, *os);
        if (command == "emit") return cmd_emit(cfg, *os);
        if (command == "table") return cmd_table(cfg, *os);
        if (command == "enumerate") return cmd_enumerate(cfg, *os);
        if (command == "diamond") return cmd_diamond(*os);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
