#pragma once

/*
 * Command-line surface. Subcommands:
 *
 *   descendant --nu 2,1            descendant state as a Fock vector
 *   matrix --level N [--dual]      descendant coordinate matrix
 *   shapovalov --level N           Shapovalov matrix
 *   kac-det --level N              determinant vs. Kac product, ratio table
 *   projection --level N [--at-kac r,s]
 *   kernel --r R --s S --level N   kernel of the projection at a Kac point
 *   singular-vector --r R --s S
 *   classify --branch ... --r R --s S
 *   partitions --level N [--poset]
 *   pole-tree --type 3,1 [--base rect:R,S]
 *   verify --suite all|virasoro|kac|poset|poles [--max-level N]
 *
 * Exit codes: 0 success, 1 failed verification/contract, 2 usage error.
 * Output is deterministic: byte-identical across runs for fixed flags.
 */

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vff/json_io.hpp"
#include "vff/verify.hpp"

namespace vff {
namespace cli {

struct CommandConfig {
    std::string format = "json";  // json | csv | pretty (dot for graph output)
    std::string output_path;
    std::string gamma = "symbolic";
    std::string alpha = "symbolic";
    std::string p0 = "one";
};

namespace detail {

inline std::uint32_t max_level_cap() {
    if (const char* env = std::getenv("VFF_MAX_LEVEL")) {
        const long v = std::atol(env);
        if (v >= 1) return std::uint32_t(v);
    }
    return 8;
}

inline Partition parse_partition(const std::string& text) {
    std::vector<std::uint32_t> cols;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ParseError("empty partition entry in: " + text);
        std::size_t pos = 0;
        const long v = std::stol(item, &pos);
        if (pos != item.size() || v < 1) throw ParseError("bad partition entry: " + item);
        cols.push_back(std::uint32_t(v));
    }
    if (cols.empty()) throw ParseError("empty partition: " + text);
    return Partition::sorted(std::move(cols));
}

inline std::pair<std::uint32_t, std::uint32_t> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("expected r,s in: " + text);
    const long r = std::stol(text.substr(0, comma));
    const long s = std::stol(text.substr(comma + 1));
    if (r < 1 || s < 1) throw ParseError("kac indices must be >= 1: " + text);
    return {std::uint32_t(r), std::uint32_t(s)};
}

inline std::optional<Rational> parse_gamma(const std::string& text) {
    if (text == "symbolic") return std::nullopt;
    const Rational g = Rational::from_string(text);
    if (g <= Rational(0) || g >= Rational(2)) throw InvalidGamma("gamma = " + text + " outside (0,2)");
    return g;
}

inline Scalar parse_alpha(const std::string& text) {
    if (text == "symbolic") return Scalar::alpha();
    if (text.rfind("kac:", 0) == 0) {
        const auto [r, s] = parse_pair(text.substr(4));
        return kac_alpha(long(r), Rational(long(s)));
    }
    return Scalar(Rational::from_string(text));
}

inline void write_out(const CommandConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output_path.empty()) {
        out << text;
        if (text.empty() || text.back() != '\n') out << '\n';
        return;
    }
    std::ofstream f(cfg.output_path, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + cfg.output_path);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

inline Scalar maybe_substitute(const Scalar& x, const std::optional<Rational>& gamma) {
    return gamma ? x.substitute(Scalar(*gamma), Scalar::alpha()) : x;
}

inline ScalarMatrix maybe_substitute(const ScalarMatrix& m, const std::optional<Rational>& gamma) {
    return gamma ? m.substitute(Scalar(*gamma), Scalar::alpha()) : m;
}

inline FockVector maybe_substitute(const FockVector& v, const std::optional<Rational>& gamma) {
    return gamma ? v.substitute(Scalar(*gamma), Scalar::alpha()) : v;
}

inline std::string matrix_pretty(const ScalarMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < m.row_index.size()) os << m.row_index[i].str() << ": ";
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m.at(i, j).str();
        }
        os << "]\n";
    }
    return os.str();
}

inline std::string emit_matrix(const CommandConfig& cfg, const ScalarMatrix& m) {
    if (cfg.format == "pretty") return matrix_pretty(m);
    return to_json(m).dump(2);
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail;

    CLI::App app{"exact Virasoro computations in the free-field realization"};
    app.require_subcommand(1);
    app.fallthrough();

    CommandConfig cfg;
    app.add_option("--format", cfg.format, "output format: json, csv, pretty, dot")
        ->default_val("json");
    app.add_option("--output", cfg.output_path, "write output to a file instead of stdout");
    app.add_option("--gamma", cfg.gamma, "symbolic (default) or a rational in (0,2), e.g. 6/5");
    app.add_option("--alpha", cfg.alpha, "symbolic (default), a rational, or kac:r,s");
    app.add_option("--p0-convention", cfg.p0, "value of p(0): one (default) or zero");

    std::string nu_text, type_text, base_text = "empty", branch_text, suite = "all";
    std::uint32_t level = 1, opt_r = 0, opt_s = 0, smooth = 0;
    std::uint32_t max_level = 4;
    std::string at_kac_text;
    bool dual = false, poset = false;
    std::string basis_text = "phi";

    auto* c_desc = app.add_subcommand("descendant", "descendant state for a partition");
    c_desc->add_option("--nu", nu_text, "partition, e.g. 2,1")->required();

    auto* c_matrix = app.add_subcommand("matrix", "descendant coordinate matrix at a level");
    c_matrix->add_option("--level", level)->required();
    c_matrix->add_flag("--dual", dual, "use the reflected weight 2Q - alpha");
    c_matrix->add_option("--basis", basis_text, "phi (default) or pi");

    auto* c_shap = app.add_subcommand("shapovalov", "Shapovalov matrix at a level");
    c_shap->add_option("--level", level)->required();

    auto* c_kac = app.add_subcommand("kac-det", "Kac determinant factorization check");
    c_kac->add_option("--level", level)->required();

    auto* c_proj = app.add_subcommand("projection", "canonical projection matrix");
    c_proj->add_option("--level", level)->required();
    c_proj->add_option("--at-kac", at_kac_text, "substitute alpha = a_{r,s}, e.g. 1,1");

    auto* c_ker = app.add_subcommand("kernel", "kernel of the projection at a Kac point");
    c_ker->add_option("--r", opt_r)->required();
    c_ker->add_option("--s", opt_s)->required();
    c_ker->add_option("--level", level)->required();

    auto* c_sing = app.add_subcommand("singular-vector", "singular vector at a Kac point");
    c_sing->add_option("--r", opt_r)->required();
    c_sing->add_option("--s", opt_s)->required();

    auto* c_class = app.add_subcommand("classify", "module class at a point");
    c_class->add_option("--branch", branch_text, "not-kac, kac-minus, kac-plus")->required();
    c_class->add_option("--r", opt_r);
    c_class->add_option("--s", opt_s);

    auto* c_part = app.add_subcommand("partitions", "partitions of a level");
    c_part->add_option("--level", level)->required();
    c_part->add_flag("--poset", poset, "emit the elementary-move graph as DOT");

    auto* c_pole = app.add_subcommand("pole-tree", "reduction tree of a singular-integral type");
    c_pole->add_option("--type", type_text, "singularity orders, e.g. 3,1")->required();
    c_pole->add_option("--smooth", smooth, "number of smooth insertions");
    c_pole->add_option("--base", base_text, "empty (default) or rect:r,s");

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", suite, "all, virasoro, kac, poset, poles");
    c_verify->add_option("--max-level", max_level, "level cap for the suite");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("vff");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const std::optional<Rational> gamma = parse_gamma(cfg.gamma);
        const Scalar alpha = parse_alpha(cfg.alpha);
        const P0Convention p0 = cfg.p0 == "zero" ? P0Convention::Zero : P0Convention::One;
        const std::uint32_t cap = max_level_cap();
        if (level > cap) throw ParseError("--level exceeds the VFF_MAX_LEVEL cap of " + std::to_string(cap));

        if (*c_desc) {
            const Partition nu = parse_partition(nu_text);
            if (nu.level() > cap) throw ParseError("--nu level exceeds the VFF_MAX_LEVEL cap");
            const FockVector d = maybe_substitute(descendant(alpha, nu), gamma);
            Json word = Json::array();  // modes in application order
            for (auto part : nu.columns()) word.push_back(-long(part));
            if (cfg.format == "pretty") {
                std::ostringstream os;
                os << "word:";
                for (auto part : nu.columns()) os << " L(" << -long(part) << ")";
                os << "\n" << d.str() << "\n";
                write_out(cfg, os.str(), out);
            } else {
                Json j{{"nu", to_json(nu)}, {"word", word}, {"state", to_json(d)}};
                write_out(cfg, j.dump(2), out);
            }
            return 0;
        }
        if (*c_matrix) {
            const Scalar a = dual ? reflect(alpha) : alpha;
            const Basis basis = basis_text == "pi" ? Basis::Pi : Basis::Phi;
            write_out(cfg, emit_matrix(cfg, maybe_substitute(descendant_matrix(level, a, basis), gamma)), out);
            return 0;
        }
        if (*c_shap) {
            write_out(cfg, emit_matrix(cfg, maybe_substitute(shapovalov_matrix(level, alpha), gamma)), out);
            return 0;
        }
        if (*c_kac) {
            const KacDeterminantResult res = kac_determinant_check(level, p0);
            if (cfg.format == "csv") {
                write_out(cfg, kac_factors_csv(res), out);
            } else if (cfg.format == "pretty") {
                std::ostringstream os;
                os << "level " << level << ": ratio = " << res.ratio.str() << ", status OK\n";
                for (const auto& f : res.factors)
                    os << "  (" << f.r << "," << f.s << ")^" << f.exponent << "\n";
                write_out(cfg, os.str(), out);
            } else {
                Json factors = Json::array();
                for (const auto& f : res.factors)
                    factors.push_back(Json{{"r", f.r}, {"s", f.s}, {"exponent", f.exponent}});
                Json j{{"level", level},
                       {"ratio", to_json(maybe_substitute(res.ratio, gamma))},
                       {"status", "OK"},
                       {"factors", factors}};
                write_out(cfg, j.dump(2), out);
            }
            return 0;
        }
        if (*c_proj) {
            std::optional<std::pair<std::uint32_t, std::uint32_t>> at_kac;
            if (!at_kac_text.empty()) at_kac = parse_pair(at_kac_text);
            write_out(cfg, emit_matrix(cfg, maybe_substitute(projection_matrix(level, alpha, at_kac), gamma)),
                      out);
            return 0;
        }
        if (*c_ker) {
            const auto basis = kernel_basis(opt_r, opt_s, level, gamma);
            const auto labels = enumerate_level(level);
            if (cfg.format == "pretty") {
                std::ostringstream os;
                os << "dimension " << basis.size() << "\n";
                for (const auto& vec : basis) {
                    for (std::size_t j = 0; j < vec.size(); ++j)
                        if (!vec[j].is_zero()) os << "  " << labels[j].str() << ": " << vec[j].str() << "\n";
                    os << "  --\n";
                }
                write_out(cfg, os.str(), out);
            } else {
                Json vecs = Json::array();
                for (const auto& vec : basis) {
                    Json v = Json::array();
                    for (const auto& c : vec) v.push_back(to_json(c));
                    vecs.push_back(v);
                }
                Json nus = Json::array();
                for (const auto& p : labels) nus.push_back(to_json(p));
                Json j{{"r", opt_r}, {"s", opt_s}, {"level", level},
                       {"dimension", basis.size()}, {"nu", nus}, {"basis", vecs}};
                write_out(cfg, j.dump(2), out);
            }
            return 0;
        }
        if (*c_sing) {
            if (opt_r * opt_s > cap) throw ParseError("rs exceeds the VFF_MAX_LEVEL cap");
            SingularVectorResult sv = singular_vector(opt_r, opt_s);
            if (gamma) {
                for (auto& [nu, c] : sv.sigma) c = maybe_substitute(c, gamma);
                sv.realized_at_dual = maybe_substitute(sv.realized_at_dual, gamma);
                sv.realized_at_kac = maybe_substitute(sv.realized_at_kac, gamma);
            }
            if (cfg.format == "pretty") {
                std::ostringstream os;
                os << "singular vector at (" << sv.r << "," << sv.s << ")\n";
                for (const auto& [nu, c] : sv.sigma) os << "  sigma" << nu.str() << " = " << c.str() << "\n";
                os << "dual state: " << sv.realized_at_dual.str() << "\n";
                write_out(cfg, os.str(), out);
            } else {
                write_out(cfg, to_json(sv).dump(2), out);
            }
            return 0;
        }
        if (*c_class) {
            KacBranch branch;
            if (branch_text == "not-kac") branch = KacBranch::NotKac;
            else if (branch_text == "kac-minus") branch = KacBranch::KacMinus;
            else if (branch_text == "kac-plus") branch = KacBranch::KacPlus;
            else throw ParseError("unknown branch: " + branch_text);
            if (branch != KacBranch::NotKac && (opt_r < 1 || opt_s < 1))
                throw ParseError("--r and --s are required on kac branches");
            const ModuleClass verdict = classify(branch, opt_r, opt_s, GammaMode{gamma});
            const char* name = verdict == ModuleClass::Verma ? "verma"
                               : verdict == ModuleClass::IrreducibleQuotient ? "irreducible-quotient"
                                                                             : "zero";
            if (cfg.format == "pretty") {
                write_out(cfg, std::string("verdict: ") + name, out);
            } else {
                Json j{{"branch", branch_text}, {"gamma", cfg.gamma}, {"verdict", name}};
                if (branch != KacBranch::NotKac) {
                    j["r"] = opt_r;
                    j["s"] = opt_s;
                }
                write_out(cfg, j.dump(2), out);
            }
            return 0;
        }
        if (*c_part) {
            if (poset) {
                write_out(cfg, poset_dot(level), out);
            } else if (cfg.format == "pretty") {
                std::ostringstream os;
                for (const auto& p : enumerate_level(level)) os << p.str() << "\n";
                write_out(cfg, os.str(), out);
            } else {
                Json j = Json::array();
                for (const auto& p : enumerate_level(level)) j.push_back(to_json(p));
                write_out(cfg, j.dump(2), out);
            }
            return 0;
        }
        if (*c_pole) {
            const Partition p = parse_partition(type_text);
            if (p.level() > cap) throw ParseError("--type level exceeds the VFF_MAX_LEVEL cap");
            ReductionBase base = ReductionBase::empty_only();
            if (base_text != "empty") {
                if (base_text.rfind("rect:", 0) != 0) throw ParseError("--base must be empty or rect:r,s");
                const auto [r, s] = parse_pair(base_text.substr(5));
                base = ReductionBase::rect(r, s);
            }
            const auto tree = reduction_tree(IntegralType(p, smooth), base);
            if (cfg.format == "dot") {
                write_out(cfg, reduction_dot(*tree), out);
            } else {
                write_out(cfg, to_json(*tree).dump(2), out);
            }
            return 0;
        }
        if (*c_verify) {
            std::vector<VerifyItem> items;
            auto append = [&items](const std::vector<VerifyItem>& more) {
                items.insert(items.end(), more.begin(), more.end());
            };
            if (suite == "virasoro" || suite == "all") append(verify_virasoro(max_level));
            if (suite == "kac" || suite == "all") append(verify_kac(max_level, p0));
            if (suite == "poset" || suite == "all") append(verify_poset(std::max(max_level, 8u)));
            if (suite == "poles" || suite == "all") append(verify_poles(std::max(max_level, 6u)));
            if (items.empty()) throw ParseError("unknown suite: " + suite);
            std::ostringstream os;
            bool all_ok = true;
            for (const auto& item : items) {
                os << (item.passed ? "[PASS] " : "[FAIL] ") << item.name << "\n";
                all_ok = all_ok && item.passed;
            }
            os << (all_ok ? "verification passed" : "verification FAILED") << "\n";
            write_out(cfg, os.str(), out);
            return all_ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidGamma& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidIndex& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace cli
} // namespace vff
