// Command line front end: evaluate amplitudes and generating functions,
// run the verification suites, emit canonical JSON or text series.
//
// Exit codes: 0 success; 1 verification failure (the first mismatched
// coefficient is printed); 2 usage error; 3 uncertifiable truncation.

#include "CLI11.hpp"
#include "json.hpp"

#include "tv/ctv.hpp"
#include "tv/fock.hpp"
#include "tv/genfun.hpp"
#include "tv/partition.hpp"
#include "tv/ring.hpp"
#include "tv/schur.hpp"
#include "tv/strip.hpp"
#include "tv/vertex.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace tv;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& s) {
    if (s.find_first_not_of(" \t") == std::string::npos) return Partition();
    return Partition::parse(s);
}

Var parse_var(const std::string& name) {
    for (int i = 0; i < kNumVars; ++i)
        if (name == kVarNames[i]) return (Var)i;
    throw UsageError("unknown variable '" + name + "'");
}

Mono parse_mono(const json& j) {
    Mono m = Mono::one();
    for (auto it = j.begin(); it != j.end(); ++it)
        m = m * Mono::var(parse_var(it.key()), it.value().get<int>());
    return m;
}

json mono_to_json(const Mono& m) {
    json j = json::object();
    for (int i = 0; i < kNumVars; ++i)
        if (m.e[i] != 0) j[kVarNames[i]] = m.e[i];
    return j;
}

json series_to_json(const USeries& s) {
    json terms = json::array();
    for (const auto& [d, poly] : s.terms())
        for (const auto& [m, c] : poly)
            terms.push_back(
                {{"u", d}, {"mono", mono_to_json(m)}, {"coeff", c.str()}});
    return {{"schema", 1}, {"terms", terms}};
}

void emit(const USeries& s, const std::string& format) {
    if (format == "json")
        std::cout << series_to_json(s).dump(2) << "\n";
    else
        std::cout << s.to_string(1 << 20) << "\n";
}

// returns false (after printing the mismatch) when the series differ
bool report_equal(const USeries& a, const USeries& b, const Cutoffs& ctx,
                  const std::string& what) {
    auto mm = first_mismatch(a, b, ctx);
    if (!mm) return true;
    std::cout << "MISMATCH " << what << ": " << mm->to_string() << "\n";
    return false;
}

// --- fock word deserialization ----------------------------------------------

SpecVars parse_specvars(const json& j) {
    if (j.is_string() && j.get<std::string>() == "principal")
        return SpecVars::principal();
    if (j.contains("shifted"))
        return SpecVars::shifted(parse_partition(j.at("shifted")));
    if (j.contains("single")) {
        const json& v = j.at("single");
        Int c(v.at("coeff").get<std::string>());
        return SpecVars::single(c, parse_mono(v.at("mono")),
                                v.at("uexp").get<int>());
    }
    throw UsageError("variable spec must be \"principal\", {\"shifted\": ...} "
                     "or {\"single\": ...}");
}

std::vector<Token> parse_word(const json& j) {
    std::vector<Token> word;
    for (const json& t : j) {
        std::string type = t.at("type").get<std::string>();
        if (type == "gamma")
            word.push_back(gamma_tok(t.at("primed").get<bool>(),
                                     t.at("plus").get<bool>(),
                                     parse_specvars(t.at("vars"))));
        else if (type == "diagq")
            word.push_back(
                DiagQTok{t.at("sign").get<int>(), parse_mono(t.at("mono"))});
        else if (type == "diagk")
            word.push_back(DiagKTok{t.at("half").get<int>()});
        else if (type == "vexp")
            word.push_back(VExpTok{t.at("block").get<int>(),
                                   parse_mono(t.at("mono")),
                                   parse_partition(t.at("beta"))});
        else
            throw UsageError("unknown token type '" + type + "'");
    }
    return word;
}

// --- strip option parsing ----------------------------------------------------

StripData parse_strip(const std::string& signs, const std::string& betas,
                      const std::string& qs, const std::string& a0,
                      const std::string& aN) {
    StripData s;
    for (char c : signs) {
        if (c == '+') s.sigma.push_back(1);
        else if (c == '-') s.sigma.push_back(-1);
        else if (c != ',' && c != ' ')
            throw UsageError("--signs takes only '+', '-' and separators");
    }
    size_t pos = 0;
    while (true) {
        size_t next = betas.find(';', pos);
        s.beta.push_back(parse_partition(betas.substr(
            pos, next == std::string::npos ? next : next - pos)));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (!qs.empty()) {
        pos = 0;
        while (true) {
            size_t next = qs.find(',', pos);
            s.Q.push_back(Mono::var(parse_var(qs.substr(
                pos, next == std::string::npos ? next : next - pos))));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    s.alpha0 = parse_partition(a0);
    s.alphaN = parse_partition(aN);
    if (s.beta.size() != s.sigma.size())
        throw UsageError("--betas must list one partition per sign");
    if (s.Q.size() + 1 != s.sigma.size())
        throw UsageError("--q must list one Kaehler variable per internal edge");
    return s;
}

// --- verification drivers -----------------------------------------------------

std::vector<std::pair<Partition, Partition>> outer_pairs(int max_size) {
    std::vector<std::pair<Partition, Partition>> g;
    for (const auto& b1 : partitions_up_to(max_size))
        for (const auto& b2 : partitions_up_to(max_size)) g.emplace_back(b1, b2);
    return g;
}

int verify_ctv(const std::string& which, int max_size, int qdeg, int trunc,
               int pdeg, int umax) {
    const Cutoffs ctx{trunc, qdeg};
    for (const auto& [b1, b2] : outer_pairs(max_size)) {
        std::string tag =
            "(" + b1.to_string() + ")x(" + b2.to_string() + ")";
        if (which == "theorem1") {
            if (!report_equal(ctv_bruteforce(b1, b2, ctx),
                              ctv_closed(b1, b2, ctx), ctx, tag))
                return 1;
        } else if (which == "theorem5") {
            if (!report_equal(flop_bruteforce(b1, b2, ctx),
                              flop_closed(b1, b2, ctx), ctx, tag))
                return 1;
        } else {  // flop-match
            if (auto mm = flop_match(b1, b2, pdeg, umax)) {
                std::cout << "MISMATCH " << tag << ": " << mm->to_string()
                          << "\n";
                return 1;
            }
        }
        std::cout << "ok " << tag << "\n";
    }
    return 0;
}

int verify_qdiff(const std::string& which_list, int xdeg, int qdeg, int trunc) {
    const Cutoffs ctx{trunc, qdeg};
    QDiffOperators ops = build_operators();
    // the row (tilde) operators annihilate the shifted series f(qx)
    QDiffOp S = qd_term(0, 1, USeries::one());
    XSeries psi, psit;
    std::stringstream ss(which_list);
    std::string which;
    while (std::getline(ss, which, ',')) {
        bool tilde = which == "Ktilde" || which == "Htilde";
        const QDiffOp* base = which == "K"        ? &ops.K
                              : which == "H"      ? &ops.H
                              : which == "Ktilde" ? &ops.Kt
                              : which == "Htilde" ? &ops.Ht
                                                  : nullptr;
        if (!base)
            throw UsageError("--which entries must be K, H, Ktilde or Htilde");
        XSeries& f = tilde ? psit : psi;
        if (f.empty()) f = psi_series(tilde, xdeg, ctx);
        QDiffOp op = tilde ? qd_compose(*base, S) : *base;
        XSeries out = apply_qdiff(op, f, ctx);
        for (size_t k = 0; k < out.size() && k + 2 <= (size_t)xdeg; ++k)
            if (!report_equal(out[k], USeries::zero(), ctx,
                              which + " residual at x^" + std::to_string(k)))
                return 1;
        std::cout << "ok " << which << " annihilates the wave function\n";
    }
    return 0;
}

json polygon_json(const std::vector<std::pair<int, int>>& poly) {
    json out = json::array();
    for (auto [x, y] : poly) out.push_back({x, y});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    // accepted for interface compatibility; evaluation is single-threaded
    if (const char* t = std::getenv("TOPVERTEX_THREADS")) (void)t;

    CLI::App app{"closed-topological-vertex amplitudes, two ways"};
    app.require_subcommand(1);

    int qdeg = 3, trunc = 16, xdeg = 6, max_size = 2;
    std::string format = "json";

    // vertex eval
    auto* vertex_cmd = app.add_subcommand("vertex", "single trivalent vertex");
    auto* vertex_eval = vertex_cmd->add_subcommand("eval", "evaluate C_{lam,mu,nu}");
    std::string lam, mu, nu;
    vertex_eval->add_option("--lam", lam, "first leg partition");
    vertex_eval->add_option("--mu", mu, "second leg partition");
    vertex_eval->add_option("--nu", nu, "third leg partition");
    vertex_eval->add_option("--trunc", trunc, "u-window");
    vertex_eval->add_option("--qdeg", qdeg, "(unused; kept for uniformity)");
    vertex_eval->add_option("--format", format, "json|text");

    // strip eval
    auto* strip_cmd = app.add_subcommand("strip", "triangulated strip");
    auto* strip_eval = strip_cmd->add_subcommand("eval", "evaluate an amplitude");
    std::string signs, betas, qvars, alpha0, alphaN, route = "fermionic";
    strip_eval->add_option("--signs", signs, "vertex signs, e.g. \"+-,+\"")
        ->required();
    strip_eval->add_option("--betas", betas, "';'-separated leg partitions")
        ->required();
    strip_eval->add_option("--q", qvars, "','-separated edge variables");
    strip_eval->add_option("--alpha0", alpha0, "left external partition");
    strip_eval->add_option("--alphaN", alphaN, "right external partition");
    strip_eval->add_option("--route", route, "fermionic|closed|both");
    strip_eval->add_option("--qdeg", qdeg, "Kaehler degree window");
    strip_eval->add_option("--trunc", trunc, "u-window");
    strip_eval->add_option("--format", format, "json|text");

    // ctv amplitude / verify
    auto* ctv_cmd = app.add_subcommand("ctv", "closed topological vertex");
    auto* ctv_amp = ctv_cmd->add_subcommand("amplitude", "evaluate Z_{b1,b2}");
    std::string beta1, beta2, ctv_route = "closed";
    ctv_amp->add_option("--beta1", beta1, "first outer partition");
    ctv_amp->add_option("--beta2", beta2, "second outer partition");
    ctv_amp->add_option("--route", ctv_route, "closed|bruteforce|both");
    ctv_amp->add_option("--qdeg", qdeg, "Kaehler degree window");
    ctv_amp->add_option("--trunc", trunc, "u-window");
    ctv_amp->add_option("--format", format, "json|text");
    auto* ctv_verify = ctv_cmd->add_subcommand("verify", "route comparisons");
    std::string ctv_which;
    int pdeg = 2, umax = 10;
    ctv_verify
        ->add_option("which", ctv_which, "theorem1|theorem5|flop-match")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem5", "flop-match"}));
    ctv_verify->add_option("--max-size", max_size, "outer partition size cap");
    ctv_verify->add_option("--qdeg", qdeg, "Kaehler degree window");
    ctv_verify->add_option("--trunc", trunc, "u-window");
    ctv_verify->add_option("--pdeg", pdeg, "P-degree cap (flop-match)");
    ctv_verify->add_option("--umax", umax, "u-window (flop-match)");

    // fock word
    auto* fock_cmd = app.add_subcommand("fock", "operator words");
    auto* fock_word = fock_cmd->add_subcommand("word", "evaluate <bra|word|ket>");
    std::string spec_path, bra, ket;
    std::optional<int> max_intermediate;
    fock_word->add_option("--spec", spec_path, "JSON token array")->required();
    fock_word->add_option("--bra", bra, "bra partition");
    fock_word->add_option("--ket", ket, "ket partition");
    fock_word->add_option("--qdeg", qdeg, "Kaehler degree window");
    fock_word->add_option("--trunc", trunc, "u-window");
    fock_word->add_option("--max-intermediate", max_intermediate,
                          "cap on intermediate partition sizes");
    fock_word->add_option("--format", format, "json|text");

    // genfun psi / verify qdiff / mirror-curve
    auto* gf_cmd = app.add_subcommand("genfun", "brane wave functions");
    auto* gf_psi = gf_cmd->add_subcommand("psi", "wave function coefficients");
    bool tilde = false;
    std::string emit_fmt = "json";
    gf_psi->add_flag("--tilde", tilde, "row (conjugate) series");
    gf_psi->add_option("--xdeg", xdeg, "x-degree");
    gf_psi->add_option("--qdeg", qdeg, "Kaehler degree window");
    gf_psi->add_option("--trunc", trunc, "u-window");
    gf_psi->add_option("--emit", emit_fmt, "json|text");
    auto* gf_verify = gf_cmd->add_subcommand("verify", "identity checks");
    auto* gf_qdiff = gf_verify->add_subcommand("qdiff", "annihilation checks");
    std::string which_ops = "K,Ktilde,H,Htilde";
    gf_qdiff->add_option("--which", which_ops, "comma list: K,Ktilde,H,Htilde");
    gf_qdiff->add_option("--xdeg", xdeg, "x-degree");
    gf_qdiff->add_option("--qdeg", qdeg, "Kaehler degree window");
    gf_qdiff->add_option("--trunc", trunc, "u-window");
    auto* gf_curve = gf_cmd->add_subcommand("mirror-curve", "classical limit");
    std::string curve_which = "K", curve_emit = "polygon";
    gf_curve->add_option("--which", curve_which, "K|Ktilde");
    gf_curve->add_option("--emit", curve_emit, "polygon|coeffs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Cutoffs ctx{trunc, qdeg};
        if (vertex_eval->parsed()) {
            emit(vertex(parse_partition(lam), parse_partition(mu),
                        parse_partition(nu), ctx),
                 format);
        } else if (strip_eval->parsed()) {
            StripData s = parse_strip(signs, betas, qvars, alpha0, alphaN);
            if (route == "closed" || route == "both") {
                if (s.alpha0.size() + s.alphaN.size() > 0)
                    throw UsageError(
                        "the closed route requires empty external legs");
                USeries closed = strip_closed(s, ctx);
                if (route == "both" &&
                    !report_equal(strip_fermionic(s, ctx), closed, ctx,
                                  "fermionic vs closed"))
                    return 1;
                emit(closed, format);
            } else if (route == "fermionic") {
                emit(strip_fermionic(s, ctx), format);
            } else {
                throw UsageError("--route must be fermionic, closed or both");
            }
        } else if (ctv_amp->parsed()) {
            Partition b1 = parse_partition(beta1), b2 = parse_partition(beta2);
            if (ctv_route == "closed") {
                emit(ctv_closed(b1, b2, ctx), format);
            } else if (ctv_route == "bruteforce") {
                emit(ctv_bruteforce(b1, b2, ctx), format);
            } else if (ctv_route == "both") {
                USeries closed = ctv_closed(b1, b2, ctx);
                if (!report_equal(ctv_bruteforce(b1, b2, ctx), closed, ctx,
                                  "gluing sum vs closed"))
                    return 1;
                emit(closed, format);
            } else {
                throw UsageError("--route must be closed, bruteforce or both");
            }
        } else if (ctv_verify->parsed()) {
            return verify_ctv(ctv_which, max_size, qdeg, trunc, pdeg, umax);
        } else if (fock_word->parsed()) {
            std::ifstream in(spec_path);
            if (!in) throw UsageError("cannot open " + spec_path);
            json j = json::parse(in);
            EvalOptions opts;
            opts.max_intermediate = max_intermediate;
            emit(evaluate_word(parse_word(j), parse_partition(bra),
                               parse_partition(ket), ctx, opts),
                 format);
        } else if (gf_psi->parsed()) {
            XSeries f = psi_series(tilde, xdeg, ctx);
            if (emit_fmt == "json") {
                json out = json::array();
                for (const auto& s : f) out.push_back(series_to_json(s));
                std::cout << json{{"schema", 1}, {"xseries", out}}.dump(2)
                          << "\n";
            } else {
                for (size_t k = 0; k < f.size(); ++k)
                    std::cout << "x^" << k << ": " << f[k].to_string(1 << 20)
                              << "\n";
            }
        } else if (gf_qdiff->parsed()) {
            return verify_qdiff(which_ops, xdeg, qdeg, trunc);
        } else if (gf_curve->parsed()) {
            QDiffOperators ops = build_operators();
            if (curve_which != "K" && curve_which != "Ktilde")
                throw UsageError("--which must be K or Ktilde");
            XYPoly cl =
                classical_limit(curve_which == "K" ? ops.K : ops.Kt);
            if (curve_emit == "polygon") {
                std::cout << polygon_json(newton_polygon(cl)).dump() << "\n";
            } else if (curve_emit == "coeffs") {
                json out = json::array();
                for (const auto& [xy, poly] : cl)
                    for (const auto& [m, c] : poly)
                        out.push_back({{"x", xy.first},
                                       {"y", xy.second},
                                       {"mono", mono_to_json(m)},
                                       {"coeff", c.str()}});
                std::cout << json{{"schema", 1}, {"terms", out}}.dump(2)
                          << "\n";
            } else {
                throw UsageError("--emit must be polygon or coeffs");
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UncertifiableTruncation& e) {
        std::cerr << "uncertifiable truncation: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
