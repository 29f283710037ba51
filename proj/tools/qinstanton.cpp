// qinstanton: instanton idempotents over the quantum 4-sphere and their
// charge pairings -- normal forms, certificates, numeric Chern pairings and
// the classical winding check, from the command line.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "qinst/commands.hpp"

namespace {

int emit(const qinst::cli::CmdResult& r) {
    if (!r.out.empty()) std::fputs(r.out.c_str(), stdout);
    if (!r.err.empty()) std::fputs(r.err.c_str(), stderr);
    return r.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum 4-sphere instanton toolkit"};
    app.require_subcommand(1);

    qinst::cli::NfOptions nf;
    CLI::App* nf_cmd = app.add_subcommand("nf", "normal form of an expression in a A b B q");
    nf_cmd->add_option("expr", nf.expr, "expression, e.g. \"a b - q b a\"")->required();
    nf_cmd->add_flag("--unicode", nf.unicode, "render alpha/beta with unicode");

    qinst::cli::PnOptions pn;
    CLI::App* pn_cmd = app.add_subcommand("pn", "build the charge -n instanton idempotent");
    pn_cmd->add_option("-n,--n", pn.n, "charge parameter")->required();
    pn_cmd->add_option("--q", pn.q_mode, "generic (default) or an exact rational like 3/5");
    pn_cmd->add_flag("--check", pn.check, "run the verification certificate");
    pn_cmd->add_option("--max-n", pn.max_n, "largest |n| accepted");
    pn_cmd->add_flag("--no-cache", pn.no_cache, "bypass the result cache");
    pn_cmd->add_option("--cache-dir", pn.cache_dir, "override the cache directory");

    qinst::cli::PairingOptions pairing;
    CLI::App* pair_cmd = app.add_subcommand("pairing", "odd Chern pairing of a unitary");
    pair_cmd->add_option("--u", pairing.u, "U, U^<n>, or V");
    pair_cmd->add_option("--k", pairing.k, "pairing level");
    pair_cmd->add_option("--q0", pairing.q0, "deformation parameter in (0,1)");
    pair_cmd->add_option("--M", pairing.m_cut, "m-cutoff of the truncated basis");
    pair_cmd->add_option("--N", pairing.n_win, "n-window (0 = derived)");
    pair_cmd->add_option("--tol", pairing.tol, "integrality tolerance");
    pair_cmd->add_option("--max-n", pairing.max_n, "largest |n| accepted");
    pair_cmd->add_option("--format", pairing.format, "json or text");
    pair_cmd->add_flag("--no-cache", pairing.no_cache, "bypass the result cache");
    pair_cmd->add_option("--cache-dir", pairing.cache_dir, "override the cache directory");

    qinst::cli::WindingOptions winding;
    CLI::App* wind_cmd = app.add_subcommand("winding", "classical mapping degree check");
    wind_cmd->add_option("-n,--n", winding.n, "winding number")->required();
    wind_cmd->add_option("--resolution", winding.resolution, "quadrature grid parameter");
    wind_cmd->add_option("--tol", winding.tol, "acceptance tolerance");
    wind_cmd->add_option("--max-n", winding.max_n, "largest |n| accepted");

    qinst::cli::HopfOptions hopf;
    CLI::App* hopf_cmd = app.add_subcommand("hopf-check", "exact Hopf *-algebra property suite");
    hopf_cmd->add_option("--trials", hopf.trials, "random triples for the ring laws");
    hopf_cmd->add_option("--seed", hopf.seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return qinst::cli::kUsage;
    }

    if (nf_cmd->parsed()) return emit(qinst::cli::cmd_nf(nf));
    if (pn_cmd->parsed()) return emit(qinst::cli::cmd_pn(pn));
    if (pair_cmd->parsed()) return emit(qinst::cli::cmd_pairing(pairing));
    if (wind_cmd->parsed()) return emit(qinst::cli::cmd_winding(winding));
    if (hopf_cmd->parsed()) return emit(qinst::cli::cmd_hopf_check(hopf));
    return qinst::cli::kUsage;
}
