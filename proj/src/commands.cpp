#include "qinst/commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qinst/bspace.hpp"
#include "qinst/cache.hpp"
#include "qinst/expr.hpp"
#include "qinst/fredholm.hpp"

namespace qinst::cli {

namespace {

using ojson = nlohmann::ordered_json;

// 12 significant digits, stable across runs
double json_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

ResultCache make_cache(const std::string& override_dir) {
    return override_dir.empty() ? ResultCache() : ResultCache(override_dir);
}

CmdResult usage_error(const std::string& msg) { return {kUsage, "", msg + "\n"}; }

}  // namespace

CmdResult cmd_nf(const NfOptions& opt) {
    try {
        HElement h = eval(parse(opt.expr));
        return {kOk, h.to_string(opt.unicode) + "\n", ""};
    } catch (const parse_error& e) {
        return usage_error(e.what());
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const budget_error& e) {
        return {kBudgetExceeded, "", std::string(e.what()) + "\n"};
    }
}

CmdResult cmd_pn(const PnOptions& opt) {
    if (std::abs(opt.n) > opt.max_n)
        return usage_error("pn: |n| exceeds the configured maximum " +
                           std::to_string(opt.max_n));
    std::optional<Rational> q0;
    if (opt.q_mode != "generic") {
        try {
            Rational q = Rational::from_string(opt.q_mode);
            if (q.is_zero()) return usage_error("pn: q must be nonzero");
            q0 = q;
        } catch (const std::exception&) {
            return usage_error("pn: --q expects 'generic' or an exact rational like 3/5");
        }
    }

    const std::string key = "pn|n=" + std::to_string(opt.n) + "|q=" + opt.q_mode +
                            "|check=" + (opt.check ? "1" : "0") + "|v1";
    // only passing results are cached, so a hit always replays exit 0
    ResultCache cache = make_cache(opt.cache_dir);
    if (!opt.no_cache) {
        if (auto hit = cache.lookup(key)) return {kOk, *hit, ""};
    }

    try {
        BMatrix p = instanton_idempotent(opt.n);
        ojson j;
        j["schema_version"] = "1";
        j["command"] = "pn";
        j["n"] = opt.n;
        j["q_mode"] = opt.q_mode;
        bool ok = true;
        if (opt.check) {
            Certificate cert = verify(p, q0, opt.n);
            ojson checks;
            for (const auto& c : cert.checks) {
                ojson one;
                one["pass"] = c.pass;
                one["residual_terms"] = c.residuals;
                checks[c.name] = one;
                // star_invariant is reported, not gated: the block-formula
                // idempotents are not self-adjoint away from the seam
                if (c.name != "star_invariant" && !c.pass) ok = false;
            }
            j["checks"] = checks;
            j["entries"] = cert.entries;
        } else {
            std::vector<std::string> entries;
            for (int i = 0; i < p.dim(); ++i)
                for (int jj = 0; jj < p.dim(); ++jj) entries.push_back(p(i, jj).to_string());
            j["entries"] = entries;
        }
        std::string out = dump(j);
        if (!opt.no_cache && ok) cache.store(key, out);
        return {ok ? kOk : kCheckFailed, out, ""};
    } catch (const budget_error& e) {
        return {kBudgetExceeded, "", std::string(e.what()) + "\n"};
    }
}

CmdResult cmd_pairing(const PairingOptions& opt) {
    if (!(opt.q0 > 0.0 && opt.q0 < 1.0))
        return usage_error("pairing: --q0 must lie strictly inside (0,1)");
    if (opt.k < 0) return usage_error("pairing: --k must be nonnegative");
    if (opt.tol <= 0) return usage_error("pairing: --tol must be positive");
    if (opt.format != "json" && opt.format != "text")
        return usage_error("pairing: --format must be json or text");

    int power = 1;
    bool is_v = false;
    if (opt.u == "V") {
        is_v = true;
    } else if (opt.u == "U") {
        power = 1;
    } else if (opt.u.rfind("U^", 0) == 0) {
        try {
            power = std::stoi(opt.u.substr(2));
        } catch (const std::exception&) {
            return usage_error("pairing: --u expects U, U^<integer>, or V");
        }
    } else {
        return usage_error("pairing: --u expects U, U^<integer>, or V");
    }
    if (!is_v && std::abs(power) > opt.max_n)
        return usage_error("pairing: |n| exceeds the configured maximum " +
                           std::to_string(opt.max_n));

    char q0txt[32];
    std::snprintf(q0txt, sizeof q0txt, "%.12g", opt.q0);
    const std::string key = "pairing|u=" + opt.u + "|k=" + std::to_string(opt.k) +
                            "|q0=" + q0txt + "|M=" + std::to_string(opt.m_cut) +
                            "|N=" + std::to_string(opt.n_win) + "|fmt=" + opt.format + "|v1";
    ResultCache cache = make_cache(opt.cache_dir);
    auto finish = [&](const PairingResult& r) -> CmdResult {
        const bool pass = std::abs(r.value - double(r.nearest_integer)) <= opt.tol;
        std::string out;
        if (opt.format == "json") {
            ojson j;
            j["schema_version"] = "1";
            j["command"] = "pairing";
            j["u_descriptor"] = r.u_descriptor;
            j["n"] = r.n;
            j["k"] = r.k;
            j["q0"] = json_real(r.q0);
            j["M"] = r.m_cut;
            j["N"] = r.n_win;
            j["value"] = json_real(r.value);
            j["error_bound"] = json_real(r.error_bound);
            j["nearest_integer"] = r.nearest_integer;
            j["tol"] = json_real(opt.tol);
            j["pass"] = pass;
            out = dump(j);
        } else {
            char buf[256];
            std::ostringstream os;
            os << "pairing report\n";
            std::snprintf(buf, sizeof buf, "  %-16s %s\n", "u", r.u_descriptor.c_str());
            os << buf;
            std::snprintf(buf, sizeof buf, "  %-16s %d\n", "k", r.k);
            os << buf;
            std::snprintf(buf, sizeof buf, "  %-16s %.12g\n", "q0", r.q0);
            os << buf;
            std::snprintf(buf, sizeof buf, "  %-16s %d / %d\n", "M / N", r.m_cut, r.n_win);
            os << buf;
            std::snprintf(buf, sizeof buf, "  %-16s %.12f\n", "value", r.value);
            os << buf;
            std::snprintf(buf, sizeof buf, "  %-16s %.3e\n", "error_bound", r.error_bound);
            os << buf;
            std::snprintf(buf, sizeof buf, "  %-16s %lld\n", "nearest_integer",
                          (long long)r.nearest_integer);
            os << buf;
            std::snprintf(buf, sizeof buf, "  %-16s %s\n", "pass", pass ? "true" : "false");
            os << buf;
            out = os.str();
        }
        if (!opt.no_cache && pass) cache.store(key, out);
        return {pass ? kOk : kCheckFailed, out, ""};
    };

    try {
        // only passing results are cached, so a hit always replays exit 0
        if (!opt.no_cache) {
            if (auto hit = cache.lookup(key)) return {kOk, *hit, ""};
        }
        if (is_v) {
            const int need = 2 * (opt.k + 2);
            TruncRep rep = TruncRep::make(opt.q0, opt.m_cut,
                                          opt.n_win > 0 ? opt.n_win : need);
            return finish(v_pairing(opt.k, rep));
        }
        HMatrix u = su2q_unitary_power(power);
        const int need = required_window(u, opt.k);
        TruncRep rep = TruncRep::make(opt.q0, opt.m_cut, opt.n_win > 0 ? opt.n_win : need);
        std::string desc = power == 1 ? "U" : "U^" + std::to_string(power);
        return finish(odd_pairing(u, opt.k, rep, desc, power));
    } catch (const std::invalid_argument& e) {
        return usage_error(std::string("pairing: ") + e.what());
    } catch (const budget_error& e) {
        return {kBudgetExceeded, "", std::string(e.what()) + "\n"};
    }
}

CmdResult cmd_winding(const WindingOptions& opt) {
    if (std::abs(opt.n) > opt.max_n)
        return usage_error("winding: |n| exceeds the configured maximum " +
                           std::to_string(opt.max_n));
    if (opt.tol <= 0) return usage_error("winding: --tol must be positive");
    try {
        const double value = winding_degree(opt.n, opt.resolution);
        const long long nearest = std::llround(value);
        const bool pass = std::abs(value - double(opt.n)) <= opt.tol;
        ojson j;
        j["schema_version"] = "1";
        j["command"] = "winding";
        j["n"] = opt.n;
        j["resolution"] = opt.resolution;
        j["value"] = json_real(value);
        j["nearest_integer"] = nearest;
        j["tol"] = json_real(opt.tol);
        j["pass"] = pass;
        return {pass ? kOk : kCheckFailed, dump(j), ""};
    } catch (const std::invalid_argument& e) {
        return usage_error(std::string("winding: ") + e.what());
    }
}

CmdResult cmd_hopf_check(const HopfOptions& opt) {
    auto checks = hopf_property_suite(opt.trials, opt.seed);
    ojson j;
    j["schema_version"] = "1";
    j["command"] = "hopf-check";
    j["trials"] = opt.trials;
    j["seed"] = opt.seed;
    bool all = true;
    ojson body;
    for (const auto& c : checks) {
        ojson one;
        one["pass"] = c.pass;
        one["detail"] = c.detail;
        body[c.name] = one;
        all = all && c.pass;
    }
    j["checks"] = body;
    j["pass"] = all;
    return {all ? kOk : kCheckFailed, dump(j), ""};
}

}  // namespace qinst::cli
