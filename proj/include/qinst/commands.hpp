#pragma once

#include <string>

namespace qinst::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kBudgetExceeded = 3,
};

struct CmdResult {
    int code = kOk;
    std::string out;  // stdout payload (already newline-terminated)
    std::string err;  // diagnostic for stderr when code != 0
};

struct NfOptions {
    std::string expr;
    bool unicode = false;
};
CmdResult cmd_nf(const NfOptions& opt);

struct PnOptions {
    int n = 1;
    std::string q_mode = "generic";  // "generic" or an exact rational "p/r"
    bool check = false;
    int max_n = 8;
    bool no_cache = false;
    std::string cache_dir;  // empty: env/default
};
CmdResult cmd_pn(const PnOptions& opt);

struct PairingOptions {
    std::string u = "U";  // "U", "U^n" (integer n), or "V"
    int k = 1;
    double q0 = 0.5;
    int m_cut = 60;
    int n_win = 0;  // 0: derived from the unitary and k
    double tol = 1e-6;
    int max_n = 8;
    std::string format = "json";  // or "text"
    bool no_cache = false;
    std::string cache_dir;
};
CmdResult cmd_pairing(const PairingOptions& opt);

struct WindingOptions {
    int n = 1;
    int resolution = 32;
    double tol = 0.05;
    int max_n = 8;
};
CmdResult cmd_winding(const WindingOptions& opt);

struct HopfOptions {
    unsigned trials = 1000;
    unsigned seed = 7261941;
};
CmdResult cmd_hopf_check(const HopfOptions& opt);

}  // namespace qinst::cli
