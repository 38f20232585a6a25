// Copyright 2026 The qss-rec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qss/golden.h"
#include "qss/io.h"
#include "qss/oracle.h"
#include "qss/reconstruct.h"

namespace qss::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string code_path;
    std::string partition;
    bool all = false;
    std::string secret;
    std::vector<std::string> codeword_paths;
    std::string data_dir;
    std::string emit_state;
    double tol = kDefaultTol;
    bool json = false;
};

// Exit-code carrying failure for precondition violations detected in commands.
struct Precondition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IndexSet parse_partition(const std::string &csv, size_t n) {
    IndexSet out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) {
            continue;
        }
        size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != tok.size() || v < 1 || static_cast<size_t>(v) > n) {
            throw ParseError("--J", 0, "share index '" + tok + "' is not in 1.." + std::to_string(n));
        }
        out.push_back(static_cast<size_t>(v));
    }
    return normalize_index_set(out, n);
}

json indices_json(const IndexSet &s) {
    return json(std::vector<size_t>(s.begin(), s.end()));
}

std::string brute_label(const StabilizerCode &code, const SharePartition &p) {
    try {
        if (brute_force_erasure_check(code, p.Jbar())) {
            return "Q";
        }
        return brute_force_erasure_check(code, p.J()) ? "F" : "-";
    } catch (const BudgetExceededError &) {
        return "skipped";
    }
}

int cmd_analyze(const RunConfig &cfg, std::ostream &out) {
    StabilizerCode code = load_code(cfg.code_path);
    if (cfg.all) {
        AccessStructureReport report = full_access_structure(code, std::nullopt, cfg.tol);
        if (cfg.json) {
            json j;
            j["n"] = code.n();
            j["k"] = code.k();
            j["q"] = code.field().order();
            j["consistent"] = report.consistent();
            for (const auto &s : report.subsets) {
                j["subsets"].push_back({{"J", indices_json(s.J)},
                                        {"algebraic", std::string(1, access_code(s.algebraic))},
                                        {"brute", s.brute == 's' ? std::string("skipped") : std::string(1, s.brute)},
                                        {"state", s.state}});
            }
            out << j.dump(2) << '\n';
        } else {
            for (const auto &s : report.subsets) {
                out << s.line() << '\n';
            }
        }
        return report.consistent() ? kOk : kVerificationMismatch;
    }

    SharePartition partition(code.n(), parse_partition(cfg.partition, code.n()));
    AccessAnalysis a = analyze(code, partition);
    std::string brute = brute_label(code, partition);
    bool mismatch = (brute == "Q") != a.qualified && brute != "skipped";
    if (cfg.json) {
        json j = {{"J", indices_json(partition.J())},
                  {"Jbar", indices_json(partition.Jbar())},
                  {"qualified", a.qualified},
                  {"ell", a.ell},
                  {"dim_C_J", a.dim_C_J},
                  {"dim_C_Jbar", a.dim_C_Jbar},
                  {"ell_equals_Jbar", a.ell_equals_Jbar()},
                  {"brute", brute}};
        out << j.dump(2) << '\n';
    } else {
        out << "J=" << format_index_set(partition.J()) << ' ' << (a.qualified ? "qualified" : "not-qualified")
            << " ell=" << a.ell << " dim_C_J=" << a.dim_C_J << " dim_C_Jbar=" << a.dim_C_Jbar
            << " ell_equals_Jbar=" << (a.ell_equals_Jbar() ? "yes" : "no") << " brute=" << brute << '\n';
    }
    return mismatch ? kVerificationMismatch : kOk;
}

int cmd_audit(const RunConfig &cfg, std::ostream &out) {
    StabilizerCode code = load_code(cfg.code_path);
    std::vector<SharePartition> partitions;
    if (cfg.all) {
        for (size_t mask = 0; mask < (size_t{1} << code.n()); mask++) {
            IndexSet J;
            for (size_t j = 1; j <= code.n(); j++) {
                if (mask & (size_t{1} << (j - 1))) {
                    J.push_back(j);
                }
            }
            partitions.emplace_back(code.n(), J);
        }
    } else {
        partitions.emplace_back(code.n(), parse_partition(cfg.partition, code.n()));
    }
    bool all_hold = true;
    json j = json::array();
    for (const auto &p : partitions) {
        DimensionAudit a = audit_dimensions(code, p);
        all_hold = all_hold && a.all_hold();
        if (cfg.json) {
            json rec = {{"J", indices_json(p.J())},
                        {"qualified", a.qualified},
                        {"dim_C_J", a.dim_C_J},
                        {"dim_C_Jbar", a.dim_C_Jbar},
                        {"ell", a.ell},
                        {"all_hold", a.all_hold()}};
            for (const auto &c : a.checks) {
                rec["checks"].push_back(
                    {{"name", c.name}, {"applicable", c.applicable}, {"holds", c.holds}, {"detail", c.detail}});
            }
            j.push_back(rec);
        } else {
            out << "J=" << format_index_set(p.J()) << ' ' << (a.qualified ? "qualified" : "not-qualified")
                << " dim_C_J=" << a.dim_C_J << " dim_C_Jbar=" << a.dim_C_Jbar << " ell=" << a.ell << '\n';
            for (const auto &c : a.checks) {
                out << "  " << c.name << ' ' << (!c.applicable ? "n/a" : c.holds ? "pass" : "FAIL") << "  " << c.detail
                    << '\n';
            }
        }
    }
    if (cfg.json) {
        out << j.dump(2) << '\n';
    }
    return all_hold ? kOk : kVerificationMismatch;
}

QuditState load_secret(const std::string &arg, int q, size_t k) {
    if (std::filesystem::exists(arg)) {
        QuditState s = load_state(arg);
        if (s.q() != q || s.num_qudits() != k) {
            throw ParseError(arg, 0, "secret must be a state on k = " + std::to_string(k) + " qudits of dimension " +
                                          std::to_string(q));
        }
        return s;
    }
    return parse_inline_state(arg, q, k);
}

int cmd_reconstruct(const RunConfig &cfg, std::ostream &out) {
    StabilizerCode code = load_code(cfg.code_path);
    if (!code.field().is_prime()) {
        throw Precondition("reconstruction needs a prime field, got " + code.field().str());
    }
    SharePartition partition(code.n(), parse_partition(cfg.partition, code.n()));
    int q = code.field().order();
    QuditState secret = load_secret(cfg.secret, q, code.k());
    if (!secret.is_normalized(cfg.tol)) {
        throw Precondition("secret is not normalized: squared norm " + std::to_string(secret.amps().squaredNorm()));
    }

    std::optional<CodewordFamily> family;
    if (!cfg.codeword_paths.empty()) {
        std::vector<QuditState> words;
        for (const auto &p : cfg.codeword_paths) {
            words.push_back(load_state(p));
        }
        try {
            family = codewords_from_states(code, std::move(words), cfg.tol);
        } catch (const std::invalid_argument &e) {
            throw ParseError("--codeword", 0, e.what());
        }
    } else {
        family = synthesize_codewords(code, std::nullopt, std::nullopt, cfg.tol);
    }

    ReconstructionPlan plan = plan_reconstruction(code, partition, *family, cfg.tol);
    ReconstructionReport report = reconstruct(plan, secret);
    ExpansionCheck expansion = verify_expansion(plan);
    if (!cfg.emit_state.empty()) {
        save_state(cfg.emit_state, report.output_state);
    }
    bool ok = report.secret_fidelity >= 1.0 - cfg.tol;
    if (cfg.json) {
        json j = {{"J", indices_json(partition.J())},
                  {"ell", plan.analysis.ell},
                  {"label_qudits", indices_json(plan.layout.label)},
                  {"padding_qudits", indices_json(plan.layout.padding)},
                  {"secret_qudits", indices_json(plan.layout.secret)},
                  {"secret_fidelity", report.secret_fidelity},
                  {"secret_purity", report.purity_of_secret_register},
                  {"residual_entanglement", report.residual_entanglement},
                  {"unitarity_error", plan.unitarity_error()},
                  {"expansion_ok", expansion.ok},
                  {"ok", ok}};
        out << j.dump(2) << '\n';
    } else {
        out.precision(12);
        out << "J=" << format_index_set(partition.J()) << " ell=" << plan.analysis.ell << '\n';
        out << "label_qudits=" << format_index_set(plan.layout.label)
            << " padding_qudits=" << format_index_set(plan.layout.padding)
            << " secret_qudits=" << format_index_set(plan.layout.secret) << '\n';
        out << "secret_fidelity=" << std::fixed << report.secret_fidelity << '\n';
        out << "secret_purity=" << report.purity_of_secret_register << '\n';
        out << std::scientific;
        out << "residual_entanglement=" << report.residual_entanglement << '\n';
        out << "unitarity_error=" << plan.unitarity_error() << '\n';
        out << "expansion=" << (expansion.ok ? "ok" : "mismatch") << '\n';
    }
    return ok ? kOk : kVerificationMismatch;
}

int cmd_golden(const RunConfig &cfg, std::ostream &out) {
    auto checks = run_golden(cfg.data_dir.empty() ? default_golden_dir() : cfg.data_dir, cfg.tol);
    bool all = true;
    json j = json::array();
    for (const auto &c : checks) {
        all = all && c.pass;
        if (cfg.json) {
            j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        } else {
            out << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n';
        }
    }
    if (cfg.json) {
        out << j.dump(2) << '\n';
    }
    return all ? kOk : kVerificationMismatch;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Access structures and unitary secret reconstruction for stabilizer quantum secret sharing", "qss"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--tol", cfg.tol, "numerical tolerance")->check(CLI::PositiveNumber);
        sub->add_flag("--json", cfg.json, "machine-readable output");
    };

    auto *analyze = app.add_subcommand("analyze", "classify share sets");
    analyze->add_option("--code", cfg.code_path, "stabilizer file")->required();
    auto *analyze_j = analyze->add_option("--J", cfg.partition, "comma-separated share indices, 1-based");
    auto *analyze_all = analyze->add_flag("--all", cfg.all, "sweep every subset");
    analyze_j->excludes(analyze_all);
    add_common(analyze);

    auto *audit = app.add_subcommand("audit", "check dimension identities");
    audit->add_option("--code", cfg.code_path, "stabilizer file")->required();
    auto *audit_j = audit->add_option("--J", cfg.partition, "comma-separated share indices, 1-based");
    auto *audit_all = audit->add_flag("--all", cfg.all, "audit every subset");
    audit_j->excludes(audit_all);
    add_common(audit);

    auto *recon = app.add_subcommand("reconstruct", "run unitary reconstruction on a share set");
    recon->add_option("--code", cfg.code_path, "stabilizer file")->required();
    recon->add_option("--J", cfg.partition, "comma-separated share indices, 1-based")->required();
    recon->add_option("--secret", cfg.secret, "state file, or inline amplitudes re[:im],...")->required();
    recon->add_option("--codeword", cfg.codeword_paths, "codeword state files in label order (default: synthesize)");
    recon->add_option("--emit-state", cfg.emit_state, "write the full output state here");
    add_common(recon);

    auto *golden = app.add_subcommand("golden", "replay the [[5,1,3]] worked example");
    golden->add_option("--data", cfg.data_dir, "directory with code.txt, psi0.state, psi1.state");
    add_common(golden);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    if ((analyze->parsed() || audit->parsed()) && !cfg.all && cfg.partition.empty()) {
        err << "error: one of --J or --all is required\n";
        return kInputError;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(cfg, out);
        }
        if (audit->parsed()) {
            return cmd_audit(cfg, out);
        }
        if (recon->parsed()) {
            return cmd_reconstruct(cfg, out);
        }
        return cmd_golden(cfg, out);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const NotQualifiedError &e) {
        err << "error: " << e.what() << '\n';
        return kPreconditionViolation;
    } catch (const Precondition &e) {
        err << "error: " << e.what() << '\n';
        return kPreconditionViolation;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kVerificationMismatch;
    }
}

}  // namespace qss::cli
