// Copyright 2026 The Phasecap Authors
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

#include "phasecap/cli.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "phasecap/bounds.h"
#include "phasecap/codes.h"
#include "phasecap/decoder.h"
#include "phasecap/errors.h"
#include "phasecap/kl_verifier.h"
#include "phasecap/noise.h"
#include "phasecap/report.h"

namespace phasecap {

namespace {

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path);
    if (!f) {
        throw InputError("cannot write " + path);
    }
    f << text << "\n";
}

void print_warnings(std::ostream &err, const std::vector<std::string> &warnings) {
    for (const auto &w : warnings) {
        err << "warning: " << w << "\n";
    }
}

struct CapacityArgs {
    bool uniform = false;
    uint32_t n = 0;
    uint32_t t = 0;
    uint32_t q = 2;
    std::string model_file;
    uint32_t ring = 0;
    bool open_chain = false;
    bool exact = false;
    bool theta = false;
    bool bounds = false;
    bool classify = false;
    double max_seconds = 300.0;
    uint64_t max_nodes = 1'000'000'000;
    bool no_symmetry = false;
    std::string json_path;
};

int cmd_capacity(const CapacityArgs &a, std::ostream &out, std::ostream &err) {
    int sources = (a.uniform ? 1 : 0) + (!a.model_file.empty() ? 1 : 0) + (a.ring > 0 ? 1 : 0);
    if (sources != 1) {
        throw ParameterError("choose exactly one of --uniform, --model, --correlated-ring");
    }
    NoiseModel model = [&] {
        if (a.uniform) {
            if (a.n == 0) {
                throw ParameterError("--uniform needs --n");
            }
            return uniform_ball_model(GroupParams::make(a.q, a.n), a.t);
        }
        if (!a.model_file.empty()) {
            std::vector<std::string> warnings;
            NoiseModel m = load_noise_model(a.model_file, &warnings);
            print_warnings(err, warnings);
            return m;
        }
        return correlated_ring_model(a.ring, !a.open_chain);
    }();
    CapacityOptions opt;
    opt.exact = a.exact;
    opt.theta = a.theta;
    opt.bounds = a.bounds;
    opt.classify = a.classify;
    if (!(opt.exact || opt.theta || opt.bounds || opt.classify)) {
        opt.exact = true;
    }
    opt.budget.max_seconds = a.max_seconds;
    opt.budget.max_nodes = a.max_nodes;
    opt.budget.use_symmetry = !a.no_symmetry;
    CapacityReport report = analyze_capacity(model, opt);
    out << capacity_text(report);
    if (!a.json_path.empty()) {
        write_file(a.json_path, capacity_json(report));
    }
    if (a.exact && report.alpha && !report.alpha->is_maximum()) {
        err << "error: exact capacity requested but the search budget ran out\n";
        return kExitAnalysisFailure;
    }
    return kExitOk;
}

CodeRecord load_code_reporting(const std::string &path, std::ostream &err) {
    std::vector<std::string> warnings;
    CodeRecord c = load_code(path, &warnings);
    print_warnings(err, warnings);
    return c;
}

std::string code_summary(const CodeRecord &c) {
    std::ostringstream s;
    s << c.name << ": (n,K,d) = (" << c.n << "," << c.size << "," << c.min_distance << ") "
      << structure_name(c.structure) << ", corrects t=" << c.correctable() << "\n";
    return s.str();
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"capacity analysis of Fourier-support codes under phase noise", "phasecap"};
    app.require_subcommand(1);
    std::function<int()> action;

    CapacityArgs cap;
    auto *capacity = app.add_subcommand("capacity", "exact capacity, theta, bounds and regime for a noise model");
    capacity->add_flag("--uniform", cap.uniform, "uniform ball noise E_t");
    capacity->add_option("--n", cap.n, "length");
    capacity->add_option("--t", cap.t, "radius");
    capacity->add_option("--q", cap.q, "prime alphabet size")->capture_default_str();
    capacity->add_option("--model", cap.model_file, "noise model JSON");
    capacity->add_option("--correlated-ring", cap.ring, "nearest-neighbour ring model on N qubits");
    capacity->add_flag("--open", cap.open_chain, "drop the wrap-around pair of the ring");
    capacity->add_flag("--exact", cap.exact, "exact independence number");
    capacity->add_flag("--theta", cap.theta, "Lovasz theta");
    capacity->add_flag("--bounds", cap.bounds, "Hamming/Singleton bounds");
    capacity->add_flag("--classify", cap.classify, "regime classification");
    capacity->add_option("--max-seconds", cap.max_seconds, "search time budget");
    capacity->add_option("--max-nodes", cap.max_nodes, "search node budget");
    capacity->add_flag("--no-symmetry", cap.no_symmetry, "disable orbital branching");
    capacity->add_option("--json", cap.json_path, "write the JSON report here");
    capacity->callback([&] { action = [&] { return cmd_capacity(cap, out, err); }; });

    auto *code = app.add_subcommand("code", "build, verify and classify spectral supports");
    code->require_subcommand(1);
    std::string build_name;
    uint32_t build_m = 0;
    std::string build_out;
    auto *build = code->add_subcommand("build", "construct a catalog code");
    build->add_option("name", build_name, "catalog name (nordstrom-robinson, julin, linear-8-3, kerdock, rm1, ...)")
        ->required();
    build->add_option("--m", build_m, "parameter m for kerdock / rm1");
    build->add_option("--out", build_out, "write the code JSON here");
    build->callback([&] {
        action = [&] {
            std::string name = build_name;
            if ((name == "kerdock" || name == "rm1") && build_m == 0) {
                throw ParameterError(name + " needs --m");
            }
            if (name == "kerdock" || name == "rm1") {
                name += "-" + std::to_string(build_m);
            }
            CodeRecord c = catalog_code(name);
            out << code_summary(c);
            if (!build_out.empty()) {
                save_code(c, build_out);
            }
            return kExitOk;
        };
    });
    std::string verify_file;
    uint32_t verify_t = 0;
    auto *verify = code->add_subcommand("verify", "check d(S) >= 2t + 1");
    verify->add_option("--file", verify_file, "code JSON")->required();
    verify->add_option("--t", verify_t, "phase-error radius")->required();
    verify->callback([&] {
        action = [&] {
            CodeRecord c = load_code_reporting(verify_file, err);
            bool ok = verify_phase_correction(c.support, verify_t);
            out << code_summary(c) << "t=" << verify_t << ": " << (ok ? "pass" : "fail") << "\n";
            return ok ? kExitOk : kExitAnalysisFailure;
        };
    });
    std::string classify_file;
    auto *classify = code->add_subcommand("classify", "linear / affine / nonlinear");
    classify->add_option("--file", classify_file, "code JSON")->required();
    classify->callback([&] {
        action = [&] {
            CodeRecord c = load_code_reporting(classify_file, err);
            out << structure_name(c.structure) << "\n";
            return kExitOk;
        };
    });

    auto *report = app.add_subcommand("report", "reproduction reports");
    report->require_subcommand(1);
    std::string table_row;
    std::string table_json_path;
    auto *tables = report->add_subcommand("paper-tables", "recompute every headline number");
    tables->add_option("--row", table_row, "only this row id");
    tables->add_option("--json", table_json_path, "write the JSON report here");
    tables->callback([&] {
        action = [&] {
            std::optional<std::string> only;
            if (!table_row.empty()) {
                only = table_row;
            }
            auto rows = reproduce_table(only);
            out << table_text(rows);
            if (!table_json_path.empty()) {
                write_file(table_json_path, table_json(rows));
            }
            for (const auto &r : rows) {
                if (!r.match) {
                    return kExitAnalysisFailure;
                }
            }
            return kExitOk;
        };
    });

    uint32_t kl_n = 4;
    uint32_t kl_t = 1;
    uint32_t kl_q = 2;
    uint64_t kl_samples = 200;
    uint64_t kl_seed = 1;
    std::string kl_model;
    uint32_t kl_ring = 0;
    auto *kl = app.add_subcommand("kl-verify", "operator-level check of the combinatorial predicates");
    kl->add_option("--n", kl_n, "length")->capture_default_str();
    kl->add_option("--t", kl_t, "uniform radius")->capture_default_str();
    kl->add_option("--q", kl_q, "prime alphabet size")->capture_default_str();
    kl->add_option("--model", kl_model, "noise model JSON instead of the uniform ball");
    kl->add_option("--correlated-ring", kl_ring, "ring model on N qubits instead of the uniform ball");
    kl->add_option("--samples", kl_samples, "random supports")->capture_default_str();
    kl->add_option("--seed", kl_seed, "RNG seed")->capture_default_str();
    kl->callback([&] {
        action = [&] {
            NoiseModel model = !kl_model.empty() ? load_noise_model(kl_model)
                               : kl_ring > 0     ? correlated_ring_model(kl_ring)
                                                 : uniform_ball_model(GroupParams::make(kl_q, kl_n), kl_t);
            KlAgreementReport r = kl_random_agreement(model, kl_samples, kl_seed);
            out << "model                  " << model.describe() << "\n";
            out << "detection agreements   " << r.detection_agreements << "/" << r.samples << " (" << r.detection_passes
                << " pass)\n";
            out << "correction agreements  " << r.correction_agreements << "/" << r.samples << " ("
                << r.correction_passes << " pass)\n";
            out << "worst scalar residual  " << r.worst_scalar_residual << "\n";
            out << "translation residual   " << r.worst_translation_residual << "\n";
            bool ok = r.all_agree() && r.worst_scalar_residual < kKlTolerance &&
                      r.worst_translation_residual < kIdentityTolerance;
            return ok ? kExitOk : kExitAnalysisFailure;
        };
    });

    std::string dec_code;
    std::string dec_received;
    std::string dec_batch;
    uint64_t dec_trials = 0;
    uint32_t dec_t = 0;
    uint64_t dec_seed = 1;
    auto *decode = app.add_subcommand("decode", "maximum-likelihood phase recovery");
    decode->add_option("--code", dec_code, "code JSON, or a catalog name")->required();
    decode->add_option("--received", dec_received, "received word");
    decode->add_option("--batch", dec_batch, "file with one received word per line");
    decode->add_option("--trials", dec_trials, "run seeded round-trip trials instead");
    decode->add_option("--t", dec_t, "error radius for --trials");
    decode->add_option("--seed", dec_seed, "RNG seed for --trials")->capture_default_str();
    decode->callback([&] {
        action = [&] {
            CodeRecord c = std::filesystem::exists(dec_code) ? load_code_reporting(dec_code, err)
                                                             : catalog_code(dec_code);
            if (dec_trials > 0) {
                RoundtripReport r = decode_roundtrip_trial(c, dec_t, dec_trials, dec_seed);
                out << c.name << " t=" << r.t << " seed=" << r.seed << ": " << r.failures << " failures in "
                    << r.trials << " trials\n";
                return r.failures == 0 ? kExitOk : kExitAnalysisFailure;
            }
            std::vector<std::string> words;
            if (!dec_received.empty()) {
                words.push_back(dec_received);
            }
            if (!dec_batch.empty()) {
                std::ifstream in(dec_batch);
                if (!in) {
                    throw InputError("cannot open " + dec_batch);
                }
                for (std::string line; std::getline(in, line);) {
                    if (!line.empty()) {
                        words.push_back(line);
                    }
                }
            }
            if (words.empty()) {
                throw ParameterError("decode needs --received, --batch or --trials");
            }
            for (const auto &w : words) {
                DecodeResult r = ml_decode(c, GroupVector::parse(c.support.params(), w));
                out << w << " -> " << r.nearest.str() << " distance=" << r.distance
                    << " unique=" << (r.unique ? "yes" : "no")
                    << " within_guarantee=" << (r.within_guarantee ? "yes" : "no") << "\n";
            }
            return kExitOk;
        };
    });

    std::string dual_x;
    std::string dual_z;
    std::string dual_json;
    auto *dual = app.add_subcommand("dual", "dual-isolation bounds for a bit/phase model pair");
    dual->add_option("--x", dual_x, "bit-flip noise model JSON")->required();
    dual->add_option("--z", dual_z, "phase noise model JSON")->required();
    dual->add_option("--json", dual_json, "write the JSON report here");
    dual->callback([&] {
        action = [&] {
            std::vector<std::string> warnings;
            NoiseModel x = load_noise_model(dual_x, &warnings);
            NoiseModel z = load_noise_model(dual_z, &warnings);
            print_warnings(err, warnings);
            DualIsolationReport r = dual_isolation_report(x, z);
            out << dual_isolation_text(r);
            if (!dual_json.empty()) {
                write_file(dual_json, dual_isolation_json(r));
            }
            return kExitOk;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!action) {
        err << app.help();
        return kExitUsage;
    }
    try {
        return action();
    } catch (const ParameterError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "analysis failure: " << e.what() << "\n";
        return kExitAnalysisFailure;
    }
}

}  // namespace phasecap
