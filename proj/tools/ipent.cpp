// ipent: separability and correlation analysis for two-identical-particle
// states. Subcommands: classify, decompose, measure, correlate, dist, sample,
// oracle, batch. State and operator files are JSON; reports are JSON with a
// fixed field order so golden-file comparisons are byte-exact.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ipent/boson.hpp"
#include "ipent/correlation.hpp"
#include "ipent/error.hpp"
#include "ipent/fermion.hpp"
#include "ipent/measurement.hpp"
#include "ipent/oracle.hpp"
#include "ipent/state_io.hpp"

namespace fs = std::filesystem;
using ipent::Complex;
using ipent::Error;
using Json = ipent::io::Json;

namespace {

constexpr int kExitSeparable = 0;
constexpr int kExitEntangled = 1;
constexpr int kExitError = 2;

std::string fmt(double v) { return Json(v).dump(); }

struct CommonFlags {
    double rank_tol = ipent::matfact::kDefaultRankTol;
    double eps_sep = ipent::boson::kDefaultSepTol;
    std::string out;
};

void write_report(const Json& report, const std::string& out_path) {
    if (out_path.empty()) return;
    std::ofstream out(out_path);
    if (!out) throw Error(ipent::Errc::InvalidInput, "cannot write " + out_path);
    out << report.dump(2) << "\n";
}

Json report_header(const char* command, const std::string& path, const ipent::io::StateFile& sf) {
    Json j;
    j["command"] = command;
    j["input"] = fs::path(path).filename().string();
    if (!sf.label.empty()) j["label"] = sf.label;
    j["statistics"] = ipent::io::statistics_name(sf.statistics);
    j["modes"] = sf.modes;
    return j;
}

void require_two_particle(const ipent::io::StateFile& sf, const char* command) {
    if (sf.statistics == ipent::io::StatisticsKind::Single)
        throw Error(ipent::Errc::InvalidInput,
                    std::string(command) + " needs a two-particle state, not 'single'");
}

Json classify_report(const std::string& path, const ipent::io::StateFile& sf,
                     const CommonFlags& flags) {
    Json j = report_header("classify", path, sf);
    j["rank_tol"] = flags.rank_tol;
    j["eps_sep"] = flags.eps_sep;
    if (sf.statistics == ipent::io::StatisticsKind::Boson) {
        const auto verdict = ipent::boson::classify(sf.boson(), flags.eps_sep, flags.rank_tol);
        j["verdict"] = ipent::boson::verdict_kind_name(verdict.kind);
        j["separable"] = ipent::boson::is_separable(verdict.kind);
        j["rank"] = verdict.rank;
        j["lambda"] = verdict.lambdas;
        j["measure"] = verdict.measure;
    } else {
        const auto verdict = ipent::fermion::classify(sf.fermion(), flags.rank_tol);
        j["verdict"] = ipent::fermion::verdict_kind_name(verdict.kind);
        j["separable"] = verdict.kind == ipent::fermion::VerdictKind::Separable;
        j["rank"] = verdict.rank;
        j["z"] = verdict.z;
    }
    return j;
}

void print_classify(const Json& j) {
    std::cout << "input: " << j["input"].get<std::string>() << "\n"
              << "statistics: " << j["statistics"].get<std::string>() << "\n"
              << "verdict: " << j["verdict"].get<std::string>() << "\n"
              << "rank: " << j["rank"].get<std::size_t>() << "\n";
    if (j.contains("lambda")) std::cout << "lambda: " << j["lambda"].dump() << "\n";
    if (j.contains("z")) std::cout << "z: " << j["z"].dump() << "\n";
    if (j.contains("measure")) std::cout << "measure: " << fmt(j["measure"].get<double>()) << "\n";
}

int cmd_classify(const std::string& path, const CommonFlags& flags) {
    const auto sf = ipent::io::load_state_file(path);
    require_two_particle(sf, "classify");
    const Json j = classify_report(path, sf, flags);
    print_classify(j);
    write_report(j, flags.out);
    return j["separable"].get<bool>() ? kExitSeparable : kExitEntangled;
}

int cmd_decompose(const std::string& path, const CommonFlags& flags) {
    const auto sf = ipent::io::load_state_file(path);
    require_two_particle(sf, "decompose");
    Json j = report_header("decompose", path, sf);
    j["rank_tol"] = flags.rank_tol;
    if (sf.statistics == ipent::io::StatisticsKind::Boson) {
        const auto form = ipent::boson::standard_form(sf.boson(), flags.rank_tol);
        j["rank"] = form.rank;
        j["lambda"] = form.lambdas;
        j["basis"] = ipent::io::matrix_to_json(form.basis);
    } else {
        const auto form = ipent::fermion::standard_form(sf.fermion(), flags.rank_tol);
        j["rank"] = form.rank;
        j["z"] = form.z;
        j["basis"] = ipent::io::matrix_to_json(form.basis);
    }
    std::cout << "input: " << j["input"].get<std::string>() << "\n"
              << "rank: " << j["rank"].get<std::size_t>() << "\n";
    if (j.contains("lambda")) std::cout << "lambda: " << j["lambda"].dump() << "\n";
    if (j.contains("z")) std::cout << "z: " << j["z"].dump() << "\n";
    std::cout << "basis: " << j["basis"].dump() << "\n";
    write_report(j, flags.out);
    return kExitSeparable;
}

int cmd_measure(const std::string& path, const CommonFlags& flags) {
    const auto sf = ipent::io::load_state_file(path);
    require_two_particle(sf, "measure");
    Json j = report_header("measure", path, sf);
    j["rank_tol"] = flags.rank_tol;
    j["eps_sep"] = flags.eps_sep;
    if (sf.statistics == ipent::io::StatisticsKind::Boson) {
        const auto verdict = ipent::boson::classify(sf.boson(), flags.eps_sep, flags.rank_tol);
        j["verdict"] = ipent::boson::verdict_kind_name(verdict.kind);
        j["rank"] = verdict.rank;
        j["lambda"] = verdict.lambdas;
        j["measure"] = verdict.measure;
        std::cout << "measure: " << fmt(verdict.measure) << "\n";
    } else {
        // The entanglement measure is defined for bosons only; fermions get
        // the canonical amplitudes and the rank instead.
        const auto verdict = ipent::fermion::classify(sf.fermion(), flags.rank_tol);
        j["verdict"] = ipent::fermion::verdict_kind_name(verdict.kind);
        j["rank"] = verdict.rank;
        j["z"] = verdict.z;
        std::cout << "no boson measure for fermion states; rank: " << verdict.rank
                  << " z: " << j["z"].dump() << "\n";
    }
    write_report(j, flags.out);
    return kExitSeparable;
}

int cmd_correlate(const std::string& state_path, const std::string& operator_path, double tol,
                  const CommonFlags& flags) {
    const auto sf = ipent::io::load_state_file(state_path);
    const auto op = ipent::io::load_operator_file(operator_path);
    Json j = report_header("correlate", state_path, sf);
    j["operator"] = fs::path(operator_path).filename().string();
    j["tol"] = tol;

    ipent::correlation::CorrelationReport rep;
    double mu = 0.0;
    switch (sf.statistics) {
        case ipent::io::StatisticsKind::Boson:
            rep = ipent::correlation::relative_correlation(op, sf.boson(), tol);
            mu = ipent::correlation::expectation(op, sf.boson());
            break;
        case ipent::io::StatisticsKind::Fermion:
            rep = ipent::correlation::relative_correlation(op, sf.fermion(), tol);
            mu = ipent::correlation::expectation(op, sf.fermion());
            break;
        case ipent::io::StatisticsKind::Single:
            rep = ipent::correlation::relative_correlation(op, sf.single(), tol);
            mu = ipent::correlation::expectation(op, sf.single());
            break;
    }
    j["expectation"] = mu;
    j["residual"] = rep.residual;
    j["correlated"] = rep.correlated;
    if (rep.eigenvalue) j["eigenvalue"] = *rep.eigenvalue;

    std::cout << "operator: " << j["operator"].get<std::string>() << "\n"
              << "expectation: " << fmt(mu) << "\n"
              << "residual: " << fmt(rep.residual) << "\n"
              << "correlated: " << (rep.correlated ? "true" : "false") << "\n";
    if (rep.eigenvalue) std::cout << "eigenvalue: " << fmt(*rep.eigenvalue) << "\n";
    write_report(j, flags.out);
    return kExitSeparable;
}

Json distribution_to_json(const ipent::measurement::NumberDistribution& dist) {
    Json out = Json::array();
    for (const auto& [occ, p] : dist.entries) {
        Json entry;
        entry["counts"] = occ;
        entry["probability"] = p;
        out.push_back(std::move(entry));
    }
    return out;
}

ipent::measurement::NumberDistribution state_distribution(const ipent::io::StateFile& sf) {
    if (sf.statistics == ipent::io::StatisticsKind::Boson)
        return ipent::measurement::joint_distribution(sf.boson());
    return ipent::measurement::joint_distribution(sf.fermion());
}

int cmd_dist(const std::string& path, std::optional<std::size_t> condition_mode,
             std::optional<int> condition_count, const CommonFlags& flags) {
    const auto sf = ipent::io::load_state_file(path);
    require_two_particle(sf, "dist");
    auto dist = state_distribution(sf);
    Json j = report_header("dist", path, sf);
    if (condition_mode.has_value() != condition_count.has_value())
        throw Error(ipent::Errc::InvalidInput, "--given-mode and --given-count come together");
    if (condition_mode) {
        dist = ipent::measurement::conditional_distribution(dist, *condition_mode,
                                                            *condition_count);
        j["condition"] = Json{{"mode", *condition_mode}, {"count", *condition_count}};
    }
    j["distribution"] = distribution_to_json(dist);
    std::cout << "distribution: " << j["distribution"].dump() << "\n";
    write_report(j, flags.out);
    return kExitSeparable;
}

int cmd_sample(const std::string& path, std::uint64_t n, std::uint64_t seed,
               const CommonFlags& flags) {
    const auto sf = ipent::io::load_state_file(path);
    require_two_particle(sf, "sample");
    const auto dist = state_distribution(sf);
    const auto counts = ipent::measurement::sample(dist, n, seed);
    Json j = report_header("sample", path, sf);
    j["n"] = n;
    j["seed"] = seed;
    Json rows = Json::array();
    for (const auto& [occ, k] : counts) {
        Json entry;
        entry["counts"] = occ;
        entry["count"] = k;
        rows.push_back(std::move(entry));
    }
    j["samples"] = std::move(rows);
    std::cout << "samples: " << j["samples"].dump() << "\n";
    write_report(j, flags.out);
    return kExitSeparable;
}

int cmd_oracle(const std::string& path, std::size_t restarts, std::uint64_t seed, double epsilon,
               const CommonFlags& flags) {
    const auto sf = ipent::io::load_state_file(path);
    require_two_particle(sf, "oracle");
    ipent::oracle::Options opt;
    opt.restarts = restarts;
    opt.seed = seed;
    opt.epsilon = epsilon;
    const auto verdict = sf.statistics == ipent::io::StatisticsKind::Boson
                             ? ipent::oracle::oracle_separability(sf.boson(), opt)
                             : ipent::oracle::oracle_separability(sf.fermion(), opt);
    Json j = report_header("oracle", path, sf);
    j["restarts"] = restarts;
    j["seed"] = seed;
    j["epsilon"] = epsilon;
    j["separable"] = verdict.separable;
    j["best_overlap"] = verdict.best_overlap;
    j["branch"] = ipent::oracle::branch_name(verdict.branch);
    j["restarts_used"] = verdict.restarts_used;
    if (verdict.witness) {
        Json w;
        w["c"] = ipent::io::vector_to_json(verdict.witness->first);
        w["d"] = ipent::io::vector_to_json(verdict.witness->second);
        j["witness"] = std::move(w);
    }
    std::cout << "separable: " << (verdict.separable ? "true" : "false") << "\n"
              << "best_overlap: " << fmt(verdict.best_overlap) << "\n"
              << "branch: " << ipent::oracle::branch_name(verdict.branch) << "\n";
    write_report(j, flags.out);
    return verdict.separable ? kExitSeparable : kExitEntangled;
}

int cmd_batch(const std::string& dir, const std::string& out_dir, const CommonFlags& flags) {
    if (!fs::is_directory(dir))
        throw Error(ipent::Errc::InvalidInput, dir + " is not a directory");
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end(), [](const std::string& a, const std::string& b) {
        return fs::path(a).filename().string() < fs::path(b).filename().string();
    });

    if (!out_dir.empty()) fs::create_directories(out_dir);

    std::size_t separable = 0, entangled = 0, errors = 0;
    std::cout << "file\tstatistics\tverdict\trank\tmeasure\n";
    for (const auto& file : files) {
        const std::string name = fs::path(file).filename().string();
        try {
            const auto sf = ipent::io::load_state_file(file);
            require_two_particle(sf, "batch");
            const Json j = classify_report(file, sf, flags);
            const bool sep = j["separable"].get<bool>();
            (sep ? separable : entangled) += 1;
            std::cout << name << "\t" << j["statistics"].get<std::string>() << "\t"
                      << j["verdict"].get<std::string>() << "\t" << j["rank"].get<std::size_t>()
                      << "\t" << (j.contains("measure") ? fmt(j["measure"].get<double>()) : "-")
                      << "\n";
            if (!out_dir.empty()) {
                const auto out_path =
                    fs::path(out_dir) / (fs::path(file).stem().string() + ".report.json");
                write_report(j, out_path.string());
            }
        } catch (const Error& e) {
            ++errors;
            std::cout << name << "\terror\t" << e.what() << "\t-\t-\n";
        }
    }
    std::cout << "total: " << files.size() << "  separable: " << separable
              << "  entangled: " << entangled << "  errors: " << errors << "\n";
    return errors > 0 ? kExitError : kExitSeparable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"separability, standard forms and correlation of two-identical-particle states"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string path;
    std::string operator_path;
    std::string batch_dir;
    std::string out_dir;
    double tol = ipent::correlation::kDefaultCorrelationTol;
    double epsilon = 1e-7;
    std::uint64_t n = 1;
    std::uint64_t seed = 0;
    std::size_t restarts = 32;
    std::optional<std::size_t> given_mode;
    std::optional<int> given_count;

    auto add_common = [&flags](CLI::App* cmd, bool with_eps_sep = true) {
        cmd->add_option("--rank-tol", flags.rank_tol, "relative numerical-rank threshold");
        if (with_eps_sep)
            cmd->add_option("--eps-sep", flags.eps_sep, "relative equal-lambda threshold");
        cmd->add_option("--out", flags.out, "write the JSON report here");
    };

    auto* classify = app.add_subcommand("classify", "separability verdict for a state file");
    classify->add_option("path", path, "state file")->required();
    add_common(classify);

    auto* decompose = app.add_subcommand("decompose", "canonical standard form of a state");
    decompose->add_option("path", path, "state file")->required();
    add_common(decompose, false);

    auto* measure = app.add_subcommand("measure", "entanglement measure (bosons)");
    measure->add_option("path", path, "state file")->required();
    add_common(measure);

    auto* correlate =
        app.add_subcommand("correlate", "relative correlation against a one-body operator");
    correlate->add_option("state", path, "state file")->required();
    correlate->add_option("operator", operator_path, "operator file")->required();
    correlate->add_option("--tol", tol, "residual threshold");
    correlate->add_option("--out", flags.out, "write the JSON report here");

    auto* dist = app.add_subcommand("dist", "joint particle-number distribution");
    dist->add_option("path", path, "state file")->required();
    dist->add_option("--given-mode", given_mode, "condition on this mode");
    dist->add_option("--given-count", given_count, "observed count for --given-mode");
    dist->add_option("--out", flags.out, "write the JSON report here");

    auto* sample = app.add_subcommand("sample", "draw number-measurement samples");
    sample->add_option("path", path, "state file")->required();
    sample->add_option("--n", n, "number of draws")->required();
    sample->add_option("--seed", seed, "PRNG seed");
    sample->add_option("--out", flags.out, "write the JSON report here");

    auto* oracle = app.add_subcommand("oracle", "optimization-based separability check");
    oracle->add_option("path", path, "state file")->required();
    oracle->add_option("--restarts", restarts, "random restarts");
    oracle->add_option("--seed", seed, "PRNG seed");
    oracle->add_option("--tol", epsilon, "separability overlap tolerance");
    oracle->add_option("--out", flags.out, "write the JSON report here");

    auto* batch = app.add_subcommand("batch", "classify every state file in a directory");
    batch->add_option("dir", batch_dir, "directory of state files")->required();
    batch->add_option("--out-dir", out_dir, "write one report per file here");
    batch->add_option("--rank-tol", flags.rank_tol, "relative numerical-rank threshold");
    batch->add_option("--eps-sep", flags.eps_sep, "relative equal-lambda threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitError;
    }

    try {
        if (app.got_subcommand(classify)) return cmd_classify(path, flags);
        if (app.got_subcommand(decompose)) return cmd_decompose(path, flags);
        if (app.got_subcommand(measure)) return cmd_measure(path, flags);
        if (app.got_subcommand(correlate)) return cmd_correlate(path, operator_path, tol, flags);
        if (app.got_subcommand(dist)) return cmd_dist(path, given_mode, given_count, flags);
        if (app.got_subcommand(sample)) return cmd_sample(path, n, seed, flags);
        if (app.got_subcommand(oracle)) return cmd_oracle(path, restarts, seed, epsilon, flags);
        if (app.got_subcommand(batch)) return cmd_batch(batch_dir, out_dir, flags);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
