#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "triea/ga.hpp"
#include "triea/quality.hpp"
#include "triea/serialization.hpp"
#include "triea/synthetic.hpp"
#include "triea/tensor_io.hpp"

namespace triea::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeightFlags {
    QualityWeights weights;

    void add_to(CLI::App& app) {
        app.add_option("--wg", weights.w_gene, "Size weight for genes")->capture_default_str();
        app.add_option("--wc", weights.w_condition, "Size weight for conditions")->capture_default_str();
        app.add_option("--wt", weights.w_time, "Size weight for time points")->capture_default_str();
        app.add_option("--wdg", weights.wd_gene, "Distinction weight for genes")->capture_default_str();
        app.add_option("--wdc", weights.wd_condition, "Distinction weight for conditions")->capture_default_str();
        app.add_option("--wdt", weights.wd_time, "Distinction weight for time points")->capture_default_str();
    }
};

struct RunOptions {
    std::string input;
    std::string out_dir = "triea_out";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> genes_limit;
    std::string slope_mode = "ols";
    bool no_normalize = false;
    GAConfig config;
    WeightFlags weights;
};

struct GenerateOptions {
    std::string spec;
    std::string out_dir;
};

struct EvaluateOptions {
    std::string input;
    std::string coords;
    std::string archive;
    std::string slope_mode = "ols";
    bool normalize = false;
    std::optional<std::uint64_t> seed;
    WeightFlags weights;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("TRIEA_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            const auto value = std::stoull(env, &used);
            if (used == std::string(env).size()) return value;
        } catch (const std::exception&) {
        }
        throw UsageError("TRIEA_SEED must be an unsigned integer, got '" + std::string(env) + "'");
    }
    return 0;
}

std::string sha256_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open dataset '" + path.string() + "'");
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return hex.str();
}

json read_json(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw UsageError(std::string("cannot open ") + what + " '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(std::string("invalid ") + what + " JSON: " + e.what());
    }
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
}

std::string trace_csv(const GenerationTrace& trace) {
    std::string csv = "generation,best_f,mean_f\n";
    for (const auto& r : trace.records) {
        csv += std::to_string(r.generation) + ',' + format_double(r.best_f) + ',' + format_double(r.mean_f) + '\n';
    }
    return csv;
}

int cmd_run(RunOptions opt, std::ostream& err) {
    GAConfig config = opt.config;
    config.quality_weights = opt.weights.weights;
    config.seed = resolve_seed(opt.seed);
    try {
        config.slope_mode = parse_slope_mode(opt.slope_mode);
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (opt.genes_limit && *opt.genes_limit < 2) throw UsageError("--genes-limit must be at least 2");

    const auto started = std::chrono::steady_clock::now();
    DatasetDescriptor descriptor{opt.genes_limit};
    auto tensor = load_dataset(opt.input, descriptor);
    const auto& shape = tensor.shape();
    if (shape.genes < 2 || shape.conditions < 2 || shape.times < 2) {
        throw FormatError("dataset needs at least two genes, conditions and time points");
    }
    if (!opt.no_normalize) tensor = normalize_minmax(tensor);
    tensor = impute_missing(tensor, config.seed);

    const auto result = run_triea(tensor, config, [&](std::size_t run, const EvolutionResult& best, bool admitted) {
        err << "tricluster " << run + 1 << '/' << config.n_triclusters << ": f=" << best.breakdown.f
            << " msr=" << best.breakdown.msr << " lsl=" << best.breakdown.lsl << " size "
            << best.coords.gene_count() << 'x' << best.coords.condition_count() << 'x'
            << best.coords.time_count() << (admitted ? "" : " (rejected: lsl >= delta)") << '\n';
    });
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    fs::path out_dir(opt.out_dir);
    fs::create_directories(out_dir);
    write_text(out_dir / "triclusters.json", archive_to_json(result.archive, &tensor).dump(2) + "\n");
    for (std::size_t k = 0; k < result.runs.size(); ++k) {
        write_text(out_dir / ("trace_" + std::to_string(k + 1) + ".csv"), trace_csv(result.runs[k].trace));
    }

    double mean_lsl = 0.0, mean_msr = 0.0;
    for (const auto& e : result.archive.entries()) {
        mean_lsl += e.breakdown.lsl;
        mean_msr += e.breakdown.msr;
    }
    if (!result.archive.empty()) {
        mean_lsl /= static_cast<double>(result.archive.size());
        mean_msr /= static_cast<double>(result.archive.size());
    }
    json manifest{
        {"tool", "triea"},
        {"version", TRIEA_VERSION},
        {"input", opt.input},
        {"dataset_sha256", sha256_file(opt.input)},
        {"shape", {shape.genes, shape.conditions, shape.times}},
        {"genes_limit", opt.genes_limit ? json(*opt.genes_limit) : json(nullptr)},
        {"normalize", !opt.no_normalize},
        {"missing_cells_imputed", tensor.missing_count()},
        {"config", config},
        {"duration_seconds", seconds},
        {"archive", {{"count", result.archive.size()},
                     {"mean_lsl", mean_lsl},
                     {"mean_msr", mean_msr},
                     {"admitted", result.admitted}}},
    };
    write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");

    if (result.archive.empty()) {
        err << "warning: no tricluster passed the LSL threshold (delta=" << config.delta << ")\n";
        return kEmptyArchive;
    }
    return kOk;
}

int cmd_generate(const GenerateOptions& opt, std::ostream& err) {
    SyntheticSpec spec;
    try {
        read_json(opt.spec, "synthetic spec").get_to(spec);
    } catch (const json::exception& e) {
        throw UsageError(std::string("invalid synthetic spec: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    SyntheticDataset data;
    try {
        data = generate_synthetic(spec);
    } catch (const PlantOverlapError& e) {
        err << "error: " << e.what() << '\n';
        return kPlantOverlap;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    fs::path out_dir(opt.out_dir);
    fs::create_directories(out_dir);
    std::ostringstream csv;
    export_csv(data.tensor, csv);
    write_text(out_dir / "tensor.csv", csv.str());

    json truth{{"dims", {spec.dims.genes, spec.dims.conditions, spec.dims.times}}, {"planted", json::array()}};
    for (std::size_t i = 0; i < data.truth.size(); ++i) {
        json p = data.truth[i];
        p["pattern"] = std::string(to_string(spec.planted[i].pattern));
        truth["planted"].push_back(std::move(p));
    }
    truth["spec"] = spec;
    write_text(out_dir / "ground_truth.json", truth.dump(2) + "\n");
    return kOk;
}

int cmd_evaluate(const EvaluateOptions& opt, std::ostream& out) {
    SlopeMode mode;
    try {
        mode = parse_slope_mode(opt.slope_mode);
        opt.weights.weights.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    TriclusterCoords coords;
    Archive archive;
    try {
        read_json(opt.coords, "coords").get_to(coords);
        if (!opt.archive.empty()) archive = archive_from_json(read_json(opt.archive, "archive"));
    } catch (const json::exception& e) {
        throw UsageError(std::string("invalid coords/archive JSON: ") + e.what());
    }

    auto tensor = load_dataset(opt.input);
    if (opt.normalize) {
        tensor = impute_missing(normalize_minmax(tensor), resolve_seed(opt.seed));
    } else if (tensor.missing_count() > 0) {
        throw FormatError("dataset has missing values; pass --normalize to impute them");
    }
    try {
        validate(coords, tensor.shape(), 2);
    } catch (const CoordsBoundsError& e) {
        throw FormatError(std::string("coords out of bounds: ") + e.what());
    } catch (const CoordsError& e) {
        throw UsageError(e.what());
    }
    out << json(fitness(tensor, coords, opt.weights.weights, archive, mode)).dump(2) << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Triclustering of 3D gene expression data with an evolutionary algorithm", "triea"};
    app.require_subcommand(1);

    RunOptions run_opt;
    auto* run_cmd = app.add_subcommand("run", "Mine triclusters from a long-format expression CSV");
    run_cmd->add_option("--input", run_opt.input, "gene,condition,time,value CSV")->required();
    run_cmd->add_option("--out", run_opt.out_dir, "Output directory")->capture_default_str();
    run_cmd->add_option("--seed", run_opt.seed, "Random seed (overrides TRIEA_SEED)");
    run_cmd->add_option("--pop", run_opt.config.population_size, "Population size")->capture_default_str();
    run_cmd->add_option("--generations", run_opt.config.generations, "Generations per tricluster")
        ->capture_default_str();
    run_cmd->add_option("--pc", run_opt.config.p_crossover, "Crossover probability")->capture_default_str();
    run_cmd->add_option("--pm", run_opt.config.p_mutation, "Mutation probability")->capture_default_str();
    run_cmd->add_option("--elite", run_opt.config.elite_count, "Elite individuals kept per generation")
        ->capture_default_str();
    run_cmd->add_option("--delta", run_opt.config.delta, "LSL acceptance threshold")->capture_default_str();
    run_cmd->add_option("--n-triclusters", run_opt.config.n_triclusters, "Number of GA runs")
        ->capture_default_str();
    run_cmd->add_option("--slope-mode", run_opt.slope_mode, "ols | paper-literal")
        ->check(CLI::IsMember({"ols", "paper-literal"}))
        ->capture_default_str();
    run_cmd->add_option("--genes-limit", run_opt.genes_limit, "Keep only the first N genes in file order");
    run_cmd->add_flag("--no-normalize", run_opt.no_normalize, "Skip min-max normalization");
    run_opt.weights.add_to(*run_cmd);

    GenerateOptions gen_opt;
    auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic tensor with planted triclusters");
    gen_cmd->add_option("--spec", gen_opt.spec, "Synthetic spec JSON")->required();
    gen_cmd->add_option("--out", gen_opt.out_dir, "Output directory")->required();

    EvaluateOptions eval_opt;
    auto* eval_cmd = app.add_subcommand("evaluate", "Print the fitness breakdown of one tricluster");
    eval_cmd->add_option("--input", eval_opt.input, "gene,condition,time,value CSV")->required();
    eval_cmd->add_option("--coords", eval_opt.coords, "JSON with genes/conditions/times index lists")->required();
    eval_cmd->add_option("--archive", eval_opt.archive, "triclusters.json of previously found triclusters");
    eval_cmd->add_option("--slope-mode", eval_opt.slope_mode, "ols | paper-literal")
        ->check(CLI::IsMember({"ols", "paper-literal"}))
        ->capture_default_str();
    eval_cmd->add_flag("--normalize", eval_opt.normalize, "Min-max normalize and impute before evaluating");
    eval_cmd->add_option("--seed", eval_opt.seed, "Imputation seed (overrides TRIEA_SEED)");
    eval_opt.weights.add_to(*eval_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadFlags;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_opt, err);
        if (gen_cmd->parsed()) return cmd_generate(gen_opt, err);
        if (eval_cmd->parsed()) return cmd_evaluate(eval_opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kBadFlags;
    } catch (const FormatError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return kBadFlags;
}

}  // namespace triea::cli
