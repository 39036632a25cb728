// dcmi - mutual information between a discrete and a continuous data column.
//
// Subcommands: estimate, significance, kde, oracle, experiment. See README
// for formats and the reproducibility contract. Exit codes: 0 success,
// 2 usage/input error, 3 computation error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dcmi/dataset.hpp"
#include "dcmi/errors.hpp"
#include "dcmi/experiments.hpp"
#include "dcmi/mi.hpp"
#include "dcmi/serialize.hpp"
#include "dcmi/significance.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCompute = 3;

struct Options {
    std::string input;
    std::string output;
    std::string format = "csv";
    std::string grid_expr;
    std::string dist = "gaussian";
    std::string param = "ym";
    std::string null_model = "gaussian";
    std::uint64_t seed = 0;
    double factor = 1.06;
    std::size_t surrogates = 100;
    std::size_t replicates = 100;
    std::size_t pairs = 1000;
    double y_m = 1.0;
    double sigma_g = 1.0;
    double a = 1.0;
    bool table1 = false;
    bool size_study = false;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty() || opt.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) {
        throw dcmi::InputError("cannot open output file '" + opt.output + "'");
    }
    out << text;
}

dcmi::Family parse_family(const std::string& name) {
    if (name == "gaussian") return dcmi::Family::gaussian_pair;
    if (name == "uniform") return dcmi::Family::uniform_pair;
    if (name == "exponential") return dcmi::Family::exponential_pair;
    throw dcmi::InputError("unknown distribution family '" + name + "'");
}

dcmi::BenchmarkDistribution build_distribution(const Options& opt, const CLI::App* sub) {
    const dcmi::Family family = parse_family(opt.dist);
    const bool has_params = sub->count("--ym") || sub->count("--sigma") || sub->count("--a");
    switch (family) {
        case dcmi::Family::gaussian_pair:
            return dcmi::BenchmarkDistribution::gaussian(opt.y_m, opt.sigma_g);
        case dcmi::Family::uniform_pair:
            return dcmi::BenchmarkDistribution::uniform(opt.y_m, opt.a);
        case dcmi::Family::exponential_pair:
            if (has_params) {
                throw dcmi::InputError("the exponential family has fixed rates; "
                                       "--ym/--sigma/--a are not accepted");
            }
            return dcmi::BenchmarkDistribution::exponential();
    }
    throw dcmi::InputError("unknown distribution family");
}

int cmd_estimate(const Options& opt) {
    const auto ds = dcmi::LabeledDataset::load_csv(opt.input);
    const auto est = dcmi::estimate_mi(ds, opt.factor);
    emit(opt, dcmi::to_json(est).dump(2) + "\n");
    return kExitOk;
}

int cmd_significance(const Options& opt) {
    const auto ds = dcmi::LabeledDataset::load_csv(opt.input);
    const auto null_model = opt.null_model == "permutation"
                                ? dcmi::NullModel::permutation
                                : dcmi::NullModel::gaussian;
    const auto rep = dcmi::significance(ds, opt.surrogates, opt.seed, opt.factor, null_model);
    emit(opt, dcmi::to_json(rep).dump(2) + "\n");
    return kExitOk;
}

int cmd_kde(const Options& opt) {
    const auto ds = dcmi::LabeledDataset::load_csv(opt.input);
    const auto grid = dcmi::parse_grid(opt.grid_expr);
    const auto model = dcmi::ConditionalKde::fit(ds, opt.factor);
    std::ostringstream os;
    model.write_grid_csv(os, grid);
    emit(opt, os.str());
    return kExitOk;
}

int cmd_oracle(const Options& opt, const CLI::App* sub) {
    const auto dist = build_distribution(opt, sub);
    nlohmann::json params = nlohmann::json::object();
    if (dist.family() == dcmi::Family::gaussian_pair) {
        params = {{"ym", dist.param_ym()}, {"sigma", dist.param_sigma()}};
    } else if (dist.family() == dcmi::Family::uniform_pair) {
        params = {{"ym", dist.param_ym()}, {"a", dist.param_a()}};
    }
    const nlohmann::json out = {
        {"family", std::string(dist.family_name())},
        {"params", params},
        {"analytic_mi_nats", dcmi::analytic_mi_quadrature(dist)},
    };
    emit(opt, out.dump(2) + "\n");
    return kExitOk;
}

int cmd_experiment(const Options& opt, const CLI::App* sub) {
    const bool json = opt.format == "json";

    if (opt.table1) {
        const auto res = dcmi::run_table1(opt.seed, opt.factor);
        if (json) {
            emit(opt, dcmi::to_json(res).dump(2) + "\n");
        } else if (opt.format == "table") {
            emit(opt, dcmi::format_table(res));
        } else {
            std::ostringstream os;
            dcmi::write_csv(os, res);
            emit(opt, os.str());
        }
        return kExitOk;
    }

    dcmi::SweepSpec spec;
    spec.family = parse_family(opt.dist);
    spec.param = opt.param;
    spec.replicates = opt.replicates;
    spec.pairs = opt.pairs;
    spec.base_seed = opt.seed;
    spec.factor = opt.factor;
    spec.y_m = opt.y_m;
    spec.sigma_g = opt.sigma_g;
    spec.a = opt.a;

    if (opt.size_study) {
        spec.grid = opt.grid_expr.empty()
                        ? std::vector<double>{100, 250, 500, 1000, 2000, 5000}
                        : dcmi::parse_grid(opt.grid_expr);
        spec.param = "n";
        const auto results = dcmi::run_size_study(spec);
        if (json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : results) arr.push_back(dcmi::to_json(r));
            emit(opt, arr.dump(2) + "\n");
        } else {
            std::ostringstream os;
            for (const auto& r : results) dcmi::write_csv(os, r);
            emit(opt, os.str());
        }
        return kExitOk;
    }

    if (!sub->count("--grid")) {
        throw dcmi::InputError("experiment: --grid is required for a sweep");
    }
    spec.grid = dcmi::parse_grid(opt.grid_expr);
    const auto res = dcmi::run_sweep(spec);
    if (json) {
        emit(opt, dcmi::to_json(res).dump(2) + "\n");
    } else {
        std::ostringstream os;
        dcmi::write_csv(os, res);
        emit(opt, os.str());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MI estimation between a discrete and a continuous data column"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output,-o", opt.output, "output path (default stdout)");
        sub->add_option("--factor", opt.factor, "bandwidth factor")->check(CLI::PositiveNumber);
        sub->add_option("--seed", opt.seed, "64-bit seed")->envname("DCMI_SEED");
    };

    auto* est = app.add_subcommand("estimate", "estimate MI from a label,value CSV");
    est->add_option("--input,-i", opt.input, "input CSV")->required();
    add_common(est);

    auto* sig = app.add_subcommand("significance", "surrogate-ensemble significance of MI");
    sig->add_option("--input,-i", opt.input, "input CSV")->required();
    sig->add_option("--surrogates", opt.surrogates, "surrogate count (default 100)");
    sig->add_option("--null", opt.null_model, "null model: gaussian|permutation")
        ->check(CLI::IsMember({"gaussian", "permutation"}));
    add_common(sig);

    auto* kde = app.add_subcommand("kde", "export fitted density curves on a grid");
    kde->add_option("--input,-i", opt.input, "input CSV")->required();
    kde->add_option("--grid", opt.grid_expr, "evaluation grid start:stop:step")->required();
    add_common(kde);

    auto* orc = app.add_subcommand("oracle", "exact MI of a benchmark distribution");
    orc->add_option("--dist", opt.dist, "gaussian|uniform|exponential")->required();
    orc->add_option("--ym", opt.y_m, "offset of component 1");
    orc->add_option("--sigma", opt.sigma_g, "gaussian component-1 std");
    orc->add_option("--a", opt.a, "uniform component-1 width");
    add_common(orc);

    auto* exp = app.add_subcommand("experiment", "replicated sweeps and the summary table");
    exp->add_option("--dist", opt.dist, "gaussian|uniform|exponential");
    exp->add_option("--param", opt.param, "swept parameter: ym|sigma|a|n");
    exp->add_option("--grid", opt.grid_expr, "sweep grid start:stop:step");
    exp->add_option("--replicates", opt.replicates, "datasets per grid point (default 100)");
    exp->add_option("--n", opt.pairs, "pairs per dataset (default 1000)");
    exp->add_option("--ym", opt.y_m, "fixed offset when not swept");
    exp->add_option("--sigma", opt.sigma_g, "fixed std when not swept");
    exp->add_option("--a", opt.a, "fixed width when not swept");
    exp->add_option("--format", opt.format, "csv|json|table")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    exp->add_flag("--table1", opt.table1, "one sample per family plus significance");
    exp->add_flag("--size-study", opt.size_study, "sample-size study at three settings");
    add_common(exp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (est->parsed()) return cmd_estimate(opt);
        if (sig->parsed()) return cmd_significance(opt);
        if (kde->parsed()) return cmd_kde(opt);
        if (orc->parsed()) return cmd_oracle(opt, orc);
        if (exp->parsed()) return cmd_experiment(opt, exp);
    } catch (const dcmi::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCompute;
    }
    return kExitInput;
}
