#ifndef CRIBRA_MODEL_IO_HPP
#define CRIBRA_MODEL_IO_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "cribra/csv.hpp"
#include "cribra/mlp.hpp"
#include "cribra/svm.hpp"

namespace cribra {

constexpr int kModelFormatVersion = 1;

inline nlohmann::ordered_json standardizer_to_json(const Standardizer& s) {
    return {{"means", s.means}, {"stds", s.stds}, {"constant_columns", s.constant_columns}};
}

inline Standardizer standardizer_from_json(const nlohmann::json& j) {
    Standardizer s;
    s.means = j.at("means").get<std::vector<double>>();
    s.stds = j.at("stds").get<std::vector<double>>();
    s.constant_columns = j.at("constant_columns").get<std::vector<int>>();
    return s;
}

inline void save_svm(const SvmModel& m, const std::string& path) {
    nlohmann::ordered_json j;
    j["format_version"] = kModelFormatVersion;
    j["kind"] = "svm";
    j["standardizer"] = standardizer_to_json(m.standardizer);
    j["params"] = {{"input_dim", m.standardizer.means.size()},
                   {"n_support", m.support_vectors.size()},
                   {"support_vectors", m.support_vectors},
                   {"coeffs", m.coeffs},
                   {"bias", m.bias}};
    j["training_config"] = {{"c", m.c}, {"gamma", m.gamma}};
    j["seed"] = m.seed;
    AtomicFileWriter w(path);
    w.stream() << j.dump(2) << "\n";
    w.commit();
}

inline void save_mlp(const MlpModel& m, const std::string& path) {
    nlohmann::ordered_json j;
    j["format_version"] = kModelFormatVersion;
    j["kind"] = "mlp";
    j["standardizer"] = standardizer_to_json(m.standardizer);
    j["params"] = {{"layer_dims", m.layer_dims}, {"weights", m.weights}, {"biases", m.biases}};
    j["training_config"] = nlohmann::ordered_json::object();
    j["seed"] = m.seed;
    AtomicFileWriter w(path);
    w.stream() << j.dump(2) << "\n";
    w.commit();
}

inline nlohmann::json load_model_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UnreadableFile("cannot open model: " + path);
    nlohmann::json j;
    in >> j;
    if (j.at("format_version").get<int>() != kModelFormatVersion)
        throw ConfigError("unsupported model format_version in " + path);
    return j;
}

inline SvmModel load_svm(const nlohmann::json& j) {
    SvmModel m;
    m.standardizer = standardizer_from_json(j.at("standardizer"));
    const auto& p = j.at("params");
    m.support_vectors = p.at("support_vectors").get<std::vector<std::vector<double>>>();
    m.coeffs = p.at("coeffs").get<std::vector<double>>();
    m.bias = p.at("bias").get<double>();
    m.c = j.at("training_config").at("c").get<double>();
    m.gamma = j.at("training_config").at("gamma").get<double>();
    m.seed = j.at("seed").get<std::uint64_t>();
    return m;
}

inline MlpModel load_mlp(const nlohmann::json& j) {
    MlpModel m;
    m.standardizer = standardizer_from_json(j.at("standardizer"));
    const auto& p = j.at("params");
    m.layer_dims = p.at("layer_dims").get<std::vector<int>>();
    m.weights = p.at("weights").get<std::vector<std::vector<double>>>();
    m.biases = p.at("biases").get<std::vector<std::vector<double>>>();
    m.seed = j.at("seed").get<std::uint64_t>();
    return m;
}

} // namespace cribra

#endif
