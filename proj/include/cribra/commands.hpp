#ifndef CRIBRA_COMMANDS_HPP
#define CRIBRA_COMMANDS_HPP

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cribra/augmentation.hpp"
#include "cribra/common.hpp"
#include "cribra/csv.hpp"
#include "cribra/embeddings.hpp"
#include "cribra/evaluation.hpp"
#include "cribra/features_spatial.hpp"
#include "cribra/image_io.hpp"
#include "cribra/manifest.hpp"
#include "cribra/mlp.hpp"
#include "cribra/model_io.hpp"
#include "cribra/segmentation.hpp"
#include "cribra/svm.hpp"
#include "cribra/synthgen.hpp"
#include "cribra/tile.hpp"

// Exit codes: 0 success, 1 config/contract error, 2 partial data failure.

namespace cribra {

namespace fs = std::filesystem;

// ---------------------------------------------------------------- synth ---

struct SynthOptions {
    std::string out_dir;
    std::uint64_t seed = 1;
    int patients_per_set = 1; // 3 sets, round-robin
    int tiles_per_class = 10; // per patient
    int side = 256;
    double noise_sigma = 4.0;
    bool write_masks = true;
};

inline int cmd_synth(const SynthOptions& opt, std::ostream& log = std::cerr) {
    fs::create_directories(opt.out_dir);
    fs::create_directories(fs::path(opt.out_dir) / "tiles");
    if (opt.write_masks) fs::create_directories(fs::path(opt.out_dir) / "masks");

    std::vector<ManifestRow> rows;
    std::array<std::vector<std::string>, 3> sets;
    const int n_patients = opt.patients_per_set * 3;
    for (int p = 0; p < n_patients; ++p) {
        char pid[32];
        std::snprintf(pid, sizeof pid, "synth_p%02d", p + 1);
        sets[static_cast<std::size_t>(p % 3)].push_back(pid);
        for (int cls = 0; cls < 2; ++cls)
            for (int k = 0; k < opt.tiles_per_class; ++k) {
                SynthSpec spec;
                spec.seed = mix_seed(opt.seed, static_cast<std::uint64_t>(p),
                                     static_cast<std::uint64_t>(cls),
                                     static_cast<std::uint64_t>(k));
                spec.side = opt.side;
                spec.noise_sigma = opt.noise_sigma;
                spec.patient_id = pid;
                spec.cls = cls ? SynthClass::CribriformLike : SynthClass::NonCribriformLike;
                if (spec.cls == SynthClass::NonCribriformLike) {
                    spec.lumina_per_gland = 1;
                } else {
                    // denser nuclei in the sieve-pattern class keeps the two
                    // classes well separated in the spatial-graph features
                    spec.nuclei_per_gland = 20;
                }
                const SynthResult res = generate(spec);

                char tid[64];
                std::snprintf(tid, sizeof tid, "%s_%s_%03d", pid,
                              cls ? "crib" : "noncrib", k);
                const std::string rel = std::string("tiles/") + tid + ".png";
                Tile tile = res.tile;
                tile.id = tid;
                save_tile_png(tile, (fs::path(opt.out_dir) / rel).string());
                if (opt.write_masks) {
                    std::vector<std::uint8_t> mask(res.nuclei_mask.size());
                    for (std::size_t i = 0; i < mask.size(); ++i)
                        mask[i] = res.nuclei_mask[i] ? 255 : 0;
                    save_gray_png(mask, opt.side, opt.side,
                                  (fs::path(opt.out_dir) / "masks" / (std::string(tid) + ".png"))
                                      .string());
                }
                ManifestRow row;
                row.tile_path = rel;
                row.tile_id = tid;
                row.patient_id = pid;
                row.label = tile.label;
                row.source_id = tid;
                rows.push_back(std::move(row));
            }
    }
    write_manifest(rows, (fs::path(opt.out_dir) / "manifest.csv").string());

    nlohmann::ordered_json sj;
    sj["set1"] = sets[0];
    sj["set2"] = sets[1];
    sj["set3"] = sets[2];
    AtomicFileWriter w((fs::path(opt.out_dir) / "sets_config.json").string());
    w.stream() << sj.dump(2) << "\n";
    w.commit();
    log << "synth: wrote " << rows.size() << " tiles to " << opt.out_dir << "\n";
    return 0;
}

// -------------------------------------------------------------- augment ---

struct AugmentOptions {
    std::string context_path;
    std::string origins_path; // CSV: source_id,x_c,y_c,patient_id,label
    std::string out_dir;
    AugmentationGrid grid;
    RejectionPolicy policy;
};

inline int cmd_augment(const AugmentOptions& opt, std::ostream& log = std::cerr) {
    const Tile context = load_tile_pixels(opt.context_path).tile;
    fs::create_directories(opt.out_dir);

    struct Origin {
        std::string source_id;
        double x, y;
        std::string patient_id;
        Label label;
    };
    std::vector<Origin> origins;
    bool header = true;
    for (const std::string& line : read_lines(opt.origins_path)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) { header = false; continue; }
        const auto f = split_csv_line(line);
        if (f.size() < 5) throw ConfigError("short origins row: " + line);
        origins.push_back({f[0], std::stod(f[1]), std::stod(f[2]), f[3],
                           label_from_string(f[4])});
    }

    std::vector<ManifestRow> manifest;
    AtomicFileWriter rej((fs::path(opt.out_dir) / "rejections.csv").string());
    rej.stream() << kFormatVersionLine << "\n";
    rej.stream() << "source_id,dx,dy,theta,reason\n";
    for (const Origin& o : origins) {
        Tile ctx = context;
        ctx.id = o.source_id;
        ctx.patient_id = o.patient_id;
        ctx.label = o.label;
        const AugmentationBatch batch = sample_augmented(ctx, opt.grid, o.x, o.y, opt.policy);
        for (const Tile& t : batch.accepted) {
            const TransformInfo& tr = *t.transform;
            char name[128];
            std::snprintf(name, sizeof name, "%s_dx%+d_dy%+d_r%d.png", o.source_id.c_str(),
                          tr.dx, tr.dy, tr.theta);
            save_tile_png(t, (fs::path(opt.out_dir) / name).string());
            ManifestRow row;
            row.tile_path = name;
            row.tile_id = fs::path(name).stem().string();
            row.patient_id = o.patient_id;
            row.label = o.label;
            row.source_id = o.source_id;
            row.dx = tr.dx;
            row.dy = tr.dy;
            row.theta = tr.theta;
            manifest.push_back(std::move(row));
        }
        for (const RejectionEntry& r : batch.rejected)
            rej.stream() << csv_quote(o.source_id) << ',' << r.variant.dx << ',' << r.variant.dy
                         << ',' << r.variant.theta << ',' << r.reason << "\n";
    }
    rej.commit();
    write_manifest(manifest, (fs::path(opt.out_dir) / "manifest.csv").string());
    log << "augment: " << manifest.size() << " tiles accepted over " << origins.size()
        << " origins\n";
    return 0;
}

// ---------------------------------------------------- segment / features ---

struct FeatureOptions {
    std::string manifest_path;
    std::string out_path;
    std::string data_root;  // prefix for relative tile paths; default = manifest dir
    SegConfig seg;
    DisorderConvention disorder = DisorderConvention::Paper;
    std::string dump_objects_dir; // optional per-object CSVs
    std::string label_image_dir;  // optional debug label PNGs (cmd_segment)
    bool resume = true;
};

namespace detail {

inline std::string resolve_tile_path(const FeatureOptions& opt, const ManifestRow& row) {
    fs::path p(row.tile_path);
    if (p.is_absolute()) return p.string();
    const fs::path root = opt.data_root.empty()
                              ? fs::path(opt.manifest_path).parent_path()
                              : fs::path(opt.data_root);
    return (root / p).string();
}

inline void dump_object_csv(const SegmentationResult& seg, const std::string& path) {
    AtomicFileWriter w(path);
    w.stream() << kFormatVersionLine << "\n";
    w.stream() << "id,cx,cy,area,minor,major,ecc,orient,solidity,mean_int,"
                  "ring1,ring2,ring3,ring4\n";
    for (const auto& rec : object_records(seg)) {
        w.stream() << rec.id << ',' << format_real(rec.cx) << ',' << format_real(rec.cy) << ','
                   << format_real(rec.area) << ',' << format_real(rec.shape.minor_axis) << ','
                   << format_real(rec.shape.major_axis) << ','
                   << format_real(rec.shape.eccentricity) << ','
                   << format_real(rec.shape.orientation) << ','
                   << format_real(rec.shape.solidity) << ','
                   << format_real(rec.radial.mean_intensity);
        for (double rm : rec.radial.ring_means) w.stream() << ',' << format_real(rm);
        w.stream() << "\n";
    }
    w.commit();
}

} // namespace detail

// One tile through the full pipeline: load, gray, segment, 57 features.
inline FeatureRow compute_feature_row(const Tile& tile, const std::string& tile_id,
                                      const SegConfig& seg_cfg, DisorderConvention conv,
                                      SegmentationResult* seg_out = nullptr) {
    const GrayImage gray = to_gray(tile);
    const SegConfig cfg = seg_cfg.scaled_for(std::min(tile.width, tile.height));
    const SegmentationResult seg = segment_nuclei(gray, cfg, tile_id);
    const FeatureVector fv = assemble_features(seg, conv);
    FeatureRow row;
    row.tile_id = tile_id;
    row.patient_id = tile.patient_id;
    row.label = tile.label;
    row.valid = fv.valid;
    row.values.assign(fv.values.begin(), fv.values.end());
    if (seg_out) *seg_out = seg;
    return row;
}

// Shared implementation of `segment` and `features`: per-tile errors are
// logged and never abort the batch. Resumable: already-emitted tile ids are
// skipped and the existing output is kept byte-for-byte.
inline int cmd_features(const FeatureOptions& opt, std::ostream& log = std::cerr) {
    const auto manifest = read_manifest(opt.manifest_path);

    std::vector<FeatureRow> existing;
    std::set<std::string> done;
    if (opt.resume && fs::exists(opt.out_path)) {
        existing = read_feature_csv(opt.out_path);
        for (const auto& r : existing) done.insert(r.tile_id);
    }

    std::vector<const ManifestRow*> todo;
    for (const auto& row : manifest)
        if (!done.count(row.tile_id)) todo.push_back(&row);

    if (todo.empty() && opt.resume && fs::exists(opt.out_path)) {
        log << "features: output already complete, nothing to do\n";
        return 0;
    }

    if (!opt.dump_objects_dir.empty()) fs::create_directories(opt.dump_objects_dir);
    if (!opt.label_image_dir.empty()) fs::create_directories(opt.label_image_dir);

    struct Outcome {
        bool ok = false;
        FeatureRow row;
        std::string error;
    };
    std::vector<Outcome> outcomes(todo.size());
    parallel_for(todo.size(), [&](std::size_t i) {
        const ManifestRow& mrow = *todo[i];
        Outcome& out = outcomes[i];
        try {
            Tile tile = load_tile_pixels(detail::resolve_tile_path(opt, mrow)).tile;
            tile.patient_id = mrow.patient_id;
            tile.label = mrow.label;
            tile.id = mrow.tile_id;
            SegmentationResult seg;
            out.row = compute_feature_row(tile, mrow.tile_id, opt.seg, opt.disorder, &seg);
            if (!opt.dump_objects_dir.empty())
                detail::dump_object_csv(
                    seg, (fs::path(opt.dump_objects_dir) / (mrow.tile_id + ".csv")).string());
            if (!opt.label_image_dir.empty()) {
                const auto labels = label_image(seg, tile.width, tile.height);
                save_gray_png(labels, tile.width, tile.height,
                              (fs::path(opt.label_image_dir) / (mrow.tile_id + ".png")).string());
            }
            out.ok = true;
        } catch (const std::exception& e) {
            out.error = e.what();
        }
    });

    std::size_t failures = 0;
    const std::string err_path = opt.out_path + ".errors.csv";
    std::ostringstream errbuf;
    for (std::size_t i = 0; i < todo.size(); ++i) {
        if (outcomes[i].ok) existing.push_back(std::move(outcomes[i].row));
        else {
            ++failures;
            errbuf << csv_quote(todo[i]->tile_id) << ',' << csv_quote(outcomes[i].error) << "\n";
        }
    }
    write_feature_csv(existing, opt.out_path, feature_column_names());
    if (failures) {
        AtomicFileWriter w(err_path);
        w.stream() << "tile_id,error\n" << errbuf.str();
        w.commit();
        log << "features: " << failures << " tile(s) failed, see " << err_path << "\n";
        return 2;
    }
    log << "features: " << existing.size() << " rows in " << opt.out_path << "\n";
    return 0;
}

// ------------------------------------------------------- train / predict ---

struct TrainSvmOptions {
    std::string features_path;
    std::string out_path;
    SvmConfig cfg;
    bool include_invalid = false;
};

inline std::pair<std::vector<std::vector<double>>, std::vector<int>> labeled_rows(
    const std::vector<FeatureRow>& rows, bool include_invalid) {
    std::vector<std::vector<double>> X;
    std::vector<int> y;
    for (const auto& r : rows) {
        if (r.label == Label::Unlabeled) continue;
        if (!r.valid && !include_invalid) continue;
        X.push_back(r.values);
        y.push_back(r.label == Label::Cribriform ? +1 : -1);
    }
    return {X, y};
}

inline int cmd_train_svm(const TrainSvmOptions& opt, std::ostream& log = std::cerr) {
    const auto rows = read_feature_csv(opt.features_path);
    auto [X, y] = labeled_rows(rows, opt.include_invalid);
    if (X.empty()) throw ConfigError("train-svm: no labeled rows in " + opt.features_path);
    const SvmModel model = train_svm(X, y, opt.cfg);
    save_svm(model, opt.out_path);
    log << "train-svm: " << model.support_vectors.size() << " support vectors -> "
        << opt.out_path << "\n";
    return 0;
}

struct TrainMlpOptions {
    std::string features_path;
    std::string val_features_path; // optional
    std::vector<std::string> embedding_paths;
    std::string out_path;
    MlpConfig cfg;
    bool include_invalid = false;
};

inline std::pair<std::vector<std::vector<double>>, std::vector<int>> fused_labeled_rows(
    const std::vector<FeatureRow>& rows, const std::vector<EmbeddingFile>& embeddings,
    bool include_invalid) {
    std::vector<std::vector<double>> X;
    std::vector<int> y;
    for (const auto& r : rows) {
        if (r.label == Label::Unlabeled) continue;
        if (!r.valid && !include_invalid) continue;
        X.push_back(fuse(r.values, r.tile_id, embeddings));
        y.push_back(r.label == Label::Cribriform ? 1 : 0);
    }
    return {X, y};
}

inline int cmd_train_mlp(const TrainMlpOptions& opt, std::ostream& log = std::cerr) {
    std::vector<EmbeddingFile> embeddings;
    for (const auto& p : opt.embedding_paths) embeddings.push_back(read_embedding_file(p));
    const auto rows = read_feature_csv(opt.features_path);
    auto [X, y] = fused_labeled_rows(rows, embeddings, opt.include_invalid);
    if (X.empty()) throw ConfigError("train-mlp: no labeled rows in " + opt.features_path);

    MlpModel model;
    if (!opt.val_features_path.empty()) {
        const auto vrows = read_feature_csv(opt.val_features_path);
        auto [vX, vy] = fused_labeled_rows(vrows, embeddings, opt.include_invalid);
        model = train_mlp(X, y, opt.cfg, &vX, &vy);
    } else {
        model = train_mlp(X, y, opt.cfg);
    }
    save_mlp(model, opt.out_path);
    log << "train-mlp: dims";
    for (int d : model.layer_dims) log << ' ' << d;
    log << " -> " << opt.out_path << "\n";
    return 0;
}

struct PredictOptions {
    std::string model_path;
    std::string features_path;
    std::vector<std::string> embedding_paths;
    std::string out_path;
    bool include_invalid = true;
};

inline int cmd_predict(const PredictOptions& opt, std::ostream& log = std::cerr) {
    const nlohmann::json j = load_model_json(opt.model_path);
    const std::string kind = j.at("kind").get<std::string>();
    std::vector<EmbeddingFile> embeddings;
    for (const auto& p : opt.embedding_paths) embeddings.push_back(read_embedding_file(p));
    const auto rows = read_feature_csv(opt.features_path);

    AtomicFileWriter w(opt.out_path);
    w.stream() << kFormatVersionLine << "\n";
    w.stream() << "tile_id,label,predicted,score\n";
    std::size_t hits = 0, total = 0;
    if (kind == "svm") {
        const SvmModel model = load_svm(j);
        for (const auto& r : rows) {
            if (!r.valid && !opt.include_invalid) continue;
            const std::vector<double> x = fuse(r.values, r.tile_id, embeddings);
            const SvmPrediction p = predict_svm(model, x);
            const std::string pred =
                p.label > 0 ? "cribriform" : "non_cribriform";
            w.stream() << csv_quote(r.tile_id) << ',' << label_to_string(r.label) << ',' << pred
                       << ',' << format_real(p.score) << "\n";
            if (r.label != Label::Unlabeled) {
                ++total;
                if ((r.label == Label::Cribriform) == (p.label > 0)) ++hits;
            }
        }
    } else if (kind == "mlp") {
        const MlpModel model = load_mlp(j);
        for (const auto& r : rows) {
            if (!r.valid && !opt.include_invalid) continue;
            const std::vector<double> x = fuse(r.values, r.tile_id, embeddings);
            const MlpPrediction p = predict_mlp(model, x);
            const std::string pred = p.label == 1 ? "cribriform" : "non_cribriform";
            w.stream() << csv_quote(r.tile_id) << ',' << label_to_string(r.label) << ',' << pred
                       << ',' << format_real(p.probabilities[1]) << "\n";
            if (r.label != Label::Unlabeled) {
                ++total;
                if ((r.label == Label::Cribriform) == (p.label == 1)) ++hits;
            }
        }
    } else {
        throw ConfigError("unknown model kind: " + kind);
    }
    w.commit();
    if (total)
        log << "predict: accuracy " << format_real(static_cast<double>(hits) / total) << " over "
            << total << " labeled rows\n";
    return 0;
}

// ------------------------------------------------------------- evaluate ---

struct EvaluateOptions {
    std::string manifest_path;
    std::string features_path;
    std::string sets_config_path;
    std::vector<std::string> embedding_paths;
    std::string recipe = "svm"; // svm | mlp
    std::size_t n_per_class = 1500;
    std::uint64_t seed = 1;
    std::string out_prefix; // writes <prefix>.txt and <prefix>.csv
    SvmConfig svm_cfg;
    MlpConfig mlp_cfg;
};

inline std::array<std::vector<std::string>, 3> read_sets_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UnreadableFile("cannot open sets config: " + path);
    nlohmann::json j;
    in >> j;
    std::array<std::vector<std::string>, 3> sets;
    const char* keys[3] = {"set1", "set2", "set3"};
    for (int s = 0; s < 3; ++s) {
        if (!j.contains(keys[s]))
            throw ConfigError(std::string("sets config missing ") + keys[s] + " in " + path);
        sets[static_cast<std::size_t>(s)] = j.at(keys[s]).get<std::vector<std::string>>();
    }
    return sets;
}

inline ModelRecipe make_recipe(const std::string& name, const SvmConfig& svm_cfg,
                               const MlpConfig& mlp_cfg) {
    ModelRecipe recipe;
    if (name == "svm") {
        recipe.run = [svm_cfg](const std::vector<std::vector<double>>& trX,
                               const std::vector<int>& trY,
                               const std::vector<std::vector<double>>& vaX,
                               const std::vector<int>&,
                               const std::vector<std::vector<double>>& teX) {
            const SvmModel m = train_svm(trX, trY, svm_cfg);
            FoldRunResult res;
            for (const auto& x : teX) res.test_predictions.push_back(predict_svm(m, x).label);
            for (const auto& x : vaX)
                res.validation_predictions.push_back(predict_svm(m, x).label);
            return res;
        };
    } else if (name == "mlp") {
        recipe.run = [mlp_cfg](const std::vector<std::vector<double>>& trX,
                               const std::vector<int>& trY,
                               const std::vector<std::vector<double>>& vaX,
                               const std::vector<int>& vaY,
                               const std::vector<std::vector<double>>& teX) {
            std::vector<int> trY01(trY.size()), vaY01(vaY.size());
            for (std::size_t i = 0; i < trY.size(); ++i) trY01[i] = trY[i] > 0 ? 1 : 0;
            for (std::size_t i = 0; i < vaY.size(); ++i) vaY01[i] = vaY[i] > 0 ? 1 : 0;
            const MlpModel m = train_mlp(trX, trY01, mlp_cfg, &vaX, &vaY01);
            FoldRunResult res;
            for (const auto& x : teX)
                res.test_predictions.push_back(predict_mlp(m, x).label == 1 ? +1 : -1);
            for (const auto& x : vaX)
                res.validation_predictions.push_back(predict_mlp(m, x).label == 1 ? +1 : -1);
            return res;
        };
    } else {
        throw ConfigError("unknown recipe: " + name);
    }
    return recipe;
}

inline void write_fold_report(const FoldReport& rep, const std::string& prefix) {
    {
        AtomicFileWriter w(prefix + ".csv");
        w.stream() << kFormatVersionLine << "\n";
        w.stream() << "fold,accuracy,validation_accuracy,tp,tn,fp,fn\n";
        for (std::size_t f = 0; f < rep.fold_accuracies.size(); ++f) {
            const ConfusionMatrix& cm = rep.confusions[f];
            w.stream() << (f + 1) << ',' << format_real(rep.fold_accuracies[f]) << ','
                       << (f < rep.fold_validation_accuracies.size()
                               ? format_real(rep.fold_validation_accuracies[f])
                               : std::string())
                       << ',' << cm.tp << ',' << cm.tn << ',' << cm.fp << ',' << cm.fn << "\n";
        }
        w.stream() << "mean," << format_real(rep.mean) << ",,,,,\n";
        w.stream() << "sample_std," << format_real(rep.sample_std) << ",,,,,\n";
        w.stream() << "standard_error," << format_real(rep.standard_error) << ",,,,,\n";
        w.commit();
    }
    {
        AtomicFileWriter w(prefix + ".txt");
        w.stream() << "Three-fold cross-validated accuracy\n";
        w.stream() << "-----------------------------------\n";
        for (std::size_t f = 0; f < rep.fold_accuracies.size(); ++f) {
            const ConfusionMatrix& cm = rep.confusions[f];
            w.stream() << "fold " << (f + 1) << ": accuracy " << format_real(rep.fold_accuracies[f]);
            if (f < rep.fold_validation_accuracies.size())
                w.stream() << "  (validation " << format_real(rep.fold_validation_accuracies[f])
                           << ")";
            w.stream() << "  [tp=" << cm.tp << " tn=" << cm.tn << " fp=" << cm.fp
                       << " fn=" << cm.fn << "]\n";
        }
        w.stream() << "mean " << format_real(rep.mean) << "  sample-std "
                   << format_real(rep.sample_std) << "  standard-error "
                   << format_real(rep.standard_error) << "\n";
        w.commit();
    }
}

inline int cmd_evaluate(const EvaluateOptions& opt, std::ostream& log = std::cerr) {
    const auto manifest = read_manifest(opt.manifest_path);
    const FoldPlan plan = build_fold_plan(manifest, read_sets_config(opt.sets_config_path));

    std::vector<EmbeddingFile> embeddings;
    for (const auto& p : opt.embedding_paths) embeddings.push_back(read_embedding_file(p));

    const auto feature_rows = read_feature_csv(opt.features_path);
    std::map<std::string, std::vector<double>> rows_by_id;
    for (const auto& r : feature_rows) {
        if (!r.valid) continue; // degenerate tiles excluded from the study
        rows_by_id[r.tile_id] = embeddings.empty() ? r.values
                                                   : fuse(r.values, r.tile_id, embeddings);
    }

    // restrict sampling to tiles with usable feature rows
    std::vector<ManifestRow> usable;
    for (const auto& r : manifest)
        if (rows_by_id.count(r.tile_id)) usable.push_back(r);

    const ModelRecipe recipe = make_recipe(opt.recipe, opt.svm_cfg, opt.mlp_cfg);
    const FoldReport rep = run_cv(usable, plan, rows_by_id, opt.n_per_class, opt.seed, recipe);
    write_fold_report(rep, opt.out_prefix);
    log << "evaluate: mean accuracy " << format_real(rep.mean) << " +- "
        << format_real(rep.standard_error) << " (SE), reports at " << opt.out_prefix
        << ".{txt,csv}\n";
    return 0;
}

// ---------------------------------------------------------------- report ---

inline int cmd_report(const std::string& report_csv, std::ostream& out = std::cout) {
    bool header = true;
    for (const std::string& line : read_lines(report_csv)) {
        if (line.empty() || line[0] == '#') continue;
        const auto f = split_csv_line(line);
        if (header) { header = false; continue; }
        if (f[0] == "mean" || f[0] == "sample_std" || f[0] == "standard_error") {
            out << f[0] << ": " << f[1] << "\n";
        } else {
            out << "fold " << f[0] << ": accuracy " << f[1];
            if (f.size() > 2 && !f[2].empty()) out << " (validation " << f[2] << ")";
            out << "\n";
        }
    }
    return 0;
}

} // namespace cribra

#endif
