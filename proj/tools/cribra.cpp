// cribra: tile-level histopathology analysis pipeline
//   synth | augment | segment | features | train-svm | train-mlp |
//   predict | evaluate | report
//
// Exit codes: 0 success, 1 config/contract error, 2 partial data failure.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cribra/commands.hpp"

namespace {

int run(int argc, char** argv) {
    CLI::App app{"cribra: nuclei-feature histopathology tile pipeline"};
    app.require_subcommand(1);

    // synth
    cribra::SynthOptions synth;
    CLI::App* s = app.add_subcommand("synth", "generate a synthetic labeled tile dataset");
    s->add_option("--out", synth.out_dir, "output dataset directory")->required();
    s->add_option("--seed", synth.seed, "random seed");
    s->add_option("--patients-per-set", synth.patients_per_set, "synthetic patients per fold set");
    s->add_option("--tiles-per-class", synth.tiles_per_class, "tiles per class per patient");
    s->add_option("--side", synth.side, "tile side in pixels");
    s->add_option("--noise-sigma", synth.noise_sigma, "Gaussian pixel noise sigma");
    s->add_flag("!--no-masks", synth.write_masks, "skip ground-truth mask PNGs");

    // augment
    cribra::AugmentOptions aug;
    std::vector<int> thetas;
    CLI::App* a = app.add_subcommand("augment", "sample the translation/rotation grid");
    a->add_option("--context", aug.context_path, "context image (PNG/TIFF)")->required();
    a->add_option("--origins", aug.origins_path,
                  "origins CSV: source_id,x_c,y_c,patient_id,label")->required();
    a->add_option("--out", aug.out_dir, "output directory")->required();
    a->add_option("--delta", aug.grid.delta, "translation step in pixels");
    a->add_option("--kmax", aug.grid.k_max, "translation multiples per axis");
    a->add_option("--thetas", thetas, "rotation angles in degrees");
    a->add_option("--side", aug.grid.side, "output tile side");
    a->add_option("--max-blank", aug.policy.max_blank_fraction, "max blank pixel fraction");
    a->add_option("--blank-luminance", aug.policy.blank_luminance,
                  "min(R,G,B) at or above this counts as blank");

    // segment / features
    cribra::FeatureOptions feat;
    std::string disorder_convention = "paper";
    auto add_pipeline_flags = [&](CLI::App* c) {
        c->add_option("--manifest", feat.manifest_path, "input manifest CSV")->required();
        c->add_option("--out", feat.out_path, "output feature CSV")->required();
        c->add_option("--data-root", feat.data_root, "root for relative tile paths");
        c->add_option("--min-area", feat.seg.min_area, "min nucleus area (px at 1024^2)");
        c->add_option("--max-area", feat.seg.max_area, "max nucleus area (px at 1024^2)");
        c->add_option("--dump-objects", feat.dump_objects_dir, "per-object CSV dump directory");
        c->add_option("--disorder-convention", disorder_convention,
                      "disorder formula: paper | cv");
        c->add_flag("!--no-resume", feat.resume, "recompute even if output exists");
    };
    CLI::App* seg = app.add_subcommand("segment", "segment nuclei (with debug label images)");
    add_pipeline_flags(seg);
    seg->add_option("--label-images", feat.label_image_dir, "debug label PNG directory");
    CLI::App* fe = app.add_subcommand("features", "extract 57-dimension nuclei features");
    add_pipeline_flags(fe);

    // train-svm
    cribra::TrainSvmOptions tsvm;
    CLI::App* ts = app.add_subcommand("train-svm", "train the RBF-kernel SVM");
    ts->add_option("--features", tsvm.features_path, "training feature CSV")->required();
    ts->add_option("--out", tsvm.out_path, "output model file")->required();
    ts->add_option("--c", tsvm.cfg.c, "soft-margin C");
    ts->add_option("--gamma", tsvm.cfg.gamma, "RBF gamma");
    ts->add_option("--tol", tsvm.cfg.tol, "KKT tolerance");
    ts->add_option("--seed", tsvm.cfg.seed, "random seed");

    // train-mlp
    cribra::TrainMlpOptions tmlp;
    CLI::App* tm = app.add_subcommand("train-mlp", "train the fusion MLP");
    tm->add_option("--features", tmlp.features_path, "training feature CSV")->required();
    tm->add_option("--val-features", tmlp.val_features_path, "validation feature CSV");
    tm->add_option("--embeddings", tmlp.embedding_paths, "embedding CSV files, in fusion order");
    tm->add_option("--out", tmlp.out_path, "output model file")->required();
    tm->add_option("--epochs", tmlp.cfg.epochs, "training epochs");
    tm->add_option("--lr", tmlp.cfg.lr, "learning rate");
    tm->add_option("--momentum", tmlp.cfg.momentum, "momentum");
    tm->add_option("--batch", tmlp.cfg.batch, "mini-batch size");
    tm->add_option("--seed", tmlp.cfg.seed, "random seed");

    // predict
    cribra::PredictOptions pred;
    CLI::App* p = app.add_subcommand("predict", "apply a trained model to a feature CSV");
    p->add_option("--model", pred.model_path, "model file")->required();
    p->add_option("--features", pred.features_path, "feature CSV")->required();
    p->add_option("--embeddings", pred.embedding_paths, "embedding CSV files, in fusion order");
    p->add_option("--out", pred.out_path, "prediction CSV")->required();

    // evaluate
    cribra::EvaluateOptions ev;
    CLI::App* e = app.add_subcommand("evaluate", "three-fold patient-exclusive cross-validation");
    e->add_option("--manifest", ev.manifest_path, "manifest CSV")->required();
    e->add_option("--features", ev.features_path, "feature CSV")->required();
    e->add_option("--sets-config", ev.sets_config_path, "patient sets JSON")->required();
    e->add_option("--embeddings", ev.embedding_paths, "embedding CSV files (fusion recipes)");
    e->add_option("--recipe", ev.recipe, "model recipe: svm | mlp");
    e->add_option("--n-per-class", ev.n_per_class, "tiles per class per role");
    e->add_option("--seed", ev.seed, "random seed");
    e->add_option("--out-prefix", ev.out_prefix, "report file prefix")->required();
    e->add_option("--c", ev.svm_cfg.c, "SVM soft-margin C");
    e->add_option("--gamma", ev.svm_cfg.gamma, "SVM RBF gamma");
    e->add_option("--epochs", ev.mlp_cfg.epochs, "MLP training epochs");
    e->add_option("--lr", ev.mlp_cfg.lr, "MLP learning rate");
    e->add_option("--batch", ev.mlp_cfg.batch, "MLP mini-batch size");

    // report
    std::string report_csv;
    CLI::App* r = app.add_subcommand("report", "print a machine report as a table");
    r->add_option("--report", report_csv, "report CSV from evaluate")->required();

    CLI11_PARSE(app, argc, argv);

    if (s->parsed()) return cribra::cmd_synth(synth);
    if (a->parsed()) {
        if (!thetas.empty()) aug.grid.thetas = thetas;
        return cribra::cmd_augment(aug);
    }
    if (seg->parsed() || fe->parsed()) {
        feat.disorder = disorder_convention == "cv" ? cribra::DisorderConvention::Cv
                                                    : cribra::DisorderConvention::Paper;
        if (disorder_convention != "cv" && disorder_convention != "paper")
            throw cribra::ConfigError("unknown disorder convention: " + disorder_convention);
        return cribra::cmd_features(feat);
    }
    if (ts->parsed()) return cribra::cmd_train_svm(tsvm);
    if (tm->parsed()) return cribra::cmd_train_mlp(tmlp);
    if (p->parsed()) return cribra::cmd_predict(pred);
    if (e->parsed()) {
        ev.seed = ev.seed ? ev.seed : 1;
        ev.svm_cfg.seed = ev.seed;
        ev.mlp_cfg.seed = ev.seed;
        return cribra::cmd_evaluate(ev);
    }
    if (r->parsed()) return cribra::cmd_report(report_csv);
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cribra::ConfigError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const cribra::Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
