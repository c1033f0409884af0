#pragma once

#include <filesystem>
#include <vector>

#include "fer/evaluation.hpp"
#include "fer/trainer.hpp"

namespace fer {

// Geometry of the rendered training-curve plot, exposed for tests.
struct PlotInfo {
    int width = 0;
    int height = 0;
    int x_min = 0;  // first epoch on the x axis
    int x_max = 0;  // last epoch on the x axis
    double loss_max = 0.0;
};

// Training loss (blue), validation loss (green) and validation accuracy
// (orange, right axis) against epoch index.
PlotInfo render_training_curves(const std::vector<EpochRecord>& records,
                                const std::filesystem::path& png_path);

struct ReportFiles {
    std::filesystem::path confusion_csv;
    std::filesystem::path per_class_csv;
    std::filesystem::path curves_csv;
    std::filesystem::path curves_png;
    PlotInfo plot;
};

// confusion.csv, per_class.csv, curves.csv and curves.png under out_dir.
ReportFiles render_reports(const ConfusionMatrix& cm, const std::vector<EpochRecord>& records,
                           const std::filesystem::path& out_dir);

}  // namespace fer
