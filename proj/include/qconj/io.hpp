#pragma once

// File codecs: CSV (comma separated, header row, LF, 17 significant
// digits) and binary 8-bit PGM (P5).

#include <string>
#include <vector>

#include "qconj/image.hpp"
#include "qconj/segmentation.hpp"
#include "qconj/types.hpp"

namespace qconj {

std::string format_double(double v);  // %.17g

// Single-column CSV with a header naming the column.
void write_csv_vector(const std::string& path, const std::string& name,
                      const RVec& v);
RVec read_csv_vector(const std::string& path);

// Grid CSV: first row is the column axis (with an empty corner cell),
// each following row starts with its row-axis value.
void write_csv_grid(const std::string& path, const RVec& row_axis,
                    const RVec& col_axis, const RMat& values);

// Same layout with label strings as cells.
void write_csv_label_grid(const std::string& path, const RegionGrid& grid);

// Two-column CSV "t,f".
void write_csv_signal(const std::string& path, const SampledSignal& sig);
SampledSignal read_csv_signal(const std::string& path);

// Per-sample segmentation table.
void write_csv_segmentation(const std::string& path, const SampledSignal& sig,
                            const LabelMap& map, const SignalLimits& lim);

// Binary PGM, maxval 255.
void write_pgm(const std::string& path, const ImageGray& img);
ImageGray read_pgm(const std::string& path);

// Label image as PGM with gray levels {0,51,102,153,204} for P0..P4.
void write_label_pgm(const std::string& path, const ImageLabelMap& labels);

}  // namespace qconj
