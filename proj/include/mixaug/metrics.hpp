// Copyright 2026 The mixaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mixaug {

struct PredictionRecord {
  std::size_t true_class = 0;
  std::vector<double> scores;  // higher = more confident
};

struct ClassCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  bool operator==(const ClassCounts&) const = default;
};

struct Confusion {
  std::size_t num_classes = 0;
  std::size_t total = 0;
  std::size_t correct = 0;
  std::vector<ClassCounts> per_class;
  /// matrix[true][predicted]
  std::vector<std::vector<std::size_t>> matrix;
};

/// argmax of the scores, lowest index on ties.
std::size_t predicted_class(std::span<const double> scores);

/// One-vs-rest counts per class. Throws ParameterError on empty or ragged input.
Confusion confusion(std::span<const PredictionRecord> records);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double sensitivity = 0.0;
  double specificity = 0.0;
  double f1 = 0.0;
  std::optional<double> roc_auc;  // empty when the class has no positives or no negatives
  // Set when the corresponding denominator was zero and the value forced to 0.
  bool precision_undefined = false;
  bool recall_undefined = false;
  bool specificity_undefined = false;
  bool f1_undefined = false;
};

struct MetricsReport {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double sensitivity = 0.0;
  double specificity = 0.0;
  double f1 = 0.0;
  double roc_auc = 0.0;
  std::vector<ClassMetrics> per_class;
  std::vector<std::string> warnings;
};

/// Mann-Whitney AUC with midranks: P(score_pos > score_neg) + ½·P(tie).
/// Throws ParameterError if either group is empty.
double binary_auc(std::span<const double> scores, std::span<const bool> positive);

struct AucResult {
  double macro = 0.0;
  std::vector<std::optional<double>> per_class;
  std::vector<std::string> warnings;
};

/// Macro one-vs-rest AUC; classes without positives or negatives are skipped
/// with a warning. Throws ParameterError when no class is evaluable.
AucResult roc_auc_detail(std::span<const PredictionRecord> records);
double roc_auc(std::span<const PredictionRecord> records);

/// Micro accuracy plus macro one-vs-rest precision/recall/sensitivity/
/// specificity/F1/AUC. Zero denominators give 0 with a per-class flag.
MetricsReport compute_metrics(std::span<const PredictionRecord> records);

/// Parses `true_class, score_0, ..., score_{K-1}` rows. Blank lines and '#'
/// comments are skipped. Throws FormatError with the line number.
std::vector<PredictionRecord> parse_predictions(std::string_view text);

/// "Key: value" lines using the column names Accuracy, Precision, Recall,
/// Sensitivity, Specificity, F1 Score, ROC AUC, then a per-class table.
std::string format_report(const MetricsReport& report);

}  // namespace mixaug
