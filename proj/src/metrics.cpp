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

#include "mixaug/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <memory>
#include <numeric>
#include <sstream>

#include "mixaug/error.hpp"

namespace mixaug {
namespace {

std::size_t check_records(std::span<const PredictionRecord> records) {
  if (records.empty()) throw ParameterError("no prediction records");
  const std::size_t k = records.front().scores.size();
  if (k == 0) throw ParameterError("prediction records carry no scores");
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].scores.size() != k) {
      throw ParameterError("record " + std::to_string(i) + " has " +
                           std::to_string(records[i].scores.size()) + " scores, expected " +
                           std::to_string(k));
    }
    if (records[i].true_class >= k) {
      throw ParameterError("record " + std::to_string(i) + " has class " +
                           std::to_string(records[i].true_class) + " outside " +
                           std::to_string(k) + " classes");
    }
  }
  return k;
}

double ratio_or_zero(std::size_t num, std::size_t den, bool& undefined) {
  undefined = den == 0;
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::size_t predicted_class(std::span<const double> scores) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[best]) best = c;
  }
  return best;
}

Confusion confusion(std::span<const PredictionRecord> records) {
  const std::size_t k = check_records(records);
  Confusion out;
  out.num_classes = k;
  out.total = records.size();
  out.matrix.assign(k, std::vector<std::size_t>(k, 0));
  for (const auto& r : records) {
    const std::size_t pred = predicted_class(r.scores);
    ++out.matrix[r.true_class][pred];
    if (pred == r.true_class) ++out.correct;
  }
  out.per_class.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    auto& cc = out.per_class[c];
    cc.tp = out.matrix[c][c];
    for (std::size_t o = 0; o < k; ++o) {
      if (o == c) continue;
      cc.fn += out.matrix[c][o];
      cc.fp += out.matrix[o][c];
    }
    cc.tn = out.total - cc.tp - cc.fn - cc.fp;
  }
  return out;
}

double binary_auc(std::span<const double> scores, std::span<const bool> positive) {
  if (scores.size() != positive.size()) throw ParameterError("binary_auc: length mismatch");
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Sum of midranks (1-based) over the positives.
  double rank_sum = 0.0;
  std::size_t n_pos = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
    const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t t = i; t <= j; ++t) {
      if (positive[order[t]]) {
        rank_sum += midrank;
        ++n_pos;
      }
    }
    i = j + 1;
  }
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) throw ParameterError("binary_auc needs positives and negatives");
  const double p = static_cast<double>(n_pos);
  const double u = rank_sum - p * (p + 1.0) / 2.0;
  return u / (p * static_cast<double>(n_neg));
}

AucResult roc_auc_detail(std::span<const PredictionRecord> records) {
  const std::size_t k = check_records(records);
  AucResult out;
  out.per_class.resize(k);
  std::vector<double> scores(records.size());
  auto positive = std::make_unique<bool[]>(records.size());
  double total = 0.0;
  std::size_t evaluated = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t n_pos = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
      scores[i] = records[i].scores[c];
      positive[i] = records[i].true_class == c;
      n_pos += positive[i] ? 1 : 0;
    }
    if (n_pos == 0 || n_pos == records.size()) {
      out.warnings.push_back("class " + std::to_string(c) +
                             (n_pos == 0 ? " has no positives" : " has no negatives") +
                             "; skipped in ROC AUC");
      continue;
    }
    const double auc = binary_auc(scores, std::span<const bool>(positive.get(), records.size()));
    out.per_class[c] = auc;
    total += auc;
    ++evaluated;
  }
  if (evaluated == 0) throw ParameterError("ROC AUC undefined: input covers a single class");
  out.macro = total / static_cast<double>(evaluated);
  return out;
}

double roc_auc(std::span<const PredictionRecord> records) { return roc_auc_detail(records).macro; }

MetricsReport compute_metrics(std::span<const PredictionRecord> records) {
  const Confusion cm = confusion(records);
  const AucResult auc = roc_auc_detail(records);

  MetricsReport report;
  report.accuracy = static_cast<double>(cm.correct) / static_cast<double>(cm.total);
  report.warnings = auc.warnings;
  report.per_class.resize(cm.num_classes);
  for (std::size_t c = 0; c < cm.num_classes; ++c) {
    const ClassCounts& cc = cm.per_class[c];
    ClassMetrics& m = report.per_class[c];
    m.precision = ratio_or_zero(cc.tp, cc.tp + cc.fp, m.precision_undefined);
    m.recall = ratio_or_zero(cc.tp, cc.tp + cc.fn, m.recall_undefined);
    m.sensitivity = m.recall;
    m.specificity = ratio_or_zero(cc.tn, cc.tn + cc.fp, m.specificity_undefined);
    m.f1_undefined = m.precision + m.recall == 0.0;
    m.f1 = m.f1_undefined ? 0.0 : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    m.roc_auc = auc.per_class[c];

    report.precision += m.precision;
    report.recall += m.recall;
    report.specificity += m.specificity;
    report.f1 += m.f1;
  }
  const double k = static_cast<double>(cm.num_classes);
  report.precision /= k;
  report.recall /= k;
  report.sensitivity = report.recall;
  report.specificity /= k;
  report.f1 /= k;
  report.roc_auc = auc.macro;
  return report;
}

std::vector<PredictionRecord> parse_predictions(std::string_view text) {
  std::vector<PredictionRecord> out;
  std::size_t line_no = 0;
  std::size_t expected = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() < 2) throw FormatError(line_no, "expected true_class followed by scores");

    PredictionRecord rec;
    const auto cls = fields[0];
    const auto [p, ec] = std::from_chars(cls.data(), cls.data() + cls.size(), rec.true_class);
    if (ec != std::errc() || p != cls.data() + cls.size()) {
      throw FormatError(line_no, "invalid class index '" + std::string(cls) + "'");
    }
    for (std::size_t f = 1; f < fields.size(); ++f) {
      const std::string token(fields[f]);
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (token.empty() || used != token.size() || !std::isfinite(v)) {
        throw FormatError(line_no, "invalid score '" + token + "'");
      }
      rec.scores.push_back(v);
    }
    if (expected == 0) expected = rec.scores.size();
    if (rec.scores.size() != expected) {
      throw FormatError(line_no, "expected " + std::to_string(expected) + " scores, got " +
                                     std::to_string(rec.scores.size()));
    }
    if (rec.true_class >= expected) {
      throw FormatError(line_no, "class index " + std::to_string(rec.true_class) +
                                     " out of range for " + std::to_string(expected) + " classes");
    }
    out.push_back(std::move(rec));
  }
  if (out.empty()) throw FormatError(line_no, "no prediction records");
  return out;
}

std::string format_report(const MetricsReport& report) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6);
  os << "Accuracy: " << report.accuracy << "\n"
     << "Precision: " << report.precision << "\n"
     << "Recall: " << report.recall << "\n"
     << "Sensitivity: " << report.sensitivity << "\n"
     << "Specificity: " << report.specificity << "\n"
     << "F1 Score: " << report.f1 << "\n"
     << "ROC AUC: " << report.roc_auc << "\n";
  os << "\nclass\tprecision\trecall\tspecificity\tf1\troc_auc\n";
  for (std::size_t c = 0; c < report.per_class.size(); ++c) {
    const auto& m = report.per_class[c];
    os << c << "\t" << m.precision << (m.precision_undefined ? "*" : "") << "\t" << m.recall
       << (m.recall_undefined ? "*" : "") << "\t" << m.specificity
       << (m.specificity_undefined ? "*" : "") << "\t" << m.f1 << (m.f1_undefined ? "*" : "")
       << "\t";
    if (m.roc_auc) {
      os << *m.roc_auc;
    } else {
      os << "n/a";
    }
    os << "\n";
  }
  if (std::any_of(report.per_class.begin(), report.per_class.end(), [](const ClassMetrics& m) {
        return m.precision_undefined || m.recall_undefined || m.specificity_undefined ||
               m.f1_undefined;
      })) {
    os << "* zero denominator, reported as 0\n";
  }
  return os.str();
}

}  // namespace mixaug
