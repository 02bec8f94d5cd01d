#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jury {

/// The four rubric dimensions. Reasoning is optional per record: ward
/// answers carry no clinical reasoning, so that dimension is absent there.
enum class Dimension { Dx, DDx, Reasoning, Safety };

inline constexpr std::array<Dimension, 4> kAllDimensions = {
    Dimension::Dx, Dimension::DDx, Dimension::Reasoning, Dimension::Safety};

std::string_view to_string(Dimension d);
std::optional<Dimension> dimension_from_string(std::string_view s);

/// One set of rubric scores. Raw single-evaluator scores are integers in
/// {1..5}; derived scores (jury means, calibrated values) are reals in [1,5].
struct ScoreVector {
  double dx = 0.0;
  double ddx = 0.0;
  std::optional<double> reasoning;
  double safety = 0.0;

  std::optional<double> get(Dimension d) const;
  void set(Dimension d, std::optional<double> value);

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;
};

enum class EvaluatorKind { PrimaryPanel, RescorePanel, JudgeModel };

std::string_view to_string(EvaluatorKind k);
std::optional<EvaluatorKind> evaluator_kind_from_string(std::string_view s);

/// Identifies who produced a score. model_id and provider are present
/// exactly when kind == JudgeModel.
struct EvaluatorId {
  EvaluatorKind kind = EvaluatorKind::PrimaryPanel;
  std::optional<std::string> model_id;
  std::optional<std::string> provider;

  static EvaluatorId primary_panel() { return {EvaluatorKind::PrimaryPanel, {}, {}}; }
  static EvaluatorId rescore_panel() { return {EvaluatorKind::RescorePanel, {}, {}}; }
  static EvaluatorId judge(std::string model, std::string provider) {
    return {EvaluatorKind::JudgeModel, std::move(model), std::move(provider)};
  }

  bool is_judge() const { return kind == EvaluatorKind::JudgeModel; }

  /// Short human-readable label: "primary-panel", "rescore-panel" or the
  /// judge's model id.
  std::string label() const;

  friend bool operator==(const EvaluatorId&, const EvaluatorId&) = default;
  friend auto operator<=>(const EvaluatorId&, const EvaluatorId&) = default;
};

enum class Split { Calibration, Evaluation };

std::string_view to_string(Split s);
std::optional<Split> split_from_string(std::string_view s);

/// One evaluator's scored judgment of one agent's answer on one case.
/// (case_id, agent_id, evaluator, repetition) is unique within a corpus.
struct EvaluationRecord {
  std::string case_id;
  std::string agent_id;
  std::optional<std::string> agent_provider;
  EvaluatorId evaluator;
  ScoreVector scores;
  int repetition = 0;
  Split split = Split::Calibration;
  /// Primary panel's agree/disagree with the ward diagnosis; only populated
  /// on PrimaryPanel records.
  std::optional<bool> ward_agreement;
  /// True for records whose scores are derived reals (jury means, calibrated
  /// scores) rather than raw integer ratings.
  bool derived = false;
};

/// A diagnostic answer as shown to a judge: the diagnoses plus optional
/// clinical reasoning (absent for ward answers).
struct AnswerBundle {
  std::string case_id;
  std::string agent_id;
  std::string primary_dx;
  std::vector<std::string> secondary_dx;
  std::vector<std::string> differential_dx;
  std::optional<std::string> clinical_reasoning;
};

/// One (case, agent) observation shared by a reference and another
/// evaluator on a single dimension. The paired sample every comparison
/// statistic consumes.
struct ScorePair {
  std::string case_id;
  std::string agent_id;
  double ref = 0.0;
  double other = 0.0;
};

}  // namespace jury
