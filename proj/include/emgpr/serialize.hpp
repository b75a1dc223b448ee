#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "emgpr/classifiers.hpp"
#include "emgpr/dimred.hpp"
#include "emgpr/evaluation.hpp"
#include "emgpr/features.hpp"

namespace emgpr {

nlohmann::ordered_json to_json(const Projector& p);
nlohmann::ordered_json to_json(const MLPModel& m);
nlohmann::ordered_json to_json(const SVMMulticlass& m);
nlohmann::ordered_json to_json(const PipelineConfig& cfg);
nlohmann::ordered_json to_json(const EvaluationReport& report);

/// Deterministic CSV number formatting (%.10g).
std::string csv_number(double v);

void write_text_file(const std::filesystem::path& path, const std::string& content);
void write_json_file(const std::filesystem::path& path,
                     const nlohmann::ordered_json& j);

void write_feature_csv(const std::filesystem::path& path, const FeatureTable& table);
void write_confusion_csv(const std::filesystem::path& path, const Matrix& m,
                         const std::vector<std::string>& labels);
void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep);
void write_curve_csv(const std::filesystem::path& path, const std::string& x_name,
                     const std::string& y_name, const std::vector<double>& y);
void write_loss_csv(const std::filesystem::path& path,
                    const std::vector<double>& losses);

}  // namespace emgpr
