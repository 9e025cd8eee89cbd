#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "schwa/align.hpp"
#include "schwa/features.hpp"

namespace schwa {

struct DataView {
  std::span<const FeatureVector> x;
  std::span<const Label> y;

  std::size_t size() const { return x.size(); }
  bool empty() const { return x.empty(); }
};

struct TrainReport {
  std::vector<double> train_loss;  // one value per epoch / boosting round
  std::optional<double> dev_accuracy;
  std::optional<double> dev_loss;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  std::uint32_t best_epoch = 0;  // MLP: epoch whose weights were kept
};

inline double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

// log(1 + e^z) without overflow
inline double softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

// Probability threshold 0.5, ties classified retained.
inline Label classify(double p_retained) {
  return p_retained >= 0.5 ? Label::retained : Label::deleted;
}

// ---------------------------------------------------------------------
// Logistic regression
// ---------------------------------------------------------------------

struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;
};

struct LogisticHyper {
  double learning_rate = 0.5;
  std::uint32_t epochs = 1000;
  double l2 = 1e-6;
  std::uint64_t seed = 0;
};

// Full-batch gradient descent on L2-regularized logistic loss; bit-
// deterministic for fixed data order and hyperparameters. Throws
// TrainingDiverged on non-finite loss.
std::pair<LogisticModel, TrainReport> train_logistic(
    DataView train, DataView dev, const LogisticHyper& hyper = {});

double predict_proba(const LogisticModel& model, const FeatureVector& x);

// analytic gradient of the regularized loss at (weights, bias); exposed
// so tests can check it against finite differences
void logistic_gradient(const LogisticModel& model, DataView data, double l2,
                       std::span<double> grad_weights, double& grad_bias);
double logistic_loss(const LogisticModel& model, DataView data, double l2);

// ---------------------------------------------------------------------
// Multilayer perceptron (one rectifier hidden layer, sigmoid output)
// ---------------------------------------------------------------------

struct MlpModel {
  std::uint32_t input_dim = 0;
  std::uint32_t hidden = 250;
  std::vector<double> w1;  // row-major [input_dim][hidden]
  std::vector<double> b1;  // [hidden]
  std::vector<double> w2;  // [hidden]
  double b2 = 0.0;
};

struct MlpHyper {
  std::uint32_t hidden = 250;
  double learning_rate = 1e-4;
  std::uint32_t epochs = 50;
  std::uint32_t batch_size = 32;
  std::uint32_t patience = 8;  // early stop on dev loss
  std::uint64_t seed = 0;
};

// Seeded Glorot init + Adam on logistic loss; keeps the weights from the
// best dev-loss epoch when a dev set is given.
std::pair<MlpModel, TrainReport> train_mlp(DataView train, DataView dev,
                                           const MlpHyper& hyper = {});

double predict_proba(const MlpModel& model, const FeatureVector& x);

struct MlpGradients {
  std::vector<double> w1, b1, w2;
  double b2 = 0.0;
};

// mean logistic loss over `data` and its analytic gradient (for checking
// against finite differences)
double mlp_loss(const MlpModel& model, DataView data);
MlpGradients mlp_gradient(const MlpModel& model, DataView data);

// ---------------------------------------------------------------------
// Gradient-boosted decision trees (second-order, exact greedy splits)
// ---------------------------------------------------------------------

// Binary features need no thresholds: inactive goes left, active right.
struct TreeNode {
  std::int32_t feature = -1;  // -1 for leaves
  std::int32_t left = -1;
  std::int32_t right = -1;
  double value = 0.0;  // leaf contribution, shrinkage already applied

  bool is_leaf() const { return feature < 0; }
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  double value_for(const FeatureVector& x) const;
  std::uint32_t depth() const;
};

struct GbdtModel {
  std::vector<Tree> trees;
  double base_score = 0.0;  // log-odds of the training retention rate
  double shrinkage = 0.1;
  std::uint32_t rounds = 200;
  std::uint32_t max_depth = 11;
};

struct GbdtHyper {
  std::uint32_t rounds = 200;
  std::uint32_t max_depth = 11;
  double shrinkage = 0.1;
  double lambda = 1.0;
  double gamma = 0.0;
  double min_child_hessian = 1e-3;
  std::uint32_t threads = 1;  // >1 parallelizes the split scan, bit-identically
  std::uint64_t seed = 0;
};

// Each round fits a tree to the gradients/hessians of logistic loss at the
// current scores; split gain and leaf values follow the second-order
// formulas with L2 strength lambda and complexity penalty gamma. Exact
// greedy split search over all features, ties broken toward the lowest
// feature index.
std::pair<GbdtModel, TrainReport> train_gbdt(DataView train, DataView dev,
                                             const GbdtHyper& hyper = {});

double predict_proba(const GbdtModel& model, const FeatureVector& x);

// Indented if/else rule text per tree; `names` must cover the feature
// dimension (DimensionMismatch otherwise). Positive leaf scores push
// toward retention.
std::string dump_trees(const GbdtModel& model,
                       std::span<const std::string> names);

// ---------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------

enum class ModelKind : std::uint8_t { logistic = 0, mlp = 1, gbdt = 2 };

const char* model_kind_name(ModelKind kind);

// A trained model plus everything needed to apply it: feature config and
// the training vocabulary travel inside the file so predict/evaluate need
// no side files.
struct ModelFile {
  ModelKind kind = ModelKind::logistic;
  FeatureConfig config;
  Vocabulary vocab;
  std::uint32_t feature_value_count = 0;  // echo of the table used
  std::variant<LogisticModel, MlpModel, GbdtModel> model;

  std::uint32_t dimension() const;
  double predict(const FeatureVector& x) const;
};

// Versioned binary format with magic header and trailing CRC-32; see
// docs/file_formats.md. load(save(m)) predicts identically to m.
void save_model(const ModelFile& file, const std::filesystem::path& path);
ModelFile load_model(const std::filesystem::path& path);

}  // namespace schwa
