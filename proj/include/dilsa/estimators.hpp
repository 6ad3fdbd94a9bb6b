#pragma once

#include "dilsa/datasets.hpp"
#include "dilsa/features.hpp"
#include "dilsa/nn.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dilsa {

// Opaque recurrent-activation snapshot. restore(snapshot()) is an exact
// identity on subsequent predictions.
struct EstimatorState {
    std::vector<double> values;
};

struct TrainConfig {
    int epochs = 20;
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double adam_eps = 1e-8;
    int bptt_window = 16;
    std::uint64_t seed = 1;
    bool bce_loss = false; // cross-entropy instead of squared error
                           // (sigmoid heads only)
};

// Stateful sequential regressor. predict() consumes raw (unstandardized)
// feature vectors and returns raw outputs; min-max standardization fitted
// during fit() is applied internally. Instances are not thread-safe.
class Estimator {
public:
    virtual ~Estimator() = default;

    virtual int input_dim() const = 0;
    virtual int output_dim() const = 0;
    virtual std::string kind() const = 0;

    // Re-initializes weights from cfg.seed, then trains over the
    // dataset's sequences in order, resetting state at sequence
    // boundaries. Returns the mean per-step training loss for each
    // epoch. Throws if the loss goes non-finite.
    virtual std::vector<double> fit(const SequenceDataset& data,
                                    const TrainConfig& cfg) = 0;

    // Advances internal state by one step.
    virtual std::vector<double> predict(const std::vector<double>& x) = 0;

    virtual void reset_state() = 0;
    virtual EstimatorState snapshot_state() const = 0;
    virtual void restore_state(const EstimatorState& s) = 0;

    virtual void save(const std::string& path,
                      const std::string& config_hash) const = 0;
    virtual std::unique_ptr<Estimator> clone() const = 0;
};

// Tanh stack with recurrent hidden layers carrying state across predict
// calls; sigmoid head for probability outputs, linear head (clamped to
// >= 0 after destandardization) for volumes.
std::unique_ptr<Estimator> make_recurrent(int input_dim,
                                          const std::vector<int>& hidden,
                                          int output_dim, Head head);

// Same stack without recurrence: a feed-forward baseline.
std::unique_ptr<Estimator> make_mlp(int input_dim,
                                    const std::vector<int>& hidden,
                                    int output_dim, Head head);

// No hidden layers: independent sigmoid (or linear) outputs per step.
std::unique_ptr<Estimator> make_logistic(int input_dim, int output_dim,
                                         Head head);

// Reads a model written by save(). When expected_hash is non-empty it
// must match the stored configuration hash.
std::unique_ptr<Estimator> load_estimator(const std::string& path,
                                          const std::string& expected_hash);

} // namespace dilsa
