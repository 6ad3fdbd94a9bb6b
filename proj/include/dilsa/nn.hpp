#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dilsa {

enum class Head { sigmoid, linear };
enum class Loss { mse, bce };

struct LayerSpec {
    int size = 0;
    bool recurrent = true;
};

// Sequential regressor with tanh hidden layers (optionally carrying
// recurrent state across steps) and a dense head. Parameters live in
// one flat vector so optimizers and serialization can treat the whole
// network uniformly. Not thread-safe: forward advances shared state.
class SequenceNet {
public:
    SequenceNet(int input_dim, std::vector<LayerSpec> hidden, int output_dim,
                Head head);

    void init_weights(std::uint64_t seed);

    int input_dim() const { return input_dim_; }
    int output_dim() const { return output_dim_; }
    Head head() const { return head_; }
    const std::vector<LayerSpec>& hidden() const { return hidden_; }

    std::vector<double>& params() { return params_; }
    const std::vector<double>& params() const { return params_; }

    // Advances the recurrent state by one step.
    void forward(const double* x, double* y);

    void reset_state();
    std::vector<double> state() const;
    void set_state(const std::vector<double>& s);
    std::size_t state_size() const;

    // Runs `steps` consecutive instances from the current state,
    // accumulates dLoss/dParams into `grad` (sized like params, not
    // cleared), and leaves the state advanced past the chunk. The
    // chunk-start state is treated as constant (truncated
    // backpropagation). Loss is averaged over steps and outputs.
    double sequence_grad(const double* xs, const double* ys, std::size_t steps,
                         Loss loss, std::vector<double>& grad);

private:
    int input_dim_;
    std::vector<LayerSpec> hidden_;
    int output_dim_;
    Head head_;
    std::vector<double> params_;
    std::vector<double> state_; // concatenated per-layer hidden values

    // offsets into params_ per hidden layer: Wx, Wh (recurrent only), b
    struct LayerOffsets {
        std::size_t wx = 0;
        std::size_t wh = 0;
        std::size_t b = 0;
        int in = 0;
        int out = 0;
        bool recurrent = false;
    };
    std::vector<LayerOffsets> layers_;
    std::size_t head_w_ = 0;
    std::size_t head_b_ = 0;
    int head_in_ = 0;

    std::vector<std::size_t> state_offsets_;

    void step_layers(const double* x, double* scratch);
    void apply_head(const double* h, double* y) const;
};

// Adaptive-moment gradient descent over a flat parameter vector.
class AdamOptimizer {
public:
    AdamOptimizer(std::size_t n, double lr, double beta1, double beta2,
                  double eps);

    void step(std::vector<double>& w, const std::vector<double>& g);
    void reset();

private:
    std::vector<double> m_;
    std::vector<double> v_;
    double lr_, beta1_, beta2_, eps_;
    std::int64_t t_ = 0;
};

} // namespace dilsa
