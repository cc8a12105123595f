#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thermdens/preprocess/preprocess.hpp"

namespace thermdens::model {

enum class Activation { relu, elu, tanh };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& s);

struct ConvBlock {
    int width = 8;   // output channels
    int stride = 2;  // spatial downsampling of this block
};

// Stack of 'same'-padded k x k convolutions with bias and activation,
// followed by global average pooling; the latent size is the width of the
// last block.
struct EncoderSpec {
    int input_size = 64;
    int in_channels = 1;
    int kernel = 3;
    std::vector<ConvBlock> blocks{{8, 2}, {16, 2}, {32, 2}, {64, 2}};
    Activation activation = Activation::relu;

    int latent_dim() const;
    void validate() const;

    // Four stride-2 blocks (8/16/32/64), d = 64, 64x64 single-channel input.
    static EncoderSpec desk();
    // VGG-16-shaped stack on 224x224x3 input with a 512-wide latent.
    static EncoderSpec reference();
};

struct LayerShape {
    int in_c, in_h, in_w;
    int out_c, out_h, out_w;
    int kernel, stride, pad;

    std::size_t cols_rows() const noexcept { return static_cast<std::size_t>(in_c) * kernel * kernel; }
    std::size_t out_pixels() const noexcept { return static_cast<std::size_t>(out_h) * out_w; }
    std::size_t in_pixels() const noexcept { return static_cast<std::size_t>(in_h) * in_w; }
};

std::vector<LayerShape> layer_shapes(const EncoderSpec& spec);

struct TensorSlot {
    std::string name;
    std::size_t offset = 0;
    std::size_t size = 0;
    std::vector<int> shape;
};

// Declared tensor ordering: conv{i}.weight [out, in, k, k], conv{i}.bias
// [out] for every block, then head.weight [d], head.bias [1].
std::vector<TensorSlot> parameter_layout(const EncoderSpec& spec);

// One set of encoder weights shared by every view, plus the linear head.
struct ModelParams {
    EncoderSpec spec;
    std::vector<TensorSlot> layout;
    std::vector<double> values;

    std::span<const double> tensor(std::size_t slot) const;
    std::span<double> tensor(std::size_t slot);
    std::size_t encoder_tensor_count() const noexcept { return layout.size() - 2; }
    std::span<const double> head_weight() const { return tensor(layout.size() - 2); }
    double head_bias() const { return values[layout.back().offset]; }
    std::span<double> head_weight() { return tensor(layout.size() - 2); }
    double& head_bias() { return values[layout.back().offset]; }
};

ModelParams zero_params(const EncoderSpec& spec);

// Fan-in scaled uniform weights (bound sqrt(6/fan_in); head 1/sqrt(d)),
// zero biases, fully determined by `seed`.
ModelParams init_params(const EncoderSpec& spec, std::uint64_t seed);

// Activations kept from a forward pass for reverse-mode differentiation.
struct ViewTrace {
    std::vector<std::vector<double>> cols;
    std::vector<std::vector<double>> pre;
    std::vector<std::vector<double>> act;
    std::vector<double> latent;
};

// Encoder forward pass of one view. Throws ShapeError if the view does not
// match the spec's input size and channel count.
std::vector<double> encode_view(const preprocess::ViewImage& view, const ModelParams& params);
ViewTrace encode_view_traced(const preprocess::ViewImage& view, const ModelParams& params);

// Accumulates d(loss)/d(encoder params) into `grad` (same layout as
// params.values) given d(loss)/d(latent).
void encode_view_backward(const ViewTrace& trace, std::span<const double> d_latent, const ModelParams& params,
                          std::span<double> grad);

}  // namespace thermdens::model
