#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ordrank/core.hpp"
#include "ordrank/normalize.hpp"

namespace ordrank {

// Output-layer formulation. Rank uses one independent sigmoid per output node
// and cumulative 0/1 targets; Class uses a softmax layer and one-hot targets.
enum class Mode { Rank, Class };

enum class Activation { Tanh, Sigmoid, Linear };

enum class LossKind { SquareError, RelativeEntropy };

enum class UpdateMode { Online, Batch };

inline std::string to_string(Mode m) { return m == Mode::Rank ? "rank" : "class"; }
inline std::string to_string(Activation a) {
  switch (a) {
    case Activation::Tanh: return "tanh";
    case Activation::Sigmoid: return "sigmoid";
    default: return "linear";
  }
}
inline std::string to_string(LossKind k) {
  return k == LossKind::SquareError ? "square" : "entropy";
}
inline std::string to_string(UpdateMode u) {
  return u == UpdateMode::Online ? "online" : "batch";
}

inline Mode parse_mode(const std::string& s) {
  if (s == "rank") return Mode::Rank;
  if (s == "class") return Mode::Class;
  throw DataError("unknown mode '" + s + "' (expected rank or class)");
}
inline Activation parse_activation(const std::string& s) {
  if (s == "tanh") return Activation::Tanh;
  if (s == "sigmoid") return Activation::Sigmoid;
  if (s == "linear") return Activation::Linear;
  throw DataError("unknown activation '" + s + "'");
}
inline LossKind parse_loss(const std::string& s) {
  if (s == "square") return LossKind::SquareError;
  if (s == "entropy") return LossKind::RelativeEntropy;
  throw DataError("unknown loss '" + s + "' (expected square or entropy)");
}
inline UpdateMode parse_update(const std::string& s) {
  if (s == "online") return UpdateMode::Online;
  if (s == "batch") return UpdateMode::Batch;
  throw DataError("unknown update mode '" + s + "' (expected online or batch)");
}

// Weight set of a two-layer network: hidden layer (w1, b1) and output layer
// (w2, b2). Also used for gradients, which share the shapes.
struct Weights {
  Matrix w1;               // hidden x input
  std::vector<double> b1;  // hidden
  Matrix w2;               // output x hidden
  std::vector<double> b2;  // output

  static Weights zeros(std::size_t input, std::size_t hidden, std::size_t output) {
    Weights w;
    w.w1 = Matrix(hidden, input);
    w.b1.assign(hidden, 0.0);
    w.w2 = Matrix(output, hidden);
    w.b2.assign(output, 0.0);
    return w;
  }

  void add_scaled(const Weights& other, double factor) {
    for (std::size_t i = 0; i < w1.values.size(); ++i) w1.values[i] += factor * other.w1.values[i];
    for (std::size_t i = 0; i < b1.size(); ++i) b1[i] += factor * other.b1[i];
    for (std::size_t i = 0; i < w2.values.size(); ++i) w2.values[i] += factor * other.w2.values[i];
    for (std::size_t i = 0; i < b2.size(); ++i) b2[i] += factor * other.b2[i];
  }

  void scale(double factor) {
    for (double& v : w1.values) v *= factor;
    for (double& v : b1) v *= factor;
    for (double& v : w2.values) v *= factor;
    for (double& v : b2) v *= factor;
  }
};

// A fully connected feedforward network with one hidden layer, d inputs and
// one output node per ordinal category. Normalization statistics travel with
// the model so saved models are self-contained predictors on raw features.
struct NetworkModel {
  std::size_t input_dim = 0;
  std::size_t hidden_units = 0;
  int categories = 0;
  Mode mode = Mode::Rank;
  Activation hidden_activation = Activation::Tanh;
  double threshold = 0.5;
  Weights weights;
  NormStats norm;

  bool same_architecture(const NetworkModel& other) const {
    return input_dim == other.input_dim && hidden_units == other.hidden_units &&
           categories == other.categories && mode == other.mode &&
           hidden_activation == other.hidden_activation && threshold == other.threshold;
  }
};

// Overflow-safe logistic function: exp is only ever taken of a non-positive
// argument, so z = +-1000 saturates cleanly to 1 or 0.
inline double sigmoid(double z) {
  if (z >= 0.0) {
    const double e = std::exp(-z);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// Target vector for category k out of total. Rank mode marks every category
// up to and including k (membership in category k implies membership in all
// lower ones); class mode marks k alone.
inline std::vector<double> encode_target(int k, int total, Mode mode) {
  if (k < 1 || k > total) {
    throw DataError("encode_target: category " + std::to_string(k) + " outside 1.." +
                    std::to_string(total));
  }
  std::vector<double> t(static_cast<std::size_t>(total), 0.0);
  if (mode == Mode::Rank) {
    for (int i = 0; i < k; ++i) t[static_cast<std::size_t>(i)] = 1.0;
  } else {
    t[static_cast<std::size_t>(k - 1)] = 1.0;
  }
  return t;
}

struct ForwardResult {
  std::vector<double> hidden;
  std::vector<double> outputs;
};

// Forward pass on an already-normalized input row. Rank mode applies an
// independent sigmoid to each output net input; class mode applies a
// max-shifted softmax.
inline ForwardResult forward(const NetworkModel& model, const std::vector<double>& x) {
  ForwardResult r;
  r.hidden.resize(model.hidden_units);
  for (std::size_t h = 0; h < model.hidden_units; ++h) {
    double net = model.weights.b1[h];
    for (std::size_t j = 0; j < model.input_dim; ++j) {
      net += model.weights.w1.at(h, j) * x[j];
    }
    switch (model.hidden_activation) {
      case Activation::Tanh: r.hidden[h] = std::tanh(net); break;
      case Activation::Sigmoid: r.hidden[h] = sigmoid(net); break;
      case Activation::Linear: r.hidden[h] = net; break;
    }
  }
  const std::size_t k = static_cast<std::size_t>(model.categories);
  std::vector<double> net(k);
  for (std::size_t i = 0; i < k; ++i) {
    double z = model.weights.b2[i];
    for (std::size_t h = 0; h < model.hidden_units; ++h) {
      z += model.weights.w2.at(i, h) * r.hidden[h];
    }
    net[i] = z;
  }
  r.outputs.resize(k);
  if (model.mode == Mode::Rank) {
    for (std::size_t i = 0; i < k; ++i) r.outputs[i] = sigmoid(net[i]);
  } else {
    const double zmax = *std::max_element(net.begin(), net.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      r.outputs[i] = std::exp(net[i] - zmax);
      sum += r.outputs[i];
    }
    for (std::size_t i = 0; i < k; ++i) r.outputs[i] /= sum;
  }
  return r;
}

namespace detail {
// Log arguments are clamped away from 0 and 1 so saturated outputs keep the
// entropy loss finite.
inline double safe_log(double v) {
  return std::log(std::clamp(v, 1e-12, 1.0 - 1e-12));
}
}  // namespace detail

// Per-example cost, defined so that training always minimizes.
//   square error:       sum_i (t_i - o_i)^2                       (both modes)
//   relative entropy:   -sum_i t_i log o_i + (1-t_i) log(1-o_i)   (rank mode)
//                       -sum_i t_i log o_i                        (class mode)
// The class-mode entropy pairs with softmax outputs, whose gradient with
// respect to the net inputs is then exactly o - t.
inline double loss(const std::vector<double>& outputs, const std::vector<double>& target,
                   LossKind kind, Mode mode = Mode::Rank) {
  double sum = 0.0;
  if (kind == LossKind::SquareError) {
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      const double diff = target[i] - outputs[i];
      sum += diff * diff;
    }
    return sum;
  }
  if (mode == Mode::Rank) {
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      sum += target[i] * detail::safe_log(outputs[i]) +
             (1.0 - target[i]) * detail::safe_log(1.0 - outputs[i]);
    }
  } else {
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      sum += target[i] * detail::safe_log(outputs[i]);
    }
  }
  return -sum;
}

// Derivative of the per-example cost with respect to the output-layer net
// inputs z_i (descent direction: weights move against this).
//   rank, square error:      -2 (t_i - o_i) o_i (1 - o_i)
//   rank, relative entropy:  o_i - t_i
//   class, relative entropy: o_i - t_i
//   class, square error:     full softmax Jacobian applied to 2 (o - t)
inline std::vector<double> output_delta(const std::vector<double>& outputs,
                                        const std::vector<double>& target, LossKind kind,
                                        Mode mode = Mode::Rank) {
  const std::size_t k = outputs.size();
  std::vector<double> delta(k);
  if (mode == Mode::Rank) {
    if (kind == LossKind::SquareError) {
      for (std::size_t i = 0; i < k; ++i) {
        delta[i] = -2.0 * (target[i] - outputs[i]) * outputs[i] * (1.0 - outputs[i]);
      }
    } else {
      for (std::size_t i = 0; i < k; ++i) delta[i] = outputs[i] - target[i];
    }
    return delta;
  }
  if (kind == LossKind::RelativeEntropy) {
    for (std::size_t i = 0; i < k; ++i) delta[i] = outputs[i] - target[i];
    return delta;
  }
  // Softmax couples every output to every net input.
  double weighted = 0.0;
  for (std::size_t j = 0; j < k; ++j) weighted += (outputs[j] - target[j]) * outputs[j];
  for (std::size_t i = 0; i < k; ++i) {
    delta[i] = 2.0 * outputs[i] * ((outputs[i] - target[i]) - weighted);
  }
  return delta;
}

// Exact per-example gradient via backpropagation. Hidden activation
// derivatives are taken from the stored activations: tanh -> 1 - h^2,
// sigmoid -> h (1 - h), linear -> 1.
inline Weights backward(const NetworkModel& model, const std::vector<double>& x,
                        const ForwardResult& fwd, const std::vector<double>& target,
                        LossKind kind) {
  Weights grad = Weights::zeros(model.input_dim, model.hidden_units,
                                static_cast<std::size_t>(model.categories));
  const std::vector<double> delta_out = output_delta(fwd.outputs, target, kind, model.mode);
  const std::size_t k = delta_out.size();
  for (std::size_t i = 0; i < k; ++i) {
    grad.b2[i] = delta_out[i];
    for (std::size_t h = 0; h < model.hidden_units; ++h) {
      grad.w2.at(i, h) = delta_out[i] * fwd.hidden[h];
    }
  }
  for (std::size_t h = 0; h < model.hidden_units; ++h) {
    double back = 0.0;
    for (std::size_t i = 0; i < k; ++i) back += delta_out[i] * model.weights.w2.at(i, h);
    double dact = 1.0;
    const double a = fwd.hidden[h];
    if (model.hidden_activation == Activation::Tanh) {
      dact = 1.0 - a * a;
    } else if (model.hidden_activation == Activation::Sigmoid) {
      dact = a * (1.0 - a);
    }
    const double delta_h = back * dact;
    grad.b1[h] = delta_h;
    for (std::size_t j = 0; j < model.input_dim; ++j) {
      grad.w1.at(h, j) = delta_h * x[j];
    }
  }
  return grad;
}

// Decoding rule for rank-mode outputs: scan o_1, o_2, ... in order, stop at
// the first output <= T (ties count as below), and predict the last scanned
// node whose output exceeds T. If the very first output is already below the
// threshold the prediction falls back to category 1.
inline int predict_category(const std::vector<double>& outputs, double threshold = 0.5) {
  int last_above = 0;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (outputs[i] > threshold) {
      last_above = static_cast<int>(i) + 1;
    } else {
      break;
    }
  }
  return std::max(last_above, 1);
}

// Class-mode decoding: highest output wins, ties to the lowest category.
inline int argmax_category(const std::vector<double>& outputs) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < outputs.size(); ++i) {
    if (outputs[i] > outputs[best]) best = i;
  }
  return static_cast<int>(best) + 1;
}

inline int decode(const NetworkModel& model, const std::vector<double>& outputs) {
  return model.mode == Mode::Rank ? predict_category(outputs, model.threshold)
                                  : argmax_category(outputs);
}

// Sum of the output vector: in rank mode this estimates how many categories
// the point belongs to, useful as a diagnostic next to the decoded category.
inline double cumulative_output(const std::vector<double>& outputs) {
  double sum = 0.0;
  for (double o : outputs) sum += o;
  return sum;
}

}  // namespace ordrank
