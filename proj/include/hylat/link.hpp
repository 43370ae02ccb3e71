#ifndef HYLAT_LINK_HPP
#define HYLAT_LINK_HPP

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <string>

namespace hylat {

/// A strictly decreasing link function sigma: [0, inf) -> [0, 1] together
/// with its inverse and derivative. The optional array members apply the same
/// maps entrywise to Eigen arrays; when present they are used in the hot
/// loss/gradient paths, otherwise the scalar maps are applied per entry.
struct LinkFunction {
  std::string name;
  std::function<double(double)> forward;
  std::function<double(double)> inverse;
  std::function<double(double)> derivative;
  std::function<Eigen::ArrayXXd(const Eigen::ArrayXXd&)> forward_array;
  std::function<Eigen::ArrayXXd(const Eigen::ArrayXXd&)> derivative_array;

  Eigen::ArrayXXd apply(const Eigen::ArrayXXd& x) const {
    if (forward_array) return forward_array(x);
    return x.unaryExpr([this](double v) { return forward(v); });
  }
  Eigen::ArrayXXd apply_derivative(const Eigen::ArrayXXd& x) const {
    if (derivative_array) return derivative_array(x);
    return x.unaryExpr([this](double v) { return derivative(v); });
  }
};

/// The default link sigma(x) = 2 / (1 + e^x), with sigma(0) = 1 and inverse
/// sigma^{-1}(p) = log(2/p - 1).
inline LinkFunction logistic2_link() {
  LinkFunction link;
  link.name = "logistic2";
  link.forward = [](double x) { return 2.0 / (1.0 + std::exp(x)); };
  link.inverse = [](double p) { return std::log(2.0 / p - 1.0); };
  link.derivative = [](double x) {
    const double e = std::exp(x);
    return -2.0 * e / ((1.0 + e) * (1.0 + e));
  };
  link.forward_array = [](const Eigen::ArrayXXd& x) -> Eigen::ArrayXXd {
    return 2.0 / (1.0 + x.exp());
  };
  link.derivative_array = [](const Eigen::ArrayXXd& x) -> Eigen::ArrayXXd {
    const Eigen::ArrayXXd e = x.exp();
    return -2.0 * e / (1.0 + e).square();
  };
  return link;
}

}  // namespace hylat

#endif  // HYLAT_LINK_HPP
