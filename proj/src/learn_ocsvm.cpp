#include <algorithm>
#include <cmath>
#include <limits>

#include "scribe/errors.hpp"
#include "scribe/kernels.hpp"
#include "scribe/learn.hpp"

namespace scribe::learn {

namespace {

double resolve_gamma(const DenseMatrix& X, double gamma) {
    if (gamma > 0.0)
        return gamma;
    const double var = kernels::total_variance(X);
    if (var <= 0.0 || X.cols == 0)
        return 1.0;
    return 1.0 / (static_cast<double>(X.cols) * var);
}

} // namespace

OcsvmModel ocsvm_train(const DenseMatrix& X, const OcsvmParams& params) {
    const std::size_t n = X.rows;
    if (n < 2)
        throw DegenerateInput("one-class SVM needs at least 2 rows");
    if (!(params.nu > 0.0) || params.nu > 1.0)
        throw BadHyperparameter("nu must be in (0, 1], got " + std::to_string(params.nu));
    for (double v : X.data)
        if (!std::isfinite(v))
            throw NonFiniteInput("training matrix contains non-finite values");

    const double gamma = resolve_gamma(X, params.gamma);
    const double C = 1.0 / (params.nu * static_cast<double>(n));
    const DenseMatrix K = kernels::rbf_kernel_matrix(X, gamma);

    // libsvm-style initialization: fill the first floor(nu*n) coefficients
    // to the box bound, the fractional remainder on the next one.
    std::vector<double> alpha(n, 0.0);
    {
        double remaining = 1.0;
        for (std::size_t i = 0; i < n && remaining > 0.0; ++i) {
            alpha[i] = std::min(C, remaining);
            remaining -= alpha[i];
        }
    }

    // gradient g = K alpha
    std::vector<double> grad(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            s += K.at(i, j) * alpha[j];
        grad[i] = s;
    }

    // SMO with maximal-violating-pair selection. KKT at optimum: there is
    // rho with g_i >= rho when alpha_i = 0, g_i <= rho when alpha_i = C,
    // g_i = rho inside the box.
    const double eps = 1e-12;
    for (std::size_t iter = 0; iter < params.max_iter; ++iter) {
        std::size_t up = n, down = n;
        double g_up = -std::numeric_limits<double>::infinity();   // max g, alpha > 0
        double g_down = std::numeric_limits<double>::infinity();  // min g, alpha < C
        for (std::size_t i = 0; i < n; ++i) {
            if (alpha[i] > eps && grad[i] > g_up) {
                g_up = grad[i];
                up = i;
            }
            if (alpha[i] < C - eps && grad[i] < g_down) {
                g_down = grad[i];
                down = i;
            }
        }
        if (up == n || down == n || g_up - g_down < params.tol)
            break;

        // move t mass from `up` to `down`
        const double eta =
            std::max(K.at(up, up) + K.at(down, down) - 2.0 * K.at(up, down), 1e-12);
        double t = (g_up - g_down) / eta;
        t = std::min(t, alpha[up]);
        t = std::min(t, C - alpha[down]);
        alpha[up] -= t;
        alpha[down] += t;
        for (std::size_t i = 0; i < n; ++i)
            grad[i] += t * (K.at(i, down) - K.at(i, up));
    }

    // rho: mean gradient over free support vectors, else the KKT midpoint
    double rho;
    {
        double sum = 0.0;
        std::size_t free_count = 0;
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (alpha[i] > eps && alpha[i] < C - eps) {
                sum += grad[i];
                ++free_count;
            } else if (alpha[i] <= eps) {
                hi = std::min(hi, grad[i]);
            } else {
                lo = std::max(lo, grad[i]);
            }
        }
        if (free_count > 0) {
            rho = sum / static_cast<double>(free_count);
        } else {
            if (!std::isfinite(lo))
                lo = hi;
            if (!std::isfinite(hi))
                hi = lo;
            rho = (lo + hi) / 2.0;
        }
    }

    OcsvmModel model;
    model.nu = params.nu;
    model.gamma = gamma;
    model.rho = rho;
    std::vector<std::size_t> sv_idx;
    for (std::size_t i = 0; i < n; ++i)
        if (alpha[i] > eps)
            sv_idx.push_back(i);
    model.support_vectors = DenseMatrix(sv_idx.size(), X.cols);
    model.dual_coefs.resize(sv_idx.size());
    for (std::size_t s = 0; s < sv_idx.size(); ++s) {
        model.dual_coefs[s] = alpha[sv_idx[s]];
        const auto src = X.row(sv_idx[s]);
        std::copy(src.begin(), src.end(), model.support_vectors.row(s).begin());
    }
    return model;
}

OcsvmPrediction ocsvm_predict(const OcsvmModel& model, const DenseMatrix& X) {
    if (X.cols != model.support_vectors.cols)
        throw DimensionMismatch("expected " + std::to_string(model.support_vectors.cols) +
                                " features, got " + std::to_string(X.cols));
    const DenseMatrix K = kernels::rbf_cross_kernel(X, model.support_vectors, model.gamma);
    OcsvmPrediction pred;
    pred.labels.resize(X.rows);
    pred.decision_values.resize(X.rows);
    for (std::size_t i = 0; i < X.rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < model.support_vectors.rows; ++j)
            s += model.dual_coefs[j] * K.at(i, j);
        const double dv = s - model.rho;
        pred.decision_values[i] = dv;
        pred.labels[i] = dv >= 0.0 ? 1 : -1;
    }
    return pred;
}

nlohmann::json OcsvmModel::to_json() const {
    nlohmann::json j;
    j["format"] = "ocsvm";
    j["version"] = 1;
    j["nu"] = nu;
    j["gamma"] = gamma;
    j["rho"] = rho;
    j["n_features"] = support_vectors.cols;
    j["dual_coefs"] = dual_coefs;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < support_vectors.rows; ++i) {
        const auto row = support_vectors.row(i);
        rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    j["support_vectors"] = std::move(rows);
    return j;
}

OcsvmModel OcsvmModel::from_json(const nlohmann::json& j) {
    if (j.value("format", "") != "ocsvm" || j.value("version", 0) != 1)
        throw DataError("unsupported ocsvm model format");
    OcsvmModel m;
    m.nu = j.at("nu").get<double>();
    m.gamma = j.at("gamma").get<double>();
    m.rho = j.at("rho").get<double>();
    m.dual_coefs = j.at("dual_coefs").get<std::vector<double>>();
    const auto& rows = j.at("support_vectors");
    const std::size_t d = j.at("n_features").get<std::size_t>();
    m.support_vectors = DenseMatrix(rows.size(), d);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto row = rows[i].get<std::vector<double>>();
        if (row.size() != d)
            throw DataError("ragged support vector rows");
        std::copy(row.begin(), row.end(), m.support_vectors.row(i).begin());
    }
    return m;
}

} // namespace scribe::learn
