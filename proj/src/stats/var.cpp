#include "tweetmarket/stats/var.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "tweetmarket/core/error.hpp"

namespace tweetmarket::stats {

namespace {

double log_det_spd(const Eigen::MatrixXd& m) {
    Eigen::LDLT<Eigen::MatrixXd> ldlt(m);
    const Eigen::VectorXd d = ldlt.vectorD();
    const double scale = std::max(1.0, m.diagonal().cwiseAbs().maxCoeff());
    double ld = 0.0;
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        if (!(d[i] > 1e-14 * scale)) return -std::numeric_limits<double>::infinity();
        ld += std::log(d[i]);
    }
    return ld;
}

}  // namespace

VarModel fit_var(const Eigen::MatrixXd& data, std::size_t order, std::size_t skip) {
    if (order < 1) throw ValidationError("fit_var: order must be >= 1");
    const auto total = static_cast<std::size_t>(data.rows());
    const auto k = static_cast<std::size_t>(data.cols());
    if (k == 0) throw ValidationError("fit_var: no variables");
    const std::size_t first = order + skip;
    const std::size_t m = k * order + 1;
    if (total <= first || total - first < m + 1) {
        throw ValidationError("fit_var: " + std::to_string(total) +
                              " observations are too few for VAR(" + std::to_string(order) + ")");
    }
    const std::size_t nobs = total - first;
    const auto rows = static_cast<Eigen::Index>(nobs);

    Eigen::MatrixXd z(rows, static_cast<Eigen::Index>(m));
    for (std::size_t r = 0; r < nobs; ++r) {
        const std::size_t t = first + r;
        const auto ri = static_cast<Eigen::Index>(r);
        z(ri, 0) = 1.0;
        for (std::size_t lag = 1; lag <= order; ++lag) {
            for (std::size_t v = 0; v < k; ++v) {
                z(ri, static_cast<Eigen::Index>(1 + (lag - 1) * k + v)) =
                    data(static_cast<Eigen::Index>(t - lag), static_cast<Eigen::Index>(v));
            }
        }
    }
    const Eigen::MatrixXd y = data.bottomRows(rows);

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(z);
    cod.setThreshold(1e-10);
    const Eigen::MatrixXd b = cod.solve(y);  // m x k

    VarModel model;
    model.order = order;
    model.dimension = k;
    model.observations = nobs;
    model.intercept = b.row(0).transpose();
    for (std::size_t lag = 1; lag <= order; ++lag) {
        model.lag_coefficients.push_back(
            b.middleRows(static_cast<Eigen::Index>(1 + (lag - 1) * k), static_cast<Eigen::Index>(k))
                .transpose());
    }
    model.residuals = y - z * b;
    const Eigen::MatrixXd cross = model.residuals.transpose() * model.residuals;
    const double dn = static_cast<double>(nobs);
    const double dm = static_cast<double>(m);
    model.sigma_u_mle = cross / dn;
    model.sigma_u = cross / (dn - dm);

    const double ld = log_det_spd(model.sigma_u_mle);
    const double free_params = static_cast<double>(order * k * k + k);
    model.criteria.aic = ld + 2.0 * free_params / dn;
    model.criteria.bic = ld + std::log(dn) * free_params / dn;
    model.criteria.hqic = ld + 2.0 * std::log(std::log(dn)) * free_params / dn;
    model.criteria.fpe =
        std::pow((dn + dm) / (dn - dm), static_cast<double>(k)) * std::exp(ld);
    return model;
}

OrderSelection var_select_order(const Eigen::MatrixXd& data, std::size_t max_order) {
    if (max_order < 1) throw ValidationError("var_select_order: max_order must be >= 1");
    const auto total = static_cast<std::size_t>(data.rows());
    const auto k = static_cast<std::size_t>(data.cols());
    if (total <= max_order || total - max_order < k * max_order + 2) {
        throw ValidationError("var_select_order: " + std::to_string(total) +
                              " observations are too few for max_order " +
                              std::to_string(max_order));
    }

    OrderSelection sel;
    std::array<double, 4> best{};
    best.fill(std::numeric_limits<double>::infinity());
    std::array<std::size_t, 4> arg{1, 1, 1, 1};
    for (std::size_t p = 1; p <= max_order; ++p) {
        const VarModel model = fit_var(data, p, max_order - p);
        sel.by_order.push_back(model.criteria);
        const std::array<double, 4> c{model.criteria.aic, model.criteria.bic, model.criteria.fpe,
                                      model.criteria.hqic};
        for (std::size_t i = 0; i < 4; ++i) {
            if (c[i] < best[i] || (p == 1 && !(c[i] > best[i]))) {
                best[i] = c[i];
                arg[i] = p;
            }
        }
    }
    sel.aic = arg[0];
    sel.bic = arg[1];
    sel.fpe = arg[2];
    sel.hqic = arg[3];

    std::size_t chosen = 1;
    std::size_t best_votes = 0;
    for (std::size_t p = 1; p <= max_order; ++p) {
        std::size_t votes = 0;
        for (auto a : arg) votes += (a == p);
        if (votes > best_votes) {
            best_votes = votes;
            chosen = p;
        }
    }
    sel.chosen = chosen;
    return sel;
}

}  // namespace tweetmarket::stats
