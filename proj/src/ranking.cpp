#include "relbench/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "relbench/arc.hpp"

namespace relbench {

namespace {

constexpr std::int64_t kGammaScale = 1'000'000;

void check_finite(const std::vector<double>& scores) {
    for (double s : scores) {
        if (std::isnan(s)) throw std::runtime_error("NaN score in reliability order");
    }
}

}  // namespace

RankOrder make_rank_order(std::vector<std::size_t> order) {
    RankOrder r;
    r.position.assign(order.size(), order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t i = order[k];
        if (i >= order.size() || r.position[i] != order.size()) {
            throw std::runtime_error("order is not a permutation");
        }
        r.position[i] = k;
    }
    r.order = std::move(order);
    return r;
}

RankOrder order_by_uncertainty(const std::vector<double>& scores) {
    check_finite(scores);
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    return make_rank_order(std::move(order));
}

RankOrder order_by_robustness(const std::vector<double>& scores) {
    check_finite(scores);
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
    return make_rank_order(std::move(order));
}

RankOrder hybrid_order(const RankOrder& rank_u, const RankOrder& rank_e,
                       const std::vector<double>& u_scores, double gamma) {
    const std::size_t n = u_scores.size();
    if (rank_u.position.size() != n || rank_e.position.size() != n) {
        throw std::runtime_error("rank orders and score vector differ in length");
    }
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::runtime_error("gamma must lie in [0,1]");
    check_finite(u_scores);

    // h_i on a common 1e-6 denominator keeps the comparison exact, so equal
    // weighted positions really hit the uncertainty tie-break.
    const std::int64_t g = std::llround(gamma * static_cast<double>(kGammaScale));
    std::vector<std::int64_t> h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h[i] = g * static_cast<std::int64_t>(rank_u.position[i]) +
               (kGammaScale - g) * static_cast<std::int64_t>(rank_e.position[i]);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (h[a] != h[b]) return h[a] < h[b];
        return u_scores[a] > u_scores[b];  // ties decided by the uncertainty metric
    });
    return make_rank_order(std::move(order));
}

HybridWeight train_gamma(const std::vector<ReliabilityRecord>& train_records,
                         UncertaintyMetric u_metric, RobustnessMetric e_metric,
                         double grid_step) {
    if (train_records.empty()) throw std::runtime_error("cannot train gamma on zero records");
    if (!(grid_step > 0.0 && grid_step <= 1.0)) {
        throw std::runtime_error("gamma grid step must lie in (0,1]");
    }

    const std::size_t n = train_records.size();
    std::vector<double> u_scores(n);
    std::vector<double> e_scores(n);
    std::vector<bool> correct(n);
    for (std::size_t i = 0; i < n; ++i) {
        u_scores[i] = metric_value(train_records[i], u_metric);
        e_scores[i] = metric_value(train_records[i], e_metric);
        correct[i] = train_records[i].correct;
    }

    const RankOrder rank_u = order_by_uncertainty(u_scores);
    const RankOrder rank_e = order_by_robustness(e_scores);

    std::vector<double> grid;
    for (long k = 0;; ++k) {
        const double g = static_cast<double>(k) * grid_step;
        if (g >= 1.0) break;
        grid.push_back(g);
    }
    grid.push_back(1.0);

    HybridWeight best;
    best.grid_step = grid_step;
    best.train_auarc = -1.0;
    for (double g : grid) {
        const AccuracyRejectionCurve curve = arc(hybrid_order(rank_u, rank_e, u_scores, g), correct);
        if (curve.auarc > best.train_auarc) {  // ties keep the smaller gamma
            best.train_auarc = curve.auarc;
            best.gamma = g;
        }
    }
    return best;
}

double metric_value(const ReliabilityRecord& r, UncertaintyMetric m) {
    switch (m) {
        case UncertaintyMetric::MaxProb: return r.u_m;
        case UncertaintyMetric::Entropy: return r.u_H;
        case UncertaintyMetric::Total: return r.u_t;
        case UncertaintyMetric::Aleatoric: return r.u_a;
        case UncertaintyMetric::Epistemic: return r.u_e;
    }
    throw std::runtime_error("unknown uncertainty metric");
}

double metric_value(const ReliabilityRecord& r, RobustnessMetric m) {
    switch (m) {
        case RobustnessMetric::EpsGlobal: return r.eps_glob;
        case RobustnessMetric::EpsLocal: return r.eps_loc;
    }
    throw std::runtime_error("unknown robustness metric");
}

}  // namespace relbench
