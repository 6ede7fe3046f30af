#include "relbench/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace relbench {

namespace {

void check_classes(const NaiveBayesModel& model) {
    if (model.class_prior.size() < 2) {
        throw std::runtime_error("robustness needs at least 2 classes");
    }
}

/// Argmax over joint scores, ties to the lowest class index. Matches the
/// posterior's predicted class (shared log-joint ordering).
std::size_t top_class(const std::vector<double>& joints) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < joints.size(); ++c) {
        if (joints[c] > joints[best]) best = c;
    }
    return best;
}

}  // namespace

double eps_global(const NaiveBayesModel& model, std::span<const std::uint32_t> f) {
    check_classes(model);
    const std::vector<double> joints = joint_scores(model, f);
    const std::size_t chat = top_class(joints);

    double runner_up = -1.0;
    for (std::size_t c = 0; c < joints.size(); ++c) {
        if (c != chat) runner_up = std::max(runner_up, joints[c]);
    }
    const double delta = joints[chat] - runner_up;
    if (delta <= 0.0) return 0.0;
    return delta / (1.0 + delta);
}

bool local_robustness_predicate(const NaiveBayesModel& model, std::span<const std::uint32_t> f,
                                double eps) {
    check_classes(model);
    if (eps >= 1.0) return false;
    if (eps < 0.0) eps = 0.0;

    const std::size_t n_features = model.conditionals.size();

    // log of chat's all-lowered score: every local model moves its eps mass
    // away from the observed outcome.
    std::vector<double> log_joint(model.class_prior.size());
    for (std::size_t c = 0; c < log_joint.size(); ++c) {
        double s = std::log(model.class_prior[c]);
        for (std::size_t i = 0; i < n_features; ++i) s += std::log(model.conditionals[i][c][f[i]]);
        log_joint[c] = s;
    }
    const std::size_t chat = top_class(log_joint);
    const double log_lowered =
        static_cast<double>(n_features + 1) * std::log1p(-eps) + log_joint[chat];

    // Every competitor's all-raised score: eps mass lands exactly on the
    // observed outcome (and on the competitor class, for the prior).
    for (std::size_t c = 0; c < log_joint.size(); ++c) {
        if (c == chat) continue;
        double log_raised = std::log((1.0 - eps) * model.class_prior[c] + eps);
        for (std::size_t i = 0; i < n_features; ++i) {
            log_raised += std::log((1.0 - eps) * model.conditionals[i][c][f[i]] + eps);
        }
        if (log_lowered < log_raised) return false;
    }
    return true;
}

double eps_local(const NaiveBayesModel& model, std::span<const std::uint32_t> f, double tol) {
    check_classes(model);
    if (!(tol > 0.0)) throw std::runtime_error("tolerance must be positive");

    // Exact tie at eps=0 short-circuits: the prediction is already fragile.
    std::vector<double> log_joint(model.class_prior.size());
    for (std::size_t c = 0; c < log_joint.size(); ++c) {
        double s = std::log(model.class_prior[c]);
        for (std::size_t i = 0; i < model.conditionals.size(); ++i) {
            s += std::log(model.conditionals[i][c][f[i]]);
        }
        log_joint[c] = s;
    }
    const std::size_t chat = top_class(log_joint);
    for (std::size_t c = 0; c < log_joint.size(); ++c) {
        if (c != chat && log_joint[c] >= log_joint[chat]) return 0.0;
    }

    // Predicate holds at lo, fails at hi (at eps=1 the lowered score is 0 and
    // every raised factor is 1).
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (local_robustness_predicate(model, f, mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

double oracle_eps_global(const NaiveBayesModel& model, std::span<const std::uint32_t> f,
                         double grid_resolution) {
    check_classes(model);
    const std::vector<double> joints = joint_scores(model, f);
    const std::size_t chat = top_class(joints);

    double best = 0.0;
    for (long k = 0;; ++k) {
        const double eps = static_cast<double>(k) * grid_resolution;
        if (eps > 1.0) break;
        bool flipped = false;
        for (std::size_t c = 0; c < joints.size() && !flipped; ++c) {
            if (c == chat) continue;
            // Adversary puts the whole contaminant on (c, f).
            if ((1.0 - eps) * joints[c] + eps >= (1.0 - eps) * joints[chat]) flipped = true;
        }
        if (flipped) break;
        best = eps;
    }
    return best;
}

double oracle_eps_local(const NaiveBayesModel& model, std::span<const std::uint32_t> f,
                        double grid_resolution) {
    check_classes(model);
    const std::size_t n_classes = model.class_prior.size();
    const std::size_t n_features = model.conditionals.size();

    std::vector<double> joints = joint_scores(model, f);
    const std::size_t chat = top_class(joints);

    double best = 0.0;
    for (long k = 0;; ++k) {
        const double eps = static_cast<double>(k) * grid_resolution;
        if (eps > 1.0) break;
        // Vertex contaminations of one conditional: (1-e)*cond + e*delta_v.
        // The observed outcome's mass is extremal at v == f_i (raised) and at
        // any v != f_i (lowered), found here by literal enumeration.
        auto lowered = [&](std::size_t i, std::size_t c) {
            const std::vector<double>& row = model.conditionals[i][c];
            double m = (1.0 - eps) * row[f[i]] + eps;  // v == f_i vertex
            for (std::size_t v = 0; v < row.size(); ++v) {
                const double q = (1.0 - eps) * row[f[i]] + (v == f[i] ? eps : 0.0);
                m = std::min(m, q);
            }
            return m;
        };
        auto raised = [&](std::size_t i, std::size_t c) {
            const std::vector<double>& row = model.conditionals[i][c];
            double m = 0.0;
            for (std::size_t v = 0; v < row.size(); ++v) {
                const double q = (1.0 - eps) * row[f[i]] + (v == f[i] ? eps : 0.0);
                m = std::max(m, q);
            }
            return m;
        };

        bool flipped = false;
        // Prior vertices and competitor targets are enumerated jointly; the
        // conditionals are contaminated independently per (feature, class).
        for (std::size_t cstar = 0; cstar < n_classes && !flipped; ++cstar) {
            const double prior_chat =
                (1.0 - eps) * model.class_prior[chat] + (cstar == chat ? eps : 0.0);
            for (std::size_t c = 0; c < n_classes && !flipped; ++c) {
                if (c == chat) continue;
                const double prior_c =
                    (1.0 - eps) * model.class_prior[c] + (cstar == c ? eps : 0.0);
                double score_chat = prior_chat;
                double score_c = prior_c;
                for (std::size_t i = 0; i < n_features; ++i) {
                    score_chat *= lowered(i, chat);
                    score_c *= raised(i, c);
                }
                if (score_c >= score_chat) flipped = true;
            }
        }
        if (flipped) break;
        best = eps;
    }
    return best;
}

RobustnessScores robustness_scores(const NaiveBayesModel& model, std::span<const std::uint32_t> f,
                                   double tol) {
    RobustnessScores s;
    s.eps_glob = eps_global(model, f);
    s.eps_loc = eps_local(model, f, tol);
    return s;
}

}  // namespace relbench
