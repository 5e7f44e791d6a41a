#include "uqd/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "uqd/error.hpp"

namespace uqd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_dimension(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got) {
        std::ostringstream os;
        os << what << " has K=" << got << ", expected K=" << expected;
        throw ValidationError(ValidationKind::DimensionMismatch, os.str());
    }
}

std::vector<double> weighted_sum(std::span<const double> weights,
                                 const std::vector<Categorical>& parts) {
    std::vector<double> acc(parts.front().size(), 0.0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += weights[i] * parts[i][k];
    }
    return acc;
}

}  // namespace

double Dirichlet::concentration() const {
    return std::accumulate(alpha.begin(), alpha.end(), 0.0);
}

SecondOrderDistribution SecondOrderDistribution::point(Categorical theta) {
    const std::size_t k = theta.size();
    return {PointMass{std::move(theta)}, k, 0};
}

SecondOrderDistribution SecondOrderDistribution::dirichlet(std::vector<double> alpha) {
    if (alpha.size() < 2) {
        throw ValidationError(ValidationKind::InvalidParameter,
                              "Dirichlet needs K >= 2 parameters, got " + std::to_string(alpha.size()));
    }
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (!std::isfinite(alpha[k]) || alpha[k] <= 0.0) {
            std::ostringstream os;
            os << "Dirichlet alpha[" << k << "] = " << alpha[k] << " must be finite and > 0";
            throw ValidationError(ValidationKind::InvalidParameter, os.str());
        }
    }
    const std::size_t k = alpha.size();
    return {Dirichlet{std::move(alpha)}, k, 0};
}

SecondOrderDistribution SecondOrderDistribution::interval_uniform(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || hi > 1.0 || lo > hi) {
        std::ostringstream os;
        os << "interval uniform requires 0 <= lo <= hi <= 1, got lo=" << lo << " hi=" << hi;
        throw ValidationError(ValidationKind::InvalidParameter, os.str());
    }
    return {IntervalUniform{lo, hi}, 2, 0};
}

SecondOrderDistribution SecondOrderDistribution::ensemble(std::vector<Categorical> members) {
    if (members.empty()) {
        throw ValidationError(ValidationKind::EmptyEnsemble, "ensemble needs at least one member");
    }
    const std::size_t k = members.front().size();
    for (const auto& m : members) require_dimension(k, m.size(), "ensemble member");
    return {EmpiricalEnsemble{std::move(members)}, k, 0};
}

SecondOrderDistribution SecondOrderDistribution::mixture(std::vector<double> weights,
                                                         std::vector<SecondOrderDistribution> components) {
    if (components.empty()) {
        throw ValidationError(ValidationKind::InvalidParameter, "mixture needs at least one component");
    }
    if (weights.size() != components.size()) {
        std::ostringstream os;
        os << "mixture has " << weights.size() << " weights for " << components.size() << " components";
        throw ValidationError(ValidationKind::DimensionMismatch, os.str());
    }
    normalize_weights(weights, "mixture weight");

    const std::size_t k = components.front().dimension();
    int depth = 0;
    for (const auto& c : components) {
        require_dimension(k, c.dimension(), "mixture component");
        depth = std::max(depth, c.nesting_depth());
    }
    depth += 1;
    if (depth > kMaxMixtureDepth) {
        throw ValidationError(ValidationKind::InvalidParameter,
                              "mixture nesting depth " + std::to_string(depth) + " exceeds " +
                                  std::to_string(kMaxMixtureDepth));
    }

    Mixture flat;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const double w = weights[i];
        std::visit(overloaded{
                       [&](Mixture& inner) {
                           for (std::size_t j = 0; j < inner.components.size(); ++j) {
                               flat.weights.push_back(w * inner.weights[j]);
                               flat.components.push_back(std::move(inner.components[j]));
                           }
                       },
                       [&](auto& leaf) {
                           flat.weights.push_back(w);
                           flat.components.emplace_back(std::move(leaf));
                       },
                   },
                   components[i].value_);
    }
    return {std::move(flat), k, depth};
}

bool SecondOrderDistribution::is_discrete() const {
    auto leaf_discrete = [](const MixtureComponent& c) {
        return std::holds_alternative<PointMass>(c) || std::holds_alternative<EmpiricalEnsemble>(c);
    };
    return std::visit(overloaded{
                          [](const PointMass&) { return true; },
                          [](const EmpiricalEnsemble&) { return true; },
                          [&](const Mixture& m) {
                              return std::all_of(m.components.begin(), m.components.end(), leaf_discrete);
                          },
                          [](const auto&) { return false; },
                      },
                      value_);
}

std::size_t dimension(const MixtureComponent& c) {
    return std::visit(overloaded{
                          [](const PointMass& p) { return p.theta.size(); },
                          [](const Dirichlet& d) { return d.alpha.size(); },
                          [](const IntervalUniform&) { return std::size_t{2}; },
                          [](const EmpiricalEnsemble& e) { return e.members.front().size(); },
                      },
                      c);
}

namespace {

Categorical mean_of(const PointMass& p) { return p.theta; }

Categorical mean_of(const Dirichlet& d) {
    const double a0 = d.concentration();
    std::vector<double> mean(d.alpha.size());
    for (std::size_t k = 0; k < mean.size(); ++k) mean[k] = d.alpha[k] / a0;
    return Categorical(std::move(mean));
}

Categorical mean_of(const IntervalUniform& u) {
    const double m = 0.5 * (u.lo + u.hi);
    return Categorical({m, 1.0 - m});
}

Categorical mean_of(const EmpiricalEnsemble& e) {
    const double w = 1.0 / static_cast<double>(e.members.size());
    std::vector<double> acc(e.members.front().size(), 0.0);
    for (const auto& m : e.members) {
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += m[k];
    }
    for (double& a : acc) a *= w;
    return Categorical(std::move(acc));
}

}  // namespace

Categorical predictive_mean(const MixtureComponent& c) {
    return std::visit([](const auto& leaf) { return mean_of(leaf); }, c);
}

Categorical predictive_mean(const SecondOrderDistribution& q) {
    return std::visit(overloaded{
                          [](const Mixture& m) {
                              std::vector<Categorical> means;
                              means.reserve(m.components.size());
                              for (const auto& c : m.components) means.push_back(predictive_mean(c));
                              return Categorical(weighted_sum(m.weights, means));
                          },
                          [](const auto& leaf) { return mean_of(leaf); },
                      },
                      q.variant());
}

namespace {

Categorical draw_dirichlet(const Dirichlet& d, Rng& rng) {
    std::vector<double> logs(d.alpha.size());
    for (std::size_t k = 0; k < logs.size(); ++k) logs[k] = rng.log_gamma_variate(d.alpha[k]);
    const double top = *std::max_element(logs.begin(), logs.end());
    double sum = 0.0;
    for (double& v : logs) {
        v = std::exp(v - top);
        sum += v;
    }
    for (double& v : logs) v /= sum;
    return Categorical(std::move(logs));
}

std::size_t pick_index(std::span<const double> weights, Rng& rng) {
    const double u = rng.uniform01();
    double cumulative = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        cumulative += weights[i];
        if (u < cumulative) return i;
    }
    return weights.size() - 1;
}

}  // namespace

namespace {

Categorical draw_leaf(const PointMass& p, Rng&) { return p.theta; }

Categorical draw_leaf(const Dirichlet& d, Rng& rng) { return draw_dirichlet(d, rng); }

Categorical draw_leaf(const IntervalUniform& u, Rng& rng) {
    const double t = u.lo + (u.hi - u.lo) * rng.uniform01();
    return Categorical({t, 1.0 - t});
}

Categorical draw_leaf(const EmpiricalEnsemble& e, Rng& rng) {
    const auto m = static_cast<std::size_t>(rng.uniform01() * static_cast<double>(e.members.size()));
    return e.members[std::min(m, e.members.size() - 1)];
}

}  // namespace

Categorical draw(const MixtureComponent& c, Rng& rng) {
    return std::visit([&](const auto& leaf) { return draw_leaf(leaf, rng); }, c);
}

Categorical draw(const SecondOrderDistribution& q, Rng& rng) {
    return std::visit(overloaded{
                          [&](const Mixture& m) { return draw(m.components[pick_index(m.weights, rng)], rng); },
                          [&](const auto& leaf) { return draw_leaf(leaf, rng); },
                      },
                      q.variant());
}

std::vector<Categorical> sample(const SecondOrderDistribution& q, std::size_t n, Rng& rng) {
    std::vector<Categorical> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(draw(q, rng));
    return out;
}

}  // namespace uqd
