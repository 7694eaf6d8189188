#include "wot/synth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace wot {

void validate(const SynthConfig& config) {
    if (config.n_users < 2) throw std::invalid_argument("synth: n_users must be at least 2");
    if (config.n_events < 0) throw std::invalid_argument("synth: n_events must be non-negative");
    if (!(config.positive_fraction >= 0.0 && config.positive_fraction <= 1.0)) {
        throw std::invalid_argument("synth: positive_fraction must lie in [0, 1]");
    }
    if (!(config.event_rate > 0.0) || !std::isfinite(config.event_rate)) {
        throw std::invalid_argument("synth: event_rate must be positive");
    }
}

namespace {

int draw_magnitude(ScoreModel model, bool positive, std::mt19937_64& rng) {
    if (model == ScoreModel::uniform) return std::uniform_int_distribution<int>(1, 10)(rng);
    // Heavy mass on the conventional score of each sign, the rest spread uniformly.
    std::bernoulli_distribution conventional(positive ? 0.6 : 0.55);
    if (conventional(rng)) return positive ? 1 : 10;
    return std::uniform_int_distribution<int>(positive ? 2 : 1, positive ? 10 : 9)(rng);
}

// Fenwick tree over user weights for preferential target selection.
class WeightTree {
public:
    explicit WeightTree(std::size_t n) : tree_(n + 1, 0) {
        for (std::size_t i = 0; i < n; ++i) add(i, 1);
    }
    void add(std::size_t i, std::int64_t delta) {
        for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
    }
    std::int64_t total() const { return total_prefix(tree_.size() - 1); }
    /// Smallest index whose inclusive prefix sum exceeds `value`.
    std::size_t find(std::int64_t value) const {
        std::size_t pos = 0;
        std::size_t step = 1;
        while (step * 2 < tree_.size()) step *= 2;
        for (; step > 0; step /= 2) {
            if (pos + step < tree_.size() && tree_[pos + step] <= value) {
                pos += step;
                value -= tree_[pos];
            }
        }
        return pos;
    }

private:
    std::int64_t total_prefix(std::size_t i) const {
        std::int64_t s = 0;
        for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
        return s;
    }
    std::vector<std::int64_t> tree_;
};

}  // namespace

EventLog synth_log(const SynthConfig& config) {
    validate(config);
    std::mt19937_64 rng(config.seed);
    const auto n = static_cast<std::size_t>(config.n_users);
    std::uniform_int_distribution<std::size_t> any_user(0, n - 1);
    std::bernoulli_distribution is_positive(config.positive_fraction);
    std::exponential_distribution<double> gap(config.event_rate);
    WeightTree weights(n);

    std::vector<RatingEvent> events;
    events.reserve(static_cast<std::size_t>(config.n_events));
    double clock = static_cast<double>(config.start_time);
    for (std::int64_t i = 0; i < config.n_events; ++i) {
        clock += gap(rng);
        std::size_t ratee = 0;
        if (config.targets == TargetModel::uniform) {
            ratee = any_user(rng);
        } else {
            ratee = weights.find(std::uniform_int_distribution<std::int64_t>(0, weights.total() - 1)(rng));
        }
        std::size_t rater = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
        if (rater >= ratee) ++rater;
        const bool positive = is_positive(rng);
        const int magnitude = draw_magnitude(config.scores, positive, rng);
        weights.add(ratee, 1);
        events.push_back({static_cast<UserId>(rater + 1), static_cast<UserId>(ratee + 1),
                          positive ? magnitude : -magnitude, static_cast<Timestamp>(std::floor(clock))});
    }
    return EventLog(std::move(events));
}

}  // namespace wot
