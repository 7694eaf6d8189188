#include "wot/dynamics.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace wot {

MetricsMap SnapshotState::to_map() const {
    MetricsMap out;
    for (auto i : seen_) out.emplace(users_[i], metrics_[i]);
    return out;
}

SnapshotFold::SnapshotFold(const EventLog& log, int tz_shift_hours) : log_(log), tz_shift_hours_(tz_shift_hours) {
    check_tz_shift(tz_shift_hours);
}

std::size_t SnapshotFold::day_count() const {
    if (log_.empty()) return 0;
    return static_cast<std::size_t>(day_of(log_.last_time(), tz_shift_hours_).index -
                                    day_of(log_.first_time(), tz_shift_hours_).index + 1);
}

void SnapshotFold::run(const std::function<void(const SnapshotState&)>& visit) const {
    if (log_.empty()) return;
    SnapshotState state;
    state.users_ = log_.users();
    state.metrics_.assign(state.users_.size(), NodeMetrics{});
    state.is_seen_.assign(state.users_.size(), 0);
    auto touch = [&](UserId id) {
        const auto i = static_cast<std::uint32_t>(log_.dense_index(id));
        if (!state.is_seen_[i]) {
            state.is_seen_[i] = 1;
            state.seen_.push_back(i);
        }
        return i;
    };
    const auto events = log_.events();
    std::size_t cursor = 0;
    const Day first = day_of(log_.first_time(), tz_shift_hours_);
    const Day last = day_of(log_.last_time(), tz_shift_hours_);
    for (Day d = first; d <= last; d.index++) {
        while (cursor < events.size() && day_of(events[cursor].time, tz_shift_hours_) <= d) {
            const auto& e = events[cursor++];
            state.metrics_[touch(e.rater)].add_outgoing(e.score);
            state.metrics_[touch(e.ratee)].add_incoming(e.score);
        }
        state.day_ = d;
        visit(state);
    }
}

std::vector<Snapshot> snapshot_series(const EventLog& log, int tz_shift_hours) {
    if (log.empty()) throw std::invalid_argument("snapshot_series: empty log");
    std::vector<Snapshot> out;
    SnapshotFold(log, tz_shift_hours).run([&](const SnapshotState& s) { out.push_back({s.day(), s.to_map()}); });
    return out;
}

double gini(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("gini of an empty sample");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0) throw std::invalid_argument("gini requires non-negative values");
    const double total = std::accumulate(sorted.begin(), sorted.end(), 0.0);
    if (total <= 0) throw std::invalid_argument("gini undefined for an all-zero sample");
    const double n = static_cast<double>(sorted.size());
    double acc = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        acc += (2.0 * static_cast<double>(i + 1) - n - 1.0) * sorted[i];
    }
    return acc / (n * total);
}

std::vector<GiniRow> gini_series(const EventLog& log, int tz_shift_hours, GiniPopulation population) {
    std::vector<GiniRow> out;
    std::vector<double> plus, minus;
    auto measure = [](const std::vector<double>& values) -> std::optional<double> {
        if (values.size() < 2) return std::nullopt;
        if (std::all_of(values.begin(), values.end(), [](double v) { return v == 0; })) return std::nullopt;
        return gini(values);
    };
    SnapshotFold(log, tz_shift_hours).run([&](const SnapshotState& s) {
        plus.clear();
        minus.clear();
        for (auto i : s.seen()) {
            const auto& m = s.metrics(i);
            if (population == GiniPopulation::all_seen || m.rho_plus > 0) plus.push_back(static_cast<double>(m.rho_plus));
            if (population == GiniPopulation::all_seen || m.rho_minus > 0) minus.push_back(static_cast<double>(m.rho_minus));
        }
        GiniRow row{s.day(), measure(plus), measure(minus)};
        if (row.gini_plus || row.gini_minus) out.push_back(row);
    });
    return out;
}

namespace {

void check_distinct(std::span<const UserId> list) {
    std::unordered_set<UserId> seen;
    for (auto id : list) {
        if (!seen.insert(id).second) throw std::invalid_argument("ranking repeats user " + std::to_string(id));
    }
}

}  // namespace

double extended_jaccard(std::span<const UserId> a, std::span<const UserId> b, std::size_t k) {
    if (k == 0) throw std::invalid_argument("extended_jaccard: k must be positive");
    if (a.size() > k || b.size() > k) throw std::invalid_argument("extended_jaccard: list longer than k");
    check_distinct(a);
    check_distinct(b);
    std::unordered_set<UserId> in_a, in_b;
    std::size_t common = 0;
    double total = 0;
    for (std::size_t d = 0; d < k; ++d) {
        if (d < a.size()) {
            in_a.insert(a[d]);
            if (in_b.contains(a[d])) ++common;
        }
        if (d < b.size()) {
            in_b.insert(b[d]);
            if (in_a.contains(b[d])) ++common;
        }
        const std::size_t unite = in_a.size() + in_b.size() - common;
        total += unite == 0 ? 1.0 : static_cast<double>(common) / static_cast<double>(unite);
    }
    return total / static_cast<double>(k);
}

double extended_jaccard(std::span<const UserId> a, std::span<const UserId> b) {
    return extended_jaccard(a, b, std::max<std::size_t>({a.size(), b.size(), 1}));
}

double set_jaccard(std::span<const UserId> a, std::span<const UserId> b) {
    std::unordered_set<UserId> sa(a.begin(), a.end());
    std::unordered_set<UserId> sb(b.begin(), b.end());
    std::size_t common = 0;
    for (auto id : sa) common += sb.contains(id) ? 1 : 0;
    const std::size_t unite = sa.size() + sb.size() - common;
    return unite == 0 ? 1.0 : static_cast<double>(common) / static_cast<double>(unite);
}

std::vector<UserId> top_k(const SnapshotState& state, ReputationKey key, std::size_t k) {
    std::vector<std::pair<std::int64_t, UserId>> entries;
    for (auto i : state.seen()) {
        const auto& m = state.metrics(i);
        std::int64_t value = 0;
        switch (key) {
            case ReputationKey::positive: value = m.rho_plus; break;
            case ReputationKey::negative: value = m.rho_minus; break;
            case ReputationKey::global: value = m.rho; break;
        }
        if (key != ReputationKey::global && value == 0) continue;
        entries.emplace_back(value, state.user(i));
    }
    const auto take = std::min(k, entries.size());
    std::partial_sort(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(take), entries.end(),
                      [](const auto& x, const auto& y) { return x.first != y.first ? x.first > y.first : x.second < y.second; });
    std::vector<UserId> out;
    out.reserve(take);
    for (std::size_t i = 0; i < take; ++i) out.push_back(entries[i].second);
    return out;
}

std::vector<StabilityRow> topk_stability_series(const EventLog& log, std::size_t k, int tz_shift_hours) {
    if (k == 0) throw std::invalid_argument("topk_stability_series: k must be positive");
    std::vector<StabilityRow> out;
    std::optional<std::array<std::vector<UserId>, 3>> previous;
    constexpr std::array<ReputationKey, 3> keys = {ReputationKey::positive, ReputationKey::negative, ReputationKey::global};
    SnapshotFold(log, tz_shift_hours).run([&](const SnapshotState& s) {
        std::array<std::vector<UserId>, 3> current;
        for (std::size_t i = 0; i < keys.size(); ++i) current[i] = top_k(s, keys[i], k);
        if (previous) {
            StabilityRow row;
            row.day = s.day();
            double* ext[3] = {&row.j_plus, &row.j_minus, &row.j_global};
            double* plain[3] = {&row.set_plus, &row.set_minus, &row.set_global};
            for (std::size_t i = 0; i < keys.size(); ++i) {
                *ext[i] = extended_jaccard((*previous)[i], current[i], k);
                *plain[i] = set_jaccard((*previous)[i], current[i]);
                row.truncated = row.truncated || (*previous)[i].size() < k || current[i].size() < k;
            }
            out.push_back(row);
        }
        previous = std::move(current);
    });
    return out;
}

std::set<UserId> top_k_entrants(const EventLog& log, ReputationKey key, std::size_t k, int tz_shift_hours) {
    std::set<UserId> out;
    SnapshotFold(log, tz_shift_hours).run([&](const SnapshotState& s) {
        for (auto id : top_k(s, key, k)) out.insert(id);
    });
    return out;
}

double Trajectory::slope() const {
    if (values.empty()) return 0.0;
    return static_cast<double>(values.back()) / static_cast<double>(values.size());
}

std::vector<Trajectory> trajectories(const EventLog& log, TrajectorySelection selection, std::size_t k,
                                     const CategoryThresholds& thresholds, int tz_shift_hours) {
    thresholds.validate();
    const auto final_metrics = node_metrics(log);
    const auto labels = categorize(final_metrics, thresholds);
    std::set<UserId> chosen;
    switch (selection) {
        case TrajectorySelection::top_k_positive:
            chosen = top_k_entrants(log, ReputationKey::positive, k, tz_shift_hours);
            break;
        case TrajectorySelection::top_k_negative:
            chosen = top_k_entrants(log, ReputationKey::negative, k, tz_shift_hours);
            break;
        case TrajectorySelection::by_category:
            for (const auto& [user, label] : labels) {
                if (label != CategoryLabel::uncategorized) chosen.insert(user);
            }
            break;
    }
    std::map<UserId, Trajectory> built;
    for (auto user : chosen) built[user] = Trajectory{user, {}, labels.at(user)};
    std::map<UserId, std::int64_t> rho;
    for (const auto& e : log.events()) {
        auto it = built.find(e.ratee);
        if (it == built.end()) continue;
        it->second.values.push_back(rho[e.ratee] += e.score);
    }
    std::vector<Trajectory> out;
    out.reserve(built.size());
    for (auto& [user, t] : built) out.push_back(std::move(t));
    return out;
}

}  // namespace wot
