#include "polylog/indices.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace polylog {

Bounds::Bounds(std::vector<int> mm) : m(std::move(mm)) {
    if (m.empty()) throw error("Bounds: depth must be at least 1");
    for (int mt : m)
        if (mt < 1) throw error("Bounds: every m_t must be positive");
}

int Bounds::weight() const { return std::accumulate(m.begin(), m.end(), 0); }

std::string Bounds::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t t = 0; t < m.size(); ++t) os << (t ? "," : "") << m[t];
    os << ')';
    return os.str();
}

Bounds padded_bounds(const Bounds& b) {
    int mmax = *std::max_element(b.m.begin(), b.m.end());
    return Bounds(std::vector<int>(b.m.size(), mmax));
}

MultiIndex::MultiIndex(std::vector<int> comps, Bounds bounds)
    : comps_(std::move(comps)), bounds_(std::move(bounds)) {
    if (comps_.size() != bounds_.m.size())
        throw error("MultiIndex: component count does not match bounds");
    for (size_t t = 0; t < comps_.size(); ++t)
        if (comps_[t] < 0 || comps_[t] > bounds_.m[t])
            throw error("MultiIndex: component out of range at position " + std::to_string(t));
}

MultiIndex MultiIndex::zero(const Bounds& b) {
    return MultiIndex(std::vector<int>(b.m.size(), 0), b);
}

MultiIndex MultiIndex::top(const Bounds& b) { return MultiIndex(b.m, b); }

MultiIndex MultiIndex::unit(const Bounds& b, int s) {
    std::vector<int> c(b.m.size(), 0);
    if (s < 0 || s >= b.depth()) throw error("unit: position out of range");
    c[s] = 1;
    return MultiIndex(std::move(c), b);
}

std::string MultiIndex::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t t = 0; t < comps_.size(); ++t) os << (t ? "," : "") << comps_[t];
    os << ')';
    return os.str();
}

int weight(const MultiIndex& i) {
    const auto& c = i.components();
    return std::accumulate(c.begin(), c.end(), 0);
}

int depth(const MultiIndex& i) {
    int d = 0;
    for (int v : i.components()) d += (v != 0);
    return d;
}

std::vector<int> nonzero_positions(const MultiIndex& i) {
    std::vector<int> pos;
    for (int t = 0; t < i.size(); ++t)
        if (i[t] != 0) pos.push_back(t);
    return pos;
}

static void require_same_bounds(const MultiIndex& i, const MultiIndex& j) {
    if (!(i.bounds() == j.bounds())) throw error("indices live over different bounds");
}

Ordering complete_cmp(const MultiIndex& i, const MultiIndex& j) {
    require_same_bounds(i, j);
    int wi = weight(i), wj = weight(j);
    if (wi != wj) return wi < wj ? Ordering::LT : Ordering::GT;

    std::vector<int> si = i.components(), sj = j.components();
    std::sort(si.begin(), si.end(), std::greater<int>());
    std::sort(sj.begin(), sj.end(), std::greater<int>());
    for (size_t t = 0; t < si.size(); ++t)
        if (si[t] != sj[t]) return si[t] < sj[t] ? Ordering::LT : Ordering::GT;

    for (int t = 0; t < i.size(); ++t)
        if (i[t] != j[t]) return i[t] < j[t] ? Ordering::LT : Ordering::GT;
    return Ordering::EQ;
}

bool partial_leq(const MultiIndex& j, const MultiIndex& i) {
    require_same_bounds(j, i);
    for (int t = 0; t < i.size(); ++t)
        if (j[t] > i[t]) return false;
    return true;
}

MultiIndex retract(const MultiIndex& i, const MultiIndex& j) {
    if (!partial_leq(j, i)) throw error("retract: j is not componentwise below i");
    auto tau = nonzero_positions(i);
    std::vector<int> bm, comps;
    bm.reserve(tau.size());
    comps.reserve(tau.size());
    for (int t : tau) {
        bm.push_back(i[t]);
        comps.push_back(j[t]);
    }
    if (bm.empty()) throw error("retract: the zero index has no retraction target");
    return MultiIndex(std::move(comps), Bounds(std::move(bm)));
}

MultiIndex add_unit(const MultiIndex& i, int s) {
    if (s < 0 || s >= i.size()) throw error("add_unit: position out of range");
    if (i[s] >= i.bounds().m[s]) throw error("add_unit: component already at its bound");
    auto c = i.components();
    ++c[s];
    return MultiIndex(std::move(c), i.bounds());
}

MultiIndex sub_unit(const MultiIndex& i, int s) {
    if (s < 0 || s >= i.size()) throw error("sub_unit: position out of range");
    if (i[s] <= 0) throw error("sub_unit: component already zero");
    auto c = i.components();
    --c[s];
    return MultiIndex(std::move(c), i.bounds());
}

MultiIndex v_index(const Bounds& b, int s) {
    if (s < 0 || s >= b.depth()) throw error("v_index: position out of range");
    auto c = b.m;
    c[s] = 0;
    return MultiIndex(std::move(c), b);
}

IndexQueue::IndexQueue(Bounds bounds, std::vector<int> steps)
    : bounds_(std::move(bounds)), steps_(std::move(steps)) {
    const int K = bounds_.weight();
    const int n = bounds_.depth();
    if (static_cast<int>(steps_.size()) != K)
        throw error("IndexQueue: step count must equal the weight");

    MultiIndex cur = MultiIndex::zero(bounds_);
    entries_.reserve(K);
    step_data_.reserve(K);
    for (int r = 0; r < K; ++r) {
        cur = add_unit(cur, steps_[r]);
        QueueStep d;
        d.s = steps_[r];
        d.t_s = cur[d.s];
        d.a = n;
        for (int t = d.s + 1; t < n; ++t)
            if (cur[t] != 0) {
                d.a = t;
                break;
            }
        d.lambda = 0;
        for (int t = 0; t < d.s; ++t) d.lambda += (cur[t] != 0);
        d.l = depth(cur);
        entries_.push_back(cur);
        step_data_.push_back(d);
    }
}

MultiIndex IndexQueue::transpose(const MultiIndex& i, int r, int delta) const {
    if (r < 1 || r >= length()) throw error("transpose: step index out of range");
    if (delta == 0) return i;
    const QueueStep& d = step_data_[r];
    if (d.t_s > 1 || d.a >= bounds_.depth()) return i;
    auto c = i.components();
    std::swap(c[d.s], c[d.a]);
    return MultiIndex(std::move(c), i.bounds());
}

std::string IndexQueue::str() const {
    std::ostringstream os;
    for (int r = 0; r < length(); ++r) os << (r ? " " : "") << entries_[r].str();
    return os.str();
}

std::vector<IndexQueue> enumerate_queues(const Bounds& b) {
    const int n = b.depth();
    const int K = b.weight();
    std::vector<IndexQueue> out;
    std::vector<int> remaining = b.m;
    std::vector<int> steps;
    steps.reserve(K);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(steps.size()) == K) {
            out.emplace_back(b, steps);
            return;
        }
        for (int s = 0; s < n; ++s) {
            if (remaining[s] == 0) continue;
            --remaining[s];
            steps.push_back(s);
            rec();
            steps.pop_back();
            ++remaining[s];
        }
    };
    rec();
    return out;
}

std::vector<int> position_functions(const IndexQueue& q) {
    for (int mt : q.bounds().m)
        if (mt != 1) throw error("position_functions: requires all-ones bounds");
    std::vector<int> f(q.length());
    f[0] = 0;
    for (int t = 1; t < q.length(); ++t) f[t] = q.step(t).lambda;
    return f;
}

}  // namespace polylog
