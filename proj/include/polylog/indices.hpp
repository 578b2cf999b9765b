#pragma once

#include <compare>
#include <string>
#include <vector>

#include "polylog/errors.hpp"

namespace polylog {

/// Component bounds (m_1,...,m_n) of an index family. n = depth of the
/// family, K = m_1 + ... + m_n its total weight.
struct Bounds {
    std::vector<int> m;

    Bounds() = default;
    explicit Bounds(std::vector<int> mm);

    int depth() const { return static_cast<int>(m.size()); }
    int weight() const;

    bool operator==(const Bounds&) const = default;
    std::string str() const;
};

/// Bounds (mmax,...,mmax) with mmax = max m_t; the domain on which the
/// transposition functions act.
Bounds padded_bounds(const Bounds& b);

/// Integer tuple (i_1,...,i_n) with 0 <= i_t <= m_t. Positions are 0-based
/// throughout the code; rendering converts to 1-based names.
class MultiIndex {
  public:
    MultiIndex(std::vector<int> comps, Bounds bounds);

    static MultiIndex zero(const Bounds& b);
    static MultiIndex top(const Bounds& b);
    static MultiIndex unit(const Bounds& b, int s);

    const Bounds& bounds() const { return bounds_; }
    const std::vector<int>& components() const { return comps_; }
    int size() const { return static_cast<int>(comps_.size()); }
    int operator[](int t) const { return comps_[t]; }

    bool operator==(const MultiIndex& o) const { return comps_ == o.comps_; }
    std::string str() const;

  private:
    std::vector<int> comps_;
    Bounds bounds_;
};

int weight(const MultiIndex& i);
int depth(const MultiIndex& i);

/// 0-based positions t with i_t != 0, ascending.
std::vector<int> nonzero_positions(const MultiIndex& i);

enum class Ordering { LT, EQ, GT };

/// Total order: weight first, then descending-sorted component multisets
/// compared entrywise, then plain left-to-right lexicographic.
Ordering complete_cmp(const MultiIndex& i, const MultiIndex& j);

/// j <= i componentwise.
bool partial_leq(const MultiIndex& j, const MultiIndex& i);

/// Collapse j (requires j componentwise <= i) onto the nonzero slots of i;
/// result lives over Bounds(i_{tau_1},...,i_{tau_k}).
MultiIndex retract(const MultiIndex& i, const MultiIndex& j);

MultiIndex add_unit(const MultiIndex& i, int s);
MultiIndex sub_unit(const MultiIndex& i, int s);

/// Top index with the s-th component zeroed.
MultiIndex v_index(const Bounds& b, int s);

/// Per-step combinatorial data of a queue entry j_r = j_{r-1} + u_s.
/// All positions 0-based; `a` is the first nonzero position after s in j_r,
/// or n when there is none. `lambda` is the 0-based rank of s among the
/// nonzero positions of j_r, `l` the depth of j_r.
struct QueueStep {
    int s = 0;
    int t_s = 0;
    int a = 0;
    int lambda = 0;
    int l = 0;
};

/// Maximal chain j_1, ..., j_K with |j_t| = t and one unit increment per
/// step. Stored via its increment positions (s_1,...,s_K).
class IndexQueue {
  public:
    IndexQueue(Bounds bounds, std::vector<int> steps);

    const Bounds& bounds() const { return bounds_; }
    int length() const { return static_cast<int>(steps_.size()); }
    const std::vector<int>& step_positions() const { return steps_; }

    /// r-th entry j_{r+1} for 0-based r in [0,K).
    const MultiIndex& entry(int r) const { return entries_[r]; }
    const QueueStep& step(int r) const { return step_data_[r]; }

    /// Transposition of the r-th step (0-based r >= 1 in the code; the
    /// chain's first entry has no predecessor): identity when delta = 0,
    /// t_s > 1 or a = n; otherwise swaps positions s and a.
    MultiIndex transpose(const MultiIndex& i, int r, int delta) const;

    std::string str() const;

  private:
    Bounds bounds_;
    std::vector<int> steps_;
    std::vector<MultiIndex> entries_;
    std::vector<QueueStep> step_data_;
};

/// All queues of the family, ordered lexicographically by their increment
/// position sequences. Count is K!/(m_1! ... m_n!).
std::vector<IndexQueue> enumerate_queues(const Bounds& b);

/// Multiple-logarithm position functions (all m_t = 1): f^1 = 0 and f^t =
/// the 0-based slot of the unique zero of retract(j_t, j_{t-1}), i.e. the
/// rank of the step position among the nonzero positions of j_t.
std::vector<int> position_functions(const IndexQueue& q);

}  // namespace polylog
