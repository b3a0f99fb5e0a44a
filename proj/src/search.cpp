// Exact searches over good orderings.
//
// All searches walk the same tree: a node is a prefix disk, its children are
// the faces that legally extend it. A profile position becomes a local
// maximum exactly when a growing step is followed by a shrinking one, so the
// width can be accumulated along the path.

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "thinsphere/shelling.hpp"

namespace thinsphere {

namespace {

using Step = ShellingState::Step;

WidthList sorted_desc(WidthList w) {
    std::sort(w.rbegin(), w.rend());
    return w;
}

// Face set plus the direction of the last step; this determines every
// possible continuation of the search.
struct StateKey {
    std::vector<std::uint64_t> words;
    int dir = 0;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(k.dir + 2);
        for (std::uint64_t w : k.words) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

class Walker {
public:
    explicit Walker(const Triangulation& t)
        : t_(t), n_(t.num_faces()), st_(t), words_((t.num_faces() + 63) / 64, 0) {}

    // Records a local maximum when f turns the walk from climbing to descending.
    void push(FaceId f) {
        const int before = st_.boundary_length();
        const Step s = st_.push(f);
        const bool peak = dir_ > 0 && s == Step::Shrink;
        peaks_.push_back(peak);
        if (peak) maxima_.push_back(before);
        dirs_.push_back(dir_);
        dir_ = (s == Step::Shrink || s == Step::Close) ? -1 : +1;
        words_[f / 64] ^= std::uint64_t{1} << (f % 64);
    }

    void pop() {
        const FaceId f = st_.faces().back();
        words_[f / 64] ^= std::uint64_t{1} << (f % 64);
        st_.pop();
        if (peaks_.back()) maxima_.pop_back();
        peaks_.pop_back();
        dir_ = dirs_.back();
        dirs_.pop_back();
    }

    // Completed maxima plus the pending peak when currently climbing: any
    // completion's width compares at least this large.
    WidthList lower_bound() const {
        WidthList lb = maxima_;
        if (dir_ > 0) lb.push_back(st_.boundary_length());
        return sorted_desc(std::move(lb));
    }

    WidthList width() const { return sorted_desc(maxima_); }
    StateKey key() const { return {words_, dir_}; }
    bool complete() const { return st_.size() == n_; }
    int dir() const { return dir_; }

    const Triangulation& t_;
    const int n_;
    ShellingState st_;

private:
    std::vector<std::uint64_t> words_;
    WidthList maxima_;
    std::vector<char> peaks_;
    std::vector<int> dirs_;
    int dir_ = 0;
};

void require_bound(const Triangulation& t, const SearchOptions& options) {
    if (t.num_faces() > options.bound) throw BoundExceeded(t.num_faces(), options.bound);
}

// Plain depth-first enumeration in face-index order; a strictly better width
// replaces the incumbent, so the lexicographically lowest optimum survives.
struct ExhaustiveSearch {
    Walker w;
    std::optional<WidthList> best;
    Ordering best_order;

    void run() {
        if (w.complete()) {
            WidthList cur = w.width();
            if (!best || cur < *best) {
                best = std::move(cur);
                best_order = w.st_.faces();
            }
            return;
        }
        for (FaceId f = 0; f < w.n_; ++f) {
            if (w.st_.classify(f) == Step::Invalid) continue;
            w.push(f);
            run();
            w.pop();
        }
    }
};

struct CollectThin {
    Walker w;
    WidthList target;
    std::size_t limit;
    std::vector<Ordering> found;

    void run() {
        if (found.size() >= limit) return;
        if (w.complete()) {
            if (w.width() == target) found.push_back(w.st_.faces());
            return;
        }
        if (w.lower_bound() > target) return;
        for (FaceId f = 0; f < w.n_; ++f) {
            if (w.st_.classify(f) == Step::Invalid) continue;
            w.push(f);
            run();
            w.pop();
        }
    }
};

struct BranchAndBound {
    Walker w;
    std::optional<WidthList> best;
    Ordering best_order;
    std::unordered_map<StateKey, WidthList, StateKeyHash> seen;

    void run() {
        if (w.complete()) {
            WidthList cur = w.width();
            if (!best || cur < *best) {
                best = std::move(cur);
                best_order = w.st_.faces();
            }
            return;
        }
        if (best && w.lower_bound() >= *best) return;

        // A prefix reached before with no wider completed maxima dominates this one.
        WidthList prefix = w.width();
        auto [it, fresh] = seen.try_emplace(w.key(), prefix);
        if (!fresh) {
            if (it->second <= prefix) return;
            it->second = std::move(prefix);
        }

        std::vector<std::pair<int, FaceId>> children;
        for (FaceId f = 0; f < w.n_; ++f) {
            const Step s = w.st_.classify(f);
            if (s == Step::Invalid) continue;
            const int len = w.st_.boundary_length();
            const int after = s == Step::First ? 3 : s == Step::Grow ? len + 1 : s == Step::Shrink ? len - 1 : 0;
            children.emplace_back(after, f);
        }
        std::sort(children.begin(), children.end());
        for (const auto& [after, f] : children) {
            w.push(f);
            run();
            w.pop();
        }
    }
};

struct BridgeSearch {
    Walker w;
    std::unordered_set<StateKey, StateKeyHash> dead;

    bool run() {
        if (w.complete()) return true;
        const StateKey key = w.key();
        if (dead.count(key)) return false;
        for (FaceId f = 0; f < w.n_; ++f) {
            const Step s = w.st_.classify(f);
            if (s == Step::Invalid) continue;
            if (w.dir() < 0 && s == Step::Grow) continue;  // a second climb means a minimum
            w.push(f);
            if (run()) return true;
            w.pop();
        }
        dead.insert(key);
        return false;
    }
};

ThinResult finish(const Triangulation& t, Ordering o) {
    ThinResult r;
    r.profile = profile(t, o);
    r.width = width_of_profile(r.profile);
    r.ordering = std::move(o);
    return r;
}

}  // namespace

ThinResult thin_position(const Triangulation& t, Strategy strategy, const SearchOptions& options) {
    t.require_sphere();
    if (strategy == Strategy::Exhaustive) {
        require_bound(t, options);
        ExhaustiveSearch s{Walker(t), std::nullopt, {}};
        s.run();
        return finish(t, std::move(s.best_order));
    }
    BranchAndBound s{Walker(t), std::nullopt, {}, {}};
    s.run();
    return finish(t, std::move(s.best_order));
}

std::vector<Ordering> all_thin_orderings(const Triangulation& t, const SearchOptions& options, std::size_t limit) {
    const ThinResult best = thin_position(t, Strategy::Exhaustive, options);
    CollectThin c{Walker(t), best.width, limit, {}};
    c.run();
    return c.found;
}

std::optional<Ordering> find_bridge_ordering(const Triangulation& t) {
    t.require_sphere();
    BridgeSearch s{Walker(t), {}};
    if (!s.run()) return std::nullopt;
    return s.w.st_.faces();
}

}  // namespace thinsphere
