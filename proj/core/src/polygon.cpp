#include "npoly/polygon.hpp"

#include <string>

namespace npoly {

namespace {

void require_same_length(const ESequence& e, const RSequence& r)
{
    if (e.size() != r.size()) {
        throw Error(ErrorKind::InvalidInstance,
                    "length mismatch: e has " + std::to_string(e.size()) + " entries, r has " +
                        std::to_string(r.size()));
    }
    if (e.size() < 2) {
        throw Error(ErrorKind::InvalidInstance, "a chain needs at least two points");
    }
}

Rational segment_cost(const ESequence& e, const RSequence& r, int a, int b)
{
    return (r(a) - r(b)) * Rational(e(a) + e(b));
}

// Depth-first search over chains in lexicographic order; only strict
// improvements replace the incumbent, so the first minimum found wins ties.
class ChainSearch {
public:
    ChainSearch(const ESequence& e, const RSequence& r)
        : e_(e), r_(r), n_(e.size()), costs_(static_cast<std::size_t>(n_) + 1)
    {
        path_.reserve(static_cast<std::size_t>(n_));
    }

    ChainMinimum run()
    {
        path_.push_back(1);
        costs_[0] = 0;
        extend(1, 0);
        return {best_, Chain{best_path_}};
    }

private:
    void extend(int last, std::size_t depth)
    {
        Rational& cost = costs_[depth + 1];
        for (int next = last + 1; next <= n_; ++next) {
            cost = r_(last) - r_(next);
            cost *= e_(last) + e_(next);
            cost += costs_[depth];
            path_.push_back(next);
            if (next == n_) {
                if (!found_ || cost < best_) {
                    found_ = true;
                    best_ = cost;
                    best_path_ = path_;
                }
            } else {
                extend(next, depth + 1);
            }
            path_.pop_back();
        }
    }

    const ESequence& e_;
    const RSequence& r_;
    int n_;
    std::vector<Rational> costs_;
    std::vector<int> path_;
    bool found_ = false;
    Rational best_;
    std::vector<int> best_path_;
};

// Sign of the turn o -> a -> b; positive is counter-clockwise.
int turn(const ESequence& e, const RSequence& r, int o, int a, int b)
{
    const Rational cross = Rational(e(a) - e(o)) * (r(b) - r(o)) -
                           (r(a) - r(o)) * Rational(e(b) - e(o));
    return sgn(cross);
}

} // namespace

Verdict validate_chain(const Chain& chain, int n)
{
    const auto& idx = chain.indices;
    if (idx.size() < 2) return Verdict::reject("chain needs at least two indices");
    if (idx.front() != 1) return Verdict::reject("chain must start at index 1", 1);
    if (idx.back() != n) {
        return Verdict::reject("chain must end at index N = " + std::to_string(n),
                               static_cast<int>(idx.size()));
    }
    for (std::size_t k = 1; k < idx.size(); ++k) {
        if (idx[k] <= idx[k - 1]) {
            return Verdict::reject("chain indices must strictly increase",
                                   static_cast<int>(k + 1));
        }
    }
    return Verdict::accept();
}

Rational chain_cost(const ESequence& e, const RSequence& r, const Chain& chain)
{
    require_same_length(e, r);
    require(validate_chain(chain, e.size()), ErrorKind::InvalidChain);

    Rational total = 0;
    for (std::size_t k = 0; k + 1 < chain.indices.size(); ++k) {
        total += segment_cost(e, r, chain.indices[k], chain.indices[k + 1]);
    }
    return total;
}

ChainMinimum min_chain_bruteforce(const ESequence& e, const RSequence& r, int cap)
{
    require_same_length(e, r);
    if (e.size() > cap) {
        throw Error(ErrorKind::CapExceeded,
                    "brute-force chain search needs N <= " + std::to_string(cap) + " (got N = " +
                        std::to_string(e.size()) + ")");
    }
    return ChainSearch(e, r).run();
}

ChainMinimum min_chain_hull(const ESequence& e, const RSequence& r)
{
    require_same_length(e, r);
    require(check_e_sequence(e), ErrorKind::InvalidInstance);
    require(check_r_sequence(r), ErrorKind::InvalidInstance);

    const int n = e.size();

    // Point 1, then the last (lowest) index of every run of equal e.
    std::vector<int> candidates{1};
    for (int i = 1; i <= n; ++i) {
        const bool run_ends = i == n || e(i + 1) != e(i);
        if (run_ends && i != 1) candidates.push_back(i);
    }

    // When e_1 = e_2 = 0 the chain drops vertically from point 1 to the
    // lowest point at e = 0; that vertex is pinned below the scan.
    const std::size_t base = e(2) == e(1) ? 1 : 0;

    std::vector<int> hull(candidates.begin(), candidates.begin() + static_cast<long>(base) + 1);
    for (std::size_t k = base + 1; k < candidates.size(); ++k) {
        const int p = candidates[k];
        while (hull.size() >= base + 2 &&
               turn(e, r, hull[hull.size() - 2], hull.back(), p) <= 0) {
            hull.pop_back();
        }
        hull.push_back(p);
    }

    Chain witness{std::move(hull)};
    Rational value = chain_cost(e, r, witness);
    return {std::move(value), std::move(witness)};
}

} // namespace npoly
