#include "flexion/words.hpp"

#include <algorithm>

namespace flexion {

WordSum shuffle_set(const Word& u, const Word& v) {
    WordSum out;
    // Iterative: extend partial words letter by letter.
    struct State {
        std::size_t i, j;
        Word w;
    };
    std::vector<State> stack{{0, 0, {}}};
    while (!stack.empty()) {
        State s = std::move(stack.back());
        stack.pop_back();
        if (s.i == u.size() && s.j == v.size()) {
            out[s.w] += 1;
            continue;
        }
        if (s.i < u.size()) {
            State t = s;
            t.w.push_back(u[t.i++]);
            stack.push_back(std::move(t));
        }
        if (s.j < v.size()) {
            State t = std::move(s);
            t.w.push_back(v[t.j++]);
            stack.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<Word> shuffle_patterns(int r, int s) {
    Word u(static_cast<std::size_t>(r)), v(static_cast<std::size_t>(s));
    for (int i = 0; i < r; ++i) u[static_cast<std::size_t>(i)] = i + 1;
    for (int j = 0; j < s; ++j) v[static_cast<std::size_t>(j)] = r + j + 1;
    std::vector<Word> out;
    for (auto& [w, mult] : shuffle_set(u, v))
        for (long k = 0; k < mult; ++k) out.push_back(w);
    return out;
}

std::vector<std::pair<int, int>> StuffleSurjection::collapsed_pairs(int r) const {
    std::vector<std::pair<int, int>> out;
    const int total = static_cast<int>(assignment.size());
    for (int t = 1; t <= target_size; ++t) {
        int first = -1, second = -1;
        for (int p = 0; p < total; ++p) {
            if (assignment[static_cast<std::size_t>(p)] != t) continue;
            (first < 0 ? first : second) = p;
        }
        if (second >= 0) {
            // Invariant: one index per block.
            int k = std::min(first, second), l = std::max(first, second);
            (void)r;
            out.push_back({k, l});
        }
    }
    return out;
}

static void enumerate_surjections(int r, int s, int i, int j, std::vector<int>& left,
                                  std::vector<int>& right, int used,
                                  std::vector<StuffleSurjection>& out) {
    if (i == r && j == s) {
        StuffleSurjection sj;
        sj.target_size = used;
        sj.assignment = left;
        sj.assignment.insert(sj.assignment.end(), right.begin(), right.end());
        out.push_back(std::move(sj));
        return;
    }
    if (i < r) {
        left.push_back(used + 1);
        enumerate_surjections(r, s, i + 1, j, left, right, used + 1, out);
        left.pop_back();
    }
    if (i < r && j < s) {
        left.push_back(used + 1);
        right.push_back(used + 1);
        enumerate_surjections(r, s, i + 1, j + 1, left, right, used + 1, out);
        left.pop_back();
        right.pop_back();
    }
    if (j < s) {
        right.push_back(used + 1);
        enumerate_surjections(r, s, i, j + 1, left, right, used + 1, out);
        right.pop_back();
    }
}

std::vector<StuffleSurjection> stuffle_surjections(int r, int s) {
    std::vector<StuffleSurjection> out;
    std::vector<int> left, right;
    enumerate_surjections(r, s, 0, 0, left, right, 0, out);
    std::sort(out.begin(), out.end(), [](const StuffleSurjection& a, const StuffleSurjection& b) {
        return a.assignment < b.assignment;
    });
    return out;
}

WordSum stuffle_set(const Word& u, const Word& v,
                    const std::function<int(int, int)>& add_rule) {
    WordSum out;
    const int r = static_cast<int>(u.size()), s = static_cast<int>(v.size());
    for (auto& sj : stuffle_surjections(r, s)) {
        Word w(static_cast<std::size_t>(sj.target_size), 0);
        std::vector<int> seen(static_cast<std::size_t>(sj.target_size), 0);
        for (int p = 0; p < r + s; ++p) {
            int t = sj.assignment[static_cast<std::size_t>(p)] - 1;
            int letter = p < r ? u[static_cast<std::size_t>(p)]
                               : v[static_cast<std::size_t>(p - r)];
            auto ti = static_cast<std::size_t>(t);
            w[ti] = seen[ti] ? add_rule(w[ti], letter) : letter;
            seen[ti] = 1;
        }
        out[w] += 1;
    }
    return out;
}

}  // namespace flexion
