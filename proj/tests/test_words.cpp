#include <doctest.h>

#include "flexion/words.hpp"

using namespace flexion;

namespace {

// Recursive stuffle per the defining rule, used as the independent oracle
// for the surjection-based construction.
WordSum stuffle_recursive(const Word& u, const Word& v) {
    WordSum out;
    if (u.empty()) {
        out[v] = 1;
        return out;
    }
    if (v.empty()) {
        out[u] = 1;
        return out;
    }
    Word ut(u.begin() + 1, u.end()), vt(v.begin() + 1, v.end());
    auto prepend = [&out](int letter, const WordSum& tail, long scale) {
        for (auto& [w, m] : tail) {
            Word nw;
            nw.reserve(w.size() + 1);
            nw.push_back(letter);
            nw.insert(nw.end(), w.begin(), w.end());
            out[nw] += m * scale;
        }
    };
    prepend(u[0], stuffle_recursive(ut, v), 1);
    prepend(v[0], stuffle_recursive(u, vt), 1);
    prepend(u[0] + v[0], stuffle_recursive(ut, vt), 1);
    return out;
}

long total(const WordSum& s) {
    long t = 0;
    for (auto& [w, m] : s) t += m;
    return t;
}

}  // namespace

TEST_CASE("shuffle examples") {
    // sh((a,b),(c,d)) -> six distinct words
    WordSum s = shuffle_set({1, 2}, {3, 4});
    CHECK(s.size() == 6);
    CHECK(total(s) == 6);
    CHECK(s[{1, 2, 3, 4}] == 1);
    CHECK(s[{1, 3, 2, 4}] == 1);
    CHECK(s[{1, 3, 4, 2}] == 1);
    CHECK(s[{3, 1, 2, 4}] == 1);
    CHECK(s[{3, 1, 4, 2}] == 1);
    CHECK(s[{3, 4, 1, 2}] == 1);

    // sh((x,y),(x,y)) = 4 xxyy + 2 xyxy with x=0, y=1
    WordSum t = shuffle_set({0, 1}, {0, 1});
    CHECK(t[{0, 0, 1, 1}] == 4);
    CHECK(t[{0, 1, 0, 1}] == 2);
    CHECK(total(t) == 6);

    // unit
    WordSum u = shuffle_set({5, 6, 7}, {});
    CHECK(u.size() == 1);
    CHECK(u[{5, 6, 7}] == 1);
}

TEST_CASE("shuffle count") {
    auto count = [](int a, int b) {
        Word u, v;
        for (int i = 0; i < a; ++i) u.push_back(i);
        for (int j = 0; j < b; ++j) v.push_back(100 + j);
        return total(shuffle_set(u, v));
    };
    CHECK(count(2, 3) == 10);
    CHECK(count(3, 3) == 20);
    CHECK(count(4, 2) == 15);
}

TEST_CASE("stuffle surjection counts") {
    CHECK(stuffle_surjections(1, 1).size() == 3);
    CHECK(stuffle_surjections(1, 2).size() == 5);
    CHECK(stuffle_surjections(2, 2).size() == 13);
    // Deterministic order: lexicographic by assignment vector.
    auto s = stuffle_surjections(1, 1);
    CHECK(s[0].assignment == std::vector<int>{1, 1});
    CHECK(s[1].assignment == std::vector<int>{1, 2});
    CHECK(s[2].assignment == std::vector<int>{2, 1});
}

TEST_CASE("stuffle matches paper examples") {
    auto add = [](int a, int b) { return a + b; };
    // st((y1),(y2,y3)) with letters as indices
    WordSum s = stuffle_set({1}, {2, 3}, add);
    CHECK(s[{1, 2, 3}] == 1);
    CHECK(s[{2, 1, 3}] == 1);
    CHECK(s[{2, 3, 1}] == 1);
    CHECK(s[{3, 3}] == 1);
    CHECK(s[{2, 4}] == 1);
    CHECK(total(s) == 5);

    // st((2,1),(2)) = 2(2,2,1)+(2,1,2)+(4,1)+(2,3)
    WordSum t = stuffle_set({2, 1}, {2}, add);
    CHECK(t[{2, 2, 1}] == 2);
    CHECK(t[{2, 1, 2}] == 1);
    CHECK(t[{4, 1}] == 1);
    CHECK(t[{2, 3}] == 1);
    CHECK(total(t) == 5);

    // unit
    WordSum u = stuffle_set({9, 8}, {}, add);
    CHECK(u.size() == 1);
    CHECK(u[{9, 8}] == 1);
}

TEST_CASE("surjection-based stuffle equals recursive stuffle") {
    auto add = [](int a, int b) { return a + b; };
    for (int r = 0; r <= 3; ++r) {
        for (int s = 0; s + r <= 6 && s <= 3; ++s) {
            Word u, v;
            for (int i = 0; i < r; ++i) u.push_back(1 << i);
            for (int j = 0; j < s; ++j) v.push_back(1 << (j + 3));
            CHECK(stuffle_set(u, v, add) == stuffle_recursive(u, v));
        }
    }
}

TEST_CASE("shuffle and stuffle commutativity/associativity on sums") {
    auto add = [](int a, int b) { return a + b; };
    Word a{1, 2}, b{4}, c{8, 16};
    CHECK(shuffle_set(a, b) == shuffle_set(b, a));
    CHECK(stuffle_set(a, b, add) == stuffle_set(b, a, add));
    // associativity via formal sums
    auto sh_sum = [](const WordSum& s, const Word& w) {
        WordSum out;
        for (auto& [x, m] : s)
            for (auto& [y, k] : shuffle_set(x, w)) out[y] += m * k;
        return out;
    };
    CHECK(sh_sum(shuffle_set(a, b), c) == sh_sum(shuffle_set(b, c), a));
    auto st_sum = [&add](const WordSum& s, const Word& w) {
        WordSum out;
        for (auto& [x, m] : s)
            for (auto& [y, k] : stuffle_set(x, w, add)) out[y] += m * k;
        return out;
    };
    CHECK(st_sum(stuffle_set(a, b, add), c) == st_sum(stuffle_set(b, c, add), a));
}
