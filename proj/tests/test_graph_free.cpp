#include <doctest.h>

#include <algorithm>
#include <random>

#include "harness.hpp"
#include "stardil/graph_free.hpp"

using namespace stardil;

namespace {

const DirectedGraph kTwoLoops{1, {{0, 0}, {0, 0}}};
const DirectedGraph kOneLoop{1, {{0, 0}}};
// Two vertices, edges 0 -> 1 and 1 -> 0 (edge (source, range)).
const DirectedGraph kTwoCycle{2, {{0, 1}, {1, 0}}};

int count_length(const TruncatedFreeTable& t, int len) {
    int n = 0;
    for (const Word& w : t.word_of)
        if (w.length() == len) ++n;
    return n;
}

// Independent path count: entries of the adjacency-matrix power.
long paths_of_length(const DirectedGraph& g, int len) {
    const int n = g.n_vertices;
    std::vector<long> a(n * n, 0), cur(n * n, 0);
    for (auto [s, r] : g.edges) a[r * n + s] += 1;  // r <- s
    for (int i = 0; i < n; ++i) cur[i * n + i] = 1;
    for (int k = 0; k < len; ++k) {
        std::vector<long> next(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int m = 0; m < n; ++m)
                    next[i * n + j] += a[i * n + m] * cur[m * n + j];
        cur = next;
    }
    long total = 0;
    for (long v : cur) total += v;
    return total;
}

}  // namespace

TEST_CASE("free semigroupoid word counts on frozen examples") {
    CHECK(free_semigroupoid(kTwoLoops, 2, true).table.n_elements == 7);   // 1+2+4
    CHECK(free_semigroupoid(kTwoLoops, 2, false).table.n_elements == 6);  // 2+4
    CHECK(free_semigroupoid(kTwoCycle, 3, true).table.n_elements == 8);   // 2+2+2+2
    CHECK(free_star_semigroupoid(kTwoLoops, 2).table.n_elements == 21);   // 1+4+16
    CHECK(free_star_semigroupoid(kOneLoop, 1).table.n_elements == 3);     // 1+2
    CHECK(free_groupoid(kOneLoop, 2).table.n_elements == 5);  // e, f, f', ff, f'f'
}

TEST_CASE("layer sizes match adjacency-matrix powers") {
    for (const DirectedGraph* g : {&kTwoLoops, &kTwoCycle}) {
        TruncatedFreeTable t = free_semigroupoid(*g, 4, true);
        for (int len = 1; len <= 4; ++len)
            CHECK(count_length(t, len) == paths_of_length(*g, len));
        CHECK(count_length(t, 0) == g->n_vertices);
    }
}

TEST_CASE("canonical order is by length then lexicographic on letters") {
    TruncatedFreeTable t = free_semigroupoid(kTwoLoops, 3, true);
    for (size_t i = 1; i < t.word_of.size(); ++i) {
        const Word& a = t.word_of[i - 1];
        const Word& b = t.word_of[i];
        const bool ordered =
            a.length() < b.length() ||
            (a.length() == b.length() &&
             std::lexicographical_compare(a.letters.begin(), a.letters.end(),
                                          b.letters.begin(), b.letters.end()));
        CHECK(ordered);
    }
}

TEST_CASE("words compose head-to-tail and products concatenate") {
    TruncatedFreeTable t = free_semigroupoid(kTwoCycle, 4, true);
    const auto& tab = t.table;
    for (const Word& w : t.word_of) {
        if (w.length() == 0) continue;
        CHECK(t.letter_ends[w.letters.back()].first == w.source);
        CHECK(t.letter_ends[w.letters.front()].second == w.range);
        for (int i = 0; i + 1 < w.length(); ++i)
            CHECK(t.letter_ends[w.letters[i]].first ==
                  t.letter_ends[w.letters[i + 1]].second);
    }
    for (int a = 0; a < tab.n_elements; ++a)
        for (int b = 0; b < tab.n_elements; ++b) {
            if (tab.src[a] != tab.tgt[b]) {
                CHECK(tab.product(a, b) == -1);
                continue;
            }
            const int ab = tab.product(a, b);
            if (ab < 0) {
                CHECK(t.word_of[a].length() + t.word_of[b].length() > t.l_max);
                continue;
            }
            std::vector<int> cat = t.word_of[a].letters;
            cat.insert(cat.end(), t.word_of[b].letters.begin(),
                       t.word_of[b].letters.end());
            CHECK(t.word_of[ab].letters == cat);
        }
}

TEST_CASE("truncation flag is set exactly when a product overflows") {
    CHECK(free_semigroupoid(kTwoLoops, 2, true).table.truncated);
    // l_max 1 with units only: unit.unit and unit.letter all fit, but
    // letter.letter overflows.
    CHECK(free_semigroupoid(kTwoLoops, 1, true).table.truncated);
    // A graph with no composable pair of edges never overflows.
    DirectedGraph path{2, {{0, 1}}};
    TruncatedFreeTable t = free_semigroupoid(path, 1, true);
    CHECK(!t.table.truncated);
    CHECK(validate(t.table).ok());
}

TEST_CASE("truncated tables pass validation") {
    CHECK(validate(free_semigroupoid(kTwoLoops, 3, true).table).ok());
    CHECK(validate(free_semigroupoid(kTwoLoops, 3, false).table).ok());
    CHECK(validate(free_star_semigroupoid(kTwoLoops, 2).table).ok());
    CHECK(validate(free_groupoid(kTwoLoops, 3).table).ok());
    CHECK(validate(free_groupoid(kTwoCycle, 4).table).ok());
}

TEST_CASE("starred flavor: star reverses and swaps companions, no cancellation") {
    TruncatedFreeTable t = free_star_semigroupoid(kTwoLoops, 2);
    const auto& tab = t.table;
    REQUIRE(tab.has_star());
    const int n_edges = static_cast<int>(kTwoLoops.edges.size());
    for (int a = 0; a < tab.n_elements; ++a) {
        const Word& w = t.word_of[a];
        const Word& ws = t.word_of[tab.star[a]];
        REQUIRE(ws.length() == w.length());
        for (int i = 0; i < w.length(); ++i) {
            const int l = w.letters[w.length() - 1 - i];
            CHECK(ws.letters[i] == (l < n_edges ? l + n_edges : l - n_edges));
        }
    }
    // f* f has length 2: no cancellation in the starred flavor.
    const int f = tab.product(tab.star[1 + 0], 1 + 0) >= 0
                      ? tab.product(tab.star[1 + 0], 1 + 0)
                      : -1;
    REQUIRE(f >= 0);
    CHECK(t.word_of[f].length() == 2);
}

TEST_CASE("free groupoid: inverses cancel and the table is a groupoid") {
    TruncatedFreeTable t = free_groupoid(kTwoCycle, 4);
    const auto& tab = t.table;
    REQUIRE(tab.has_star());
    REQUIRE(tab.has_units());
    for (int a = 0; a < tab.n_elements; ++a) {
        CHECK(tab.product(a, tab.star[a]) == tab.units[tab.tgt[a]]);
        CHECK(tab.product(tab.star[a], a) == tab.units[tab.src[a]]);
    }
    CHECK(classify(tab).groupoid);
}

TEST_CASE("free groupoid words are reduced") {
    TruncatedFreeTable t = free_groupoid(kTwoLoops, 3);
    const int n_edges = static_cast<int>(kTwoLoops.edges.size());
    for (const Word& w : t.word_of)
        CHECK(reduce_word(w.letters, n_edges) == w.letters);
    // Layer counts for the free group on 2 generators: 1, 4, 12, 36.
    CHECK(count_length(t, 0) == 1);
    CHECK(count_length(t, 1) == 4);
    CHECK(count_length(t, 2) == 12);
    CHECK(count_length(t, 3) == 36);
}

TEST_CASE("reduce_word is confluent under randomized reduction order") {
    // Randomized independent reducer: repeatedly cancel a random adjacent
    // inverse pair until none remains.
    auto random_reduce = [](std::vector<int> w, int n_edges, harness::Rng& rng) {
        for (;;) {
            std::vector<int> sites;
            for (size_t i = 0; i + 1 < w.size(); ++i) {
                const int a = w[i], b = w[i + 1];
                if (a == b + n_edges || b == a + n_edges)
                    sites.push_back(static_cast<int>(i));
            }
            if (sites.empty()) return w;
            const int at = sites[rng() % sites.size()];
            w.erase(w.begin() + at, w.begin() + at + 2);
        }
    };
    harness::Rng rng(99);
    const int n_edges = 2;
    for (int trial = 0; trial < 200; ++trial) {
        const int len = static_cast<int>(rng() % 12);
        std::vector<int> w(len);
        for (int& l : w) l = static_cast<int>(rng() % (2 * n_edges));
        CHECK(reduce_word(w, n_edges) == random_reduce(w, n_edges, rng));
    }
}

TEST_CASE("free constructions are left cancellative") {
    CHECK(classify(free_semigroupoid(kTwoLoops, 3, true).table).left_cancellative);
    CHECK(classify(free_star_semigroupoid(kTwoLoops, 2).table).left_cancellative);
    CHECK(classify(free_groupoid(kTwoLoops, 3).table).left_cancellative);
}

TEST_CASE("unit words are empty words at each vertex") {
    TruncatedFreeTable t = free_semigroupoid(kTwoCycle, 2, true);
    REQUIRE(t.table.has_units());
    for (int s = 0; s < t.table.n_objects; ++s) {
        const Word& w = t.word_of[t.table.units[s]];
        CHECK(w.length() == 0);
        CHECK(w.source == s);
        CHECK(w.range == s);
    }
}
