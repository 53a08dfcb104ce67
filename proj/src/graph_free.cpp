#include "stardil/graph_free.hpp"

#include <map>

namespace stardil {

namespace {

struct Alphabet {
    int n_letters = 0;
    std::vector<int> s, r;  // source/range per letter
};

Alphabet plain_alphabet(const DirectedGraph& g) {
    Alphabet a;
    a.n_letters = static_cast<int>(g.edges.size());
    for (auto [src, rng] : g.edges) {
        a.s.push_back(src);
        a.r.push_back(rng);
    }
    return a;
}

Alphabet doubled_alphabet(const DirectedGraph& g) {
    Alphabet a = plain_alphabet(g);
    const int e = a.n_letters;
    for (int i = 0; i < e; ++i) {
        a.s.push_back(a.r[i]);
        a.r.push_back(a.s[i]);
    }
    a.n_letters = 2 * e;
    return a;
}

int companion(int letter, int n_edges) {
    return letter < n_edges ? letter + n_edges : letter - n_edges;
}

// Enumerates composable (and, for the groupoid flavor, reduced) letter
// sequences in length-then-lex order and assembles the composition table.
TruncatedFreeTable build(const DirectedGraph& g, const Alphabet& alpha, int l_max,
                         bool with_units, FreeFlavor flavor) {
    const int n_edges = static_cast<int>(g.edges.size());
    const bool reduce = flavor == FreeFlavor::grpd;

    TruncatedFreeTable out;
    out.l_max = l_max;
    out.flavor = flavor;
    out.n_letters = alpha.n_letters;
    for (int l = 0; l < alpha.n_letters; ++l)
        out.letter_ends.emplace_back(alpha.s[l], alpha.r[l]);

    std::vector<Word> words;
    if (with_units)
        for (int v = 0; v < g.n_vertices; ++v) words.push_back({{}, v, v});

    // Grow length layer by layer; within a layer, extending each length-(k-1)
    // word (already lex sorted) on the right would not give lex order, so we
    // generate layer k by extending on the LEFT: the sequences (l0, rest)
    // ordered by l0 first are exactly the lex order.
    std::vector<Word> prev;  // layer k-1, lex sorted
    for (int v = 0; v < g.n_vertices; ++v) prev.push_back({{}, v, v});
    for (int k = 1; k <= l_max; ++k) {
        std::vector<Word> layer;
        for (int l0 = 0; l0 < alpha.n_letters; ++l0) {
            for (const Word& w : prev) {
                if (w.range != alpha.s[l0]) continue;  // need s(l0) = r(rest)
                if (reduce && !w.letters.empty() &&
                    w.letters.front() == companion(l0, n_edges))
                    continue;  // not reduced
                Word nw;
                nw.letters.reserve(k);
                nw.letters.push_back(l0);
                nw.letters.insert(nw.letters.end(), w.letters.begin(),
                                  w.letters.end());
                nw.source = w.letters.empty() ? alpha.s[l0] : w.source;
                nw.range = alpha.r[l0];
                layer.push_back(std::move(nw));
            }
        }
        // The double loop above emits layer k sorted by l0, then by the lex
        // rank of the remainder (prev is lex sorted): overall lex order.
        words.insert(words.end(), layer.begin(), layer.end());
        prev = std::move(layer);
    }

    SemigroupoidTable& t = out.table;
    t.n_objects = g.n_vertices;
    t.n_elements = static_cast<int>(words.size());
    std::map<std::pair<std::vector<int>, int>, int> id_of;
    for (int i = 0; i < t.n_elements; ++i) {
        const Word& w = words[i];
        t.src.push_back(w.source);
        t.tgt.push_back(w.range);
        id_of[{w.letters, w.source}] = i;
    }
    t.init_mul();
    bool overflow = false;
    for (int a = 0; a < t.n_elements; ++a) {
        for (int b = 0; b < t.n_elements; ++b) {
            if (words[a].source != words[b].range) continue;
            std::vector<int> cat = words[a].letters;
            cat.insert(cat.end(), words[b].letters.begin(), words[b].letters.end());
            if (reduce) cat = reduce_word(cat, n_edges);
            if (static_cast<int>(cat.size()) > l_max) {
                overflow = true;
                continue;
            }
            t.set_product(a, b, id_of.at({cat, words[b].source}));
        }
    }
    t.truncated = overflow;

    if (with_units) {
        t.units.resize(g.n_vertices);
        for (int v = 0; v < g.n_vertices; ++v)
            t.units[v] = id_of.at({{}, v});
    }
    if (flavor != FreeFlavor::plain) {
        t.star.resize(t.n_elements);
        for (int i = 0; i < t.n_elements; ++i) {
            std::vector<int> rev;
            for (auto it = words[i].letters.rbegin(); it != words[i].letters.rend(); ++it)
                rev.push_back(companion(*it, n_edges));
            t.star[i] = id_of.at({rev, words[i].range});
        }
    }
    out.word_of = std::move(words);
    return out;
}

}  // namespace

std::vector<int> reduce_word(const std::vector<int>& letters, int n_edges) {
    std::vector<int> stack;
    for (int l : letters) {
        if (!stack.empty() && stack.back() == companion(l, n_edges))
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return stack;
}

TruncatedFreeTable free_semigroupoid(const DirectedGraph& g, int l_max,
                                     bool with_units) {
    return build(g, plain_alphabet(g), l_max, with_units, FreeFlavor::plain);
}

TruncatedFreeTable free_star_semigroupoid(const DirectedGraph& g, int l_max) {
    return build(g, doubled_alphabet(g), l_max, true, FreeFlavor::starred);
}

TruncatedFreeTable free_groupoid(const DirectedGraph& g, int l_max) {
    return build(g, doubled_alphabet(g), l_max, true, FreeFlavor::grpd);
}

}  // namespace stardil
