#pragma once

#include <vector>

#include "stardil/sg_core.hpp"

namespace stardil {

struct DirectedGraph {
    int n_vertices = 0;
    // (source, range) per edge; parallel edges and loops allowed.
    std::vector<std::pair<int, int>> edges;
};

enum class FreeFlavor { plain, starred, grpd };

// A word over the letter alphabet of the construction.  Letters are stored
// outermost-first: the word [l0, l1, ..., lk] denotes the composition
// l0 . l1 . ... . lk, so s(l_i) = r(l_{i+1}).  Units are empty words.
struct Word {
    std::vector<int> letters;
    int source = 0;  // d of the word
    int range = 0;   // c of the word
    int length() const { return static_cast<int>(letters.size()); }
};

struct TruncatedFreeTable {
    SemigroupoidTable table;
    int l_max = 0;
    std::vector<Word> word_of;  // per element id, in canonical order
    FreeFlavor flavor = FreeFlavor::plain;
    // Letter alphabet metadata: for starred/groupoid flavors the alphabet is
    // the doubled edge set; letter e is edge e, letter n_edges + e its
    // companion (resp. inverse).
    int n_letters = 0;
    std::vector<std::pair<int, int>> letter_ends;  // (source, range) per letter
};

// Free semigroupoid of G truncated at length l_max: all paths of length
// <= l_max in canonical (length, then lex) order; products overflowing the
// bound are undefined and the table is marked truncated.
TruncatedFreeTable free_semigroupoid(const DirectedGraph& g, int l_max, bool with_units);

// Free *-semigroupoid: paths over the doubled edge set, star = letterwise
// reversal with letter/companion swap, no cancellation. Units always present.
TruncatedFreeTable free_star_semigroupoid(const DirectedGraph& g, int l_max);

// Free groupoid: reduced words over the doubled edge set with the
// cancellation rules f f^{-1} = e applied; products concatenate then reduce
// and are defined iff the reduced length stays within the bound.
TruncatedFreeTable free_groupoid(const DirectedGraph& g, int l_max);

// Applies the cancellation rules to a letter sequence (groupoid alphabet
// convention above).  Exposed for the confluence property tests.
std::vector<int> reduce_word(const std::vector<int>& letters, int n_edges);

}  // namespace stardil
